#include "rootsys/subsystem.hpp"

#include <doctest.h>

using namespace rootsys;

namespace {
std::string type_of(const RootSystem& s, const RootSet& x) { return iso_type(s, x).str(s.label.series); }
}  // namespace

TEST_CASE("generate") {
    auto a3 = build_root_system("A3");
    CHECK(generate(a3, std::vector<int>{}).empty());
    auto one = generate(a3, std::vector<int>{a3.simple[0]});
    CHECK(one.count() == 2);
    CHECK(one.roots.test(a3.neg(a3.simple[0])));
}

TEST_CASE("orthogonal complements") {
    auto e6 = build_root_system("E6");
    auto a2 = generate(e6, std::vector<int>{e6.simple[0], e6.simple[2]});
    CHECK(type_of(e6, perp(e6, a2.roots).roots) == "2A2");
    CHECK(perp(e6, all_roots_of(e6)).empty());

    auto d4 = build_root_system("D4");
    auto p = perp(d4, generate(d4, std::vector<int>{d4.alpha0}).roots);
    RootSet want;
    for (int j : {0, 2, 3}) {
        want.set(d4.simple[j]);
        want.set(d4.neg(d4.simple[j]));
    }
    CHECK(p.roots == want);
}

TEST_CASE("connected extended subsets") {
    auto e7 = build_root_system("E7");
    auto ext = e7.extended();
    std::vector<int> theta{ext[0], ext[1], ext[3], ext[4], ext[2], ext[5]};
    auto p = perp_fast_connected(e7, theta);
    CHECK(type_of(e7, p.roots) == "A1");
    CHECK(p.roots.test(e7.simple[6]));
    CHECK(p.roots == perp(e7, generate(e7, theta).roots).roots);
    CHECK_THROWS(perp_fast_connected(e7, ext));
}

TEST_CASE("rank inequality") {
    auto f4 = build_root_system("F4");
    for (int i = 0; i < f4.npos; ++i)
        for (int j = i + 1; j < f4.npos; ++j) {
            auto g = generate(f4, std::vector<int>{i, j});
            CHECK(span_rank(f4, g.roots) + span_rank(f4, perp(f4, g.roots).roots) <= f4.rank);
        }
}

TEST_CASE("closures") {
    auto c4 = build_root_system("C4");
    RootSet shorts;
    for (int i = 0; i < c4.size(); ++i)
        if (!c4.is_long(i)) shorts.set(i);
    CHECK(closure_S(c4, shorts).roots == all_roots_of(c4));

    auto b4 = build_root_system("B4");
    auto x = generate(b4, std::vector<RootVec>{{2, -2, 0, 0}, {2, 2, 0, 0}});
    auto l = closure_L(b4, x.roots);
    CHECK(type_of(b4, l.roots) == "B2");
    CHECK(l.roots.test(b4.index_of({2, 0, 0, 0})));
    CHECK(closure_L(b4, l.roots).roots == l.roots);
    CHECK(closure_S(b4, x.roots).roots == x.roots);
}

TEST_CASE("length tags") {
    auto f4 = build_root_system("F4");
    RootSet shorts;
    for (int i = 0; i < f4.size(); ++i)
        if (!f4.is_long(i)) shorts.set(i);
    // a short A2 from two short simple roots
    std::vector<int> s;
    for (int r : f4.simple)
        if (!f4.is_long(r)) s.push_back(r);
    auto a2 = generate(f4, s);
    CHECK(type_of(f4, a2.roots) == "A2S");
    CHECK(type_of(f4, perp(f4, a2.roots).roots) == "A2L");
    CHECK(iso_type(f4, RootSet{}).empty());

    auto c3 = build_root_system("C3");
    std::vector<RootVec> longs;
    for (int i = 0; i < 3; ++i) {
        RootVec v(3, 0);
        v[i] = 4;
        longs.push_back(v);
    }
    CHECK(type_of(c3, generate(c3, longs).roots) == "3A1L");
}

TEST_CASE("fundamental systems") {
    auto e8 = build_root_system("E8");
    CHECK(fundamental_system_of(e8, generate(e8, std::vector<int>{e8.alpha0}).roots).size() == 1);
    CHECK(type_of(e8, generate(e8, fundamental_system_of(e8, all_roots_of(e8))).roots) == "E8");
    auto f4 = build_root_system("F4");
    for (int i = 0; i < f4.npos; i += 3)
        for (int j = i + 1; j < f4.npos; j += 5) {
            auto g = generate(f4, std::vector<int>{i, j});
            CHECK(int(fundamental_system_of(f4, g.roots).size()) == span_rank(f4, g.roots));
        }
}

TEST_CASE("dual pairs") {
    auto e8 = build_root_system("E8");
    auto e6 = build_root_system("E6");
    auto a4 = generate(e8, std::vector<int>{e8.simple[0], e8.simple[2], e8.simple[3], e8.simple[4]});
    auto rep = dual_pair_check(e8, perp(e8, perp(e8, a4.roots).roots).roots);
    CHECK(rep.is_dual_pair);
    auto a5 = generate(e6, std::vector<int>{e6.simple[0], e6.simple[2], e6.simple[3], e6.simple[4], e6.simple[5]});
    auto r6 = dual_pair_check(e6, a5.roots);
    CHECK(type_of(e6, a5.roots) == "A5");
    CHECK(r6.is_dual_pair);
    CHECK_FALSE(r6.is_special);
    auto e6a4 = generate(e6, std::vector<int>{e6.simple[0], e6.simple[2], e6.simple[3], e6.simple[4]});
    CHECK_FALSE(dual_pair_check(e6, e6a4.roots).is_dual_pair);
}

TEST_CASE("fundamental subset counts") {
    auto e6 = build_root_system("E6");
    CHECK(fundamental_subsets(e6, IsoType::parse("2A1")).count == 10);
    CHECK(fundamental_count_recursive(IsoType::parse("2A1"), "E6") == 10);
    CHECK(fundamental_count_recursive(IsoType::parse("A4+A2"), "E8") == 4);
    CHECK(fundamental_count_recursive(IsoType::parse("A2+A1"), "E8") == 28);
    CHECK(fundamental_count_recursive(IsoType::parse("2A3"), "E8") == 2);
    CHECK(fundamental_count_recursive(IsoType::parse("A1"), "A4") == 4);
    CHECK(fundamental_subsets(e6, IsoType{}).count == 1);
}

TEST_CASE("W-invariant keys") {
    auto d4 = build_root_system("D4");
    auto a = generate(d4, std::vector<int>{d4.simple[0]});
    auto b = generate(d4, std::vector<int>{d4.alpha0});
    CHECK(subsystem_key(d4, a.roots) == subsystem_key(d4, b.roots));
    auto c = generate(d4, std::vector<int>{d4.simple[0], d4.simple[2]});
    auto e = generate(d4, std::vector<int>{d4.simple[0], d4.simple[3]});
    CHECK(subsystem_key(d4, c.roots) != subsystem_key(d4, e.roots));
}
