#include "rootsys/core.hpp"
#include "rootsys/diagram.hpp"
#include "rootsys/subsystem.hpp"

#include <doctest.h>

using namespace rootsys;

TEST_CASE("root counts and Weyl group orders") {
    auto e8 = build_root_system("E8");
    CHECK(e8.size() == 240);
    CHECK(e8.marks == std::vector<int>{1, 2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(weyl_order(e8) == BigInt(696729600));
    CHECK(weyl_order_from_marks(e8) == BigInt(696729600));
    CHECK(build_root_system("E7").size() == 126);
    CHECK(build_root_system("E6").size() == 72);
    CHECK(build_root_system("F4").size() == 48);
    for (int n = 1; n <= 6; ++n) {
        auto a = build_root_system("A" + std::to_string(n));
        CHECK(a.size() == n * (n + 1));
        BigInt f = 1;
        for (int k = 2; k <= n + 1; ++k) f *= k;
        CHECK(weyl_order(a) == f);
    }
    auto a1 = build_root_system("A1");
    CHECK(a1.size() == 2);
    CHECK(a1.marks == std::vector<int>{1, 1});
}

TEST_CASE("G2 lengths and Cartan integers") {
    auto g = build_root_system("G2");
    CHECK(g.size() == 12);
    CHECK(weyl_order(g) == 12);
    int nlong = 0;
    for (int i = 0; i < g.size(); ++i) nlong += g.is_long(i);
    CHECK(nlong == 6);
    int s0 = g.simple[0], s1 = g.simple[1];
    int c01 = g.cartan_int(s0, s1), c10 = g.cartan_int(s1, s0);
    CHECK(std::min(c01, c10) == -3);
    CHECK(std::max(c01, c10) == -1);
    CHECK(g.cartan_int(s0, s0) == 2);
}

TEST_CASE("root system axioms") {
    for (auto l : {"B3", "C4", "D5", "E6", "F4", "G2"}) {
        auto s = build_root_system(l);
        int ratio = s.long_norm / s.short_norm;
        CHECK(s.long_norm % s.short_norm == 0);
        CHECK((ratio == 1 || ratio == 2 || ratio == 3));
        for (int i = 0; i < s.size(); ++i) {
            CHECK(s.index_of(reflect(s.roots[i], s.roots[i])) == s.neg(i));
            for (int j = 0; j < s.size(); ++j) CHECK(s.refl(i, j) >= 0);
            CHECK((s.norm[i] == s.long_norm || s.norm[i] == s.short_norm));
            bool nonneg = true, nonpos = true;
            for (int c : s.coeff[i]) nonneg &= c >= 0, nonpos &= c <= 0;
            CHECK((nonneg || nonpos));
            CHECK(nonneg == s.positive(i));
        }
    }
}

TEST_CASE("reflections") {
    auto b2 = build_root_system("B2");
    RootVec a{2, -2}, e1{2, 0}, e2{0, 2};
    CHECK(reflect(a, e1) == e2);
    CHECK(reflect(a, RootVec{2, 2}) == RootVec{2, 2});
    CHECK(cartan_integer(a, a) == 2);
    CHECK(cartan_integer(a, RootVec{2, 2}) == 0);
}

TEST_CASE("duals") {
    auto ctx_of = [](const RootSystem& s) { return context_of(s); };
    auto b3 = build_root_system("B3");
    auto d = dualize(b3);
    auto t = classify_diagram(diagram_of(d, d.simple), ctx_of(d));
    REQUIRE(t.comps.size() == 1);
    CHECK(t.comps[0].series == 'C');
    auto f = dualize(build_root_system("F4"));
    CHECK(classify_diagram(diagram_of(f, f.simple), ctx_of(f)).comps[0].series == 'F');
    auto d4 = dualize(build_root_system("D4"));
    CHECK(classify_diagram(diagram_of(d4, d4.simple)).str() == "D4");
}

TEST_CASE("Weyl group membership") {
    auto a2 = build_root_system("A2");
    CHECK(is_in_weyl_group(a2, Isometry::reflection(a2.roots[a2.simple[0]])));
    CHECK_FALSE(is_in_weyl_group(a2, isometry_from_simple_map(a2, {1, 0})));
    auto e8 = build_root_system("E8");
    CHECK(is_in_weyl_group(e8, Isometry::minus_identity(e8.dim)));
}

TEST_CASE("JSON round trip") {
    auto f4 = build_root_system("F4");
    auto g = from_json(to_json(f4));
    CHECK(g.size() == f4.size());
    CHECK(g.marks == f4.marks);
    CHECK(g.roots == f4.roots);
}

TEST_CASE("bad labels") {
    CHECK_THROWS_AS(build_root_system("E9"), Error);
    CHECK_THROWS_AS(build_root_system("Q2"), Error);
}
