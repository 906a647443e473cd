#include "rootsys/classify.hpp"
#include "rootsys/named.hpp"
#include "rootsys/orbit.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rootsys;

namespace {
int homs(const char* xi, const char* host) {
    return int(hom_tuples(build_root_system(host), IsoType::parse(xi)).size());
}
}  // namespace

TEST_CASE("hom counts") {
    CHECK(homs("A4", "E6") == 2);
    CHECK(homs("5A1", "E7") == 15);
    CHECK(homs("D4", "D4") == 6);
    CHECK(homs("A1", "A1") == 1);
    CHECK(homs("A2", "A5") == 2);
    CHECK(homs("D4", "B5") == 3);
    CHECK(homs("E6", "E7") == 1);
    CHECK(homs("E7", "E6") == 0);
}

TEST_CASE("engine agrees with the brute-force oracle") {
    for (auto h : {"B3", "C3", "A4", "D4", "F4", "G2"}) {
        auto sys = build_root_system(h);
        for (auto& e : census_small(sys)) {
            auto a = hom_tuples(sys, e.type), b = hom_oracle(sys, e.type);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK_MESSAGE(a == b, h << " " << e.type.str());
        }
    }
}

TEST_CASE("perp types of hom classes") {
    auto e7 = build_root_system("E7");
    std::vector<std::string> p;
    for (auto& c : hom_classes(e7, IsoType::parse("A5"))) p.push_back(perp_of_class(c).str());
    std::sort(p.begin(), p.end());
    CHECK(p == std::vector<std::string>{"A1", "A2"});
    auto e8 = build_root_system("E8");
    CHECK(perp_of_class(hom_classes(e8, IsoType::parse("D4"))[0]).str() == "D4");
    CHECK(perp_of_class(hom_classes(e8, IsoType::parse("E8"))[0]).empty());
}

TEST_CASE("D4 table") {
    auto d4 = build_root_system("D4");
    auto row = [&](const char* t) { return table_row(d4, IsoType::parse(t)).rows; };
    auto a1 = row("A1");
    REQUIRE(a1.size() == 1);
    CHECK(a1[0].perp_str() == "3A1");
    CHECK(a1[0].perp_perp == "x");
    auto a3 = row("A3");
    REQUIRE(a3.size() == 1);
    CHECK(a3[0].sharp == 3);
    CHECK(a3[0].sharp_xi == 3);
    auto d = row("D4");
    CHECK(d[0].sharp == 6);
    CHECK(d[0].sharp_xi == 1);
    CHECK(d[0].perp_perp == "D4");
    auto two = row("2A1");
    CHECK(two[0].perp_perp == "o");
    auto four = row("4A1");
    CHECK(four[0].sharp == 6);
    CHECK(four[0].sharp_xi_prime == 6);
    CHECK(four[0].p_str() == "<-");
    for (auto t : {"A1", "A2", "A3", "D4", "2A1", "3A1", "4A1"})
        for (auto& r : row(t)) {
            CHECK(1 <= r.sharp_xi);
            CHECK(r.sharp_xi <= r.sharp_xi_prime);
            CHECK(r.sharp_xi_prime <= r.sharp);
            CHECK(r.sharp_sigma <= r.sharp);
            CHECK(BigInt(r.sharp) * r.out_sigma == BigInt(r.sharp_xi) * r.out_xi);
        }
}

TEST_CASE("table rows of larger hosts") {
    auto d6 = build_root_system("D6");
    auto a3 = table_row(d6, IsoType::parse("A3"));
    CHECK(a3.total() == 2);
    CHECK(a3.rows.size() == 2);
    for (int n : {5, 6, 7}) {
        auto dn = build_root_system("D" + std::to_string(n));
        auto r = table_row(dn, IsoType::parse("A" + std::to_string(n - 1)));
        CHECK(r.total() == 2);
        int xi = 0;
        for (auto& x : r.rows) xi += x.sharp_xi;
        CHECK((xi == 1) == (n % 2 == 1));
    }
    auto e8 = build_root_system("E8");
    auto f = table_row(e8, IsoType::parse("A4+A2"));
    REQUIRE(f.rows.size() == 1);
    CHECK(f.rows[0].sharp_xi_prime == 1);
    CHECK(f.rows[0].perp_str() == "A1");
}

TEST_CASE("reductions of A4+A2 in E8 agree") {
    auto e8 = build_root_system("E8");
    auto via_a2 = hom_tuples(e8, IsoType::parse("A4+A2"));
    // the same classes reached by placing A2 first
    int count = 0;
    for (auto& c : hom_classes(e8, IsoType::parse("A2"))) {
        auto rest = perp(e8, c.image.roots);
        count += int(hom_tuples_in(e8, IsoType::parse("A4"), rest.roots).size());
    }
    CHECK(count == int(via_a2.size()));
}

TEST_CASE("closed formulas for classical hosts") {
    ClassicalSpec s;
    s.m[1] = 2;
    CHECK(classical_count(s, "B4").sharp == 1);
    ClassicalSpec t;
    t.m[1] = 1;
    t.n[1] = 1;
    CHECK(classical_count(t, "B4").sharp == 2);
    ClassicalSpec u;
    u.n[1] = 2;
    CHECK(classical_count(u, "B4").sharp == 1);
    ClassicalSpec v;
    v.k[2] = 1;
    CHECK(classical_count(v, "B4").sharp == 1);
    CHECK(homs("2A1", "B4") == 5);

    ClassicalSpec a;
    a.m[2] = 2;
    a.m[1] = 1;
    CHECK(classical_count(a, "A8").sharp == 4);
    ClassicalSpec d;
    d.k[4] = 1;
    CHECK(classical_count(d, "D8").sharp == 3);
    ClassicalSpec big;
    big.m[4] = 3;
    CHECK_FALSE(classical_count(big, "A8").exists);
}

TEST_CASE("r and m") {
    auto r = [](const char* h) { return r_of(build_root_system(h)); };
    auto m = [](const char* h) { return m_sigma(build_root_system(h)); };
    CHECK(r("E8") == 8);
    CHECK(r("E7") == 7);
    CHECK(r("E6") == 4);
    CHECK(r("A1") == 1);
    CHECK(r("F4") == 4);
    CHECK(r("G2") == 1);
    CHECK(r("C5") == 5);
    CHECK(m("A6") == 0);
    CHECK(m("C4") == 0);
    CHECK(m("E6") == 5);
    CHECK(m("E7") == 6);
    CHECK(m("E8") == 8);
    CHECK(m("F4") == 4);
    CHECK(m("D7") == 7);
}

TEST_CASE("maximal subsystems") {
    auto types = [](const char* h, bool s) {
        auto sys = build_root_system(h);
        std::vector<std::string> v;
        for (auto& [t, x] : maximal_subsystems(sys, s)) v.push_back(t.str(sys.label.series));
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(types("E8", false) == std::vector<std::string>{"2A4", "A8", "D8", "E6+A2", "E7+A1"});
    CHECK(types("G2", true) == std::vector<std::string>{"A1L+A1S", "A2L"});
    CHECK(types("A2", false) == std::vector<std::string>{"A1"});
}

TEST_CASE("census statistics") {
    auto e7 = stats(build_root_system("E7"));
    CHECK(e7.classes == 46);
    CHECK(e7.iso_classes == 40);
    auto g2 = stats(build_root_system("G2"));
    CHECK(g2.classes == 6);
    CHECK(g2.maximal == 3);
    CHECK(g2.maximal_s_closed == 2);
    CHECK(g2.dual_pairs == 1);
    auto f4 = stats(build_root_system("F4"));
    CHECK(f4.classes == 36);
    CHECK(f4.s_closed == 23);
    CHECK(f4.l_closed == 11);
    CHECK(f4.perp_closed == 9);
}

TEST_CASE("dual pair census") {
    auto e8 = dual_pair_census(build_root_system("E8"));
    CHECK(e8.size() == 11);
    CHECK(std::all_of(e8.begin(), e8.end(), [](auto& d) { return d.is_special; }));
    auto e6 = dual_pair_census(build_root_system("E6"));
    CHECK(e6.size() == 3);
    CHECK(std::count_if(e6.begin(), e6.end(), [](auto& d) { return d.is_special; }) == 1);
}
