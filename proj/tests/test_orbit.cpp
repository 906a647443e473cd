#include "rootsys/named.hpp"
#include "rootsys/orbit.hpp"

#include <doctest.h>

using namespace rootsys;

TEST_CASE("orbit sizes") {
    auto a2 = build_root_system("A2");
    CHECK(orbit_of(a2, generate(a2, std::vector<int>{a2.simple[0]}).roots).size == 3);
    auto e8 = build_root_system("E8");
    CHECK(orbit_of(e8, all_roots_of(e8)).size == 1);
    auto x = named_subsystem(e8, "8A1std");
    auto r = orbit_of(e8, x.roots);
    CHECK(r.size == 2025);
    CHECK(stabilizer_order(e8, x.roots) * r.size == weyl_order(e8));
    CHECK(stabilizer_order(e8, generate(e8, std::vector<int>{e8.alpha0}).roots) == weyl_order(e8) / 120);
    CHECK(stabilizer_order(e8, RootSet{}) == weyl_order(e8));
}

TEST_CASE("orbit representative has a fundamental system of the right size") {
    auto f4 = build_root_system("F4");
    for (auto& e : census_small(f4))
        for (auto& rep : e.reps) {
            auto r = orbit_of(f4, rep.roots);
            CHECK(int(r.base.size()) == span_rank(f4, rep.roots));
            CHECK(iso_type(f4, r.representative.roots) == e.type);
        }
}

TEST_CASE("Out_Sigma orders of built-in representatives") {
    auto e8 = build_root_system("E8");
    auto e7 = build_root_system("E7");
    auto e6 = build_root_system("E6");
    CHECK(out_sigma(e8, named_subsystem(e8, "8A1std").roots).order == 1344);
    CHECK(out_sigma(e7, named_subsystem(e7, "7A1std").roots).order == 168);
    CHECK(out_sigma(e6, named_subsystem(e6, "3A2std").roots).order == 6);
    CHECK(out_sigma_order(e8, named_subsystem(e8, "4A2std").roots) == 48);
}

TEST_CASE("eq OutX on the 4A2 representative") {
    auto e8 = build_root_system("E8");
    auto x = named_subsystem(e8, "4A2std").roots;
    BigInt lhs = out_sigma(e8, x).order * weyl_order_of(e8, x) * weyl_order_of(e8, perp(e8, x).roots);
    CHECK(lhs == stabilizer_order(e8, x));
}

TEST_CASE("equivalence under W") {
    auto e7 = build_root_system("E7");
    auto a = named_subsystem(e7, "3A1_1").roots, b = named_subsystem(e7, "3A1_2").roots;
    CHECK_FALSE(equivalent_under_W(e7, a, b));
    CHECK(equivalent_under_W(e7, a, a));
    auto r1 = named_subsystem(e7, "4A1_1").roots, r2 = named_subsystem(e7, "4A1_2").roots,
         r3 = named_subsystem(e7, "4A1_3").roots;
    CHECK(equivalent_under_W(e7, r1, r2) == equivalent_under_W(e7, r2, r1));
    if (equivalent_under_W(e7, r1, r2) && equivalent_under_W(e7, r2, r3)) CHECK(equivalent_under_W(e7, r1, r3));
}

TEST_CASE("exhaustive census of small hosts") {
    auto d4 = build_root_system("D4");
    std::map<std::string, int> got;
    int total = 0;
    for (auto& e : census_small(d4)) {
        got[e.type.str()] = e.orbits;
        total += e.orbits;
    }
    CHECK(total == 11);
    CHECK(got["A3"] == 3);
    CHECK(got["2A1"] == 3);
    CHECK(got["4A1"] == 1);
    auto g2 = build_root_system("G2");
    int g = 0;
    for (auto& e : census_small(g2)) g += e.orbits;
    CHECK(g == 6);
    auto a2 = build_root_system("A2");
    CHECK(census_small(a2).size() == 2);
    CHECK_THROWS_AS(census_small(build_root_system("E6")), Error);
}

TEST_CASE("state cap") {
    auto e8 = build_root_system("E8");
    OrbitOptions o;
    o.cap = 10;
    CHECK_THROWS_AS(orbit_of(e8, generate(e8, std::vector<int>{e8.alpha0}).roots, o), ResourceError);
}

TEST_CASE("group closure") {
    auto g = close_group(3, {{1, 0, 2}, {0, 2, 1}});
    CHECK(g.size() == 6);
}
