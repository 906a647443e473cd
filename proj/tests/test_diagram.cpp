#include "rootsys/diagram.hpp"
#include "rootsys/subsystem.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace rootsys;

TEST_CASE("type parsing and normalization") {
    CHECK(IsoType::parse("3A2").str() == "3A2");
    CHECK(IsoType::parse(" A1L + C3 ").str() == "C3+A1L");
    CHECK(IsoType::parse("D3+D2").str() == "A3+2A1");
    CHECK(IsoType::parse("0").empty());
    CHECK(IsoType::parse("D4+4A1").rank() == 8);
    CHECK_THROWS_AS(IsoType::parse("Q3"), Error);
}

TEST_CASE("diagram classification") {
    auto g2 = build_root_system("G2");
    auto d = diagram_of(g2, g2.simple);
    auto e = d.edges();
    REQUIRE(e.size() == 1);
    CHECK(e[0].bond == 3);
    CHECK(e[0].arrow >= 0);
    auto a3 = build_root_system("A3");
    CHECK(classify_diagram(diagram_of(a3, a3.simple)).str() == "A3");
    CHECK(classify_diagram(diagram_of(a3, {a3.simple[0], a3.simple[2]})).str() == "2A1");
    CHECK(classify_diagram(Diagram{}).empty());
    CHECK(classify_diagram(diagram_of(a3, {a3.simple[1]})).str() == "A1");
}

TEST_CASE("extended D4 is a star with marks") {
    auto d4 = build_root_system("D4");
    auto d = diagram_of(d4, d4.extended());
    int centre = -1;
    for (int i = 0; i < d.size(); ++i) {
        int deg = 0;
        for (int j = 0; j < d.size(); ++j) deg += d.linked(i, j);
        if (deg == 4) centre = i;
    }
    REQUIRE(centre >= 0);
    CHECK(d4.marks[centre] == 2);
    int ones = 0;
    for (int j = 0; j < d.size(); ++j) ones += d4.marks[j] == 1;
    CHECK(ones == 4);
}

TEST_CASE("diagram automorphism groups") {
    auto order = [](const char* l) {
        auto s = build_root_system(l);
        return diagram_automorphisms(diagram_of(s, s.simple)).order;
    };
    CHECK(order("D4") == 6);
    CHECK(order("E6") == 2);
    CHECK(order("E8") == 1);
    CHECK(order("A5") == 2);
}

TEST_CASE("pinned imbeddings into extended diagrams") {
    auto pinned = [](const char* xi, const char* host) {
        auto s = build_root_system(host);
        return subdiagram_imbeddings(template_of(IsoType::parse(xi)), diagram_of(s, s.extended()),
                                     std::make_pair(0, 0))
            .size();
    };
    CHECK(pinned("A2", "A5") == 2);
    CHECK(pinned("A3", "D4") == 3);
    auto a1 = template_of(IsoType::parse("A1"));
    CHECK(subdiagram_imbeddings(a1, a1).size() == 1);
}

TEST_CASE("affine labels") {
    auto e8 = build_root_system("E8");
    auto d = diagram_of(e8, e8.extended());
    for (int j = 0; j < d.size(); ++j) d.nodes[j].mark = e8.marks[j];
    CHECK(classify_affine(d) == "E8~");
    d.nodes[3].mark = *d.nodes[3].mark + 1;
    CHECK_THROWS_AS(classify_affine(d), Error);

    auto r1 = enumerate_affine(1);
    std::set<std::string> l1;
    for (auto& e : r1) l1.insert(e.label);
    CHECK(l1 == std::set<std::string>{"A1~", "BC1~"});
    for (auto& e : r1)
        if (e.label == "BC1~") {
            std::vector<int> m;
            for (auto& n : e.diagram.nodes) m.push_back(*n.mark);
            std::sort(m.begin(), m.end());
            CHECK(m == std::vector<int>{1, 2});
        }

    std::set<std::string> l2;
    for (auto& e : enumerate_affine(2)) l2.insert(e.label);
    for (auto x : {"A1~", "A2~", "B2~", "C2~'", "G2~", "G2~'", "BC1~", "BC2~", "B2~'"}) {
        bool found = l2.count(x) > 0;
        for (auto& e : enumerate_affine(2))
            for (auto& a : e.aliases) found |= a == x;
        CHECK_MESSAGE(found, x);
    }
    for (auto& e : enumerate_affine(4)) CHECK(classify_affine(e.diagram) == e.label);
}

TEST_CASE("DOT export") {
    auto b2 = build_root_system("B2");
    auto dot = to_dot(diagram_of(b2, b2.simple));
    CHECK(dot.find("digraph") != std::string::npos);
}
