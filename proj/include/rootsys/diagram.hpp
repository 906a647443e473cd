#pragma once

#include "rootsys/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rootsys {

// One irreducible piece of an isomorphism type.  tag is 'L' or 'S' for
// simply laced pieces inside a host with two root lengths, 0 otherwise.
struct Component {
    char series = 'A';
    int rank = 1;
    char tag = 0;
    bool operator==(const Component&) const = default;
};

// Canonical order: larger rank first, then series letter, then tag.
bool component_before(const Component& a, const Component& b);

struct IsoType {
    std::vector<Component> comps;  // sorted by component_before

    static IsoType parse(const std::string& text);
    void normalize();
    std::string str(char host_series = 0) const;
    int rank() const;
    bool empty() const { return comps.empty(); }
    IsoType untagged() const;
    IsoType operator+(const IsoType& o) const;
    bool operator==(const IsoType& o) const { return comps == o.comps; }
    bool operator<(const IsoType& o) const;
};

struct DiagramNode {
    int len = 0;               // squared length (scaled) when known
    std::optional<int> mark;
    std::optional<int> tag;    // root index in a host system
};

struct DiagramEdge {
    int i = 0, j = 0;
    int bond = 1;
    int arrow = -1;  // node the arrow points toward (the shorter root), -1 if none
};

// Stored as a generalized Cartan matrix a[i][j] = 2(a_i|a_j)/(a_i|a_i),
// which also covers the affine diagrams with four-fold bonds.
struct Diagram {
    std::vector<DiagramNode> nodes;
    std::vector<std::vector<int>> a;

    int size() const { return int(nodes.size()); }
    bool linked(int i, int j) const { return i != j && a[i][j] != 0; }
    std::vector<DiagramEdge> edges() const;
    std::vector<std::vector<int>> components() const;
    Diagram induced(const std::vector<int>& keep) const;
    // relative squared lengths (1, 2 or 3 within a component) derived from a
    std::vector<int> relative_lengths() const;
};

struct ClassifyContext {
    int long_len = 0;     // host long squared length; 0 when the host is simply laced
    char host_series = 0; // chooses between the spellings B2 and C2
};

Diagram diagram_of(const std::vector<RootVec>& simple);
Diagram diagram_of(const RootSystem& sys, const std::vector<int>& roots);

IsoType classify_diagram(const Diagram& d, const ClassifyContext& ctx = {});
Component classify_component(const Diagram& d, const std::vector<int>& nodes, const ClassifyContext& ctx = {});

struct PermGroup {
    std::vector<std::vector<int>> gens;
    BigInt order = 1;
};

PermGroup diagram_automorphisms(const Diagram& d, bool respect_marks = true);
// All automorphisms (use only when the group is small).
std::vector<std::vector<int>> all_automorphisms(const Diagram& d, bool respect_marks = true);

// Injective maps phi-node -> target-node preserving the induced Cartan data.
std::vector<std::vector<int>> subdiagram_imbeddings(const Diagram& phi, const Diagram& target,
                                                    std::optional<std::pair<int, int>> pin = std::nullopt);

// Node order following the standard numbering of each component; components
// appear in the order of IsoType::comps.  Positions line up with template_of.
std::vector<int> standard_order(const Diagram& d, const ClassifyContext& ctx = {});
Diagram template_of(const IsoType& t);
std::vector<std::vector<int>> cartan_matrix(const Component& c);

struct AffineEntry {
    std::string label;
    std::vector<std::string> aliases;
    Diagram diagram;  // marks filled in
};

std::string classify_affine(const Diagram& d);
std::vector<AffineEntry> enumerate_affine(int rank_bound);
std::vector<AffineEntry> affine_catalog(int rank_bound);

std::string to_dot(const Diagram& d, const std::string& name = "G");

}  // namespace rootsys
