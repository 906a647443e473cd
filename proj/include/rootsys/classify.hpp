#pragma once

#include "rootsys/core.hpp"
#include "rootsys/diagram.hpp"
#include "rootsys/subsystem.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rootsys {

struct HomClass {
    IsoType xi_type;
    std::string host;
    std::vector<int> rep;  // images of the nodes of template_of(xi_type)
    Subsystem image;
    IsoType perp_type;
    IsoType perp_perp_type;
};

// W-classes of homomorphisms as canonical tuples (Canonizer of the host),
// sorted.  Built from extended-diagram imbeddings of irreducible pieces and
// recursion through orthogonal complements.
std::vector<std::vector<int>> hom_tuples(const RootSystem& sys, const IsoType& xi);
// Same inside the subsystem H of the host; tuples are W_H-classes.
std::vector<std::vector<int>> hom_tuples_in(const RootSystem& sys, const IsoType& xi, const RootSet& h);

std::vector<HomClass> hom_classes(const RootSystem& sys, const IsoType& xi);
IsoType perp_of_class(const HomClass& h);

struct ClassificationRow {
    IsoType xi_type;
    std::string host_label;
    std::string family;          // image type, with ' or '' when the type splits
    int sharp = 0;
    int sharp_xi = 0;
    int sharp_xi_prime = 0;
    int sharp_sigma = 0;
    IsoType perp_type;
    std::string perp_perp;       // "o", "x" or a type (the host when the complement is empty)
    bool perp_closed = false;
    std::optional<long long> p_count;
    std::string p_marker;        // "<-" or "->" when not fundamental
    std::optional<IsoType> l_closure;
    std::optional<IsoType> s_closure;
    // supporting data
    Subsystem image;             // representative image
    std::vector<std::vector<int>> classes;
    BigInt out_xi = 1;
    BigInt out_sigma = 1;
    uint64_t orbit_size = 0;     // filled only when requested

    std::string p_str() const;
    std::string perp_str() const;
    std::string l_str() const;
    std::string s_str() const;
};

struct HomFamily {
    std::vector<ClassificationRow> rows;
    int total() const;
};

struct TableOptions {
    bool orbit_sizes = false;  // run the orbit BFS on each image
};

HomFamily table_row(const RootSystem& sys, const IsoType& xi, const TableOptions& opt = {});

// Closed formulas for classical hosts.  Multiplicities are indexed by j:
// m[j] blocks of type A_j, k[j] blocks of type D_j (j >= 2), n[j] blocks of
// type B_j or C_j (B_1 = short A_1, C_1 = long A_1).
struct ClassicalSpec {
    std::map<int, int> m, k, n;
    std::string str() const;
    bool operator==(const ClassicalSpec&) const = default;
};

struct ClassicalRow {
    bool exists = false;
    IsoType xi_type;             // the abstract type p(m,k,n)
    int big_m = 0;               // M(m,k,n)
    BigInt sharp = 0;
    int sharp_xi = 1;
    std::optional<BigInt> sharp_sigma;  // stated for A_n only
    IsoType perp_type;
    bool perp_closed = false;
    bool fundamental = false;
    std::optional<IsoType> s_closure;
    std::optional<IsoType> l_closure;
};

ClassicalRow classical_count(const ClassicalSpec& spec, const std::string& host_label);
// Block signature of a subsystem of a classical host in the standard model.
ClassicalSpec classical_signature(const RootSystem& sys, const RootSet& xi);

int r_of(const RootSystem& sys);
int m_sigma(const RootSystem& sys);

struct SubsystemClass {
    Subsystem rep;
    IsoType type;
    std::vector<int> key;
};

// All nonempty subsystems up to W, grown one root at a time from single
// roots and deduplicated by subsystem_key.
std::vector<SubsystemClass> subsystem_classes(const RootSystem& sys);

std::vector<std::pair<IsoType, Subsystem>> maximal_subsystems(const RootSystem& sys, bool s_closed_only);
std::vector<DualPairReport> dual_pair_census(const RootSystem& sys);

struct Stats {
    int classes = 0, iso_classes = 0;
    int s_closed = 0, l_closed = 0, perp_closed = 0;
    int perp_dense = 0, full_rank = 0;
    int maximal = 0, maximal_s_closed = 0;
    int dual_pairs = 0, special_dual_pairs = 0;
};

Stats stats(const RootSystem& sys);

}  // namespace rootsys
