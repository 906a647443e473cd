#pragma once

#include "rootsys/core.hpp"
#include "rootsys/diagram.hpp"

#include <map>
#include <string>
#include <vector>

namespace rootsys {

// A reflection-closed set of roots of a host system, stored as root indices.
struct Subsystem {
    const RootSystem* host = nullptr;
    RootSet roots;

    int count() const { return roots.count(); }
    bool empty() const { return roots.empty(); }
    bool operator==(const Subsystem& o) const { return roots == o.roots; }
    std::vector<int> positive() const;
};

Subsystem make_subsystem(const RootSystem& sys, const RootSet& roots);  // checks closedness
Subsystem generate(const RootSystem& sys, const std::vector<int>& theta);
Subsystem generate(const RootSystem& sys, const std::vector<RootVec>& theta);
Subsystem perp(const RootSystem& sys, const RootSet& xi);
// theta is a connected subset of the extended system containing alpha_0
// (or of the primed extended system containing alpha_0').
Subsystem perp_fast_connected(const RootSystem& sys, const std::vector<int>& theta);

Subsystem closure_S(const RootSystem& sys, const RootSet& xi);
Subsystem closure_L(const RootSystem& sys, const RootSet& xi);
Subsystem closure_perp(const RootSystem& sys, const RootSet& xi);
bool is_S_closed(const RootSystem& sys, const RootSet& xi);
bool is_L_closed(const RootSystem& sys, const RootSet& xi);
bool is_perp_closed(const RootSystem& sys, const RootSet& xi);

int span_rank(const RootSystem& sys, const RootSet& xi);
std::vector<RootSet> components_of(const RootSystem& sys, const RootSet& xi);

ClassifyContext context_of(const RootSystem& sys);
std::vector<int> fundamental_system_of(const RootSystem& sys, const RootSet& xi);
// Fundamental system ordered so that position k corresponds to node k of
// template_of(iso_type(sys, xi)).
std::vector<int> standard_fundamental(const RootSystem& sys, const RootSet& xi);
IsoType iso_type(const RootSystem& sys, const RootSet& xi);
// Type of a subsystem with tags only on the components that carry them in
// this host (same as iso_type; kept for symmetry with IsoType::str).
std::string type_string(const RootSystem& sys, const RootSet& xi);

// Canonical forms under the Weyl group generated by reflections in gens
// (a fundamental system of the acting group, given as root indices).
class Canonizer {
public:
    Canonizer(const RootSystem& sys, std::vector<int> gens);
    explicit Canonizer(const RootSystem& sys);  // the full Weyl group

    // Canonical representative of the tuple; word receives the generator
    // indices applied (in order) when given.
    std::vector<int> canon(std::vector<int> tuple, std::vector<int>* word = nullptr) const;
    // One step of the incremental form: make tuple[pos] dominant for the
    // active generators (bitmask), transforming tuple[pos..] and extra.
    void dominate(std::vector<int>& tuple, size_t pos, uint64_t& active, std::vector<int>* extra = nullptr,
                  std::vector<int>* word = nullptr) const;
    uint64_t all_active() const;
    const std::vector<int>& gens() const { return gens_; }
    // apply the inverse of a recorded word to a root
    int undo(const std::vector<int>& word, int root) const;
    int apply(const std::vector<int>& word, int root) const;

private:
    const RootSystem* sys_;
    std::vector<int> gens_;
};

// W-invariant key of a subsystem: two subsystems have equal keys iff they
// are conjugate under the Weyl group of the host.
std::vector<int> subsystem_key(const RootSystem& sys, const RootSet& xi);
// Same with the subsystem already described by an ordered fundamental system
// aligned with template_of(t).
std::vector<int> subsystem_key(const RootSystem& sys, const IsoType& t, const std::vector<int>& psi);

struct DualPairReport {
    Subsystem xi1, xi2;
    bool is_dual_pair = false;
    bool is_special = false;
    BigInt out1_order, out2_order, out_sigma1_order, out_sigma2_order;
};

// Order of Out_Sigma(xi), counted as the diagram automorphisms of a
// fundamental system of xi that are induced by the Weyl group.
BigInt out_sigma_order(const RootSystem& sys, const RootSet& xi);

DualPairReport dual_pair_check(const RootSystem& sys, const RootSet& xi1);

struct FundamentalSubsets {
    long long count = 0;
    std::vector<std::vector<int>> subsets;  // positions in the fundamental system
};

// Subsets of the fundamental system generating a subsystem of the target type.
// Tags are compared only when the target carries tags.
FundamentalSubsets fundamental_subsets(const RootSystem& sys, const IsoType& target);
long long fundamental_count_recursive(const IsoType& target, const std::string& host_label);
bool type_matches(const IsoType& actual, const IsoType& target);

// Order of Out(T) for the diagram of the type: product of component
// automorphism orders and factorials of multiplicities.
BigInt out_order(const IsoType& t);

// Root index permutations of the host realising the diagram automorphisms
// of its fundamental system (generators of Out(Sigma)).
std::vector<std::vector<int>> outer_automorphisms(const RootSystem& sys);

}  // namespace rootsys
