#pragma once

#include "rootsys/core.hpp"
#include "rootsys/diagram.hpp"
#include "rootsys/subsystem.hpp"

#include <functional>
#include <vector>

namespace rootsys {

// Default cap on BFS states; overridden by the ROOTSYS_STATE_CAP variable.
uint64_t default_state_cap();

struct OrbitOptions {
    uint64_t cap = 0;  // 0 means default_state_cap()
    bool keep_elements = false;
    std::function<void(uint64_t)> progress;  // called with the number of states seen
};

struct OrbitResult {
    Subsystem representative;        // minimal element of the orbit
    std::vector<int> base;           // ordered fundamental system of the input
    uint64_t size = 0;
    // Permutations of base positions induced by stabilizer elements (one per
    // distinct closing-edge action, identity omitted).
    std::vector<std::vector<int>> schreier;
    std::vector<RootSet> elements;   // filled when keep_elements is set
};

OrbitResult orbit_of(const RootSystem& sys, const RootSet& xi, const OrbitOptions& opt = {});
bool equivalent_under_W(const RootSystem& sys, const RootSet& xi1, const RootSet& xi2);
BigInt stabilizer_order(const RootSystem& sys, const RootSet& xi);

struct OutSigmaGroup {
    Subsystem base;
    std::vector<int> base_roots;                // ordered fundamental system
    std::vector<std::vector<int>> elements;     // permutations of base positions, sorted
    BigInt order = 1;
};

OutSigmaGroup out_sigma(const RootSystem& sys, const RootSet& xi);
// Closure of a set of permutations of {0..n-1} under composition.
std::vector<std::vector<int>> close_group(int n, const std::vector<std::vector<int>>& gens);

struct CensusEntry {
    IsoType type;
    int orbits = 0;
    std::vector<Subsystem> reps;  // one per orbit
};

// All W-orbits of nonempty subsystems of a host of rank at most 4.
std::vector<CensusEntry> census_small(const RootSystem& sys);

// W-classes of homomorphisms from the type into the host, as tuples of root
// indices aligned with template_of(t), each the canonical element of its
// class.  Found by enumerating dominant choices one root at a time.
std::vector<std::vector<int>> hom_oracle(const RootSystem& sys, const IsoType& t);

}  // namespace rootsys
