#pragma once

#include "rootsys/subsystem.hpp"

#include <string>
#include <vector>

namespace rootsys {

struct NamedRep {
    std::string name;
    std::string hosts;         // host labels the set lives in, space separated
    std::vector<RootVec> roots;  // generating roots, coordinates doubled
};

// Built-in representatives in the common E8 coordinates (E6 and E7 are the
// sublattices used by build_root_system).
const std::vector<NamedRep>& named_representatives();
bool is_named(const std::string& name);
// Subsystem generated by the named roots; throws when a root is missing from the host.
Subsystem named_subsystem(const RootSystem& sys, const std::string& name);
std::vector<int> named_roots(const RootSystem& sys, const std::string& name);

}  // namespace rootsys
