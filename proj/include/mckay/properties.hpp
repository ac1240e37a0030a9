#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mckay/group.hpp"

namespace mckay {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;  // witness on failure, summary on success
};

/// Runs the constructive lattice checks on one group: incidence columns,
/// c_{i,j}^rho generating ker_Z(C), directed paths, theta decomposition,
/// closed walks for kernel vectors, integrality of flow-polyhedron vertices
/// (small quivers only) and the bounded identification of cycle types with
/// N^n cap M. Deterministic for a given seed.
std::vector<PropertyResult> run_property_suite(const AbelianGroupData& group, int bound,
                                               std::uint64_t seed = 20080507);

}  // namespace mckay
