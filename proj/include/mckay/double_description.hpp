#pragma once

#include "mckay/numeric.hpp"

namespace mckay {

/// Generators of a polyhedral cone: extreme rays modulo a lineality space.
struct ConeGenerators {
    std::vector<IntVector> rays;       // primitive, lex sorted, reduced modulo lineality
    std::vector<IntVector> lineality;  // canonical basis (RREF rows made primitive)
};

struct DoubleDescriptionStats {
    std::size_t max_intermediate_rays = 0;
    std::size_t adjacency_tests = 0;
};

/// Extreme rays and lineality of {x in Q^dim : A x >= 0, E x = 0} by the
/// double description method with the combinatorial adjacency test.
///
/// Inequalities are inserted in the given order; the result does not
/// depend on that order because the output is canonicalized.
ConeGenerators double_description(std::size_t dim, const std::vector<IntVector>& inequalities,
                                  const std::vector<IntVector>& equations,
                                  DoubleDescriptionStats* stats = nullptr);

}  // namespace mckay
