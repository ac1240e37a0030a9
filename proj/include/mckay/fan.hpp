#pragma once

#include <vector>

#include "mckay/polyhedron.hpp"

namespace mckay {

/// Rational polyhedral cone cone(rays) + span(lineality), with its own
/// inequality description: facet_normals y give y . x >= 0, span_equations
/// cut out its linear span.
struct Cone {
    std::size_t dim = 0;                // of the ambient space
    std::vector<std::size_t> ray_indices;  // into Fan::rays, ascending
    std::vector<IntVector> rays;
    std::vector<IntVector> facet_normals;
    std::vector<IntVector> span_equations;

    /// Dimension of the cone itself.
    std::size_t cone_dimension() const { return dim - span_equations.size(); }
};

/// Builds the H-description of cone(rays) + span(lineality).
Cone make_cone(std::size_t dim, std::vector<std::size_t> indices, std::vector<IntVector> rays,
               const std::vector<IntVector>& lineality);

bool in_relative_interior(const Cone& cone, const RatVector& w);
bool in_cone(const Cone& cone, const RatVector& w);

/// Inner normal fan. Ray i is the normal of inequality i of the source
/// description, so ray numbering follows inequality numbering. `cones`
/// holds every cone once (sorted by dimension, then ray indices);
/// `maximal_cones[v]` is the cone normal to vertex v, `markers[v]` that
/// vertex.
struct Fan {
    std::size_t dim = 0;
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
    std::vector<Cone> cones;
    std::vector<std::size_t> maximal_cones;
    std::vector<RatVector> markers;
};

/// Requires H irredundant and V its generator form with at least one vertex.
Fan normal_fan(const HPolyhedron& h, const VPolyhedron& v);

/// Index into fan.cones of the unique cone with w in its relative
/// interior. Throws OutsideSupport.
std::size_t locate_cone_index(const Fan& fan, const RatVector& w);
const Cone& locate_cone(const Fan& fan, const RatVector& w);

}  // namespace mckay
