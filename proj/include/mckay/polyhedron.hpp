#pragma once

#include <vector>

#include "mckay/numeric.hpp"

namespace mckay {

/// a . x >= b
struct Inequality {
    RatVector a;
    Rational b;

    bool operator==(const Inequality&) const = default;
};

/// a . x == b
struct Equation {
    RatVector a;
    Rational b;

    bool operator==(const Equation&) const = default;
};

/// Inequality description. `irredundant` is set by v_to_h, whose output
/// rows are facets by construction (extreme rays of the polar cone).
struct HPolyhedron {
    std::size_t dim = 0;
    std::vector<Inequality> inequalities;
    std::vector<Equation> equations;
    bool irredundant = false;

    bool operator==(const HPolyhedron&) const = default;
};

/// conv(vertices) + cone(rays) + span(lineality). `empty` marks the
/// infeasible case; all lists are then empty.
struct VPolyhedron {
    std::size_t dim = 0;
    bool empty = false;
    std::vector<RatVector> vertices;
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;

    bool operator==(const VPolyhedron&) const = default;
};

/// Generator form by double description on the homogenized cone. Output is
/// canonical: lineality in RREF, vertices and rays reduced modulo it,
/// primitive rays, everything sorted lexicographically.
VPolyhedron h_to_v(const HPolyhedron& h);

/// Irredundant inequality form. Coefficient rows are primitive integer
/// vectors (right-hand sides stay rational), reduced modulo the implicit
/// equations, sorted lexicographically by (a, b).
HPolyhedron v_to_h(const VPolyhedron& v);

/// Image under an integer linear map (rows = target coordinates), with
/// duplicate and non-extreme generators pruned.
VPolyhedron project(const VPolyhedron& v, const IntMatrix& map);

/// For each vertex, the ascending indices of inequalities tight there.
/// Throws MismatchedDescriptions if a vertex violates an inequality or
/// equation.
std::vector<std::vector<std::size_t>> vertex_facet_incidence(const HPolyhedron& h, const VPolyhedron& v);

bool contains(const HPolyhedron& h, const RatVector& x);

/// Checks irredundancy with one LP per inequality: each row must cut off a
/// point satisfying all the others.
bool certify_irredundant(const HPolyhedron& h);

/// {x in Q^dim : x >= 0}.
HPolyhedron nonnegative_orthant(std::size_t dim);

}  // namespace mckay
