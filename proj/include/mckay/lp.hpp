#pragma once

#include <variant>
#include <vector>

#include "mckay/polyhedron.hpp"

namespace mckay {

/// minimize objective . x over `feasible`.
struct LinearProgram {
    RatVector objective;
    HPolyhedron feasible;
};

/// Optimal point with a dual certificate: ineq_duals >= 0 and
/// A^T ineq_duals + E^T eq_duals = objective, b . ineq_duals + f . eq_duals = value.
struct Optimal {
    RatVector point;
    Rational value;
    RatVector ineq_duals;
    RatVector eq_duals;
};

/// Feasible point plus a recession direction with objective . ray < 0.
struct Unbounded {
    RatVector point;
    RatVector ray;
};

/// Farkas multipliers: ineq >= 0, A^T ineq + E^T eq = 0, b . ineq + f . eq > 0.
struct Infeasible {
    RatVector ineq_multipliers;
    RatVector eq_multipliers;
};

using LpOutcome = std::variant<Optimal, Unbounded, Infeasible>;

/// Exact primal simplex (Phase 1 / Phase 2) with Bland's rule. Variables
/// bounded by an explicit x_j >= 0 row are kept sign-constrained; the rest
/// are split. The returned certificate is verified before returning
/// (Error(Internal) otherwise).
LpOutcome solve(const LinearProgram& lp);

/// Exact verification of whichever certificate the outcome carries.
bool verify_certificate(const LinearProgram& lp, const LpOutcome& outcome);

/// Indices of inequalities tight at x.
std::vector<std::size_t> tight_set_at(const HPolyhedron& h, const RatVector& x);

/// Inequalities tight on the whole optimal face: k belongs iff maximizing
/// its slack over the optimal face gives 0. Throws NotOptimal if the LP has
/// no optimum.
std::vector<std::size_t> optimal_face_tight_set(const LinearProgram& lp);

/// Same, reusing an already computed optimum.
std::vector<std::size_t> optimal_face_tight_set(const LinearProgram& lp, const Optimal& optimum);

}  // namespace mckay
