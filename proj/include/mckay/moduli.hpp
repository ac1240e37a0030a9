#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mckay/fan.hpp"
#include "mckay/group.hpp"
#include "mckay/lp.hpp"
#include "mckay/polyhedron.hpp"
#include "mckay/quiver.hpp"

namespace mckay {

/// theta in Q^r with entries summing to zero, plus its integral rescaling by
/// the least common denominator.
class GitParameter {
public:
    /// Throws BadTheta unless the entries sum to zero.
    static GitParameter make(RatVector theta);

    const RatVector& values() const noexcept { return values_; }
    const std::vector<std::int64_t>& integral() const noexcept { return integral_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool is_zero() const;

private:
    RatVector values_;
    std::vector<std::int64_t> integral_;
};

enum class PThetaMethod {
    /// Support-function queries against the lifted polyhedron; facets of the
    /// n-dimensional projection are discovered one LP at a time.
    LpOracle,
    /// Vertex enumeration of {u >= 0 : B u = theta}, image under D, facets.
    Lifted,
};

/// P_theta in ambient Z^n coordinates, in both descriptions. The character
/// lattice M = ker(deg) is recorded by its Hermite basis (index r in Z^n).
struct PThetaData {
    AbelianGroupData group;
    GitParameter theta;
    HPolyhedron h;
    VPolyhedron v;
    IntMatrix lattice_basis;
};

PThetaData p_theta(const AbelianGroupData& group, const GitParameter& theta,
                   PThetaMethod method = PThetaMethod::LpOracle);

/// {u in Q^{nr} : u >= 0, B u = theta} for the integral rescaling of theta.
HPolyhedron lifted_polyhedron(const AbelianGroupData& group, const GitParameter& theta);

/// Hermite basis of M = {m in Z^n : deg(m) = 0}.
IntMatrix degree_kernel_basis(const AbelianGroupData& group);

/// Generator data of the chart semigroup A_sigma at one vertex, truncated
/// at a 1-norm bound. The verdict only speaks about the bounded region.
struct Chart {
    std::size_t vertex = 0;
    std::size_t cone = 0;  // index into Fan::cones
    std::vector<IntVector> generators;
    bool saturated_up_to_bound = false;
    std::optional<IntVector> witness;  // a point of sigma^dual cap M not generated
};

struct ThetaFan {
    Fan fan;
    std::vector<Chart> charts;
    int degree_bound = 0;
};

ThetaFan fan_of_y_theta(const PThetaData& ptheta, bool with_charts = false, int degree_bound = 0);

/// min 1.u over {u >= 0 : B u = theta} for the integral rescaling of theta.
Integer d_theta(const AbelianGroupData& group, const GitParameter& theta);

/// {v in Q^r : w_i + v_rho - v_{rho rho_i} >= 0}, one row per arrow in arrow
/// order, with v at the trivial character pinned to 0.
struct DualSlice {
    RatVector w;
    HPolyhedron system;
};

/// Throws NegativeW.
DualSlice dual_slice(const AbelianGroupData& group, const RatVector& w);

enum class TightSetPolicy {
    WholeOptimalFace,
    SingleOptimizer,
};

struct DistinguishedRep {
    std::vector<int> b;                  // 0/1 per arrow
    std::vector<std::size_t> tight_set;  // arrows with b = 1
    RatVector v;                         // optimizer, v at trivial character = 0
    Rational objective;
    std::optional<std::size_t> cone;     // when a fan was supplied
};

/// Throws NegativeW, BadTheta, or UnboundedObjective.
DistinguishedRep distinguished_rep(const AbelianGroupData& group, const GitParameter& theta, const RatVector& w,
                                   TightSetPolicy policy = TightSetPolicy::WholeOptimalFace,
                                   const Fan* fan = nullptr);

/// b_i^rho b_j^{rho rho_i} == b_j^rho b_i^{rho rho_j} for all rho, i, j.
bool satisfies_relations(const McKayQuiver& quiver, const std::vector<int>& b);

/// (1 - r, 1, ..., 1). Throws TrivialGroup for r = 1.
GitParameter ghilb_theta(const AbelianGroupData& group);

}  // namespace mckay
