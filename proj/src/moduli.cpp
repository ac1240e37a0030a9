#include "mckay/moduli.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "mckay/error.hpp"
#include "mckay/lattice.hpp"

namespace mckay {

GitParameter GitParameter::make(RatVector theta) {
    Rational sum = 0;
    for (const auto& x : theta) sum += x;
    if (sgn(sum) != 0) throw Error(ErrorCode::BadTheta, "theta entries must sum to zero");
    GitParameter p;
    const Integer lcd = common_denominator(theta);
    for (const auto& x : theta) {
        const Integer scaled = x.get_num() * (lcd / x.get_den());
        if (!scaled.fits_slong_p()) throw Error(ErrorCode::BadTheta, "theta entry too large");
        p.integral_.push_back(scaled.get_si());
    }
    p.values_ = std::move(theta);
    return p;
}

bool GitParameter::is_zero() const {
    return std::all_of(integral_.begin(), integral_.end(), [](auto x) { return x == 0; });
}

namespace {

void check_theta(const AbelianGroupData& group, const GitParameter& theta) {
    if (theta.size() != static_cast<std::size_t>(group.order())) {
        throw Error(ErrorCode::BadTheta, "theta needs one entry per character");
    }
}

IntMatrix to_int_matrix(const SmallMatrix& m) {
    IntMatrix out(m.rows(), IntVector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<long>(m(i, j));
    }
    return out;
}

// {u in Q^{nr} : u >= 0, B u = theta}
HPolyhedron lifted_polyhedron(const IncidenceData& inc, const GitParameter& theta) {
    const std::size_t m = inc.B.cols();
    HPolyhedron h = nonnegative_orthant(m);
    for (std::size_t i = 0; i < inc.B.rows(); ++i) {
        h.equations.push_back({to_rational(inc.B.row(i)), Rational(static_cast<long>(theta.integral()[i]))});
    }
    return h;
}

}  // namespace

HPolyhedron lifted_polyhedron(const AbelianGroupData& group, const GitParameter& theta) {
    return lifted_polyhedron(incidence_matrices(build_quiver(group)), theta);
}

namespace {

// Support function of P_theta = D(lifted) with a lexicographic tie-break,
// so the returned point is a vertex of P_theta.
class SupportOracle {
public:
    SupportOracle(const IncidenceData& inc, const GitParameter& theta)
        : lifted_(lifted_polyhedron(inc, theta)), d_(inc.D) {}

    std::pair<Rational, RatVector> query(const IntVector& w) const {
        const std::size_t n = d_.rows();
        const std::size_t m = d_.cols();
        LinearProgram lp;
        lp.feasible = lifted_;
        auto minimize = [&](RatVector objective) {
            lp.objective = std::move(objective);
            auto outcome = solve(lp);
            auto* opt = std::get_if<Optimal>(&outcome);
            if (!opt) throw Error(ErrorCode::Internal, "support query without optimum");
            lp.feasible.equations.push_back({lp.objective, opt->value});
            return std::move(*opt);
        };

        RatVector weighted(m, 0);
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t i = 0; i < n; ++i) weighted[j] += w[i] * d_(i, j);
        }
        const Rational value = minimize(std::move(weighted)).value;
        RatVector u;
        for (std::size_t i = 0; i < n; ++i) u = minimize(to_rational(d_.row(i))).point;
        RatVector y(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (d_(i, j) != 0) y[i] += d_(i, j) * u[j];
            }
        }
        return {value, y};
    }

private:
    HPolyhedron lifted_;
    SmallMatrix d_;
};

PThetaData finish(const AbelianGroupData& group, const GitParameter& theta, HPolyhedron h) {
    PThetaData out{group, theta, std::move(h), {}, degree_kernel_basis(group)};
    out.v = h_to_v(out.h);
    return out;
}

}  // namespace

IntMatrix degree_kernel_basis(const AbelianGroupData& group) {
    const std::size_t n = group.dimension();
    const std::size_t k = group.factors();
    IntMatrix system(k, IntVector(n + k, 0));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i) system[j][i] = static_cast<long>(group.weights()[j][i]);
        system[j][n + j] = static_cast<long>(group.orders()[j]);
    }
    IntMatrix projected;
    for (const auto& x : integer_kernel_basis(system, n + k)) projected.emplace_back(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
    return hermite_normal_form(std::move(projected), n);
}

PThetaData p_theta(const AbelianGroupData& group, const GitParameter& theta, PThetaMethod method) {
    check_theta(group, theta);
    const auto quiver = build_quiver(group);
    const auto inc = incidence_matrices(quiver);
    const std::size_t n = group.dimension();

    if (method == PThetaMethod::Lifted) {
        const auto lifted = h_to_v(lifted_polyhedron(inc, theta));
        if (lifted.empty) throw Error(ErrorCode::Internal, "lifted polyhedron is empty");
        const auto image = project(lifted, to_int_matrix(inc.D));
        return finish(group, theta, v_to_h(image));
    }

    const SupportOracle oracle(inc, theta);
    VPolyhedron inner;
    inner.dim = n;
    inner.vertices.push_back(oracle.query(IntVector(n, 0)).second);
    // The recession cone of P_theta is the whole orthant: label-i cycles of
    // length ord(rho_i) exist for every i.
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        inner.rays.push_back(std::move(e));
    }
    std::set<std::pair<RatVector, Rational>> confirmed;
    while (true) {
        const HPolyhedron h = v_to_h(inner);
        std::vector<RatVector> found;
        for (const auto& in : h.inequalities) {
            if (confirmed.count({in.a, in.b})) continue;
            auto [value, point] = oracle.query(clear_denominators(in.a));
            if (value == in.b) {
                confirmed.insert({in.a, in.b});
            } else {
                found.push_back(std::move(point));
            }
        }
        if (found.empty()) return finish(group, theta, h);
        for (auto& p : found) inner.vertices.push_back(std::move(p));
    }
}

Integer d_theta(const AbelianGroupData& group, const GitParameter& theta) {
    check_theta(group, theta);
    const auto inc = incidence_matrices(build_quiver(group));
    LinearProgram lp;
    lp.feasible = lifted_polyhedron(inc, theta);
    lp.objective = RatVector(inc.B.cols(), 1);
    const auto outcome = solve(lp);
    const auto* opt = std::get_if<Optimal>(&outcome);
    if (!opt) throw Error(ErrorCode::Internal, "flow LP has no optimum");
    if (opt->value.get_den() != 1) throw Error(ErrorCode::Internal, "non-integral flow optimum");
    return opt->value.get_num();
}

ThetaFan fan_of_y_theta(const PThetaData& ptheta, bool with_charts, int degree_bound) {
    ThetaFan out;
    out.fan = normal_fan(ptheta.h, ptheta.v);
    out.degree_bound = with_charts ? degree_bound : 0;
    if (!with_charts) return out;

    const auto& group = ptheta.group;
    const std::size_t n = group.dimension();

    // Integer points of 1-norm at most the bound lying in M.
    std::vector<std::vector<std::int64_t>> ball;
    {
        std::vector<std::int64_t> x(n, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
            if (i == n) {
                if (group.in_kernel_of_degree(x)) ball.push_back(x);
                return;
            }
            for (int c = -left; c <= left; ++c) {
                x[i] = c;
                rec(i + 1, left - std::abs(c));
            }
            x[i] = 0;
        };
        rec(0, degree_bound);
    }

    for (std::size_t vi = 0; vi < ptheta.v.vertices.size(); ++vi) {
        const RatVector& m = ptheta.v.vertices[vi];
        Chart chart;
        chart.vertex = vi;
        chart.cone = out.fan.maximal_cones[vi];
        const Cone& sigma = out.fan.cones[chart.cone];

        std::vector<RatVector> dual_points;
        for (const auto& x : ball) {
            const RatVector xr = to_rational(x);
            if (is_zero(xr)) continue;
            RatVector p = m;
            for (std::size_t i = 0; i < n; ++i) p[i] += xr[i];
            if (contains(ptheta.h, p)) chart.generators.push_back(to_integer(x));
            bool in_dual = true;
            for (const auto& r : sigma.rays) {
                if (sgn(dot(xr, r)) < 0) in_dual = false;
            }
            for (const auto& l : out.fan.lineality) {
                if (sgn(dot(xr, l)) != 0) in_dual = false;
            }
            if (in_dual) dual_points.push_back(xr);
        }
        std::sort(chart.generators.begin(), chart.generators.end(),
                  [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });

        // Grading strictly positive on sigma^dual minus 0 (sigma full-dimensional).
        IntVector grading(n, 0);
        for (const auto& r : sigma.rays) {
            for (std::size_t i = 0; i < n; ++i) grading[i] += r[i];
        }
        if (sigma.cone_dimension() != n) {
            throw Error(ErrorCode::Internal, "chart verdicts need full-dimensional maximal cones");
        }
        Integer top = 0;
        for (const auto& x : dual_points) top = std::max(top, Integer(dot(x, grading).get_num()));

        std::set<IntVector> reached{IntVector(n, 0)};
        std::vector<IntVector> frontier{IntVector(n, 0)};
        while (!frontier.empty()) {
            std::vector<IntVector> next;
            for (const auto& s : frontier) {
                for (const auto& g : chart.generators) {
                    IntVector t(n);
                    for (std::size_t i = 0; i < n; ++i) t[i] = s[i] + g[i];
                    if (dot(t, grading) > top) continue;
                    if (reached.insert(t).second) next.push_back(std::move(t));
                }
            }
            frontier = std::move(next);
        }
        chart.saturated_up_to_bound = true;
        for (const auto& x : dual_points) {
            IntVector xv(n);
            for (std::size_t i = 0; i < n; ++i) xv[i] = x[i].get_num();
            if (!reached.count(xv)) {
                chart.saturated_up_to_bound = false;
                chart.witness = xv;
                break;
            }
        }
        out.charts.push_back(std::move(chart));
    }
    return out;
}

DualSlice dual_slice(const AbelianGroupData& group, const RatVector& w) {
    const std::size_t n = group.dimension();
    if (w.size() != n) throw Error(ErrorCode::BadShape, "w needs one entry per coordinate");
    for (const auto& x : w) {
        if (sgn(x) < 0) throw Error(ErrorCode::NegativeW, "w must be componentwise nonnegative");
    }
    const auto quiver = build_quiver(group);
    const std::size_t r = quiver.vertex_count();
    DualSlice slice;
    slice.w = w;
    slice.system.dim = r;
    for (const auto& a : quiver.arrows()) {
        RatVector row(r, 0);
        row[a.head_index] += 1;
        row[a.tail_index] -= 1;
        slice.system.inequalities.push_back({std::move(row), -w[a.label - 1]});
    }
    RatVector pin(r, 0);
    pin[0] = 1;
    slice.system.equations.push_back({std::move(pin), 0});
    return slice;
}

DistinguishedRep distinguished_rep(const AbelianGroupData& group, const GitParameter& theta, const RatVector& w,
                                   TightSetPolicy policy, const Fan* fan) {
    check_theta(group, theta);
    const DualSlice slice = dual_slice(group, w);
    LinearProgram lp{theta.values(), slice.system};
    const auto outcome = solve(lp);
    if (std::holds_alternative<Unbounded>(outcome)) {
        throw Error(ErrorCode::UnboundedObjective, "theta . v is unbounded below on the dual slice");
    }
    const auto* opt = std::get_if<Optimal>(&outcome);
    if (!opt) throw Error(ErrorCode::Internal, "dual slice is infeasible");

    DistinguishedRep rep;
    rep.tight_set = policy == TightSetPolicy::WholeOptimalFace ? optimal_face_tight_set(lp, *opt)
                                                               : tight_set_at(slice.system, opt->point);
    rep.b.assign(slice.system.inequalities.size(), 0);
    for (auto k : rep.tight_set) rep.b[k] = 1;
    rep.v = opt->point;
    rep.objective = opt->value;
    if (fan) rep.cone = locate_cone_index(*fan, w);
    return rep;
}

bool satisfies_relations(const McKayQuiver& quiver, const std::vector<int>& b) {
    const auto& g = quiver.group();
    const std::size_t n = g.dimension();
    for (std::size_t v = 0; v < quiver.vertex_count(); ++v) {
        const auto& rho = quiver.vertices()[v];
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = i + 1; j <= n; ++j) {
                const auto vi = g.index_of(g.add(rho, g.weight(i)));
                const auto vj = g.index_of(g.add(rho, g.weight(j)));
                const int lhs = b[quiver.arrow_index(vi, j)] * b[quiver.arrow_index(v, i)];
                const int rhs = b[quiver.arrow_index(vj, i)] * b[quiver.arrow_index(v, j)];
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

GitParameter ghilb_theta(const AbelianGroupData& group) {
    const auto r = group.order();
    if (r < 2) throw Error(ErrorCode::TrivialGroup, "the G-Hilbert chamber needs a nontrivial group");
    RatVector theta(static_cast<std::size_t>(r), 1);
    theta[0] = Rational(static_cast<long>(1 - r));
    return GitParameter::make(std::move(theta));
}

}  // namespace mckay
