#include "mckay/lp.hpp"

#include <optional>

#include "mckay/error.hpp"

namespace mckay {

namespace {

// Column of the standard form: a structural variable (with sign) or the
// surplus of an inequality row.
struct Column {
    enum Kind { Structural, Surplus } kind;
    std::size_t index;  // original variable or inequality row
    int sign;
};

// Dense simplex tableau for min c.z, A z = h (h >= 0), z >= 0 with one
// artificial per row appended after the real columns.
class Tableau {
public:
    Tableau(RatMatrix a, RatVector h, std::size_t real)
        : rows_(a.size()), real_(real), cols_(real + a.size()), t_(std::move(a)), rhs_(std::move(h)) {
        for (std::size_t i = 0; i < rows_; ++i) {
            t_[i].resize(cols_, 0);
            t_[i][real_ + i] = 1;
            basis_.push_back(real_ + i);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t real() const { return real_; }
    const std::vector<std::size_t>& basis() const { return basis_; }
    const RatVector& rhs() const { return rhs_; }
    const Rational& at(std::size_t i, std::size_t j) const { return t_[i][j]; }

    // Reduced costs for the cost vector c (length cols_).
    RatVector reduced_costs(const RatVector& c) const {
        RatVector d = c;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Rational& cb = c[basis_[i]];
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (sgn(t_[i][j]) != 0) d[j] -= cb * t_[i][j];
            }
        }
        return d;
    }

    // y = c_B^T B^{-1}; B^{-1} sits under the artificial columns.
    RatVector duals(const RatVector& c) const {
        RatVector y(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            const Rational& cb = c[basis_[i]];
            if (sgn(cb) == 0) continue;
            for (std::size_t k = 0; k < rows_; ++k) {
                if (sgn(t_[i][real_ + k]) != 0) y[k] += cb * t_[i][real_ + k];
            }
        }
        return y;
    }

    void pivot(std::size_t r, std::size_t j) {
        const Rational inv = 1 / t_[r][j];
        for (auto& x : t_[r]) {
            if (sgn(x) != 0) x *= inv;
        }
        rhs_[r] *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || sgn(t_[i][j]) == 0) continue;
            const Rational f = t_[i][j];
            for (std::size_t k = 0; k < cols_; ++k) {
                if (sgn(t_[r][k]) != 0) t_[i][k] -= f * t_[r][k];
            }
            rhs_[i] -= f * rhs_[r];
        }
        basis_[r] = j;
    }

    enum class Result { Optimal, Unbounded };

    // Bland's rule over columns [0, limit).
    Result run(const RatVector& c, std::size_t limit, std::size_t* unbounded_column) {
        while (true) {
            const RatVector d = reduced_costs(c);
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < limit; ++j) {
                if (sgn(d[j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (!enter) return Result::Optimal;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (sgn(t_[i][*enter]) <= 0) continue;
                const Rational ratio = rhs_[i] / t_[i][*enter];
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) {
                *unbounded_column = *enter;
                return Result::Unbounded;
            }
            pivot(*leave, *enter);
        }
    }

    // Drives artificials out of the basis where a real pivot exists.
    void expel_artificials() {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (basis_[i] < real_) continue;
            for (std::size_t j = 0; j < real_; ++j) {
                if (sgn(t_[i][j]) != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

private:
    std::size_t rows_;
    std::size_t real_;
    std::size_t cols_;
    RatMatrix t_;
    RatVector rhs_;
    std::vector<std::size_t> basis_;
};

bool is_bound_row(const Inequality& in, std::size_t& var) {
    if (sgn(in.b) != 0) return false;
    std::optional<std::size_t> found;
    for (std::size_t j = 0; j < in.a.size(); ++j) {
        const int s = sgn(in.a[j]);
        if (s == 0) continue;
        if (s < 0 || found) return false;
        found = j;
    }
    if (!found) return false;
    var = *found;
    return true;
}

}  // namespace

LpOutcome solve(const LinearProgram& lp) {
    const HPolyhedron& h = lp.feasible;
    const std::size_t n = h.dim;
    if (lp.objective.size() != n) throw Error(ErrorCode::BadShape, "objective length differs from dimension");
    const std::size_t mi = h.inequalities.size();
    const std::size_t me = h.equations.size();

    // Sign-constrained variables.
    std::vector<std::optional<std::size_t>> bound_row(n);
    std::vector<bool> row_is_bound(mi, false);
    for (std::size_t k = 0; k < mi; ++k) {
        std::size_t j = 0;
        if (is_bound_row(h.inequalities[k], j) && !bound_row[j]) {
            bound_row[j] = k;
            row_is_bound[k] = true;
        }
    }

    std::vector<Column> columns;
    for (std::size_t j = 0; j < n; ++j) {
        columns.push_back({Column::Structural, j, 1});
        if (!bound_row[j]) columns.push_back({Column::Structural, j, -1});
    }
    std::vector<std::size_t> ineq_rows;  // inequality index per tableau row
    for (std::size_t k = 0; k < mi; ++k) {
        if (!row_is_bound[k]) {
            ineq_rows.push_back(k);
            columns.push_back({Column::Surplus, k, -1});
        }
    }
    const std::size_t rows = ineq_rows.size() + me;
    const std::size_t real = columns.size();

    // Row i of the standard form, before sign normalization.
    auto row_coeffs = [&](std::size_t i) -> std::pair<const RatVector*, Rational> {
        if (i < ineq_rows.size()) return {&h.inequalities[ineq_rows[i]].a, h.inequalities[ineq_rows[i]].b};
        const auto& eq = h.equations[i - ineq_rows.size()];
        return {&eq.a, eq.b};
    };
    RatMatrix a(rows, RatVector(real, 0));
    RatVector rhs(rows);
    std::vector<int> flip(rows, 1);
    for (std::size_t i = 0; i < rows; ++i) {
        auto [coeffs, b] = row_coeffs(i);
        for (std::size_t c = 0; c < real; ++c) {
            const auto& col = columns[c];
            if (col.kind == Column::Structural) {
                if (sgn((*coeffs)[col.index]) != 0) a[i][c] = col.sign * (*coeffs)[col.index];
            } else if (i < ineq_rows.size() && ineq_rows[i] == col.index) {
                a[i][c] = -1;
            }
        }
        rhs[i] = b;
        if (sgn(b) < 0) {
            flip[i] = -1;
            for (auto& x : a[i]) x = -x;
            rhs[i] = -b;
        }
    }

    Tableau tab(std::move(a), std::move(rhs), real);
    const std::size_t total = real + rows;

    auto unflip = [&](RatVector y) {
        for (std::size_t i = 0; i < rows; ++i) {
            if (flip[i] < 0) y[i] = -y[i];
        }
        return y;
    };
    // Splits row duals y into per-inequality and per-equation parts, filling
    // bound rows from the residual cost of their variable.
    auto split_duals = [&](const RatVector& y, const RatVector& cost) {
        RatVector lambda(mi, 0), mu(me, 0);
        for (std::size_t i = 0; i < ineq_rows.size(); ++i) lambda[ineq_rows[i]] = y[i];
        for (std::size_t e = 0; e < me; ++e) mu[e] = y[ineq_rows.size() + e];
        for (std::size_t j = 0; j < n; ++j) {
            if (!bound_row[j]) continue;
            Rational residual = cost[j];
            for (std::size_t i = 0; i < ineq_rows.size(); ++i) residual -= lambda[ineq_rows[i]] * h.inequalities[ineq_rows[i]].a[j];
            for (std::size_t e = 0; e < me; ++e) residual -= mu[e] * h.equations[e].a[j];
            lambda[*bound_row[j]] = residual / h.inequalities[*bound_row[j]].a[j];
        }
        return std::pair{lambda, mu};
    };
    auto primal_point = [&]() {
        RatVector x(n, 0);
        for (std::size_t i = 0; i < rows; ++i) {
            const auto b = tab.basis()[i];
            if (b < real && columns[b].kind == Column::Structural) x[columns[b].index] += columns[b].sign * tab.rhs()[i];
        }
        return x;
    };

    // Phase 1.
    RatVector phase1(total, 0);
    for (std::size_t i = 0; i < rows; ++i) phase1[real + i] = 1;
    std::size_t dummy = 0;
    tab.run(phase1, total, &dummy);
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        if (tab.basis()[i] >= real) infeasibility += tab.rhs()[i];
    }
    LpOutcome outcome;
    if (sgn(infeasibility) > 0) {
        const RatVector y = unflip(tab.duals(phase1));
        auto [lambda, mu] = split_duals(y, RatVector(n, 0));
        outcome = Infeasible{std::move(lambda), std::move(mu)};
    } else {
        tab.expel_artificials();
        RatVector phase2(total, 0);
        for (std::size_t c = 0; c < real; ++c) {
            if (columns[c].kind == Column::Structural) phase2[c] = columns[c].sign * lp.objective[columns[c].index];
        }
        std::size_t entering = 0;
        if (tab.run(phase2, real, &entering) == Tableau::Result::Unbounded) {
            RatVector ray(n, 0);
            auto add_column = [&](std::size_t c, const Rational& amount) {
                if (c < real && columns[c].kind == Column::Structural) ray[columns[c].index] += columns[c].sign * amount;
            };
            add_column(entering, 1);
            for (std::size_t i = 0; i < rows; ++i) add_column(tab.basis()[i], -tab.at(i, entering));
            outcome = Unbounded{primal_point(), std::move(ray)};
        } else {
            const RatVector y = unflip(tab.duals(phase2));
            auto [lambda, mu] = split_duals(y, lp.objective);
            RatVector x = primal_point();
            Rational value = dot(lp.objective, x);
            outcome = Optimal{std::move(x), std::move(value), std::move(lambda), std::move(mu)};
        }
    }
    if (!verify_certificate(lp, outcome)) throw Error(ErrorCode::Internal, "simplex certificate failed verification");
    return outcome;
}

bool verify_certificate(const LinearProgram& lp, const LpOutcome& outcome) {
    const HPolyhedron& h = lp.feasible;
    const std::size_t n = h.dim;
    auto combination = [&](const RatVector& lambda, const RatVector& mu) {
        RatVector s(n, 0);
        for (std::size_t k = 0; k < h.inequalities.size(); ++k) {
            if (sgn(lambda[k]) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) s[j] += lambda[k] * h.inequalities[k].a[j];
        }
        for (std::size_t e = 0; e < h.equations.size(); ++e) {
            if (sgn(mu[e]) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) s[j] += mu[e] * h.equations[e].a[j];
        }
        return s;
    };
    auto rhs_value = [&](const RatVector& lambda, const RatVector& mu) {
        Rational v = 0;
        for (std::size_t k = 0; k < h.inequalities.size(); ++k) v += lambda[k] * h.inequalities[k].b;
        for (std::size_t e = 0; e < h.equations.size(); ++e) v += mu[e] * h.equations[e].b;
        return v;
    };
    auto nonnegative = [](const RatVector& v) {
        for (const auto& x : v) {
            if (sgn(x) < 0) return false;
        }
        return true;
    };
    auto sizes_ok = [&](const RatVector& lambda, const RatVector& mu) {
        return lambda.size() == h.inequalities.size() && mu.size() == h.equations.size();
    };

    if (const auto* opt = std::get_if<Optimal>(&outcome)) {
        return sizes_ok(opt->ineq_duals, opt->eq_duals) && contains(h, opt->point) &&
               dot(lp.objective, opt->point) == opt->value && nonnegative(opt->ineq_duals) &&
               combination(opt->ineq_duals, opt->eq_duals) == lp.objective &&
               rhs_value(opt->ineq_duals, opt->eq_duals) == opt->value;
    }
    if (const auto* unb = std::get_if<Unbounded>(&outcome)) {
        if (!contains(h, unb->point)) return false;
        for (const auto& in : h.inequalities) {
            if (sgn(dot(in.a, unb->ray)) < 0) return false;
        }
        for (const auto& eq : h.equations) {
            if (sgn(dot(eq.a, unb->ray)) != 0) return false;
        }
        return sgn(dot(lp.objective, unb->ray)) < 0;
    }
    const auto& inf = std::get<Infeasible>(outcome);
    return sizes_ok(inf.ineq_multipliers, inf.eq_multipliers) && nonnegative(inf.ineq_multipliers) &&
           is_zero(combination(inf.ineq_multipliers, inf.eq_multipliers)) &&
           sgn(rhs_value(inf.ineq_multipliers, inf.eq_multipliers)) > 0;
}

std::vector<std::size_t> tight_set_at(const HPolyhedron& h, const RatVector& x) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < h.inequalities.size(); ++k) {
        if (dot(h.inequalities[k].a, x) == h.inequalities[k].b) out.push_back(k);
    }
    return out;
}

std::vector<std::size_t> optimal_face_tight_set(const LinearProgram& lp) {
    const auto outcome = solve(lp);
    const auto* opt = std::get_if<Optimal>(&outcome);
    if (!opt) throw Error(ErrorCode::NotOptimal, "linear program has no optimal solution");
    return optimal_face_tight_set(lp, *opt);
}

std::vector<std::size_t> optimal_face_tight_set(const LinearProgram& lp, const Optimal& optimum) {
    LinearProgram face;
    face.feasible = lp.feasible;
    face.feasible.equations.push_back({lp.objective, optimum.value});
    std::vector<std::size_t> out;
    for (const auto k : tight_set_at(lp.feasible, optimum.point)) {
        const auto& in = lp.feasible.inequalities[k];
        face.objective = in.a;
        for (auto& x : face.objective) x = -x;
        const auto outcome = solve(face);
        const auto* opt = std::get_if<Optimal>(&outcome);
        if (!opt) continue;  // slack unbounded on the face
        if (-opt->value == in.b) out.push_back(k);
    }
    return out;
}

}  // namespace mckay
