#include "mckay/properties.hpp"

#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "mckay/lattice.hpp"
#include "mckay/polyhedron.hpp"
#include "mckay/quiver.hpp"

namespace mckay {

namespace {

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

IntMatrix to_int_rows(const SmallMatrix& m) {
    IntMatrix out(m.rows(), IntVector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<long>(m(i, j));
    }
    return out;
}

PropertyResult check_incidence(const McKayQuiver& q, const IncidenceData& inc) {
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        std::int64_t sum = 0;
        std::int64_t ones = 0;
        for (std::size_t i = 0; i < inc.B.rows(); ++i) sum += inc.B(i, k);
        for (std::size_t i = 0; i < inc.D.rows(); ++i) ones += inc.D(i, k);
        const auto& a = q.arrows()[k];
        const bool head_ok = a.head_index == a.tail_index ? inc.B(a.head_index, k) == 0 : inc.B(a.head_index, k) == 1;
        if (sum != 0 || ones != 1 || !head_ok) {
            return {"incidence columns", false, "column " + std::to_string(k)};
        }
    }
    return {"incidence columns", true, std::to_string(q.arrow_count()) + " columns"};
}

PropertyResult check_kernel_lattice(const McKayQuiver& q, const IncidenceData& inc) {
    const std::size_t m = q.arrow_count();
    IntMatrix gens;
    for (const auto& c : kernel_generators_cij(q)) {
        if (inc.C.apply(c) != std::vector<std::int64_t>(inc.C.rows(), 0)) {
            return {"c_ij generate ker C", false, "generator outside ker C: " + join(c)};
        }
        gens.push_back(to_integer(c));
    }
    const auto lhs = hermite_normal_form(gens, m);
    const auto rhs = hermite_normal_form(integer_kernel_basis(to_int_rows(inc.C), m), m);
    if (lhs != rhs) {
        return {"c_ij generate ker C", false,
                "HNF ranks " + std::to_string(lhs.size()) + " vs " + std::to_string(rhs.size())};
    }
    return {"c_ij generate ker C", true, "rank " + std::to_string(rhs.size())};
}

PropertyResult check_directed_paths(const McKayQuiver& q, const IncidenceData& inc) {
    const std::size_t r = q.vertex_count();
    for (std::size_t s = 0; s < r; ++s) {
        for (std::size_t t = 0; t < r; ++t) {
            const auto p = directed_path(q, q.vertices()[s], q.vertices()[t]);
            auto bv = inc.B.apply(p.v);
            std::vector<std::int64_t> want(r, 0);
            want[t] += 1;
            want[s] -= 1;
            bool nonneg = true;
            for (auto x : p.v) nonneg = nonneg && x >= 0;
            if (bv != want || !nonneg || inc.D.apply(p.v) != p.type) {
                return {"directed paths", false, "from " + std::to_string(s) + " to " + std::to_string(t)};
            }
        }
    }
    return {"directed paths", true, std::to_string(r * r) + " pairs"};
}

PropertyResult check_theta_decompose(const McKayQuiver& q, const IncidenceData& inc, std::mt19937_64& rng) {
    const std::size_t r = q.vertex_count();
    std::uniform_int_distribution<std::int64_t> entry(-6, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::int64_t> theta(r, 0);
        std::int64_t sum = 0;
        for (std::size_t i = 0; i + 1 < r; ++i) sum += theta[i] = entry(rng);
        theta[r - 1] = -sum;
        const auto u = theta_decompose(q, theta);
        bool nonneg = true;
        for (auto x : u) nonneg = nonneg && x >= 0;
        if (!nonneg || inc.B.apply(u) != theta) return {"theta decomposition", false, "theta " + join(theta)};
    }
    return {"theta decomposition", true, "100 random theta"};
}

PropertyResult check_closed_walks(const McKayQuiver& q, const IncidenceData& inc, std::mt19937_64& rng) {
    const std::size_t m = q.arrow_count();
    const auto basis = integer_kernel_basis(to_int_rows(inc.B), m);
    std::uniform_int_distribution<long> coeff(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::int64_t> u(m, 0);
        for (const auto& b : basis) {
            const long c = coeff(rng);
            for (std::size_t k = 0; k < m; ++k) u[k] += c * b[k].get_si();
        }
        const auto walk = closed_walk(q, q.vertices()[0], u);
        // The walk must be a connected sequence that returns to the base.
        std::size_t at = 0;
        for (const auto& s : walk) {
            const auto& a = q.arrows()[s.arrow];
            const auto from = s.direction > 0 ? a.tail_index : a.head_index;
            if (from != at) return {"kernel vectors are closed walks", false, "broken walk for " + join(u)};
            at = s.direction > 0 ? a.head_index : a.tail_index;
        }
        if (at != 0 || path_vector(q, walk).v != u) {
            return {"kernel vectors are closed walks", false, "vector mismatch for " + join(u)};
        }
    }
    return {"kernel vectors are closed walks", true, "30 random kernel vectors"};
}

PropertyResult check_flow_integrality(const McKayQuiver& q, const IncidenceData& inc, std::mt19937_64& rng) {
    const std::size_t r = q.vertex_count();
    const std::size_t m = q.arrow_count();
    if (m > 16) return {"flow polyhedron vertices integral", true, "skipped (more than 16 arrows)"};
    std::uniform_int_distribution<std::int64_t> entry(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::int64_t> theta(r, 0);
        std::int64_t sum = 0;
        for (std::size_t i = 0; i + 1 < r; ++i) sum += theta[i] = entry(rng);
        theta[r - 1] = -sum;
        HPolyhedron h = nonnegative_orthant(m);
        for (std::size_t i = 0; i < r; ++i) h.equations.push_back({to_rational(inc.B.row(i)), Rational(static_cast<long>(theta[i]))});
        for (const auto& v : h_to_v(h).vertices) {
            for (const auto& x : v) {
                if (x.get_den() != 1) return {"flow polyhedron vertices integral", false, "theta " + join(theta)};
            }
        }
    }
    return {"flow polyhedron vertices integral", true, "20 random theta"};
}

PropertyResult check_cycle_types(const McKayQuiver& q, const IncidenceData& inc, int bound) {
    const auto& g = q.group();
    const std::size_t n = g.dimension();
    const std::size_t m = q.arrow_count();
    const std::size_t r = q.vertex_count();

    std::set<std::vector<std::int64_t>> from_cycles;
    std::vector<std::int64_t> v(m, 0), balance(r, 0), type(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
        if (k == m) {
            for (auto x : balance) {
                if (x != 0) return;
            }
            from_cycles.insert(type);
            return;
        }
        const auto& a = q.arrows()[k];
        for (int c = 0; c <= left; ++c) {
            rec(k + 1, left - c);
            balance[a.head_index] += 1;
            balance[a.tail_index] -= 1;
            type[a.label - 1] += 1;
        }
        balance[a.head_index] -= left + 1;
        balance[a.tail_index] += left + 1;
        type[a.label - 1] -= left + 1;
    };
    rec(0, bound);

    std::set<std::vector<std::int64_t>> lattice_points;
    std::vector<std::int64_t> x(n, 0);
    std::function<void(std::size_t, int)> enumerate = [&](std::size_t i, int left) {
        if (i == n) {
            if (g.in_kernel_of_degree(x)) lattice_points.insert(x);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            x[i] = c;
            enumerate(i + 1, left - c);
        }
        x[i] = 0;
    };
    enumerate(0, bound);

    for (const auto& mt : lattice_points) {
        const auto p = cycle_from_type(q, q.vertices()[0], mt);
        bool nonneg = true;
        for (auto c : p.v) nonneg = nonneg && c >= 0;
        if (!nonneg || inc.B.apply(p.v) != std::vector<std::int64_t>(r, 0) || inc.D.apply(p.v) != mt) {
            return {"cycle types = N^n cap M", false, "cycle_from_type failed for " + join(mt)};
        }
    }
    if (from_cycles != lattice_points) {
        return {"cycle types = N^n cap M", false,
                std::to_string(from_cycles.size()) + " cycle types vs " + std::to_string(lattice_points.size()) +
                    " lattice points"};
    }
    return {"cycle types = N^n cap M", true,
            std::to_string(lattice_points.size()) + " points up to 1-norm " + std::to_string(bound)};
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const AbelianGroupData& group, int bound, std::uint64_t seed) {
    const auto q = build_quiver(group);
    const auto inc = incidence_matrices(q);
    std::mt19937_64 rng(seed);
    std::vector<PropertyResult> out;
    out.push_back(check_incidence(q, inc));
    out.push_back(check_kernel_lattice(q, inc));
    out.push_back(check_directed_paths(q, inc));
    out.push_back(check_theta_decompose(q, inc, rng));
    out.push_back(check_closed_walks(q, inc, rng));
    out.push_back(check_flow_integrality(q, inc, rng));
    out.push_back(check_cycle_types(q, inc, bound));
    return out;
}

}  // namespace mckay
