#include "mckay/polyhedron.hpp"

#include <algorithm>

#include "mckay/double_description.hpp"
#include "mckay/error.hpp"
#include "mckay/lp.hpp"

namespace mckay {

namespace {

IntVector homogenize(const RatVector& a, const Rational& last) {
    RatVector row = a;
    row.push_back(last);
    return clear_denominators(row);
}

template <class T>
void sort_unique(std::vector<T>& xs) {
    std::sort(xs.begin(), xs.end(), [](const T& a, const T& b) { return lex_less(a, b); });
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

HPolyhedron nonnegative_orthant(std::size_t dim) {
    HPolyhedron h;
    h.dim = dim;
    for (std::size_t i = 0; i < dim; ++i) {
        RatVector a(dim, 0);
        a[i] = 1;
        h.inequalities.push_back({std::move(a), 0});
    }
    return h;
}

VPolyhedron h_to_v(const HPolyhedron& h) {
    const std::size_t d = h.dim;
    // (x, t) with a.x - b t >= 0, e.x - f t = 0, t >= 0.
    std::vector<IntVector> ineqs;
    std::vector<IntVector> eqs;
    {
        IntVector t(d + 1, 0);
        t[d] = 1;
        ineqs.push_back(std::move(t));
    }
    for (const auto& in : h.inequalities) {
        if (in.a.size() != d) throw Error(ErrorCode::BadShape, "inequality length differs from dimension");
        ineqs.push_back(homogenize(in.a, -in.b));
    }
    for (const auto& eq : h.equations) {
        if (eq.a.size() != d) throw Error(ErrorCode::BadShape, "equation length differs from dimension");
        eqs.push_back(homogenize(eq.a, -eq.b));
    }
    const auto cone = double_description(d + 1, ineqs, eqs);

    VPolyhedron v;
    v.dim = d;
    RatMatrix lin;
    for (const auto& l : cone.lineality) lin.push_back(to_rational(IntVector(l.begin(), l.end() - 1)));
    const Echelon ech = row_echelon(lin, d);
    for (const auto& row : ech.rows) v.lineality.push_back(clear_denominators(row));

    for (const auto& r : cone.rays) {
        const Integer& t = r.back();
        RatVector x(r.begin(), r.end() - 1);
        if (sgn(t) > 0) {
            for (auto& c : x) c /= t;
            v.vertices.push_back(reduce_modulo(ech, std::move(x)));
        } else {
            auto ray = clear_denominators(reduce_modulo(ech, std::move(x)));
            if (!is_zero(ray)) v.rays.push_back(std::move(ray));
        }
    }
    if (v.vertices.empty()) {
        VPolyhedron empty;
        empty.dim = d;
        empty.empty = true;
        return empty;
    }
    sort_unique(v.vertices);
    sort_unique(v.rays);
    return v;
}

HPolyhedron v_to_h(const VPolyhedron& v) {
    const std::size_t d = v.dim;
    HPolyhedron h;
    h.dim = d;
    h.irredundant = true;
    if (v.empty) {
        h.inequalities.push_back({RatVector(d, 0), 1});
        return h;
    }
    // Polar cone of the homogenization: y = (a, c) with a.v + c >= 0,
    // a.r >= 0 and a.l = 0.
    std::vector<IntVector> ineqs;
    std::vector<IntVector> eqs;
    for (const auto& p : v.vertices) ineqs.push_back(homogenize(p, 1));
    for (const auto& r : v.rays) ineqs.push_back(homogenize(to_rational(r), 0));
    for (const auto& l : v.lineality) eqs.push_back(homogenize(to_rational(l), 0));
    const auto polar = double_description(d + 1, ineqs, eqs);

    RatMatrix lin;
    for (const auto& l : polar.lineality) lin.push_back(to_rational(l));
    const Echelon ech = row_echelon(lin, d + 1);
    for (const auto& row : ech.rows) {
        auto e = clear_denominators(row);
        Equation eq{RatVector(e.begin(), e.end() - 1), Rational(-e.back())};
        h.equations.push_back(std::move(eq));
    }
    for (const auto& y : polar.rays) {
        RatVector full = reduce_modulo(ech, to_rational(y));
        RatVector a(full.begin(), full.end() - 1);
        if (is_zero(a)) continue;  // 0 >= -c, the face at infinity
        const IntVector prim = clear_denominators(a);
        // scale so that a becomes `prim`
        std::size_t i = 0;
        while (sgn(a[i]) == 0) ++i;
        const Rational factor = Rational(prim[i]) / a[i];
        h.inequalities.push_back({to_rational(prim), -full.back() * factor});
    }
    std::sort(h.inequalities.begin(), h.inequalities.end(), [](const Inequality& x, const Inequality& y) {
        if (x.a != y.a) return lex_less(x.a, y.a);
        return x.b < y.b;
    });
    return h;
}

VPolyhedron project(const VPolyhedron& v, const IntMatrix& map) {
    const std::size_t target = map.size();
    VPolyhedron image;
    image.dim = target;
    if (v.empty) {
        image.empty = true;
        return image;
    }
    for (const auto& row : map) {
        if (row.size() != v.dim) throw Error(ErrorCode::BadShape, "projection map width differs from dimension");
    }
    auto apply_int = [&](const IntVector& x) {
        IntVector y(target);
        for (std::size_t i = 0; i < target; ++i) y[i] = dot(map[i], x);
        return y;
    };
    for (const auto& p : v.vertices) {
        RatVector y(target);
        for (std::size_t i = 0; i < target; ++i) y[i] = dot(p, map[i]);
        image.vertices.push_back(std::move(y));
    }
    sort_unique(image.vertices);
    for (const auto& r : v.rays) {
        auto y = make_primitive(apply_int(r));
        if (!is_zero(y)) image.rays.push_back(std::move(y));
    }
    sort_unique(image.rays);
    for (const auto& l : v.lineality) {
        auto y = make_primitive(apply_int(l));
        if (!is_zero(y)) image.lineality.push_back(std::move(y));
    }
    return h_to_v(v_to_h(image));
}

std::vector<std::vector<std::size_t>> vertex_facet_incidence(const HPolyhedron& h, const VPolyhedron& v) {
    std::vector<std::vector<std::size_t>> table;
    for (const auto& p : v.vertices) {
        for (const auto& eq : h.equations) {
            if (dot(eq.a, p) != eq.b) throw Error(ErrorCode::MismatchedDescriptions, "vertex violates an equation");
        }
        std::vector<std::size_t> tight;
        for (std::size_t k = 0; k < h.inequalities.size(); ++k) {
            const Rational s = dot(h.inequalities[k].a, p) - h.inequalities[k].b;
            if (sgn(s) < 0) throw Error(ErrorCode::MismatchedDescriptions, "vertex violates an inequality");
            if (sgn(s) == 0) tight.push_back(k);
        }
        table.push_back(std::move(tight));
    }
    return table;
}

bool contains(const HPolyhedron& h, const RatVector& x) {
    for (const auto& eq : h.equations) {
        if (dot(eq.a, x) != eq.b) return false;
    }
    for (const auto& in : h.inequalities) {
        if (dot(in.a, x) < in.b) return false;
    }
    return true;
}

bool certify_irredundant(const HPolyhedron& h) {
    for (std::size_t k = 0; k < h.inequalities.size(); ++k) {
        LinearProgram lp;
        lp.objective = h.inequalities[k].a;
        lp.feasible.dim = h.dim;
        lp.feasible.equations = h.equations;
        for (std::size_t j = 0; j < h.inequalities.size(); ++j) {
            if (j != k) lp.feasible.inequalities.push_back(h.inequalities[j]);
        }
        const auto outcome = solve(lp);
        if (std::holds_alternative<Infeasible>(outcome)) return false;
        if (const auto* opt = std::get_if<Optimal>(&outcome)) {
            if (opt->value >= h.inequalities[k].b) return false;
        }
    }
    return true;
}

}  // namespace mckay
