#include "mckay/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mckay/double_description.hpp"
#include "mckay/error.hpp"

namespace mckay {

Cone make_cone(std::size_t dim, std::vector<std::size_t> indices, std::vector<IntVector> rays,
               const std::vector<IntVector>& lineality) {
    Cone c;
    c.dim = dim;
    c.ray_indices = std::move(indices);
    c.rays = std::move(rays);
    const auto dual = double_description(dim, c.rays, lineality);
    c.facet_normals = dual.rays;
    c.span_equations = dual.lineality;
    return c;
}

bool in_cone(const Cone& cone, const RatVector& w) {
    for (const auto& e : cone.span_equations) {
        if (sgn(dot(w, e)) != 0) return false;
    }
    for (const auto& y : cone.facet_normals) {
        if (sgn(dot(w, y)) < 0) return false;
    }
    return true;
}

bool in_relative_interior(const Cone& cone, const RatVector& w) {
    for (const auto& e : cone.span_equations) {
        if (sgn(dot(w, e)) != 0) return false;
    }
    for (const auto& y : cone.facet_normals) {
        if (sgn(dot(w, y)) <= 0) return false;
    }
    return true;
}

Fan normal_fan(const HPolyhedron& h, const VPolyhedron& v) {
    if (v.empty || v.vertices.empty()) throw Error(ErrorCode::BadShape, "normal fan needs a polyhedron with a vertex");
    Fan fan;
    fan.dim = h.dim;
    for (const auto& in : h.inequalities) fan.rays.push_back(clear_denominators(in.a));
    {
        RatMatrix eqs;
        for (const auto& e : h.equations) eqs.push_back(e.a);
        for (const auto& row : row_echelon(eqs, h.dim).rows) fan.lineality.push_back(clear_denominators(row));
    }
    const auto incidence = vertex_facet_incidence(h, v);

    auto cone_of = [&](const std::vector<std::size_t>& idx) {
        std::vector<IntVector> rays;
        for (auto i : idx) rays.push_back(fan.rays[i]);
        return make_cone(fan.dim, idx, std::move(rays), fan.lineality);
    };

    // Every face of every maximal cone, by intersecting facet ray sets.
    std::set<std::vector<std::size_t>> faces;
    std::vector<Cone> maximal;
    for (const auto& tight : incidence) {
        Cone top = cone_of(tight);
        std::set<std::vector<std::size_t>> family{tight};
        for (const auto& y : top.facet_normals) {
            std::vector<std::size_t> on_facet;
            for (std::size_t k = 0; k < top.rays.size(); ++k) {
                if (sgn(dot(y, top.rays[k])) == 0) on_facet.push_back(top.ray_indices[k]);
            }
            std::set<std::vector<std::size_t>> grown = family;
            for (const auto& s : family) {
                std::vector<std::size_t> meet;
                std::set_intersection(s.begin(), s.end(), on_facet.begin(), on_facet.end(), std::back_inserter(meet));
                grown.insert(std::move(meet));
            }
            family = std::move(grown);
        }
        faces.insert(family.begin(), family.end());
        maximal.push_back(std::move(top));
    }

    std::map<std::vector<std::size_t>, Cone> built;
    for (auto& c : maximal) built.emplace(c.ray_indices, std::move(c));
    for (const auto& f : faces) {
        if (!built.count(f)) built.emplace(f, cone_of(f));
    }
    for (auto& [key, cone] : built) fan.cones.push_back(std::move(cone));
    std::stable_sort(fan.cones.begin(), fan.cones.end(), [](const Cone& a, const Cone& b) {
        if (a.cone_dimension() != b.cone_dimension()) return a.cone_dimension() < b.cone_dimension();
        return a.ray_indices < b.ray_indices;
    });
    for (const auto& tight : incidence) {
        auto it = std::find_if(fan.cones.begin(), fan.cones.end(), [&](const Cone& c) { return c.ray_indices == tight; });
        fan.maximal_cones.push_back(static_cast<std::size_t>(it - fan.cones.begin()));
    }
    fan.markers = v.vertices;
    return fan;
}

std::size_t locate_cone_index(const Fan& fan, const RatVector& w) {
    if (w.size() != fan.dim) throw Error(ErrorCode::BadShape, "query vector length differs from fan dimension");
    for (std::size_t i = 0; i < fan.cones.size(); ++i) {
        if (in_relative_interior(fan.cones[i], w)) return i;
    }
    throw Error(ErrorCode::OutsideSupport, "vector lies outside the support of the fan");
}

const Cone& locate_cone(const Fan& fan, const RatVector& w) {
    return fan.cones[locate_cone_index(fan, w)];
}

}  // namespace mckay
