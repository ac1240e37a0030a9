#include "mckay/document.hpp"

#include "mckay/error.hpp"

namespace mckay {

namespace {

Json matrix_json(const SmallMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

Json group_json(const AbelianGroupData& g) {
    return Json{{"spec", describe(g)}, {"orders", g.orders()}, {"weights", g.weights()}, {"order", g.order()},
                {"n", g.dimension()}};
}

Json index_list(const std::vector<std::size_t>& v) {
    return Json(v);
}

}  // namespace

Json rational_json(const Rational& q) {
    return to_string(q);
}

Json rational_vector_json(const RatVector& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(rational_json(q));
    return out;
}

Json integer_vector_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) {
        if (!x.fits_slong_p()) throw Error(ErrorCode::Internal, "integer too large for JSON: " + x.get_str());
        out.push_back(x.get_si());
    }
    return out;
}

Json quiver_document(const McKayQuiver& quiver) {
    const auto& g = quiver.group();
    const auto inc = incidence_matrices(quiver);
    Json vertices = Json::array();
    for (const auto& v : quiver.vertices()) vertices.push_back(character_name(g, v));
    Json arrows = Json::array();
    for (const auto& a : quiver.arrows()) {
        arrows.push_back({{"label", a.label}, {"rho", character_name(g, a.rho)}, {"head", a.head_index},
                          {"tail", a.tail_index}});
    }
    return Json{{"schema", kSchema},  {"group", group_json(g)}, {"vertices", vertices}, {"arrows", arrows},
                {"B", matrix_json(inc.B)}, {"C", matrix_json(inc.C)}, {"D", matrix_json(inc.D)}};
}

Json moduli_document(const DocumentParts& parts) {
    if (!parts.ptheta) throw Error(ErrorCode::Internal, "document needs P_theta data");
    const auto& pt = *parts.ptheta;
    Json doc{{"schema", kSchema}, {"group", group_json(pt.group)}};
    doc["theta"] = rational_vector_json(pt.theta.values());
    if (parts.ghilb) doc["ghilb"] = true;

    Json ineqs = Json::array();
    for (const auto& in : pt.h.inequalities) {
        ineqs.push_back({{"a", rational_vector_json(in.a)}, {"b", rational_json(in.b)}});
    }
    Json vertices = Json::array();
    for (const auto& v : pt.v.vertices) vertices.push_back(rational_vector_json(v));
    Json rays = Json::array();
    for (const auto& r : pt.v.rays) rays.push_back(integer_vector_json(r));
    Json lineality = Json::array();
    for (const auto& r : pt.v.lineality) lineality.push_back(integer_vector_json(r));
    doc["p_theta"] = {{"vertices", vertices}, {"rays", rays}, {"lineality", lineality}, {"inequalities", ineqs}};

    if (parts.fan) {
        const auto& f = parts.fan->fan;
        Json frays = Json::array();
        for (const auto& r : f.rays) frays.push_back(integer_vector_json(r));
        Json maximal = Json::array();
        for (auto c : f.maximal_cones) maximal.push_back(index_list(f.cones[c].ray_indices));
        Json markers = Json::array();
        for (const auto& m : f.markers) markers.push_back(rational_vector_json(m));
        Json cones = Json::array();
        for (const auto& c : f.cones) cones.push_back({{"rays", index_list(c.ray_indices)}, {"dim", c.cone_dimension()}});
        Json fan{{"rays", frays}, {"maximal_cones", maximal}, {"markers", markers}, {"cones", cones}};
        if (!parts.fan->charts.empty()) {
            Json charts = Json::array();
            for (const auto& ch : parts.fan->charts) {
                Json gens = Json::array();
                for (const auto& g : ch.generators) gens.push_back(integer_vector_json(g));
                Json c{{"vertex", ch.vertex}, {"cone", ch.cone}, {"generators", gens},
                       {"saturated_up_to_bound", ch.saturated_up_to_bound}};
                if (ch.witness) c["witness"] = integer_vector_json(*ch.witness);
                charts.push_back(std::move(c));
            }
            fan["charts"] = charts;
            fan["chart_bound"] = parts.fan->degree_bound;
        }
        doc["fan"] = std::move(fan);
    }

    if (parts.rep) {
        const auto& r = *parts.rep;
        Json rep{{"w", rational_vector_json(parts.w)},
                 {"b", r.b},
                 {"tight_set", index_list(r.tight_set)},
                 {"v", rational_vector_json(r.v)},
                 {"objective", rational_json(r.objective)}};
        if (r.cone && parts.fan) {
            rep["cone"] = {{"index", *r.cone}, {"rays", index_list(parts.fan->fan.cones[*r.cone].ray_indices)}};
        }
        doc["rep"] = std::move(rep);
    }
    return doc;
}

std::string dump(const Json& doc) {
    return doc.dump(2) + "\n";
}

}  // namespace mckay
