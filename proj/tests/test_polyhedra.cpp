#include <doctest.h>

#include "mckay/double_description.hpp"
#include "mckay/error.hpp"
#include "mckay/polyhedron.hpp"
#include "support.hpp"

using namespace mckay;
using fixtures::iv;
using fixtures::rv;

namespace {

HPolyhedron box(std::size_t dim, long lo, long hi) {
    HPolyhedron h;
    h.dim = dim;
    for (std::size_t i = 0; i < dim; ++i) {
        RatVector e(dim, 0);
        e[i] = 1;
        h.inequalities.push_back({e, lo});
        e[i] = -1;
        h.inequalities.push_back({e, -hi});
    }
    return h;
}

}  // namespace

TEST_CASE("double description of a pointed cone") {
    // x >= 0, y >= 0, x + y >= z, z >= 0 in R^3
    const auto g = double_description(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, -1}), iv({0, 0, 1})}, {});
    CHECK(g.lineality.empty());
    CHECK(g.rays.size() == 4);
    for (const auto& r : g.rays) CHECK(make_primitive(r) == r);
}

TEST_CASE("double description keeps lineality") {
    DoubleDescriptionStats stats;
    const auto g = double_description(3, {iv({1, 0, 0})}, {}, &stats);
    CHECK(g.rays == std::vector<IntVector>{iv({1, 0, 0})});
    CHECK(g.lineality.size() == 2);
    const auto e = double_description(2, {}, {iv({1, 1})});
    CHECK(e.rays.empty());
    CHECK(e.lineality.size() == 1);
}

TEST_CASE("cube vertices and facets round trip") {
    const auto v = h_to_v(box(3, 0, 1));
    CHECK(v.vertices.size() == 8);
    CHECK(v.rays.empty());
    CHECK(v.vertices.front() == rv({0, 0, 0}));
    const auto h = v_to_h(v);
    CHECK(h.irredundant);
    CHECK(h.inequalities.size() == 6);
    CHECK(h_to_v(h) == v);
    CHECK(certify_irredundant(h));
}

TEST_CASE("redundant rows are dropped") {
    auto h = box(2, 0, 2);
    h.inequalities.push_back({rv({1, 1}), -5});
    h.inequalities.push_back({rv({2, 0}), 0});
    CHECK_FALSE(certify_irredundant(h));
    CHECK(v_to_h(h_to_v(h)).inequalities.size() == 4);
}

TEST_CASE("unbounded region and lineality") {
    HPolyhedron h;
    h.dim = 2;
    h.inequalities.push_back({rv({1, 0}), 1});
    const auto v = h_to_v(h);
    CHECK(v.vertices == std::vector<RatVector>{rv({1, 0})});
    CHECK(v.rays == std::vector<IntVector>{iv({1, 0})});
    CHECK(v.lineality == std::vector<IntVector>{iv({0, 1})});
    const auto back = v_to_h(v);
    REQUIRE(back.inequalities.size() == 1);
    CHECK(back.inequalities[0].b == 1);
}

TEST_CASE("empty polyhedron") {
    HPolyhedron h;
    h.dim = 1;
    h.inequalities.push_back({rv({1}), 2});
    h.inequalities.push_back({rv({-1}), -1});
    const auto v = h_to_v(h);
    CHECK(v.empty);
    const auto back = v_to_h(v);
    REQUIRE(back.inequalities.size() == 1);
    CHECK(back.inequalities[0].b == 1);
    CHECK(is_zero(back.inequalities[0].a));
}

TEST_CASE("rational vertices") {
    HPolyhedron h;
    h.dim = 2;
    h.inequalities = {{rv({1, 0}), 0}, {rv({0, 1}), 0}, {rv({-2, -3}), -1}};
    const auto v = h_to_v(h);
    CHECK(v.vertices == std::vector<RatVector>{rv({0, 0}), {Rational(0), Rational(1, 3)}, {Rational(1, 2), Rational(0)}});
}

TEST_CASE("projection prunes interior images") {
    VPolyhedron v;
    v.dim = 3;
    v.vertices = {rv({0, 0, 0}), rv({1, 0, 5}), rv({0, 1, -2}), rv({1, 1, 0}), {Rational(1, 2), Rational(1, 2), 7}};
    const auto p = project(v, {iv({1, 0, 0}), iv({0, 1, 0})});
    CHECK(p.vertices.size() == 4);
}

TEST_CASE("incidence requires matching descriptions") {
    const auto h = box(2, 0, 1);
    auto v = h_to_v(h);
    const auto inc = vertex_facet_incidence(h, v);
    for (const auto& s : inc) CHECK(s.size() == 2);
    v.vertices.push_back(rv({3, 3}));
    try {
        vertex_facet_incidence(h, v);
        FAIL("accepted a point outside");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MismatchedDescriptions);
    }
    CHECK(contains(h, rv({0, 1})));
    CHECK_FALSE(contains(h, rv({2, 0})));
}

TEST_CASE("orthant") {
    const auto h = nonnegative_orthant(4);
    const auto v = h_to_v(h);
    CHECK(v.vertices.size() == 1);
    CHECK(v.rays.size() == 4);
}
