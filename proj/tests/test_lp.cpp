#include <doctest.h>

#include "mckay/lp.hpp"
#include "support.hpp"

using namespace mckay;
using fixtures::rv;

namespace {

LinearProgram lp_of(std::size_t dim, RatVector c, std::vector<Inequality> ineqs, std::vector<Equation> eqs = {}) {
    LinearProgram lp;
    lp.objective = std::move(c);
    lp.feasible.dim = dim;
    lp.feasible.inequalities = std::move(ineqs);
    lp.feasible.equations = std::move(eqs);
    return lp;
}

}  // namespace

TEST_CASE("optimum with a dual certificate") {
    // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6, x, y >= 0
    const auto lp = lp_of(2, rv({-1, -1}), {{rv({-1, -2}), -4}, {rv({-3, -1}), -6}, {rv({1, 0}), 0}, {rv({0, 1}), 0}});
    const auto out = solve(lp);
    const auto* opt = std::get_if<Optimal>(&out);
    REQUIRE(opt);
    CHECK(opt->value == Rational(-14, 5));
    CHECK(opt->point == RatVector{Rational(8, 5), Rational(6, 5)});
    CHECK(verify_certificate(lp, out));
    for (const auto& l : opt->ineq_duals) CHECK(sgn(l) >= 0);
}

TEST_CASE("free variables and equations") {
    // min x  s.t. x - y = 3, y >= -2
    const auto lp = lp_of(2, rv({1, 0}), {{rv({0, 1}), -2}}, {{rv({1, -1}), 3}});
    const auto out = solve(lp);
    const auto* opt = std::get_if<Optimal>(&out);
    REQUIRE(opt);
    CHECK(opt->value == 1);
    CHECK(verify_certificate(lp, out));
}

TEST_CASE("unbounded objective gives a ray") {
    const auto lp = lp_of(2, rv({-1, 0}), {{rv({1, 0}), 0}, {rv({0, 1}), 0}, {rv({-1, 1}), -1}});
    const auto out = solve(lp);
    const auto* u = std::get_if<Unbounded>(&out);
    REQUIRE(u);
    CHECK(sgn(dot(lp.objective, u->ray)) < 0);
    CHECK(verify_certificate(lp, out));
}

TEST_CASE("infeasible system gives a Farkas certificate") {
    const auto lp = lp_of(1, rv({1}), {{rv({1}), 2}, {rv({-1}), -1}});
    const auto out = solve(lp);
    REQUIRE(std::holds_alternative<Infeasible>(out));
    CHECK(verify_certificate(lp, out));
    const auto eq = lp_of(2, rv({0, 0}), {}, {{rv({1, 1}), 1}, {rv({2, 2}), 3}});
    const auto out2 = solve(eq);
    REQUIRE(std::holds_alternative<Infeasible>(out2));
    CHECK(verify_certificate(eq, out2));
}

TEST_CASE("degenerate cycling example terminates") {
    // Beale's example, written as min with x >= 0
    const auto lp = lp_of(4, {Rational(-3, 4), Rational(150), Rational(-1, 50), Rational(6)},
                          {{{Rational(-1, 4), Rational(60), Rational(1, 25), Rational(-9)}, 0},
                           {{Rational(-1, 2), Rational(90), Rational(1, 50), Rational(-3)}, 0},
                           {rv({0, 0, -1, 0}), -1},
                           {rv({1, 0, 0, 0}), 0},
                           {rv({0, 1, 0, 0}), 0},
                           {rv({0, 0, 1, 0}), 0},
                           {rv({0, 0, 0, 1}), 0}});
    const auto out = solve(lp);
    const auto* opt = std::get_if<Optimal>(&out);
    REQUIRE(opt);
    CHECK(opt->value == Rational(-1, 20));
    CHECK(verify_certificate(lp, out));
}

TEST_CASE("scaled sign rows get scaled duals") {
    // 2x >= 0 acts as the sign constraint on x
    const auto lp = lp_of(2, rv({1, 0}), {{rv({-1, 0}), -2}, {rv({0, 1}), 0}, {rv({1, 1}), -5}, {rv({2, 0}), 0}});
    const auto out = solve(lp);
    const auto* opt = std::get_if<Optimal>(&out);
    REQUIRE(opt);
    CHECK(opt->value == 0);
    CHECK(opt->ineq_duals[3] == Rational(1, 2));
}

TEST_CASE("tampered certificates are rejected") {
    const auto lp = lp_of(1, rv({1}), {{rv({1}), 2}});
    auto out = solve(lp);
    REQUIRE(std::holds_alternative<Optimal>(out));
    std::get<Optimal>(out).value = 3;
    CHECK_FALSE(verify_certificate(lp, out));
}

TEST_CASE("optimal face tight set") {
    // min x + y over the unit square: optimal face is the vertex 0
    const auto square = lp_of(2, rv({1, 1}), {{rv({1, 0}), 0}, {rv({0, 1}), 0}, {rv({-1, 0}), -1}, {rv({0, -1}), -1}});
    CHECK(optimal_face_tight_set(square) == std::vector<std::size_t>{0, 1});
    // min x: the whole left edge is optimal, only x >= 0 stays tight on it
    const auto edge = lp_of(2, rv({1, 0}), square.feasible.inequalities);
    CHECK(optimal_face_tight_set(edge) == std::vector<std::size_t>{0});
    CHECK(tight_set_at(edge.feasible, rv({0, 1})) == std::vector<std::size_t>{0, 3});
}
