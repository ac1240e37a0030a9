// Acceptance gate: one PASS/FAIL/SKIP line per criterion. Exit status is
// nonzero when any criterion fails. Pass --stress to run criterion 4.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "mckay/document.hpp"
#include "mckay/error.hpp"
#include "mckay/lattice.hpp"
#include "mckay/properties.hpp"
#include "support.hpp"

using namespace mckay;
using fixtures::iv;
using fixtures::rv;

namespace {

// Wall-clock budgets in seconds. All comparisons are exact; these are the
// only tolerances.
constexpr double kBudgetGolden = 1;
constexpr double kBudgetTable = 60;
constexpr double kBudgetLiftedTable = 15 * 60;
constexpr double kBudgetStress = 30 * 60;
constexpr double kBudgetRep = 5;
constexpr double kBudgetZeroW = 1;  // per group
constexpr double kBudgetWeightOne = 5;
constexpr double kBudgetProperties = 5 * 60;

constexpr long kLiftedVertices = 17581;
constexpr long kLiftedRays = 630;
constexpr int kChartBound = 6;
constexpr int kCycleBound = 6;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            detail << " [" << what << "]";
        }
    }
};

int failures = 0;

void run(int id, const std::string& title, double budget, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.expect(secs <= budget, "over budget");
    if (!out.passed) ++failures;
    std::printf("%s criterion %d: %s (%.2fs, budget %.0fs)%s\n", out.passed ? "PASS" : "FAIL", id, title.c_str(), secs,
                budget, out.detail.str().c_str());
    std::fflush(stdout);
}

void skip(int id, const std::string& title, const std::string& why) {
    std::printf("SKIP criterion %d: %s (%s)\n", id, title.c_str(), why.c_str());
}

const std::vector<std::vector<std::int64_t>> kExpectedC{
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0},  {-1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
    {0, -1, -1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},  {0, 0, 0, -1, -1, 0, 1, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, -1, -1, 0, 1, 1, 0, 0, 0, 0},  {0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 1, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 1, 1},  {1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0},
    {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}};

// Expected generators, each monomial as (label, character) pairs.
using Var = std::pair<int, int>;
using ExpectedBinomial = std::pair<std::vector<Var>, std::vector<Var>>;
const std::vector<ExpectedBinomial> kExpectedBinomials{
    {{{2, 1}, {1, 0}}, {{1, 2}, {2, 0}}}, {{{2, 2}, {1, 1}}, {{1, 3}, {2, 1}}}, {{{2, 3}, {1, 2}}, {{1, 4}, {2, 2}}},
    {{{2, 4}, {1, 3}}, {{1, 5}, {2, 3}}}, {{{2, 5}, {1, 4}}, {{1, 6}, {2, 4}}}, {{{2, 6}, {1, 5}}, {{1, 0}, {2, 5}}},
    {{{2, 0}, {1, 6}}, {{1, 1}, {2, 6}}}};

void check_table(Outcome& out, const PThetaData& pt) {
    out.expect(pt.v.vertices.size() == 11, "11 vertices");
    out.expect(pt.v.rays.size() == 3, "recession cone is the orthant");
    out.expect(pt.h.inequalities.size() == 8 && pt.h.irredundant && certify_irredundant(pt.h), "8 facets");
    const auto renum = fixtures::renumbering(pt.h);
    for (const auto& [label, idx] : renum) out.expect(idx >= 0, "facet " + std::to_string(label) + " present");
    if (!out.passed) return;
    const auto inc = vertex_facet_incidence(pt.h, pt.v);
    for (const auto& [vertex, labels] : fixtures::table_vertices()) {
        const auto it = std::find(pt.v.vertices.begin(), pt.v.vertices.end(), vertex);
        if (it == pt.v.vertices.end()) {
            out.expect(false, "vertex missing");
            continue;
        }
        std::set<std::size_t> want;
        for (int l : labels) want.insert(static_cast<std::size_t>(renum.at(l)));
        const auto& got = inc[static_cast<std::size_t>(it - pt.v.vertices.begin())];
        out.expect(std::set<std::size_t>(got.begin(), got.end()) == want, "incidence");
    }
}

std::string capture(const std::string& cmd) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw std::runtime_error("popen failed");
    char buf[4096];
    std::size_t k;
    while ((k = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
    if (pclose(p) != 0) throw std::runtime_error("command failed: " + cmd);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    bool stress = false;
    for (int i = 1; i < argc; ++i) stress = stress || std::string(argv[i]) == "--stress";

    run(1, "golden C matrix for 1/7(1,2)", kBudgetGolden, [](Outcome& out) {
        const auto inc = incidence_matrices(build_quiver(parse_group_spec("1/7(1,2)")));
        out.expect(inc.C.rows() == 9 && inc.C.cols() == 14, "shape 9x14");
        for (std::size_t i = 0; i < 9 && out.passed; ++i) out.expect(inc.C.row(i) == kExpectedC[i], "row " + std::to_string(i));
    });

    run(2, "binomial generators for 1/7(1,2)", kBudgetGolden, [](Outcome& out) {
        const auto q = build_quiver(parse_group_spec("1/7(1,2)"));
        auto monomial = [&](const std::vector<Var>& vars) {
            std::vector<std::int64_t> e(q.arrow_count(), 0);
            for (auto [label, rho] : vars) e[q.arrow_index(static_cast<std::size_t>(rho), static_cast<std::size_t>(label))] += 1;
            return e;
        };
        using Key = std::set<std::vector<std::int64_t>>;  // unordered pair, so sign is irrelevant
        std::set<Key> want, got;
        for (const auto& [a, b] : kExpectedBinomials) want.insert(Key{monomial(a), monomial(b)});
        for (const auto& b : relation_binomials(q)) got.insert(Key{b.plus, b.minus});
        out.expect(relation_binomials(q).size() == 7, "7 generators");
        out.expect(got == want, "same binomials");
    });

    run(3, "P_theta vertices, facets and incidences (oracle path)", kBudgetTable, [](Outcome& out) {
        check_table(out, p_theta(fixtures::eleven(), fixtures::eleven_theta(), PThetaMethod::LpOracle));
    });
    run(3, "P_theta vertices, facets and incidences (lifted path)", kBudgetLiftedTable, [](Outcome& out) {
        check_table(out, p_theta(fixtures::eleven(), fixtures::eleven_theta(), PThetaMethod::Lifted));
    });

    if (stress) {
        run(4, "lifted polyhedron has 17581 vertices and 630 rays", kBudgetStress, [](Outcome& out) {
            const auto v = h_to_v(lifted_polyhedron(fixtures::eleven(), fixtures::eleven_theta()));
            const long nv = static_cast<long>(v.vertices.size());
            const long nr = static_cast<long>(v.rays.size());
            out.detail << " vertices=" << nv << " rays=" << nr << " vertices+rays=" << nv + nr;
            out.expect(nv == kLiftedVertices, "vertex count");
            out.expect(nr == kLiftedRays, "ray count");
        });
    } else {
        skip(4, "lifted polyhedron counts", "stress gate, pass --stress");
    }

    run(5, "fan rays and maximal cones", kBudgetTable, [](Outcome& out) {
        const auto pt = p_theta(fixtures::eleven(), fixtures::eleven_theta());
        const auto f = fan_of_y_theta(pt).fan;
        const std::set<IntVector> want{iv({2, 4, 5}), iv({3, 6, 2}), iv({1, 2, 8}), iv({7, 3, 1}),
                                       iv({6, 1, 4}), iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})};
        out.expect(std::set<IntVector>(f.rays.begin(), f.rays.end()) == want && f.rays.size() == 8, "8 rays");
        out.expect(f.maximal_cones.size() == 11, "11 maximal cones");
        const auto renum = fixtures::renumbering(pt.h);
        std::set<std::set<std::size_t>> want_cones, got_cones;
        for (const auto& [vertex, labels] : fixtures::table_vertices()) {
            std::set<std::size_t> s;
            for (int l : labels) s.insert(static_cast<std::size_t>(renum.at(l)));
            want_cones.insert(s);
        }
        for (auto c : f.maximal_cones) {
            const auto& idx = f.cones[c].ray_indices;
            got_cones.insert(std::set<std::size_t>(idx.begin(), idx.end()));
            out.expect(f.cones[c].cone_dimension() == 3, "full-dimensional");
        }
        out.expect(got_cones == want_cones, "cones match incidences");
    });

    run(6, "distinguished representation at w = (10,7,6)", kBudgetRep, [](Outcome& out) {
        const auto g = fixtures::eleven();
        const auto rep = distinguished_rep(g, fixtures::eleven_theta(), rv({10, 7, 6}));
        out.expect(rep.b == fixtures::expected_b_10_7_6(), "b");
        out.expect(rep.objective == -237, "optimal value -237");
        out.expect(satisfies_relations(build_quiver(g), rep.b), "relations");
    });

    run(7, "distinguished representation at w = (8,3,1)", kBudgetRep, [](Outcome& out) {
        const auto g = fixtures::eleven();
        const auto rep = distinguished_rep(g, fixtures::eleven_theta(), rv({8, 3, 1}), TightSetPolicy::WholeOptimalFace);
        out.expect(rep.b == fixtures::expected_b_8_3_1(), "b");
        out.expect(rep.tight_set.size() == 18, "18 tight arrows");
        out.expect(satisfies_relations(build_quiver(g), rep.b), "relations");
    });

    const std::vector<std::pair<std::string, std::string>> zero_w_cases{
        {"1/7(1,2)", "-6,1,1,1,1,1,1"},       {"1/3(1,1,1)", "-2,1,1"},  {"1/2(1)", "-1,1"},
        {"1/5(1,2,2)", "-1/2,1/3,1/6,0,0"},  {"2x2:1,0;0,1", "-3,1,1,1"}, {"1/11(1,2,8)", "1,1,1,1,-7,-9,1,1,1,8,1"}};
    run(8, "w = 0 gives the all-ones representation", kBudgetZeroW * static_cast<double>(zero_w_cases.size()),
        [&](Outcome& out) {
            for (const auto& [spec, theta] : zero_w_cases) {
                const auto g = parse_group_spec(spec);
                const auto rep = distinguished_rep(g, GitParameter::make(parse_rational_csv(theta)),
                                                   RatVector(g.dimension(), 0));
                out.expect(rep.b == std::vector<int>(static_cast<std::size_t>(g.order()) * g.dimension(), 1), spec);
            }
        });

    run(9, "weight-one action 1/3(1,1,1)", kBudgetWeightOne, [](Outcome& out) {
        const auto g = parse_group_spec("1/3(1,1,1)");
        const auto theta = GitParameter::make(rv({-2, 1, 1}));
        out.expect(d_theta(g, theta) == 3, "d_theta = 3");
        const auto pt = p_theta(g, theta);
        std::vector<Inequality> want;
        for (std::size_t i = 0; i < 3; ++i) {
            RatVector e(3, 0);
            e[2 - i] = 1;
            want.push_back({e, 0});
        }
        want.push_back({rv({1, 1, 1}), 3});
        out.expect(pt.h.inequalities == want && pt.h.equations.empty(), "P_theta = {y >= 0, sum y >= 3}");
        const auto tf = fan_of_y_theta(pt, true, kChartBound);
        const auto& f = tf.fan;
        // stellar subdivision of the orthant at (1,1,1): three cones, each
        // replacing one coordinate ray by (1,1,1)
        std::set<std::set<IntVector>> want_cones{{iv({1, 1, 1}), iv({0, 1, 0}), iv({0, 0, 1})},
                                                 {iv({1, 1, 1}), iv({1, 0, 0}), iv({0, 0, 1})},
                                                 {iv({1, 1, 1}), iv({1, 0, 0}), iv({0, 1, 0})}};
        std::set<std::set<IntVector>> got;
        for (auto c : f.maximal_cones) got.insert(std::set<IntVector>(f.cones[c].rays.begin(), f.cones[c].rays.end()));
        out.expect(got == want_cones, "stellar subdivision");
        out.expect(tf.charts.size() == 3, "one chart per maximal cone");
        for (const auto& ch : tf.charts) out.expect(ch.saturated_up_to_bound, "saturated up to bound 6");
    });

    run(10, "property suites", kBudgetProperties, [&](Outcome& out) {
        std::size_t lattices = 0;
        for (std::int64_t r = 1; 2 * r <= 40; ++r) {
            for (std::int64_t a = 0; a < r; ++a) {
                std::vector<std::vector<std::int64_t>> shapes{{1, a}};
                if (3 * r <= 40) {
                    for (std::int64_t b = 0; b < r; ++b) shapes.push_back({1, a, b});
                }
                for (const auto& w : shapes) {
                    const auto q = build_quiver(cyclic_group(r, w));
                    const auto c = incidence_matrices(q).C;
                    IntMatrix gens, crow(c.rows(), IntVector(c.cols()));
                    for (const auto& g : kernel_generators_cij(q)) gens.push_back(to_integer(g));
                    for (std::size_t i = 0; i < c.rows(); ++i)
                        for (std::size_t j = 0; j < c.cols(); ++j) crow[i][j] = static_cast<long>(c(i, j));
                    const auto m = q.arrow_count();
                    out.expect(hermite_normal_form(gens, m) == hermite_normal_form(integer_kernel_basis(crow, m), m),
                               "HNF " + describe(q.group()));
                    ++lattices;
                }
            }
        }
        out.detail << " lattices=" << lattices;

        for (const auto& spec : fixtures::suite_specs()) {
            for (const auto& r : run_property_suite(parse_group_spec(spec), kCycleBound)) {
                out.expect(r.passed, spec + " " + r.name + ": " + r.detail);
            }
        }

        std::size_t reps = 0;
        for (const auto& [spec, theta_csv] : zero_w_cases) {
            const auto g = parse_group_spec(spec);
            const auto q = build_quiver(g);
            const auto theta = GitParameter::make(parse_rational_csv(theta_csv));
            const auto a = p_theta(g, theta, PThetaMethod::LpOracle);
            const auto b = p_theta(g, theta, PThetaMethod::Lifted);
            out.expect(a.h == b.h && a.v == b.v, "two-path agreement " + spec);
            const auto tf = fan_of_y_theta(a);
            for (const auto& cone : tf.fan.cones) {
                RatVector w(g.dimension(), 0);
                for (const auto& ray : cone.rays)
                    for (std::size_t i = 0; i < w.size(); ++i) w[i] += ray[i];
                const auto rep = distinguished_rep(g, theta, w, TightSetPolicy::WholeOptimalFace, &tf.fan);
                out.expect(satisfies_relations(q, rep.b), "relations " + spec);
                ++reps;
            }
        }
        out.detail << " representations=" << reps;
    });

    run(11, "byte-identical documents across runs", kBudgetTable, [](Outcome& out) {
        const std::string cli = MCKAY_CLI_PATH;
        const std::string fan = cli + " fan --group '1/11(1,2,8)' --theta 1,1,1,1,-7,-9,1,1,1,8,1";
        const std::string rep = cli + " rep --group '1/11(1,2,8)' --theta 1,1,1,1,-7,-9,1,1,1,8,1 -w 10,7,6";
        const auto f1 = capture(fan), f2 = capture(fan);
        const auto r1 = capture(rep), r2 = capture(rep);
        out.expect(!f1.empty() && f1 == f2, "fan document");
        out.expect(!r1.empty() && r1 == r2, "rep document");
        out.expect(f1 == capture(fan + " --lifted"), "lifted and oracle documents");
    });

    return failures == 0 ? 0 : 1;
}
