// mckay: command-line front end for the quiver, fan and representation
// computations. Exit codes: 0 ok, 1 property failure or internal error,
// 2 input error, 3 unsupported option combination.

#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "mckay/document.hpp"
#include "mckay/error.hpp"
#include "mckay/group_spec.hpp"
#include "mckay/moduli.hpp"
#include "mckay/properties.hpp"
#include "mckay/svg.hpp"

namespace {

using namespace mckay;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;
constexpr int kUnsupported = 3;

struct ThetaOptions {
    std::string group;
    std::string theta;
    bool ghilb = false;
    bool lifted = false;
    bool oracle = false;
};

void add_theta_options(CLI::App* cmd, ThetaOptions& o) {
    cmd->add_option("--group", o.group, "group spec, 1/r(a1,...) or r1xr2:..;..")->required();
    auto* theta = cmd->add_option("--theta", o.theta, "comma-separated entries, integers or p/q");
    auto* ghilb = cmd->add_flag("--ghilb", o.ghilb, "use theta = (1-r, 1, ..., 1)");
    theta->excludes(ghilb);
    auto* lifted = cmd->add_flag("--lifted", o.lifted, "enumerate the lifted polyhedron");
    auto* oracle = cmd->add_flag("--oracle", o.oracle, "support-function queries (default)");
    lifted->excludes(oracle);
}

GitParameter resolve_theta(const AbelianGroupData& g, const ThetaOptions& o) {
    if (o.ghilb) return ghilb_theta(g);
    if (o.theta.empty()) throw Error(ErrorCode::BadTheta, "one of --theta or --ghilb is required");
    auto values = parse_rational_csv(o.theta);
    if (values.size() != static_cast<std::size_t>(g.order())) {
        throw Error(ErrorCode::BadTheta, "theta has " + std::to_string(values.size()) + " entries, group order is " +
                                             std::to_string(g.order()));
    }
    return GitParameter::make(std::move(values));
}

void print_matrix(std::ostream& os, const char* name, const SmallMatrix& m) {
    os << name << " (" << m.rows() << "x" << m.cols() << ")\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << std::setw(2) << m(i, j);
        os << "\n";
    }
}

int run_quiver(const std::string& spec, const std::string& format) {
    const auto q = build_quiver(parse_group_spec(spec));
    if (format == "json") {
        std::cout << dump(quiver_document(q));
        return kOk;
    }
    const auto& g = q.group();
    std::cout << "group " << describe(g) << ", " << q.vertex_count() << " vertices, " << q.arrow_count()
              << " arrows\n";
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const auto& a = q.arrows()[k];
        std::cout << "  a" << k << ": a_" << a.label << "^" << character_name(g, a.rho) << "  "
                  << character_name(g, a.tail) << " -> " << character_name(g, a.head) << "\n";
    }
    const auto inc = incidence_matrices(q);
    print_matrix(std::cout, "B", inc.B);
    print_matrix(std::cout, "C", inc.C);
    print_matrix(std::cout, "D", inc.D);
    return kOk;
}

int run_fan(const ThetaOptions& o, int charts, const std::string& svg_path) {
    const auto g = parse_group_spec(o.group);
    if (!svg_path.empty() && g.dimension() != 3) {
        std::cerr << "error: --svg needs n = 3, the group acts on dimension " << g.dimension() << "\n";
        return kUnsupported;
    }
    const auto theta = resolve_theta(g, o);
    const auto pt = p_theta(g, theta, o.lifted ? PThetaMethod::Lifted : PThetaMethod::LpOracle);
    const auto fan = fan_of_y_theta(pt, charts > 0, charts);
    DocumentParts parts;
    parts.ptheta = &pt;
    parts.fan = &fan;
    parts.ghilb = o.ghilb;
    std::cout << dump(moduli_document(parts));
    if (!svg_path.empty()) {
        std::ofstream out(svg_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << svg_path << "\n";
            return kInputError;
        }
        out << fan_cross_section_svg(fan.fan);
    }
    return kOk;
}

int run_rep(const ThetaOptions& o, const std::string& w_csv, bool single) {
    const auto g = parse_group_spec(o.group);
    const auto theta = resolve_theta(g, o);
    const auto w = parse_rational_csv(w_csv);
    if (w.size() != g.dimension()) {
        throw Error(ErrorCode::BadShape, "w has " + std::to_string(w.size()) + " entries, n is " +
                                             std::to_string(g.dimension()));
    }
    for (const auto& x : w) {
        if (sgn(x) < 0) throw Error(ErrorCode::NegativeW, "w must be nonnegative");
    }
    const auto pt = p_theta(g, theta, o.lifted ? PThetaMethod::Lifted : PThetaMethod::LpOracle);
    const auto fan = fan_of_y_theta(pt);
    const auto rep = distinguished_rep(
        g, theta, w, single ? TightSetPolicy::SingleOptimizer : TightSetPolicy::WholeOptimalFace, &fan.fan);
    DocumentParts parts;
    parts.ptheta = &pt;
    parts.fan = &fan;
    parts.rep = &rep;
    parts.w = w;
    parts.ghilb = o.ghilb;
    std::cout << dump(moduli_document(parts));
    return kOk;
}

int run_check(const std::string& spec, int bound) {
    const auto g = parse_group_spec(spec);
    bool ok = true;
    for (const auto& r : run_property_suite(g, bound)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        ok = ok && r.passed;
    }
    return ok ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"McKay quiver moduli: fans of coherent components and distinguished representations"};
    app.require_subcommand(1);

    std::string quiver_group;
    std::string format = "text";
    auto* quiver = app.add_subcommand("quiver", "vertices, arrows and incidence matrices");
    quiver->add_option("--group", quiver_group, "group spec")->required();
    quiver->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    ThetaOptions fan_opts;
    int charts = 0;
    std::string svg_path;
    auto* fan = app.add_subcommand("fan", "P_theta and its inner normal fan");
    add_theta_options(fan, fan_opts);
    fan->add_option("--charts", charts, "compute chart data up to this 1-norm bound")->check(CLI::NonNegativeNumber);
    fan->add_option("--svg", svg_path, "write a cross-section plot (n = 3 only)");

    ThetaOptions rep_opts;
    std::string w_csv;
    bool single = false;
    auto* rep = app.add_subcommand("rep", "distinguished 0/1 representation for a weight w");
    add_theta_options(rep, rep_opts);
    rep->add_option("-w,--weight", w_csv, "comma-separated nonnegative entries")->required();
    rep->add_flag("--single-optimizer", single, "tight set at one optimizer instead of the whole optimal face");

    std::string check_group;
    int bound = 6;
    auto* check = app.add_subcommand("check", "constructive lattice property suite");
    check->add_option("--group", check_group, "group spec")->required();
    check->add_option("--bound", bound, "1-norm bound for cycle enumeration")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*quiver) return run_quiver(quiver_group, format);
        if (*fan) return run_fan(fan_opts, charts, svg_path);
        if (*rep) return run_rep(rep_opts, w_csv, single);
        if (*check) return run_check(check_group, bound);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::Internal ? kPropertyFailure : kInputError;
    }
    return kOk;
}
