#include "verify.hpp"

#include "fdirac/aks.hpp"
#include "fdirac/errors.hpp"
#include "fdirac/sl2c_example.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using fdirac::CMat2;
using fdirac::DualVector;
using fdirac::GroupDescriptor;
using fdirac::PhasePoint;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitBlowup = 3;
constexpr double kBlowup = 1e8;

/// Shortest round-trip decimal representation.
std::string fmt(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

/// Removes --tol.<name>=<value> and --tol.<name> <value> from argv.
std::map<std::string, double> extract_tolerances(std::vector<std::string>& args) {
    std::map<std::string, double> tols;
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--tol.", 0) != 0) {
            kept.push_back(a);
            continue;
        }
        std::string name = a.substr(6);
        std::string value;
        const auto eq = name.find('=');
        if (eq != std::string::npos) {
            value = name.substr(eq + 1);
            name = name.substr(0, eq);
        } else if (i + 1 < args.size()) {
            value = args[++i];
        } else {
            throw CLI::ValidationError("--tol." + name, "missing value");
        }
        const double v = std::stod(value);
        if (!(v > 0.0)) throw CLI::ValidationError("--tol." + name, "tolerance must be positive");
        tols[name] = v;
    }
    args = kept;
    return tols;
}

struct Options {
    std::uint64_t seed = 20240611;
    std::string config;
    std::string out;
    std::string format = "json";
    std::map<std::string, double> tolerances;

    std::vector<double> matrix;

    std::string side = "N";

    double t_end = 5.0;
    int steps = 1000;
    std::string method = "rk4";
    std::string hamiltonian = "killing";
    std::vector<double> initial;
    std::vector<double> eta_minus;

    std::string suite = "all";
    bool inject_noncharacter = false;
    bool timing = false;
};

/// Writes text to --out or stdout.
void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    f << text;
}

json matrix_json(const CMat2& m) {
    json rows = json::array();
    for (int i = 0; i < 2; ++i) {
        json row = json::array();
        for (int j = 0; j < 2; ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

json vector_json(const fdirac::RealVector& v) {
    json out = json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

/// Explicit or seeded initial point; seeded points get eta_minus = 0 when
/// character_default is set.
PhasePoint initial_point(const GroupDescriptor& d, const Options& opt, bool character_default) {
    fdirac::Sampler s(opt.seed);
    PhasePoint p;
    if (opt.initial.empty()) {
        const fdirac::GroupElement g = s.group(d);
        DualVector eta = s.dual(d);
        if (character_default) eta.coords.tail(d.dim_half).setZero();
        p = fdirac::make_point(d, g, eta);
    } else {
        if (opt.initial.size() != 13) throw fdirac::DegenerateInput("--init expects 13 numbers");
        fdirac::sl2c::Sl2Coordinates c;
        c.alpha = {opt.initial[0], opt.initial[1]};
        c.beta = {opt.initial[2], opt.initial[3]};
        c.a = opt.initial[4];
        c.z = {opt.initial[5], opt.initial[6]};
        for (int k = 0; k < 3; ++k) {
            c.eta_plus(k) = opt.initial[7 + k];
            c.eta_minus(k) = opt.initial[10 + k];
        }
        if (std::abs(std::norm(c.alpha) + std::norm(c.beta) - 1.0) > 1e-8 || !(c.a > 0.0)) {
            throw fdirac::DegenerateInput("initial condition is not in SU(2) x B");
        }
        p = fdirac::sl2c::to_point(d, c);
    }
    if (!opt.eta_minus.empty()) {
        if (opt.eta_minus.size() != 3) throw fdirac::DegenerateInput("--eta-minus expects 3 numbers");
        DualVector eta = p.eta;
        for (int k = 0; k < 3; ++k) eta.coords(3 + k) = opt.eta_minus[k];
        p = fdirac::make_point(d, p.g, eta);
    }
    return p;
}

fdirac::CollectiveHamiltonian pick_hamiltonian(const GroupDescriptor& d, const std::string& name) {
    if (name == "quadratic") return fdirac::quadratic_hamiltonian(d);
    if (name == "quartic") return fdirac::quartic_hamiltonian(d);
    return fdirac::killing_hamiltonian(d);
}

int cmd_iwasawa(const Options& opt) {
    CMat2 g;
    if (opt.matrix.empty()) {
        const GroupDescriptor& d = fdirac::sl2c::descriptor();
        fdirac::Sampler s(opt.seed);
        g = s.group(d).matrix;
    } else {
        if (opt.matrix.size() != 8) {
            std::cerr << "error: --matrix expects 8 numbers (re, im of g00 g01 g10 g11)\n";
            return kExitInput;
        }
        for (int k = 0; k < 4; ++k) g(k / 2, k % 2) = {opt.matrix[2 * k], opt.matrix[2 * k + 1]};
    }
    const std::complex<double> det = g.determinant();
    const double tol = opt.tolerances.count("det") ? opt.tolerances.at("det") : 1e-8;
    if (std::abs(det - 1.0) > tol) {
        std::cerr << "error: matrix is not unimodular (|det - 1| = " << std::abs(det - 1.0) << ")\n";
        return kExitInput;
    }
    if (std::abs(det - 1.0) > 0.0) {
        std::cerr << "warning: renormalizing by the square root of det\n";
        g /= std::sqrt(det);
    }
    const auto f = fdirac::sl2c::iwasawa(g);
    const double residual = fdirac::max_norm(f.su2_part.matrix * f.b_part.matrix - g);
    const double unitarity = fdirac::max_norm(f.su2_part.matrix.adjoint() * f.su2_part.matrix - CMat2::Identity());
    json report = {{"g", matrix_json(g)},
                   {"g_plus", matrix_json(f.su2_part.matrix)},
                   {"g_minus", matrix_json(f.b_part.matrix)},
                   {"residual", residual},
                   {"unitarity_defect", unitarity},
                   {"seed", opt.seed}};
    emit(opt, report.dump(2) + "\n");
    return kExitOk;
}

int cmd_brackets(const Options& opt) {
    const GroupDescriptor& d = fdirac::sl2c::descriptor();
    const PhasePoint p = initial_point(d, opt, false);
    const auto side = opt.side == "M" ? fdirac::Constraint::M : fdirac::Constraint::N;
    const auto fields = fdirac::coordinate_fields(d);
    const std::vector<std::string> names = {"re_g00", "im_g00", "re_g01", "im_g01", "re_g10",
                                            "im_g10", "re_g11", "im_g11", "xi_1",   "xi_2",
                                            "xi_3",   "xi^1",   "xi^2",   "xi^3"};
    json table = json::array();
    for (std::size_t i = 0; i < fields.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < fields.size(); ++j) {
            row.push_back(fdirac::dirac_bracket(d, fields[i].diff(p), fields[j].diff(p), p, side));
        }
        table.push_back(row);
    }
    const auto c = fdirac::sl2c::coordinates(p);
    json report = {{"side", opt.side},
                   {"seed", opt.seed},
                   {"alpha", {c.alpha.real(), c.alpha.imag()}},
                   {"beta", {c.beta.real(), c.beta.imag()}},
                   {"a", c.a},
                   {"z", {c.z.real(), c.z.imag()}},
                   {"eta", vector_json(p.eta.coords)},
                   {"fields", names},
                   {"brackets", table},
                   {"second_class", fdirac::second_class_check(d, p, side)}};
    if (side == fdirac::Constraint::N) {
        const auto fb = fdirac::sl2c::explicit_fundamental_brackets(d, c);
        json xi_t = json::array();
        for (int a = 0; a < 3; ++a) xi_t.push_back(matrix_json(fb.xi_T[a]));
        json xi_xi = json::array();
        for (int a = 0; a < 3; ++a) xi_xi.push_back({fb.xi_xi(a, 0), fb.xi_xi(a, 1), fb.xi_xi(a, 2)});
        report["explicit"] = {{"xi_g", xi_t}, {"xi_xi", xi_xi}};
    }
    emit(opt, report.dump(2) + "\n");
    return kExitOk;
}

struct Row {
    double t = 0.0;
    PhasePoint p;
    double h = 0.0;
    std::optional<double> gap;
};

std::vector<double> row_values(const Row& r) {
    const auto c = fdirac::sl2c::coordinates(r.p);
    std::vector<double> v = {r.t,       c.alpha.real(), c.alpha.imag(), c.beta.real(), c.beta.imag(),
                             c.a,       c.z.real(),     c.z.imag()};
    for (int k = 0; k < 3; ++k) v.push_back(c.eta_plus(k));
    for (int k = 0; k < 3; ++k) v.push_back(c.eta_minus(k));
    v.push_back(r.h);
    if (r.gap) v.push_back(*r.gap);
    return v;
}

const std::vector<std::string>& csv_header() {
    static const std::vector<std::string> h = {"t",          "re_alpha",   "im_alpha",   "re_beta",
                                               "im_beta",    "a",          "re_z",       "im_z",
                                               "eta_plus_1", "eta_plus_2", "eta_plus_3", "eta_minus_1",
                                               "eta_minus_2", "eta_minus_3", "H"};
    return h;
}

std::string render_rows(const Options& opt, const std::vector<Row>& rows, bool with_gap, double max_gap) {
    std::vector<std::string> header = csv_header();
    if (with_gap) header.push_back("gap");
    if (opt.format == "csv") {
        std::ostringstream os;
        for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
        os << "\n";
        for (const Row& r : rows) {
            const auto v = row_values(r);
            for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << fmt(v[i]);
            os << "\n";
        }
        return os.str();
    }
    json out = {{"seed", opt.seed}, {"method", opt.method}, {"T", opt.t_end}, {"steps", opt.steps},
                {"hamiltonian", opt.hamiltonian}, {"columns", header}};
    json data = json::array();
    for (const Row& r : rows) data.push_back(row_values(r));
    out["rows"] = data;
    if (with_gap) out["max_gap"] = max_gap;
    return out.dump(2) + "\n";
}

bool blown_up(const Row& r) {
    for (const double v : row_values(r)) {
        if (!std::isfinite(v) || std::abs(v) > kBlowup) return true;
    }
    return false;
}

int cmd_flow(const Options& opt) {
    if (!(opt.t_end >= 0.0) || opt.steps < 1) {
        std::cerr << "error: require T >= 0 and steps >= 1\n";
        return kExitInput;
    }
    const GroupDescriptor& d = fdirac::sl2c::descriptor();
    const PhasePoint p0 = initial_point(d, opt, true);
    const auto h = pick_hamiltonian(d, opt.hamiltonian);
    const auto energy = [&](const PhasePoint& p) { return h.h(fdirac::momentum_map_left(d, p)); };

    std::vector<Row> rows;
    if (opt.t_end == 0.0) {
        rows.push_back({0.0, p0, energy(p0), std::nullopt});
        emit(opt, render_rows(opt, rows, false, 0.0));
        return kExitOk;
    }

    std::optional<fdirac::Trajectory> rk;
    std::optional<fdirac::Trajectory> fact;
    if (opt.method == "rk4" || opt.method == "both") {
        const fdirac::VectorField vf = [&](const PhasePoint& x) { return fdirac::collective_vf(d, h, x); };
        rk = fdirac::integrate_rk4(d, vf, p0, opt.t_end, opt.steps);
    }
    if (opt.method == "factorization" || opt.method == "both") {
        fact = fdirac::solve_by_factorization(d, h, p0, opt.t_end, opt.steps);
    }

    const fdirac::Trajectory& primary = fact ? *fact : *rk;
    const bool with_gap = rk && fact;
    double max_gap = 0.0;
    for (std::size_t i = 0; i < primary.points.size(); ++i) {
        Row r{primary.times[i], primary.points[i], energy(primary.points[i]), std::nullopt};
        if (with_gap) {
            const PhasePoint& a = rk->points[i];
            const PhasePoint& b = fact->points[i];
            const double g = std::max(fdirac::max_norm(a.g.matrix - b.g.matrix),
                                      (a.eta.coords - b.eta.coords).cwiseAbs().maxCoeff());
            r.gap = g;
            max_gap = std::max(max_gap, g);
        }
        rows.push_back(r);
    }
    emit(opt, render_rows(opt, rows, with_gap, max_gap));
    for (const Row& r : rows) {
        if (blown_up(r)) {
            std::cerr << "error: integrator blowup at t = " << r.t << "\n";
            return kExitBlowup;
        }
    }
    if (with_gap) {
        const double tol = opt.tolerances.count("gap") ? opt.tolerances.at("gap") : 1e-6;
        if (max_gap > tol) {
            std::cerr << "error: max gap " << max_gap << " exceeds " << tol << "\n";
            return kExitFailure;
        }
    }
    return kExitOk;
}

int cmd_orbit(const Options& opt) {
    const GroupDescriptor& d = fdirac::sl2c::descriptor();
    const PhasePoint p = initial_point(d, opt, false);
    const auto level = fdirac::aks_momentum_J(d, p);
    const auto orbit = fdirac::orbit_map_L(d, p, level.first, level.second);
    const auto field = fdirac::orbit_vf(d, orbit.first, orbit.second);
    json report = {{"seed", opt.seed},
                   {"level_plus", vector_json(level.first.coords)},
                   {"level_minus", vector_json(level.second.coords)},
                   {"orbit_plus", vector_json(orbit.first.coords)},
                   {"orbit_minus", vector_json(orbit.second.coords)},
                   {"reduced_hamiltonian", fdirac::reduced_hamiltonian(d, orbit.first, orbit.second)},
                   {"orbit_vf_plus", vector_json(field.first.coords)},
                   {"orbit_vf_minus", vector_json(field.second.coords)},
                   {"tangent_dimension", fdirac::lambda_tangent_basis(d, p).size()}};
    emit(opt, report.dump(2) + "\n");
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    const auto& names = fdirac::verify::suite_names();
    if (opt.suite != "all" && std::find(names.begin(), names.end(), opt.suite) == names.end()) {
        std::cerr << "error: unknown suite '" << opt.suite << "'\nsuites: all";
        for (const auto& n : names) std::cerr << " " << n;
        std::cerr << "\n";
        return kExitInput;
    }
    fdirac::verify::Config cfg;
    cfg.seed = opt.seed;
    cfg.tolerances = opt.tolerances;
    cfg.inject_noncharacter = opt.inject_noncharacter;
    cfg.timing = opt.timing;
    const auto results = opt.suite == "all" ? fdirac::verify::run_all(cfg)
                                            : fdirac::verify::run_suite(opt.suite, cfg);
    bool all_pass = true;
    json report = json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        report.push_back({{"suite", r.suite},
                          {"check", r.check},
                          {"residual", r.residual},
                          {"relation", r.relation},
                          {"tolerance", r.tolerance},
                          {"pass", r.pass},
                          {"seed", opt.seed}});
        std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << "." << r.check << " residual="
                  << fmt(r.residual) << " " << r.relation << " " << fmt(r.tolerance) << "\n";
    }
    emit(opt, report.dump(2) + "\n");
    return all_pass ? kExitOk : kExitFailure;
}

/// Fills options not given on the command line from a JSON config file.
void apply_config(Options& opt, const CLI::App& app) {
    if (opt.config.empty()) return;
    std::ifstream f(opt.config);
    if (!f) throw fdirac::DegenerateInput("cannot open config " + opt.config);
    const json cfg = json::parse(f);
    const auto given = [&](const std::string& flag) {
        std::vector<const CLI::App*> scopes = {&app};
        for (const CLI::App* sub : app.get_subcommands()) scopes.push_back(sub);
        for (const CLI::App* scope : scopes) {
            const CLI::Option* o = scope->get_option_no_throw(flag);
            if (o != nullptr && o->count() > 0) return true;
        }
        return false;
    };
    if (cfg.contains("seed") && !given("--seed")) opt.seed = cfg["seed"].get<std::uint64_t>();
    if (cfg.contains("T") && !given("--T")) opt.t_end = cfg["T"].get<double>();
    if (cfg.contains("steps") && !given("--steps")) opt.steps = cfg["steps"].get<int>();
    if (cfg.contains("method") && !given("--method")) opt.method = cfg["method"].get<std::string>();
    if (cfg.contains("format") && !given("--format")) opt.format = cfg["format"].get<std::string>();
    if (cfg.contains("out") && !given("--out")) opt.out = cfg["out"].get<std::string>();
    if (cfg.contains("hamiltonian") && !given("--hamiltonian")) {
        opt.hamiltonian = cfg["hamiltonian"].get<std::string>();
    }
    if (cfg.contains("tolerances")) {
        for (const auto& [name, value] : cfg["tolerances"].items()) {
            if (!opt.tolerances.count(name)) opt.tolerances[name] = value.get<double>();
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    Options opt;
    CLI::App app{"Dirac brackets and factorization dynamics on SL(2,C) = SU(2) B"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", opt.seed, "seed of the random generator");
    app.add_option("--config", opt.config, "JSON config file; flags override");
    app.add_option("--out", opt.out, "output path (default stdout)");
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "csv"}));

    auto* iw = app.add_subcommand("iwasawa", "factorize a unimodular matrix");
    iw->add_option("--matrix", opt.matrix, "re, im of g00 g01 g10 g11 (random when omitted)")->expected(8);

    auto* br = app.add_subcommand("brackets", "tabulate Dirac brackets of coordinate fields");
    br->add_option("--side", opt.side, "constraint submanifold")->check(CLI::IsMember({"N", "M"}));

    auto* fl = app.add_subcommand("flow", "integrate a collective Hamiltonian flow on N");
    fl->add_option("--T", opt.t_end, "final time");
    fl->add_option("--steps", opt.steps, "RK4 steps and factorization samples");
    fl->add_option("--method", opt.method, "integrator")
        ->check(CLI::IsMember({"rk4", "factorization", "both"}));
    fl->add_option("--hamiltonian", opt.hamiltonian, "collective Hamiltonian")
        ->check(CLI::IsMember({"killing", "quadratic", "quartic"}));

    for (CLI::App* sub : {br, fl, app.add_subcommand("orbit", "orbit-space quantities at a point")}) {
        sub->add_option("--init", opt.initial,
                        "re/im alpha, re/im beta, a, re/im z, eta_plus(3), eta_minus(3) (random when omitted)")
            ->expected(13);
        sub->add_option("--eta-minus", opt.eta_minus, "override the eta_minus block")->expected(3);
    }

    auto* ve = app.add_subcommand("verify", "run verification suites");
    ve->add_option("suite", opt.suite, "suite name or 'all'");
    ve->add_flag("--inject-noncharacter", opt.inject_noncharacter,
                 "evaluate the involutivity check at a non-character eta_minus");
    ve->add_flag("--timing", opt.timing, "add runtime checks");

    try {
        opt.tolerances = extract_tolerances(args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
        apply_config(opt, app);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "iwasawa") return cmd_iwasawa(opt);
        if (cmd == "brackets") return cmd_brackets(opt);
        if (cmd == "flow") return cmd_flow(opt);
        if (cmd == "orbit") return cmd_orbit(opt);
        return cmd_verify(opt);
    } catch (const fdirac::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
