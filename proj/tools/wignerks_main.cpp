#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wignerks/wignerks.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace wignerks;

namespace {

// ---- Rendering ------------------------------------------------------------

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Text cells holding a comma, quote, or newline get RFC 4180 quoting.
std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_cell(const ordered_json& v) {
    if (v.is_number_float()) return fmt_double(v.get<double>());
    if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return csv_escape(v.get<std::string>());
    return csv_escape(v.dump());
}

// CSV carries the bare table: header from the shared row schema, one line per
// row, 17 significant digits, LF endings.  Metadata lives in the JSON format.
std::string render_csv(const ordered_json& report) {
    std::string out;
    const auto& rows = report.at("rows");
    if (rows.empty()) return out;
    bool first = true;
    for (const auto& item : rows.front().items()) {
        if (!first) out += ',';
        out += csv_escape(item.key());
        first = false;
    }
    out += '\n';
    for (const auto& row : rows) {
        first = true;
        for (const auto& item : row.items()) {
            if (!first) out += ',';
            out += csv_cell(item.value());
            first = false;
        }
        out += '\n';
    }
    return out;
}

std::string render(const ordered_json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    return render_csv(report);
}

// Returns 0 on success, 1 when the output file cannot be written.
int emit(const ordered_json& report, const std::string& format, const std::string& output) {
    const std::string text = render(report, format);
    if (output.empty()) {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    std::ofstream f(output, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "error: cannot open output file '%s'\n", output.c_str());
        return 1;
    }
    f << text;
    f.flush();
    if (!f) {
        std::fprintf(stderr, "error: failed writing output file '%s'\n", output.c_str());
        return 1;
    }
    return 0;
}

// ---- Global options and config file ---------------------------------------

struct GlobalOpts {
    std::string format = "csv";
    std::string output;
    std::uint64_t seed = 42;
    long grid_n = 4000;
    double x_max = 0.0;
    bool x_max_set = false;
    unsigned threads = 0;
    double tolerance = 0.0;
    bool tolerance_set = false;
};

// The box wall defaults to 12 for oscillator-type problems and 60 for
// hydrogen-type ones; an explicit --x-max (or config value) overrides both.
double box_wall(const GlobalOpts& g, bool hydrogen_kind) {
    if (g.x_max_set) return g.x_max;
    return hydrogen_kind ? 60.0 : 12.0;
}

double tolerance_or(const GlobalOpts& g, double fallback) {
    return g.tolerance_set ? g.tolerance : fallback;
}

// Flat JSON object whose keys mirror the global flag names.  Values become
// the new defaults; flags given on the command line still win.  Command
// parameters (ell, m, ...) are not accepted here: a config describes the
// run environment, not the experiment.
int load_config(const std::string& path, GlobalOpts& g) {
    std::ifstream f(path);
    if (!f) {
        std::fprintf(stderr, "error: cannot open config file '%s'\n", path.c_str());
        return 2;
    }
    ordered_json cfg;
    try {
        cfg = ordered_json::parse(f);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: config '%s': %s\n", path.c_str(), e.what());
        return 2;
    }
    if (!cfg.is_object()) {
        std::fprintf(stderr, "error: config '%s' must be a flat JSON object\n", path.c_str());
        return 2;
    }
    try {
        for (const auto& item : cfg.items()) {
            const std::string& key = item.key();
            const ordered_json& val = item.value();
            if (key == "format") {
                g.format = val.get<std::string>();
                if (g.format != "csv" && g.format != "json") {
                    std::fprintf(stderr, "error: config format must be csv or json\n");
                    return 2;
                }
            } else if (key == "output") {
                g.output = val.get<std::string>();
            } else if (key == "seed") {
                g.seed = val.get<std::uint64_t>();
            } else if (key == "grid-n") {
                g.grid_n = val.get<long>();
            } else if (key == "x-max") {
                g.x_max = val.get<double>();
                g.x_max_set = true;
            } else if (key == "threads") {
                g.threads = val.get<unsigned>();
            } else if (key == "tolerance") {
                g.tolerance = val.get<double>();
                g.tolerance_set = true;
            } else {
                std::fprintf(stderr, "error: config key '%s' is not a global flag\n",
                             key.c_str());
                return 2;
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: config '%s': %s\n", path.c_str(), e.what());
        return 2;
    }
    return 0;
}

// The config must take effect before CLI11 assigns defaults, so the path is
// located by a plain scan first; CLI11 then re-parses it as a normal option.
std::optional<std::string> scan_config(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--config" && i + 1 < argc) return std::string(argv[i + 1]);
        if (a.rfind("--config=", 0) == 0) return a.substr(9);
    }
    return std::nullopt;
}

ordered_json grid_meta(const RadialGrid& grid) {
    return {{"n", grid.n}, {"x_min", grid.x_min}, {"x_max", grid.x_max}, {"h", grid.h}};
}

// ---- spectrum -------------------------------------------------------------

struct CommandResult {
    ordered_json report;
    bool ok = true;
};

CommandResult spectrum_wigner_exact(long ell, long levels, double tol,
                                    std::uint64_t seed) {
    const WignerParams p{Rational(ell)};
    ordered_json rows = ordered_json::array();
    bool ok = true;
    for (long n = 0; n < levels; ++n) {
        const SpinorPoly state = build_state(p, n);
        const auto q = rayleigh_quotient(p, state);
        const Rational target = wigner_energy(Rational(ell), n);
        double numeric = std::numeric_limits<double>::quiet_NaN();
        double abs_error = std::numeric_limits<double>::infinity();
        if (q) {
            numeric = to_double(*q);
            Rational err = *q - target;
            if (err < 0) err = -err;
            abs_error = to_double(err);
        }
        ok = ok && abs_error <= tol;
        rows.push_back({{"level", n},
                        {"numeric", numeric},
                        {"analytic", to_double(target)},
                        {"abs_error", abs_error},
                        {"residual", 0.0}});
    }
    ordered_json report{{"meta",
                         {{"command", "spectrum"},
                          {"kind", "wigner"},
                          {"method", "exact"},
                          {"ell", ell},
                          {"levels", levels},
                          {"seed", seed},
                          {"tolerance", tol}}},
                        {"rows", rows}};
    return {std::move(report), ok};
}

// Shared shape of the three finite-difference spectra: solve, then tabulate
// numeric against analytic with the per-pair residual.
CommandResult fd_spectrum(const std::string& kind, long ell, long levels, double z,
                          const SturmLiouvilleProblem& problem, const RadialGrid& grid,
                          double tol, std::uint64_t seed,
                          const std::function<double(long)>& analytic_of) {
    const DiscretizedProblem dp = discretize(problem, grid);
    const std::size_t k = static_cast<std::size_t>(levels);
    const std::vector<EigenPair> pairs =
        dp.weight.empty() ? eigen_lowest(dp.matrix, k, seed)
                          : eigen_generalized(dp.matrix, dp.weight, k, seed);
    ordered_json rows = ordered_json::array();
    bool ok = true;
    for (long i = 0; i < levels; ++i) {
        const EigenPair& ep = pairs[static_cast<std::size_t>(i)];
        const double analytic = analytic_of(i);
        const double abs_error = std::abs(ep.value - analytic);
        ok = ok && abs_error <= tol;
        ordered_json row{{"level", i},
                         {"numeric", ep.value},
                         {"analytic", analytic},
                         {"abs_error", abs_error},
                         {"residual", eigen_residual(dp.matrix, dp.weight, ep.value, ep.vector)}};
        if (kind == "hydrogen") row["e_atomic"] = hydrogen_energy(z, ell + i + 1);
        rows.push_back(std::move(row));
    }
    ordered_json meta{{"command", "spectrum"}, {"kind", kind}, {"ell", ell},
                      {"levels", levels},      {"seed", seed}, {"tolerance", tol},
                      {"grid", grid_meta(grid)}};
    if (kind == "hydrogen") meta["z"] = z;
    return {ordered_json{{"meta", std::move(meta)}, {"rows", std::move(rows)}}, ok};
}

// ---- verify ---------------------------------------------------------------

// The per-element reports are collapsed to one row per defining relation,
// with the +/- partners of a relation folded together.
std::string relation_family(const std::string& relation) {
    if (relation == "[H,a+] - a+" || relation == "[H,a-] + a-") return "[H,a+-] -+ a+-";
    if (relation == "{Sigma3,a+}" || relation == "{Sigma3,a-}") return "{Sigma3,a+-}";
    if (relation == "[H,J+] - 2J+" || relation == "[H,J-] + 2J-") return "[H,J+-] -+ 2J+-";
    return relation;
}

void append_exact_rows(ordered_json& rows, const std::string& suite,
                       const std::vector<AlgebraReport>& reports, bool& ok) {
    std::vector<std::pair<std::string, std::pair<double, bool>>> families;
    for (const AlgebraReport& r : reports) {
        const std::string fam = relation_family(r.relation);
        auto it = std::find_if(families.begin(), families.end(),
                               [&](const auto& f) { return f.first == fam; });
        if (it == families.end())
            families.push_back({fam, {r.residual_norm, r.passed}});
        else {
            it->second.first = std::max(it->second.first, r.residual_norm);
            it->second.second = it->second.second && r.passed;
        }
    }
    for (const auto& [name, agg] : families) {
        ok = ok && agg.second;
        rows.push_back({{"suite", suite},
                        {"check", name},
                        {"value", agg.first},
                        {"status", agg.second ? "exact zero" : "nonzero"},
                        {"passed", agg.second}});
    }
}

void append_ks_rows(ordered_json& rows, const KsInvariantReport& rep, double tol, bool& ok) {
    const std::pair<const char*, double> checks[] = {
        {"norm4", rep.norm4},          {"spinor_norm", rep.spinor_norm},
        {"projection", rep.projection}, {"fiber_shift", rep.fiber_shift},
        {"double_cover", rep.double_cover}, {"su2", rep.su2}};
    for (const auto& [name, value] : checks) {
        const bool passed = value <= tol;
        ok = ok && passed;
        rows.push_back({{"suite", "ks"},
                        {"check", name},
                        {"value", value},
                        {"status", passed ? "within tolerance" : "exceeds tolerance"},
                        {"passed", passed}});
    }
}

void append_mapping_rows(ordered_json& rows, const MappingResult& r, bool& ok) {
    ok = ok && r.lambda_integral;
    rows.push_back({{"suite", "mapping"}, {"check", "e_osc"}, {"value", r.e_osc},
                    {"status", "input"}, {"passed", true}});
    rows.push_back({{"suite", "mapping"}, {"check", "lambda"}, {"value", r.lambda},
                    {"status", "e_osc/2"}, {"passed", true}});
    rows.push_back({{"suite", "mapping"}, {"check", "principal_n"},
                    {"value", r.n}, {"status", "round(lambda)"}, {"passed", true}});
    rows.push_back({{"suite", "mapping"}, {"check", "lambda_residual"},
                    {"value", r.lambda_residual},
                    {"status", r.lambda_integral ? "integral" : "detuned"},
                    {"passed", r.lambda_integral}});
    rows.push_back({{"suite", "mapping"}, {"check", "e_atomic"}, {"value", r.e_atomic},
                    {"status", "-Z^2/(2N^2)"}, {"passed", true}});
    rows.push_back({{"suite", "mapping"}, {"check", "alpha"}, {"value", r.alpha},
                    {"status", "sqrt(-8 E_a)"}, {"passed", true}});
}

// ---- eigenfunction --------------------------------------------------------

CommandResult eigenfunction_cmd(bool hydrogen_kind, long ell, long m, long points,
                                const GlobalOpts& g) {
    const double wall = box_wall(g, hydrogen_kind);
    const RadialGrid grid = RadialGrid::from_origin(wall, g.grid_n);
    DiscretizedProblem dp;
    std::vector<EigenPair> pairs;
    const std::size_t k = static_cast<std::size_t>(m) + 1;
    if (hydrogen_kind) {
        dp = discretize(build_hydrogen_problem(ell), grid);
        pairs = eigen_generalized(dp.matrix, dp.weight, k, g.seed);
    } else {
        dp = discretize(build_oscillator4d_problem({ell, SpinChannel::y_plus}), grid);
        pairs = eigen_lowest(dp.matrix, k, g.seed);
    }
    const std::vector<double>& u = pairs[static_cast<std::size_t>(m)].vector;

    // Undo the Sturm-Liouville substitution (u = rho psi, u = s^(3/2) R) so
    // the numeric column is directly comparable to the printed closed form.
    std::vector<double> shape(u.size());
    for (long j = 0; j < grid.n; ++j) {
        const double x = grid.node(j);
        shape[static_cast<std::size_t>(j)] =
            u[static_cast<std::size_t>(j)] / (hydrogen_kind ? x : std::pow(x, 1.5));
    }
    const auto sample_shape = [&](double x) {
        if (x <= grid.node(0)) return shape.front();
        if (x >= grid.x_max) {
            // Linear decay onto the Dirichlet wall one step outside.
            const double t = (x - grid.x_max) / grid.h;
            return shape.back() * std::max(0.0, 1.0 - t);
        }
        const long j = static_cast<long>((x - grid.x_min) / grid.h);
        const double t = (x - grid.node(j)) / grid.h;
        return shape[static_cast<std::size_t>(j)] * (1.0 - t) +
               shape[static_cast<std::size_t>(j) + 1] * t;
    };

    const RadialEigenfunction spec{ell, m,
                                   hydrogen_kind ? RadialEigenfunction::Kind::hydrogen
                                                 : RadialEigenfunction::Kind::oscillator4d};
    std::vector<double> xs(static_cast<std::size_t>(points));
    std::vector<double> analytic(xs.size()), raw(xs.size());
    double cross = 0.0;
    for (long i = 0; i < points; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        xs[idx] = wall * static_cast<double>(i + 1) / static_cast<double>(points);
        analytic[idx] = radial_eigenfunction(spec, xs[idx]);
        raw[idx] = sample_shape(xs[idx]);
        cross += analytic[idx] * raw[idx];
    }
    double norm_raw = 0.0;
    for (double r : raw) norm_raw += r * r;
    const double scale = norm_raw > 0.0 ? cross / norm_raw : 0.0;

    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double numeric = scale * raw[i];
        rows.push_back({{"x", xs[i]},
                        {"analytic", analytic[i]},
                        {"numeric", numeric},
                        {"abs_diff", std::abs(analytic[i] - numeric)}});
    }
    ordered_json report{{"meta",
                         {{"command", "eigenfunction"},
                          {"kind", hydrogen_kind ? "hydrogen" : "oscillator4d"},
                          {"ell", ell},
                          {"m", m},
                          {"points", points},
                          {"scale", scale},
                          {"seed", g.seed},
                          {"grid", grid_meta(grid)}}},
                        {"rows", rows}};
    return {std::move(report), true};
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    if (const auto cfg = scan_config(argc, argv)) {
        const int rc = load_config(*cfg, g);
        if (rc != 0) return rc;
    }

    CLI::App app{"Verification laboratory: reflection-deformed ladder algebra, "
                 "radial spectra, and the 4D-to-3D spinor-bilinear mapping"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", g.output, "Write the report to this file instead of stdout");
    app.add_option("--seed", g.seed, "Seed for every randomized component")
        ->capture_default_str();
    app.add_option("--grid-n", g.grid_n, "Number of interior grid nodes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    auto* xmax_opt = app.add_option(
        "--x-max", g.x_max, "Outer wall of the radial box (default 12 oscillator, 60 hydrogen)");
    app.add_option("--threads", g.threads, "Worker threads, 0 = hardware concurrency")
        ->capture_default_str();
    auto* tol_opt = app.add_option(
        "--tolerance", g.tolerance, "Pass/fail tolerance (default depends on the command)");
    app.add_option("--config", config_path,
                   "JSON file with default values for the global flags");

    // spectrum ---------------------------------------------------------------
    auto* spectrum = app.add_subcommand("spectrum", "Tabulate a spectrum against its closed form");
    spectrum->require_subcommand(1);

    long w_ell = 0, w_levels = 4;
    std::string w_method = "exact";
    auto* sp_wigner = spectrum->add_subcommand("wigner", "Deformed-oscillator tower ell+3/2+n");
    sp_wigner->add_option("--ell", w_ell, "Angular parameter")->check(CLI::NonNegativeNumber);
    sp_wigner->add_option("--levels", w_levels, "Number of levels")->check(CLI::PositiveNumber);
    sp_wigner->add_option("--method", w_method, "exact ladder algebra or fd sector solve")
        ->check(CLI::IsMember({"exact", "fd"}));

    long o_ell = 0, o_levels = 4;
    auto* sp_osc = spectrum->add_subcommand("oscillator4d", "Constrained 4D tower 2ell+2+2m");
    sp_osc->add_option("--ell", o_ell, "Angular parameter")->check(CLI::NonNegativeNumber);
    sp_osc->add_option("--levels", o_levels, "Number of levels")->check(CLI::PositiveNumber);

    long h_ell = 0, h_levels = 3;
    double h_z = 1.0;
    auto* sp_hyd = spectrum->add_subcommand("hydrogen", "Coulomb levels lambda = N");
    sp_hyd->add_option("--ell", h_ell, "Angular momentum")->check(CLI::NonNegativeNumber);
    sp_hyd->add_option("--levels", h_levels, "Number of levels")->check(CLI::PositiveNumber);
    sp_hyd->add_option("--z", h_z, "Nuclear charge")->check(CLI::PositiveNumber);

    // verify -----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);

    long va_ell = 0;
    auto* vf_algebra = verify->add_subcommand("algebra", "Defining ladder relations, exact");
    vf_algebra->add_option("--ell", va_ell, "Angular parameter")->check(CLI::NonNegativeNumber);

    long vo_ell = 0;
    auto* vf_osp = verify->add_subcommand("osp12", "Quadratic ladder closure, exact");
    vf_osp->add_option("--ell", vo_ell, "Angular parameter")->check(CLI::NonNegativeNumber);

    std::uint64_t vk_samples = 100000;
    auto* vf_ks = verify->add_subcommand("ks", "4D-to-3D geometric invariants, sampled");
    vf_ks->add_option("--samples", vk_samples, "Sample count")->check(CLI::PositiveNumber);

    long vm_ell = 0, vm_m = 0;
    double vm_z = 1.0;
    auto* vf_map = verify->add_subcommand("mapping", "Level mapping to atomic units");
    vf_map->add_option("--ell", vm_ell, "Angular momentum")->check(CLI::NonNegativeNumber);
    vf_map->add_option("--m", vm_m, "Radial quantum number")->check(CLI::NonNegativeNumber);
    vf_map->add_option("--z", vm_z, "Nuclear charge")->check(CLI::PositiveNumber);

    auto* vf_all = verify->add_subcommand("all", "Every suite with its defaults");
    long vall_ell = 0, vall_m = 0;
    double vall_z = 1.0;
    std::uint64_t vall_samples = 100000;
    vf_all->add_option("--ell", vall_ell, "Angular parameter")->check(CLI::NonNegativeNumber);
    vf_all->add_option("--m", vall_m, "Radial quantum number")->check(CLI::NonNegativeNumber);
    vf_all->add_option("--z", vall_z, "Nuclear charge")->check(CLI::PositiveNumber);
    vf_all->add_option("--samples", vall_samples, "Sample count")->check(CLI::PositiveNumber);

    // eigenfunction ----------------------------------------------------------
    auto* eig = app.add_subcommand("eigenfunction", "Export a radial eigenfunction table");
    eig->require_subcommand(1);
    long e_ell = 0, e_m = 0, e_points = 100;
    auto* eig_osc = eig->add_subcommand("oscillator4d", "Radial factor of the 4D channel");
    auto* eig_hyd = eig->add_subcommand("hydrogen", "Radial factor of the Coulomb state");
    for (CLI::App* sub : {eig_osc, eig_hyd}) {
        sub->add_option("--ell", e_ell, "Angular momentum")->check(CLI::NonNegativeNumber);
        sub->add_option("--m", e_m, "Radial quantum number")->check(CLI::NonNegativeNumber);
        sub->add_option("--points", e_points, "Sample points on (0, x_max]")
            ->check(CLI::Range(2l, 10000000l));
    }

    // map --------------------------------------------------------------------
    auto* map_cmd = app.add_subcommand("map", "Convert an oscillator level to atomic units");
    double mp_eosc = 0.0;
    long mp_ell = 0, mp_m = 0;
    double mp_z = 1.0;
    auto* eosc_opt = map_cmd->add_option("--e-osc", mp_eosc, "Oscillator energy (overrides --ell/--m)");
    map_cmd->add_option("--ell", mp_ell, "Angular momentum")->check(CLI::NonNegativeNumber);
    map_cmd->add_option("--m", mp_m, "Radial quantum number")->check(CLI::NonNegativeNumber);
    map_cmd->add_option("--z", mp_z, "Nuclear charge")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
        if (xmax_opt->count() > 0) g.x_max_set = true;
        if (tol_opt->count() > 0) g.tolerance_set = true;

        CommandResult result;
        if (sp_wigner->parsed()) {
            if (w_method == "exact") {
                result = spectrum_wigner_exact(w_ell, w_levels, tolerance_or(g, 1e-12), g.seed);
            } else {
                const RadialGrid grid = RadialGrid::from_origin(box_wall(g, false), g.grid_n);
                result = fd_spectrum("wigner", w_ell, w_levels, 0.0,
                                     make_sector_problem(static_cast<double>(w_ell)), grid,
                                     tolerance_or(g, 5e-3), g.seed, [&](long i) {
                                         return static_cast<double>(w_ell) + 1.5 + 2.0 * i;
                                     });
                result.report["meta"]["method"] = "fd";
            }
        } else if (sp_osc->parsed()) {
            const RadialGrid grid = RadialGrid::from_origin(box_wall(g, false), g.grid_n);
            result = fd_spectrum("oscillator4d", o_ell, o_levels, 0.0,
                                 build_oscillator4d_problem({o_ell, SpinChannel::y_plus}), grid,
                                 tolerance_or(g, 5e-3), g.seed, [&](long i) {
                                     return static_cast<double>(oscillator4d_energy(o_ell, i));
                                 });
        } else if (sp_hyd->parsed()) {
            const RadialGrid grid = RadialGrid::from_origin(box_wall(g, true), g.grid_n);
            result = fd_spectrum("hydrogen", h_ell, h_levels, h_z, build_hydrogen_problem(h_ell),
                                 grid, tolerance_or(g, 2e-3), g.seed, [&](long i) {
                                     return static_cast<double>(h_ell + i + 1);
                                 });
        } else if (vf_algebra->parsed() || vf_osp->parsed() || vf_ks->parsed() ||
                   vf_map->parsed() || vf_all->parsed()) {
            ordered_json rows = ordered_json::array();
            ordered_json meta{{"command", "verify"}};
            bool ok = true;
            if (vf_algebra->parsed() || vf_all->parsed()) {
                const long ell = vf_all->parsed() ? vall_ell : va_ell;
                const WignerParams p{Rational(ell)};
                append_exact_rows(rows, "algebra", verify_wh_algebra(p, default_algebra_basis()),
                                  ok);
                meta["ell"] = ell;
            }
            if (vf_osp->parsed() || vf_all->parsed()) {
                const long ell = vf_all->parsed() ? vall_ell : vo_ell;
                const WignerParams p{Rational(ell)};
                append_exact_rows(rows, "osp12", verify_osp12(p, default_algebra_basis()), ok);
                meta["ell"] = ell;
            }
            if (vf_ks->parsed() || vf_all->parsed()) {
                const std::uint64_t samples = vf_all->parsed() ? vall_samples : vk_samples;
                const double tol = tolerance_or(g, 1e-12);
                append_ks_rows(rows, run_ks_invariants(g.seed, samples, g.threads), tol, ok);
                meta["samples"] = samples;
                meta["ks_tolerance"] = tol;
            }
            if (vf_map->parsed() || vf_all->parsed()) {
                const long ell = vf_all->parsed() ? vall_ell : vm_ell;
                const long m = vf_all->parsed() ? vall_m : vm_m;
                const double z = vf_all->parsed() ? vall_z : vm_z;
                const double e_osc = static_cast<double>(oscillator4d_energy(ell, m));
                append_mapping_rows(
                    rows, map_to_hydrogen(e_osc, z, tolerance_or(g, 1e-6)), ok);
                meta["ell"] = ell;
                meta["m"] = m;
                meta["z"] = z;
            }
            meta["suite"] = vf_all->parsed()
                                ? "all"
                                : (vf_algebra->parsed()
                                       ? "algebra"
                                       : (vf_osp->parsed() ? "osp12"
                                                           : (vf_ks->parsed() ? "ks" : "mapping")));
            meta["seed"] = g.seed;
            result = {ordered_json{{"meta", std::move(meta)}, {"rows", std::move(rows)}}, ok};
        } else if (eig_osc->parsed() || eig_hyd->parsed()) {
            result = eigenfunction_cmd(eig_hyd->parsed(), e_ell, e_m, e_points, g);
        } else if (map_cmd->parsed()) {
            const double e_osc = eosc_opt->count() > 0
                                     ? mp_eosc
                                     : static_cast<double>(oscillator4d_energy(mp_ell, mp_m));
            const MappingResult r = map_to_hydrogen(e_osc, mp_z, tolerance_or(g, 1e-6));
            ordered_json rows = ordered_json::array();
            rows.push_back({{"e_osc", r.e_osc},
                            {"lambda", r.lambda},
                            {"n", r.n},
                            {"lambda_residual", r.lambda_residual},
                            {"lambda_integral", r.lambda_integral},
                            {"e_atomic", r.e_atomic},
                            {"alpha", r.alpha}});
            ordered_json report{{"meta",
                                 {{"command", "map"},
                                  {"z", mp_z},
                                  {"tolerance", tolerance_or(g, 1e-6)}}},
                                {"rows", std::move(rows)}};
            result = {std::move(report), true};
        }

        const int emit_rc = emit(result.report, g.format, g.output);
        if (emit_rc != 0) return emit_rc;
        return result.ok ? 0 : 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const RangeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
