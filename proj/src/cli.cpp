#include "varigame/cli.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "varigame/double_oracle.hpp"
#include "varigame/io.hpp"
#include "varigame/lemmas.hpp"
#include "varigame/matrix_game.hpp"
#include "varigame/payoff.hpp"
#include "varigame/series.hpp"
#include "varigame/shooting.hpp"
#include "varigame/sweep.hpp"

namespace varigame::cli {
namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

/// Collected configuration problems; reported exhaustively with exit 2.
struct UsageError {
    std::vector<std::string> problems;
};

struct RunConfig {
    double a = 1.0;
    std::string kernel = "sin";
    double dt = 1e-4;
    std::string quadrature = "trapezoid";
    std::string method = "rk4";
    double threshold = 1e-5;
    std::optional<double> c_min;
    std::optional<double> c_max;
    std::uint64_t n_scan = 2001;
    std::uint64_t max_iter = 50;
    std::string out = ".";
    std::uint64_t seed = 42;
};

void validate(const RunConfig& cfg, std::vector<std::string>& problems) {
    if (!(cfg.a >= 0.0))
        problems.push_back("a must be >= 0 (got " + std::to_string(cfg.a) + ")");
    if (cfg.kernel != "sin" && cfg.kernel != "sin3" && cfg.kernel != "arctan")
        problems.push_back("kernel must be one of sin, sin3, arctan (got '" + cfg.kernel + "')");
    if (!(cfg.dt > 0.0) || cfg.dt > 0.5) {
        problems.push_back("dt must lie in (0, 0.5] (got " + std::to_string(cfg.dt) + ")");
    } else {
        double steps = 1.0 / cfg.dt;
        if (std::abs(steps - std::round(steps)) > 1e-6 * std::round(steps))
            problems.push_back("1/dt must be an integer number of steps (got dt = " +
                               std::to_string(cfg.dt) + ")");
    }
    if (cfg.quadrature != "trapezoid" && cfg.quadrature != "left_riemann")
        problems.push_back("quadrature must be trapezoid or left_riemann (got '" +
                           cfg.quadrature + "')");
    if (cfg.method != "rk4" && cfg.method != "euler")
        problems.push_back("method must be rk4 or euler (got '" + cfg.method + "')");
    if (!(cfg.threshold > 0.0))
        problems.push_back("threshold must be > 0");
    if (cfg.c_min.has_value() != cfg.c_max.has_value())
        problems.push_back("c-min and c-max must be given together");
    if (cfg.c_min && cfg.c_max && !(*cfg.c_min < *cfg.c_max))
        problems.push_back("c-min must be strictly less than c-max");
    if (cfg.n_scan < 2) problems.push_back("n-scan must be at least 2");
    if (cfg.max_iter < 1) problems.push_back("max-iter must be at least 1");
}

void apply_config_file(RunConfig& cfg, const std::string& path,
                       std::vector<std::string>& problems) {
    std::ifstream in(path);
    if (!in) {
        problems.push_back("cannot open config file '" + path + "'");
        return;
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        problems.push_back("config file '" + path + "' is not valid JSON: " + e.what());
        return;
    }
    if (!doc.is_object()) {
        problems.push_back("config file '" + path + "' must hold a JSON object");
        return;
    }

    auto want_number = [&](const json& v, const char* key, double& dst) {
        if (v.is_number())
            dst = v.get<double>();
        else
            problems.push_back(std::string("config key '") + key + "' must be a number");
    };
    auto want_integer = [&](const json& v, const char* key, std::uint64_t& dst) {
        if (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0))
            dst = v.get<std::uint64_t>();
        else
            problems.push_back(std::string("config key '") + key +
                               "' must be a non-negative integer");
    };
    auto want_string = [&](const json& v, const char* key, std::string& dst) {
        if (v.is_string())
            dst = v.get<std::string>();
        else
            problems.push_back(std::string("config key '") + key + "' must be a string");
    };

    for (const auto& [key, value] : doc.items()) {
        if (key == "a") want_number(value, "a", cfg.a);
        else if (key == "kernel") want_string(value, "kernel", cfg.kernel);
        else if (key == "dt") want_number(value, "dt", cfg.dt);
        else if (key == "quadrature") want_string(value, "quadrature", cfg.quadrature);
        else if (key == "method") want_string(value, "method", cfg.method);
        else if (key == "threshold") want_number(value, "threshold", cfg.threshold);
        else if (key == "c_min") { double v = 0; want_number(value, "c_min", v); cfg.c_min = v; }
        else if (key == "c_max") { double v = 0; want_number(value, "c_max", v); cfg.c_max = v; }
        else if (key == "n_scan") want_integer(value, "n_scan", cfg.n_scan);
        else if (key == "max_iter") want_integer(value, "max_iter", cfg.max_iter);
        else if (key == "out") want_string(value, "out", cfg.out);
        else if (key == "seed") want_integer(value, "seed", cfg.seed);
        else problems.push_back("unknown config key '" + key + "'");
    }
}

/// Per-subcommand option bundle; `count() > 0` decides flag-over-file wins.
struct Common {
    std::string config_path;
    double a = 0.0, dt = 0.0, threshold = 0.0, c_min = 0.0, c_max = 0.0;
    std::string kernel, quadrature, method, out;
    std::uint64_t n_scan = 0, max_iter = 0, seed = 0;
    CLI::Option *o_config = nullptr, *o_a = nullptr, *o_kernel = nullptr, *o_dt = nullptr,
                *o_quadrature = nullptr, *o_method = nullptr, *o_threshold = nullptr,
                *o_c_min = nullptr, *o_c_max = nullptr, *o_n_scan = nullptr,
                *o_max_iter = nullptr, *o_out = nullptr, *o_seed = nullptr;

    void attach(CLI::App* sub) {
        o_config = sub->add_option("--config", config_path, "JSON config file");
        o_a = sub->add_option("--a", a, "coupling strength a >= 0");
        o_kernel = sub->add_option("--kernel", kernel, "interaction kernel: sin|sin3|arctan");
        o_dt = sub->add_option("--dt", dt, "time step (1/dt integer)");
        o_quadrature =
            sub->add_option("--quadrature", quadrature, "trapezoid|left_riemann");
        o_method = sub->add_option("--method", method, "integrator: rk4|euler");
        o_threshold = sub->add_option("--threshold", threshold, "equilibrium threshold");
        o_c_min = sub->add_option("--c-min", c_min, "scan range lower bound for c = f(1)");
        o_c_max = sub->add_option("--c-max", c_max, "scan range upper bound for c = f(1)");
        o_n_scan = sub->add_option("--n-scan", n_scan, "number of scan points");
        o_max_iter = sub->add_option("--max-iter", max_iter, "equilibrium iteration cap");
        o_out = sub->add_option("--out", out, "output directory");
        o_seed = sub->add_option("--seed", seed, "RNG seed (lemma checks)");
    }

    RunConfig resolve() const {
        RunConfig cfg;
        std::vector<std::string> problems;
        if (o_config->count() > 0) apply_config_file(cfg, config_path, problems);
        if (o_a->count() > 0) cfg.a = a;
        if (o_kernel->count() > 0) cfg.kernel = kernel;
        if (o_dt->count() > 0) cfg.dt = dt;
        if (o_quadrature->count() > 0) cfg.quadrature = quadrature;
        if (o_method->count() > 0) cfg.method = method;
        if (o_threshold->count() > 0) cfg.threshold = threshold;
        if (o_c_min->count() > 0) cfg.c_min = c_min;
        if (o_c_max->count() > 0) cfg.c_max = c_max;
        if (o_n_scan->count() > 0) cfg.n_scan = n_scan;
        if (o_max_iter->count() > 0) cfg.max_iter = max_iter;
        if (o_out->count() > 0) cfg.out = out;
        if (o_seed->count() > 0) cfg.seed = seed;
        validate(cfg, problems);
        if (!problems.empty()) throw UsageError{problems};
        return cfg;
    }
};

json config_echo(const RunConfig& cfg) {
    json j{{"a", cfg.a},
           {"kernel", cfg.kernel},
           {"dt", cfg.dt},
           {"quadrature", cfg.quadrature},
           {"method", cfg.method},
           {"threshold", cfg.threshold},
           {"n_scan", cfg.n_scan},
           {"max_iter", cfg.max_iter},
           {"out", cfg.out},
           {"seed", cfg.seed}};
    if (cfg.c_min) j["c_min"] = *cfg.c_min;
    if (cfg.c_max) j["c_max"] = *cfg.c_max;
    return j;
}

GameConfig game_config(const RunConfig& cfg) {
    GameConfig g;
    g.a = cfg.a;
    g.kernel = OddKernel::builtin(cfg.kernel);
    g.grid = TimeGrid(static_cast<std::size_t>(std::llround(1.0 / cfg.dt)));
    g.quadrature =
        cfg.quadrature == "trapezoid" ? Quadrature::Trapezoid : Quadrature::LeftRiemann;
    return g;
}

ShootParams shoot_params(const RunConfig& cfg) {
    ShootParams p;
    if (cfg.c_min && cfg.c_max) p.c_range = CRange{*cfg.c_min, *cfg.c_max};
    p.n_scan = static_cast<std::size_t>(cfg.n_scan);
    p.method = cfg.method == "euler" ? IntegrationMethod::Euler : IntegrationMethod::Rk4;
    return p;
}

SampledFn zero_strategy(const TimeGrid& grid) {
    SampledFn f;
    f.grid = grid;
    f.values.assign(grid.n_nodes(), 0.0);
    f.deriv.assign(grid.n_nodes(), 0.0);
    return f;
}

std::filesystem::path prepare_out_dir(const RunConfig& cfg) {
    std::filesystem::path dir(cfg.out);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

std::string config_comment(const RunConfig& cfg) {
    return "config: " + config_echo(cfg).dump();
}

int cmd_shoot(const RunConfig& cfg) {
    GameConfig game = game_config(cfg);
    ShootParams params = shoot_params(cfg);
    CRange range = params.resolved_c_range(game.a);
    MixtureTarget zero = MixtureTarget::pure(zero_strategy(game.grid));
    std::vector<ShotResult> roots = scan_roots(zero, game, params);

    json out{{"schema_version", kSchemaVersion},
             {"command", "shoot"},
             {"config", config_echo(cfg)},
             {"c_range", {range.lo, range.hi}},
             {"root_count", roots.size()}};
    out["roots"] = json::array();
    for (const auto& r : roots)
        out["roots"].push_back({{"c", r.terminal_value},
                                {"residual", r.residual},
                                {"fprime0", r.trajectory.deriv.front()},
                                {"tangential", r.tangential}});
    std::cout << out.dump(2) << '\n';
    write_json_file(prepare_out_dir(cfg) / "shoot.json", out);
    return 0;
}

int cmd_phase(const RunConfig& cfg) {
    GameConfig game = game_config(cfg);
    ShootParams params = shoot_params(cfg);
    CRange range = params.resolved_c_range(game.a);
    std::vector<double> cs(params.n_scan);
    for (std::size_t i = 0; i < cs.size(); ++i)
        cs[i] = range.lo + (range.hi - range.lo) * static_cast<double>(i) /
                               static_cast<double>(cs.size() - 1);
    std::vector<PhasePoint> points = phase_portrait(
        game, cs,
        cfg.method == "euler" ? IntegrationMethod::Euler : IntegrationMethod::Rk4);

    auto dir = prepare_out_dir(cfg);
    auto path = dir / "phase.csv";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "# " << config_comment(cfg) << "\n";
    out << "c,f0,fprime0,flag\n";
    std::size_t divergent = 0;
    for (const auto& p : points) {
        out << format_full(p.c) << ',' << format_full(p.f0) << ',' << format_full(p.fprime0)
            << ',' << (p.divergent ? 1 : 0) << '\n';
        if (p.divergent) ++divergent;
    }
    if (!out) throw std::runtime_error("write to " + path.string() + " failed");
    std::cout << "phase: " << points.size() << " points (" << divergent << " divergent) -> "
              << path.string() << '\n';
    return 0;
}

int cmd_payoff(const RunConfig& cfg, const std::string& f_path, const std::string& g_path) {
    SampledFn f = read_sampled_fn_csv(f_path);
    SampledFn g = read_sampled_fn_csv(g_path);
    GameConfig game = game_config(cfg);
    game.grid = f.grid;  // functions dictate the grid; config supplies a/kernel/rule
    double value = payoff(f, g, game);

    json out{{"schema_version", kSchemaVersion},
             {"command", "payoff"},
             {"config", config_echo(cfg)},
             {"f", f_path},
             {"g", g_path},
             {"grid_steps", f.grid.n_steps},
             {"payoff", value}};
    std::cout << out.dump(2) << '\n';
    write_json_file(prepare_out_dir(cfg) / "payoff.json", out);
    return 0;
}

int cmd_lp(const RunConfig& cfg, const std::string& matrix_path, bool symmetrize) {
    std::vector<std::vector<double>> m = read_matrix_csv(matrix_path);
    if (symmetrize) {
        std::size_t n = m.size();
        for (const auto& row : m)
            if (row.size() != n) throw std::invalid_argument("lp: matrix is not square");
        auto orig = m;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = 0.5 * (orig[i][j] - orig[j][i]);
    }
    MixedStrategy p = solve_symmetric_game(m);
    std::vector<double> payoffs = expected_payoffs(m, p);

    json out{{"schema_version", kSchemaVersion},
             {"command", "lp"},
             {"config", config_echo(cfg)},
             {"matrix", matrix_path},
             {"probabilities", p.probabilities},
             {"expected_payoffs", payoffs},
             {"support", p.support()}};
    if (m.size() == 3 && p.support().size() == 3) {
        if (auto cycle = cycle_equilibrium_3x3(m)) {
            double diff = 0.0;
            for (std::size_t i = 0; i < 3; ++i)
                diff = std::max(diff,
                                std::abs(cycle->probabilities[i] - p.probabilities[i]));
            out["cycle_check"] = {{"probabilities", cycle->probabilities},
                                  {"max_abs_diff", diff}};
        }
    }
    std::cout << out.dump(2) << '\n';
    write_json_file(prepare_out_dir(cfg) / "lp.json", out);
    return 0;
}

int cmd_equilibrium(const RunConfig& cfg) {
    GameConfig game = game_config(cfg);
    OracleOptions opts;
    opts.shoot = shoot_params(cfg);
    EquilibriumReport report = find_equilibrium(game, default_seeds(game), cfg.threshold,
                                                static_cast<std::size_t>(cfg.max_iter), opts);

    auto dir = prepare_out_dir(cfg);
    json out{{"schema_version", kSchemaVersion},
             {"command", "equilibrium"},
             {"config", config_echo(cfg)},
             {"converged", report.converged},
             {"iterations", report.iterations},
             {"improvement_history", report.improvement_history},
             {"support_size", report.support.size()}};
    out["support"] = json::array();
    for (std::size_t i = 0; i < report.support.size(); ++i) {
        std::string csv_name = "support_" + std::to_string(i) + ".csv";
        write_sampled_fn_csv((dir / csv_name).string(), report.support[i],
                             {config_comment(cfg)});
        out["support"].push_back({{"index", i},
                                  {"endpoint", report.support[i].values.back()},
                                  {"probability", report.probabilities.probabilities[i]},
                                  {"csv", csv_name}});
    }
    write_json_file(dir / "equilibrium.json", out);
    std::cout << "equilibrium a=" << cfg.a << ": "
              << (report.converged ? "converged" : "NOT converged") << ", support size "
              << report.support.size() << ", " << report.iterations << " iterations -> "
              << (dir / "equilibrium.json").string() << '\n';
    return report.converged ? 0 : 1;
}

int cmd_sweep(const RunConfig& cfg, double a_min, double a_max, double step, bool refine) {
    GameConfig game = game_config(cfg);
    SweepOptions opts;
    opts.threshold = cfg.threshold;
    opts.max_iter = static_cast<std::size_t>(cfg.max_iter);
    opts.oracle.shoot = shoot_params(cfg);
    opts.refine = refine;
    std::vector<SweepRecord> records = sweep_equilibria(a_min, a_max, step, game, opts);
    std::vector<Transition> transitions = detect_transitions(records);

    auto dir = prepare_out_dir(cfg);
    std::size_t max_support = 0;
    for (const auto& r : records) max_support = std::max(max_support, r.support_size);

    auto csv_path = dir / "sweep.csv";
    {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot open " + csv_path.string() + " for writing");
        out << "# " << config_comment(cfg) << "\n";
        out << "a,support_size";
        for (std::size_t k = 1; k <= max_support; ++k) out << ",endpoint_" << k;
        for (std::size_t k = 1; k <= max_support; ++k) out << ",prob_" << k;
        out << ",converged\n";
        for (const auto& r : records) {
            out << format_full(r.a) << ',' << r.support_size;
            for (std::size_t k = 0; k < max_support; ++k)
                out << ',' << (k < r.endpoints.size() ? format_full(r.endpoints[k]) : "");
            for (std::size_t k = 0; k < max_support; ++k)
                out << ',' << (k < r.probabilities.size() ? format_full(r.probabilities[k]) : "");
            out << ',' << (r.converged ? 1 : 0) << '\n';
        }
        if (!out) throw std::runtime_error("write to " + csv_path.string() + " failed");
    }

    json out{{"schema_version", kSchemaVersion},
             {"command", "sweep"},
             {"config", config_echo(cfg)},
             {"a_min", a_min},
             {"a_max", a_max},
             {"step", step},
             {"refine", refine}};
    out["records"] = json::array();
    json non_converged = json::array();
    for (const auto& r : records) {
        out["records"].push_back({{"a", r.a},
                                  {"support_size", r.support_size},
                                  {"endpoints", r.endpoints},
                                  {"probabilities", r.probabilities},
                                  {"converged", r.converged},
                                  {"low_confidence", r.low_confidence}});
        if (!r.converged) non_converged.push_back(r.a);
    }
    out["non_converged"] = non_converged;
    out["transitions"] = json::array();
    for (const auto& tr : transitions)
        out["transitions"].push_back({{"a_low", tr.a_low},
                                      {"a_high", tr.a_high},
                                      {"old_size", tr.old_size},
                                      {"new_size", tr.new_size}});
    write_json_file(dir / "sweep.json", out);

    std::ostringstream summary;
    summary << "sweep a in [" << a_min << ", " << a_max << "] step " << step << ": "
            << records.size() << " records, " << non_converged.size() << " non-converged";
    for (const auto& tr : transitions)
        summary << "; " << tr.old_size << "->" << tr.new_size << " in [" << tr.a_low << ", "
                << tr.a_high << "]";
    summary << " -> " << csv_path.string();
    std::cout << summary.str() << '\n';
    return 0;
}

int cmd_taylor(const RunConfig& cfg, std::uint64_t terms, bool table) {
    auto dir = prepare_out_dir(cfg);
    if (table) {
        auto csv_path = dir / "taylor_table.csv";
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot open " + csv_path.string() + " for writing");
        std::ostringstream body;
        body << "a,k,series_fpp1,ode_fpp1,percent_difference\n";
        for (double a : {0.5, 1.0, 2.0, 3.0, 4.0, 5.0}) {
            SeriesAccuracyRow row = accuracy_row(a, terms);
            body << format_full(row.a) << ',' << format_full(row.k) << ','
                 << format_full(row.series_fpp1) << ',' << format_full(row.ode_fpp1) << ','
                 << format_full(row.percent_difference) << '\n';
        }
        out << "# " << config_comment(cfg) << "\n" << body.str();
        if (!out) throw std::runtime_error("write to " + csv_path.string() + " failed");
        std::cout << body.str();
        return 0;
    }

    SeriesAccuracyRow row = accuracy_row(cfg.a, terms);
    SeriesApprox series = series_coefficients(cfg.a, row.k, terms);
    json out{{"schema_version", kSchemaVersion},
             {"command", "taylor"},
             {"config", config_echo(cfg)},
             {"a", row.a},
             {"terms", terms},
             {"k", row.k},
             {"coefficients", series.coeffs},
             {"series_fpp1", row.series_fpp1},
             {"ode_fpp1", row.ode_fpp1},
             {"percent_difference", row.percent_difference}};

    // Independent cross-check: the shooting route's own f''(1), read off the
    // root whose terminal value sits closest to the series' f(1).
    try {
        GameConfig game = game_config(cfg);
        ShootParams params = shoot_params(cfg);
        MixtureTarget zero = MixtureTarget::pure(zero_strategy(game.grid));
        std::vector<ShotResult> roots = scan_roots(zero, game, params);
        double target = series.value_at_one();
        const ShotResult* nearest = nullptr;
        for (const auto& r : roots)
            if (!nearest || std::abs(r.terminal_value - target) <
                                std::abs(nearest->terminal_value - target))
                nearest = &r;
        if (nearest) {
            double fpp = -0.5 * game.a * game.kernel.derivative(nearest->terminal_value);
            out["shoot_cross_check"] = {{"c", nearest->terminal_value}, {"fpp1", fpp}};
        } else {
            out["shoot_cross_check"] = nullptr;
        }
    } catch (const std::exception& e) {
        out["shoot_cross_check"] = {{"error", e.what()}};
    }

    std::cout << out.dump(2) << '\n';
    write_json_file(dir / "taylor.json", out);
    return 0;
}

int cmd_lemma_check(const RunConfig& cfg) {
    const double pi = std::numbers::pi;
    LemmaVerdict sin_verdict = check_sin_inequality(-100.0 * pi, 100.0 * pi, 1000000);
    LemmaVerdict fourier_verdict = check_fourier_inequality(10, 1000, cfg.seed);

    json out{{"schema_version", kSchemaVersion},
             {"command", "lemma-check"},
             {"config", config_echo(cfg)}};
    out["verdicts"] = json::array();
    for (const auto& v : {sin_verdict, fourier_verdict})
        out["verdicts"].push_back({{"name", v.name},
                                   {"passed", v.passed},
                                   {"witness_location", v.witness_location},
                                   {"worst_margin", v.worst_margin}});
    bool all_passed = sin_verdict.passed && fourier_verdict.passed;
    out["all_passed"] = all_passed;
    out["nash_bound"] = nash_bound();
    std::cout << out.dump(2) << '\n';
    write_json_file(prepare_out_dir(cfg) / "lemmas.json", out);
    return all_passed ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"varigame: optimal strategies and mixed equilibria of a zero-sum "
                 "variational game"};
    app.require_subcommand(1);

    Common shoot_opts, phase_opts, payoff_opts, lp_opts, eq_opts, sweep_opts, taylor_opts,
        lemma_opts;

    CLI::App* sub_shoot = app.add_subcommand("shoot", "find residual roots against g = 0");
    shoot_opts.attach(sub_shoot);

    CLI::App* sub_phase =
        app.add_subcommand("phase", "startpoint portrait (c, f(0), f'(0)) against g = 0");
    phase_opts.attach(sub_phase);

    CLI::App* sub_payoff = app.add_subcommand("payoff", "evaluate S(f, g) from CSV strategies");
    payoff_opts.attach(sub_payoff);
    std::string f_path, g_path;
    sub_payoff->add_option("--f", f_path, "CSV with player f's strategy")->required();
    sub_payoff->add_option("--g", g_path, "CSV with player g's strategy")->required();

    CLI::App* sub_lp = app.add_subcommand("lp", "solve a matrix game from CSV");
    lp_opts.attach(sub_lp);
    std::string matrix_path;
    bool symmetrize = false;
    sub_lp->add_option("--matrix", matrix_path, "square payoff matrix CSV")->required();
    sub_lp->add_flag("--symmetrize", symmetrize, "antisymmetrize the matrix first");

    CLI::App* sub_eq = app.add_subcommand("equilibrium", "best-response iteration at one a");
    eq_opts.attach(sub_eq);

    CLI::App* sub_sweep = app.add_subcommand("sweep", "equilibrium bifurcation sweep over a");
    sweep_opts.attach(sub_sweep);
    double a_min = 1.0, a_max = 110.0, step = 1.0;
    bool refine = false;
    sub_sweep->add_option("--a-min", a_min, "sweep start (default 1)");
    sub_sweep->add_option("--a-max", a_max, "sweep end (default 110)");
    sub_sweep->add_option("--step", step, "sweep step (default 1)");
    sub_sweep->add_flag("--refine", refine, "extra pass at step/10 around transitions");

    CLI::App* sub_taylor = app.add_subcommand("taylor", "power-series route and accuracy row");
    taylor_opts.attach(sub_taylor);
    std::uint64_t terms = 10;
    bool table = false;
    sub_taylor->add_option("--terms", terms, "series terms (default 10)");
    sub_taylor->add_flag("--table", table, "emit the six-row accuracy table as CSV");

    CLI::App* sub_lemma = app.add_subcommand("lemma-check", "run the inequality screens");
    lemma_opts.attach(sub_lemma);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(sub_shoot)) return cmd_shoot(shoot_opts.resolve());
        if (app.got_subcommand(sub_phase)) return cmd_phase(phase_opts.resolve());
        if (app.got_subcommand(sub_payoff))
            return cmd_payoff(payoff_opts.resolve(), f_path, g_path);
        if (app.got_subcommand(sub_lp)) return cmd_lp(lp_opts.resolve(), matrix_path, symmetrize);
        if (app.got_subcommand(sub_eq)) return cmd_equilibrium(eq_opts.resolve());
        if (app.got_subcommand(sub_sweep))
            return cmd_sweep(sweep_opts.resolve(), a_min, a_max, step, refine);
        if (app.got_subcommand(sub_taylor)) return cmd_taylor(taylor_opts.resolve(), terms, table);
        if (app.got_subcommand(sub_lemma)) return cmd_lemma_check(lemma_opts.resolve());
    } catch (const UsageError& e) {
        for (const auto& p : e.problems) std::cerr << "config error: " << p << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;  // unreachable: require_subcommand guarantees a match
}

}  // namespace varigame::cli
