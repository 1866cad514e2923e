#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "varigame/cli.hpp"
#include "varigame/io.hpp"
#include "varigame/matrix_game.hpp"
#include "varigame/payoff.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

int run_cli(const std::vector<std::string>& args) {
    std::vector<std::string> owned = {"varigame"};
    owned.insert(owned.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& s : owned) argv.push_back(s.c_str());
    return varigame::cli::run(static_cast<int>(argv.size()), argv.data());
}

int run_cli(std::initializer_list<std::string> args) {
    return run_cli(std::vector<std::string>(args));
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / fs::path("varigame-cli-" + tag + "-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return json::parse(in);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"frobnicate"}) == 2);
    CHECK(run_cli({"shoot", "--no-such-flag"}) == 2);
    CHECK(run_cli({"shoot", "--a", "-1"}) == 2);
    CHECK(run_cli({"shoot", "--kernel", "tanh"}) == 2);
    CHECK(run_cli({"shoot", "--dt", "0.0003"}) == 2);  // 1/dt is not an integer
    CHECK(run_cli({"shoot", "--c-min", "1"}) == 2);    // c-min without c-max
    CHECK(run_cli({"lp"}) == 2);                       // --matrix is required
    CHECK(run_cli({"payoff"}) == 2);
}

TEST_CASE("--help exits 0") {
    CHECK(run_cli({"--help"}) == 0);
    CHECK(run_cli({"shoot", "--help"}) == 0);
}

TEST_CASE("shoot writes a deterministic root report") {
    // Same --out both times so the config echo (which embeds the out path)
    // is identical; the second run must overwrite with the exact same bytes.
    TempDir tmp("shoot");
    std::vector<std::string> args = {"shoot", "--a", "1", "--dt", "0.001", "--n-scan",
                                     "201", "--c-min", "-3.2", "--c-max", "3.2",
                                     "--out", tmp.path.string()};
    CHECK(run_cli(args) == 0);
    std::string first = slurp(tmp.file("shoot.json"));
    CHECK(run_cli(args) == 0);
    std::string second = slurp(tmp.file("shoot.json"));

    json rep = json::parse(first);
    CHECK(rep["schema_version"] == 1);
    CHECK(rep["config"]["a"] == 1.0);
    CHECK(rep["config"]["dt"] == 0.001);
    REQUIRE(rep["roots"].size() == 1);
    CHECK(std::abs(rep["roots"][0]["c"].get<double>() - 0.245) <= 0.02);
    CHECK(std::abs(rep["roots"][0]["residual"].get<double>()) <= 1e-6);

    CHECK(first == second);
}

TEST_CASE("phase portrait CSV") {
    TempDir tmp("phase");
    int rc = run_cli({"phase", "--a", "0", "--dt", "0.01", "--n-scan", "11",
                      "--c-min", "-1", "--c-max", "1", "--out", tmp.path.string()});
    CHECK(rc == 0);
    std::string text = slurp(tmp.file("phase.csv"));
    CHECK(text.find("c,f0,fprime0,flag") != std::string::npos);
    int rows = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty() && line[0] != '#' && line[0] != 'c') ++rows;
    CHECK(rows == 11);
}

TEST_CASE("payoff evaluates two strategy files") {
    TempDir tmp("payoff");
    varigame::TimeGrid grid(2000);
    varigame::SampledFn f = varigame::small_a_optimum(1.0, grid);
    varigame::SampledFn zero;
    zero.grid = grid;
    zero.values.assign(grid.n_nodes(), 0.0);
    zero.deriv.assign(grid.n_nodes(), 0.0);
    varigame::write_sampled_fn_csv(tmp.file("f.csv"), f);
    varigame::write_sampled_fn_csv(tmp.file("zero.csv"), zero);

    int rc = run_cli({"payoff", "--a", "1", "--f", tmp.file("f.csv"),
                      "--g", tmp.file("zero.csv"), "--out", tmp.path.string()});
    CHECK(rc == 0);
    json rep = load_json(tmp.file("payoff.json"));
    CHECK(std::abs(rep["payoff"].get<double>() - (-1.0 / 12.0)) <= 2e-3);
}

TEST_CASE("lp solves a matrix from disk and cross-checks the 3-cycle") {
    TempDir tmp("lp");
    varigame::write_matrix_csv(tmp.file("m.csv"), {{0.0, 34.994, -62.147},
                                                   {-34.994, 0.0, 32.740},
                                                   {62.147, -32.740, 0.0}});
    int rc = run_cli({"lp", "--matrix", tmp.file("m.csv"), "--out", tmp.path.string()});
    CHECK(rc == 0);
    json rep = load_json(tmp.file("lp.json"));
    REQUIRE(rep["probabilities"].size() == 3);
    CHECK(std::abs(rep["probabilities"][0].get<double>() - 0.252) <= 0.002);
    CHECK(std::abs(rep["probabilities"][1].get<double>() - 0.478) <= 0.002);
    CHECK(std::abs(rep["probabilities"][2].get<double>() - 0.269) <= 0.002);
    REQUIRE(rep.contains("cycle_check"));
    CHECK(rep["cycle_check"]["max_abs_diff"].get<double>() <= 1e-6);
}

TEST_CASE("equilibrium emits support CSVs and a JSON report") {
    TempDir tmp("eq");
    int rc = run_cli({"equilibrium", "--a", "4", "--dt", "0.001", "--n-scan", "501",
                      "--out", tmp.path.string()});
    CHECK(rc == 0);
    json rep = load_json(tmp.file("equilibrium.json"));
    CHECK(rep["converged"] == true);
    CHECK(rep["support_size"] == 1);
    REQUIRE(rep["support"].size() == 1);
    CHECK(rep["support"][0]["probability"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    varigame::SampledFn s = varigame::read_sampled_fn_csv(tmp.file("support_0.csv"));
    CHECK(s.grid.n_steps == 1000);
    CHECK(std::abs(s.values.back() - 1.0) <= 5e-3);
}

TEST_CASE("taylor table and single-row modes") {
    TempDir tmp("taylor");
    int rc = run_cli({"taylor", "--a", "0.5", "--out", tmp.path.string()});
    CHECK(rc == 0);
    json rep = load_json(tmp.file("taylor.json"));
    double k = rep["k"].get<double>();
    CHECK(k >= 0.245);
    CHECK(k <= 0.253);
    CHECK(rep["coefficients"].size() == 11);

    int rc2 = run_cli({"taylor", "--table", "--out", tmp.path.string()});
    CHECK(rc2 == 0);
    std::string table = slurp(tmp.file("taylor_table.csv"));
    int rows = 0;
    std::istringstream lines(table);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty() && line[0] != '#' && line[0] != 'a') ++rows;
    CHECK(rows == 6);
}

TEST_CASE("lemma-check passes and reports") {
    TempDir tmp("lemma");
    int rc = run_cli({"lemma-check", "--seed", "42", "--out", tmp.path.string()});
    CHECK(rc == 0);
    json rep = load_json(tmp.file("lemmas.json"));
    CHECK(rep["all_passed"] == true);
    CHECK(rep["nash_bound"].get<double>() > 7.751);
}

TEST_CASE("sweep over a single a emits CSV and JSON") {
    TempDir tmp("sweep");
    int rc = run_cli({"sweep", "--a-min", "4", "--a-max", "4", "--step", "1",
                      "--dt", "0.001", "--n-scan", "501", "--out", tmp.path.string()});
    CHECK(rc == 0);
    json rep = load_json(tmp.file("sweep.json"));
    REQUIRE(rep["records"].size() == 1);
    CHECK(rep["records"][0]["support_size"] == 1);
    CHECK(rep["records"][0]["converged"] == true);
    std::string csv = slurp(tmp.file("sweep.csv"));
    CHECK(csv.find("a,support_size") != std::string::npos);
}

TEST_CASE("config file merges under explicit flags") {
    TempDir tmp("config");
    {
        std::ofstream cfg(tmp.file("cfg.json"));
        cfg << R"({"a": 2.0, "dt": 0.001, "n_scan": 101, "c_min": -3.0, "c_max": 3.0})";
    }
    int rc = run_cli({"shoot", "--config", tmp.file("cfg.json"), "--out", tmp.path.string()});
    CHECK(rc == 0);
    json rep = load_json(tmp.file("shoot.json"));
    CHECK(rep["config"]["a"] == 2.0);
    CHECK(rep["config"]["dt"] == 0.001);

    int rc2 = run_cli({"shoot", "--config", tmp.file("cfg.json"), "--a", "1",
                       "--out", tmp.path.string()});
    CHECK(rc2 == 0);
    json rep2 = load_json(tmp.file("shoot.json"));
    CHECK(rep2["config"]["a"] == 1.0);

    {
        std::ofstream bad(tmp.file("bad.json"));
        bad << R"({"a": 2.0, "unknown_knob": 5})";
    }
    CHECK(run_cli({"shoot", "--config", tmp.file("bad.json")}) == 2);

    {
        std::ofstream broken(tmp.file("broken.json"));
        broken << "{ not json";
    }
    CHECK(run_cli({"shoot", "--config", tmp.file("broken.json")}) == 2);

    {
        std::ofstream neg(tmp.file("neg.json"));
        neg << R"({"a": -3.0})";
    }
    CHECK(run_cli({"shoot", "--config", tmp.file("neg.json")}) == 2);
}
