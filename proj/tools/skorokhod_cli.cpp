// Command line front end for the scenario runner.
//
// Exit codes: 0 when every assertion passed, 2 when an assertion failed,
// 1 for usage and configuration errors.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "skorokhod/scenarios.hpp"
#include "skorokhod/serialization.hpp"

using nlohmann::json;
using skorokhod::ScenarioConfig;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kAssertion = 2;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

// Copies an option into the parameter map only when it was given, so the
// scenario defaults apply otherwise.
struct ParamBinder {
    json* params;
    std::vector<std::function<void()>> pending;

    template <typename T>
    CLI::Option* add(CLI::App* app, const std::string& flag, const std::string& key, T& target, const std::string& help) {
        auto* opt = app->add_option(flag, target, help);
        pending.push_back([this, opt, key, &target] {
            if (opt->count() > 0) (*params)[key] = target;
        });
        return opt;
    }

    void apply() {
        for (auto& f : pending) f();
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skorokhod topology toolkit: distances, embeddings and Markov chain diagnostics"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 1;
    std::string out_dir = ".";
    std::string format = "csv";
    auto* seed_opt = app.add_option("--seed", seed, "root random seed")->capture_default_str();
    auto* out_opt = app.add_option("--out", out_dir, "output directory")->capture_default_str();
    auto* format_opt =
        app.add_option("--format", format, "table format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    ScenarioConfig config;
    json params = json::object();
    ParamBinder bind{&params, {}};

    // metric
    auto* metric = app.add_subcommand("metric", "distances between two functions stored as JSON");
    std::string f_path, g_path;
    std::vector<std::string> topologies;
    int m1_refinement = 4;
    double tolerance = 1e-9;
    std::string norm;
    metric->add_option("--f", f_path, "first function")->required()->check(CLI::ExistingFile);
    metric->add_option("--g", g_path, "second function")->required()->check(CLI::ExistingFile);
    bind.add(metric, "--topology", "topologies", topologies, "topologies to compute (default: all four)");
    bind.add(metric, "--m1-refinement", "m1_refinement", m1_refinement, "densification factor for the M1 bound");
    bind.add(metric, "--tolerance", "tolerance", tolerance, "J1 search tolerance");
    bind.add(metric, "--norm", "norm", norm, "box or euclidean")->check(CLI::IsMember({"box", "euclidean"}));

    // embed
    auto* embed = app.add_subcommand("embed", "embed a sequence as a cadlag function");
    int family = 1, n = 8;
    std::string topology, chooser, m1;
    std::vector<double> sequence;
    bind.add(embed, "--family", "family", family, "counterexample family")->check(CLI::Range(1, 3));
    bind.add(embed, "--n", "n", n, "resolution");
    bind.add(embed, "--topology", "topology", topology, "J1, J2, M1 or M2");
    bind.add(embed, "--chooser", "chooser", chooser, "default or excursion");
    bind.add(embed, "--m1", "m1", m1, "linear or literal");
    bind.add(embed, "--values", "sequence", sequence, "explicit sequence instead of a family");

    // clock
    auto* clock = app.add_subcommand("clock", "statistics of the Poisson clock discrepancy");
    std::vector<int> clock_n;
    int clock_replicas = 0;
    bind.add(clock, "--n", "n_list", clock_n, "resolutions");
    bind.add(clock, "--replicas", "replicas", clock_replicas, "clocks per resolution");

    // tightness
    auto* tight = app.add_subcommand("tightness", "estimate the tightness conditions for kernels");
    tight->set_help_flag("--help", "Print this help message and exit");
    std::vector<std::string> kernels;
    std::vector<int> tight_n;
    std::vector<double> h_list, r_grid;
    double eps = 0.5, radius = 2.0, extra_eps = 0.25, local_thr = 0.05, global_thr = 0.05;
    int tight_replicas = 0, x_points = 9, m = 1;
    bind.add(tight, "--kernel", "kernels", kernels, "kernel specs, e.g. srw or drift(2)");
    bind.add(tight, "--n", "n_list", tight_n, "resolutions");
    bind.add(tight, "--eps", "eps", eps, "local continuity epsilon");
    bind.add(tight, "--R", "R", radius, "radius of the x grid");
    bind.add(tight, "--h", "h_list", h_list, "time horizons");
    bind.add(tight, "--R-grid", "R_grid", r_grid, "radii for the global bound");
    bind.add(tight, "--x-points", "x_points", x_points, "grid points per axis");
    bind.add(tight, "--m", "m", m, "time horizon of the global bound");
    bind.add(tight, "--extra-eps", "extra_eps", extra_eps, "extra steps epsilon");
    bind.add(tight, "--local-threshold", "local_threshold", local_thr, "accepted local continuity estimate");
    bind.add(tight, "--global-threshold", "global_threshold", global_thr, "accepted global bound estimate");
    bind.add(tight, "--replicas", "replicas", tight_replicas, "replicas per estimate");

    // probe
    auto* probe = app.add_subcommand("probe", "empirical convergence probe for a kernel");
    std::string probe_kernel, probe_metric, probe_mode, probe_embedding, reference_path;
    std::vector<int> probe_n;
    std::vector<double> thresholds, start;
    double probe_eps = 0.1;
    int probe_replicas = 0, probe_refinement = 1;
    bind.add(probe, "--kernel", "kernel", probe_kernel, "kernel spec");
    bind.add(probe, "--topology", "metric", probe_metric, "topology of the distance");
    bind.add(probe, "--mode", "mode", probe_mode, "reference, embedding or markov");
    bind.add(probe, "--embedding", "embedding", probe_embedding, "embedding of the chain");
    probe->add_option("--reference", reference_path, "reference function (JSON); implies --mode reference")
        ->check(CLI::ExistingFile);
    bind.add(probe, "--n", "n_list", probe_n, "resolutions");
    bind.add(probe, "--eps", "eps", probe_eps, "exceedance level");
    bind.add(probe, "--replicas", "replicas", probe_replicas, "replicas per resolution");
    bind.add(probe, "--thresholds", "thresholds", thresholds, "accepted exceedance per resolution");
    bind.add(probe, "--m1-refinement", "m1_refinement", probe_refinement, "densification factor for the M1 bound");
    bind.add(probe, "--start", "start", start, "starting state");

    // counterexamples
    auto* counter = app.add_subcommand("counterexamples", "distances and functionals of the three counterexample families");
    int n_min = 4, n_max = 512, ce_refinement = 4;
    std::vector<int> families;
    std::vector<double> deltas, levels;
    double rate = 2.0, stall = 0.2;
    bool no_check = false;
    bind.add(counter, "--n-min", "n_min", n_min, "smallest resolution");
    bind.add(counter, "--n-max", "n_max", n_max, "largest resolution (doubling from n-min)");
    bind.add(counter, "--families", "families", families, "families to run");
    bind.add(counter, "--deltas", "deltas", deltas, "oscillation windows");
    bind.add(counter, "--levels", "levels", levels, "overshoot levels");
    bind.add(counter, "--m1-refinement", "m1_refinement", ce_refinement, "densification factor for the M1 bound");
    bind.add(counter, "--rate", "rate", rate, "converging distances must be at most rate/n");
    bind.add(counter, "--stall", "stall", stall, "stalling distances must stay at least this large");
    counter->add_flag("--no-check", no_check, "tabulate without asserting");

    // inequality-sweep
    auto* sweep = app.add_subcommand("inequality-sweep", "random search for violations of the oscillation inequalities");
    int count = 0, walks = 0, adversarial = 0, max_jumps = 0;
    std::vector<int> dims;
    std::vector<double> sweep_deltas;
    std::string t2;
    double sweep_tol = 1e-12;
    bind.add(sweep, "--count", "count", count, "random step functions per dimension and delta");
    bind.add(sweep, "--walks", "walks", walks, "random walks per dimension and delta");
    bind.add(sweep, "--adversarial", "adversarial", adversarial, "near-jump pairs per dimension and delta");
    bind.add(sweep, "--max-jumps", "max_jumps", max_jumps, "maximum number of jumps");
    bind.add(sweep, "--dims", "dims", dims, "dimensions");
    bind.add(sweep, "--deltas", "deltas", sweep_deltas, "window sizes");
    bind.add(sweep, "--t2", "t2", t2, "strict or literal triple convention");
    bind.add(sweep, "--tolerance", "tolerance", sweep_tol, "slack allowed in each inequality");

    // run
    auto* run = app.add_subcommand("run", "run a scenario described by a JSON config");
    std::string config_path;
    run->add_option("--config", config_path, "config file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        bind.apply();
        if (run->parsed()) {
            config = ScenarioConfig::from_json(read_json_file(config_path));
        } else {
            config.scenario = app.get_subcommands().front()->get_name();
            config.params = params;
            if (metric->parsed()) {
                config.params["f"] = read_json_file(f_path);
                config.params["g"] = read_json_file(g_path);
            }
            if (probe->parsed() && !reference_path.empty()) {
                config.params["reference"] = read_json_file(reference_path);
                if (!config.params.contains("mode")) config.params["mode"] = "reference";
            }
            if (counter->parsed() && no_check) config.params["check"] = false;
        }
        if (seed_opt->count() > 0) config.seed = seed;
        if (out_opt->count() > 0 || !run->parsed()) config.out_dir = out_dir;
        if (format_opt->count() > 0 || !run->parsed()) config.format = format;
        skorokhod::resolve_params(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    skorokhod::ScenarioOutput output;
    try {
        output = skorokhod::run_scenario(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        skorokhod::write_outputs(output, config.out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    for (const auto& line : output.summary) std::cout << line << "\n";
    for (const auto& f : output.files) std::cout << "wrote " << (std::filesystem::path(config.out_dir) / f.name).string() << "\n";
    for (const auto& line : output.failures) std::cerr << "assertion failed: " << line << "\n";
    return output.passed() ? kOk : kAssertion;
}
