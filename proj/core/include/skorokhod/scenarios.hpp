#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace skorokhod {

/// A scenario run: name, parameters, output directory and format.
/// Parameters are merged over per-scenario defaults; unknown keys and
/// mistyped values are rejected before anything runs.
struct ScenarioConfig {
    std::string scenario;
    nlohmann::json params = nlohmann::json::object();
    std::string out_dir = ".";
    std::string format = "csv";
    std::uint64_t seed = 1;

    /// Accepts {"scenario", "params", "out", "format", "seed"}.
    static ScenarioConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct OutputFile {
    std::string name;
    std::string content;
};

struct ScenarioOutput {
    std::vector<OutputFile> files;
    /// One line per failed assertion.
    std::vector<std::string> failures;
    /// Short human-readable lines for the console.
    std::vector<std::string> summary;

    bool passed() const { return failures.empty(); }
    const OutputFile* find(const std::string& name) const;
};

/// Names accepted by run_scenario.
const std::vector<std::string>& scenario_names();

/// Default parameters of a scenario.
nlohmann::json scenario_defaults(const std::string& scenario);

/// Validates the configuration and returns the merged parameters.
nlohmann::json resolve_params(const ScenarioConfig& config);

ScenarioOutput run_scenario(const ScenarioConfig& config);

ScenarioOutput run_counterexamples(const ScenarioConfig& config);
ScenarioOutput run_inequality_sweep(const ScenarioConfig& config);
ScenarioOutput run_tightness_suite(const ScenarioConfig& config);
ScenarioOutput run_probe(const ScenarioConfig& config);
ScenarioOutput run_clock(const ScenarioConfig& config);
ScenarioOutput run_embed(const ScenarioConfig& config);
ScenarioOutput run_metric(const ScenarioConfig& config);

/// Writes every file into `dir`, creating it if needed.
void write_outputs(const ScenarioOutput& out, const std::filesystem::path& dir);

}  // namespace skorokhod
