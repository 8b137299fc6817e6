#include <gtest/gtest.h>

#include "skorokhod/scenarios.hpp"
#include "skorokhod/serialization.hpp"

using namespace skorokhod;
using nlohmann::json;

namespace {

ScenarioConfig config(const std::string& name, json params, std::uint64_t seed = 1, const std::string& format = "csv") {
    ScenarioConfig c;
    c.scenario = name;
    c.params = std::move(params);
    c.seed = seed;
    c.format = format;
    return c;
}

json small_params(const std::string& name) {
    if (name == "counterexamples") return {{"n_min", 4}, {"n_max", 16}};
    if (name == "inequality-sweep") return {{"count", 20}, {"walks", 5}, {"adversarial", 5}, {"deltas", {0.1}}};
    if (name == "tightness") return {{"kernels", {"srw"}}, {"n_list", {16}}, {"replicas", 50}, {"expectations", json::object()}};
    if (name == "probe") return {{"n_list", {8, 16}}, {"replicas", 10}};
    if (name == "clock") return {{"n_list", {8}}, {"replicas", 50}};
    if (name == "metric")
        return {{"f", to_json(CadlagFunction::indicator(0.5))}, {"g", to_json(CadlagFunction::indicator(0.6))}};
    return json::object();
}

}  // namespace

TEST(Config, ParsesAndRejectsUnknownKeys) {
    const auto c = ScenarioConfig::from_json({{"scenario", "clock"}, {"seed", 7}, {"format", "json"}});
    EXPECT_EQ(c.scenario, "clock");
    EXPECT_EQ(c.seed, 7u);
    EXPECT_THROW(ScenarioConfig::from_json({{"scenario", "clock"}, {"sed", 7}}), std::invalid_argument);
    EXPECT_EQ(ScenarioConfig::from_json(c.to_json()).to_json(), c.to_json());
}

TEST(Config, ValidatesParameters) {
    EXPECT_THROW(resolve_params(config("clock", {{"replica", 5}})), std::invalid_argument);
    EXPECT_THROW(resolve_params(config("clock", {{"replicas", "many"}})), std::invalid_argument);
    EXPECT_THROW(resolve_params(config("clock", {{"n_list", {1.5}}})), std::invalid_argument);
    EXPECT_THROW(resolve_params(config("nope", json::object())), std::invalid_argument);
    EXPECT_THROW(resolve_params(config("clock", json::object(), 1, "xml")), std::invalid_argument);
    EXPECT_THROW(run_scenario(config("counterexamples", {{"n_min", 2}})), std::invalid_argument);
    EXPECT_THROW(run_scenario(config("counterexamples", {{"n_max", 1 << 17}})), std::invalid_argument);
    EXPECT_EQ(resolve_params(config("clock", {{"replicas", 5}}))["replicas"], 5);
}

TEST(Scenarios, EveryScenarioIsDeterministic) {
    for (const auto& name : scenario_names()) {
        for (const char* format : {"csv", "json"}) {
            SCOPED_TRACE(name + " " + format);
            const auto a = run_scenario(config(name, small_params(name), 11, format));
            const auto b = run_scenario(config(name, small_params(name), 11, format));
            ASSERT_EQ(a.files.size(), b.files.size());
            for (std::size_t i = 0; i < a.files.size(); ++i) {
                EXPECT_EQ(a.files[i].name, b.files[i].name);
                EXPECT_EQ(a.files[i].content, b.files[i].content);
            }
            ASSERT_NE(a.find("manifest.json"), nullptr);
        }
    }
}

TEST(Scenarios, SeedChangesMonteCarloOutput) {
    const auto a = run_scenario(config("clock", small_params("clock"), 1));
    const auto b = run_scenario(config("clock", small_params("clock"), 2));
    EXPECT_NE(a.find("clock.csv")->content, b.find("clock.csv")->content);
}

TEST(Scenarios, CounterexampleTables) {
    const auto out = run_scenario(config("counterexamples", {{"n_min", 8}, {"n_max", 8}, {"check", false}}));
    const auto* dist = out.find("distances.csv");
    ASSERT_NE(dist, nullptr);
    EXPECT_NE(dist->content.find("family,n,operation,topology,value,lower_bound,exactness"), std::string::npos);
    // Three families times four topologies.
    EXPECT_EQ(std::count(dist->content.begin(), dist->content.end(), '\n'), 13);
}

TEST(Scenarios, MetricScenario) {
    const auto out = run_scenario(config("metric", small_params("metric"), 1, "json"));
    const auto j = json::parse(out.find("metric.json")->content);
    ASSERT_EQ(j["results"].size(), 4u);
    for (const auto& r : j["results"]) EXPECT_NEAR(r["value"].get<double>(), 0.1, 1e-12);
    EXPECT_THROW(run_scenario(config("metric", json::object())), std::invalid_argument);
}

TEST(Scenarios, InequalitySweepClean) {
    const auto out = run_scenario(config("inequality-sweep", small_params("inequality-sweep")));
    EXPECT_TRUE(out.passed());
    EXPECT_EQ(out.find("violations.json")->content, "[]\n");
}

TEST(Scenarios, WriteOutputs) {
    const auto dir = std::filesystem::temp_directory_path() / "skorokhod_write_test";
    std::filesystem::remove_all(dir);
    const auto out = run_scenario(config("embed", json::object()));
    write_outputs(out, dir);
    for (const auto& f : out.files) EXPECT_TRUE(std::filesystem::exists(dir / f.name)) << f.name;
    std::filesystem::remove_all(dir);
}
