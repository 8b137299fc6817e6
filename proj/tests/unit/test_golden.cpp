#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "skorokhod/scenarios.hpp"

using namespace skorokhod;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Golden, CounterexampleTables) {
    ScenarioConfig c;
    c.scenario = "counterexamples";
    c.params = {{"n_min", 4}, {"n_max", 16}, {"check", false}};
    const auto out = run_scenario(c);
    const std::filesystem::path dir = SKOROKHOD_GOLDEN_DIR;
    for (const char* name : {"distances.csv", "functionals.csv", "oscillation.csv"}) {
        const auto* file = out.find(name);
        ASSERT_NE(file, nullptr) << name;
        ASSERT_TRUE(std::filesystem::exists(dir / name)) << name;
        EXPECT_EQ(file->content, slurp(dir / name)) << name << " differs from the stored golden file";
    }
}
