#include <gtest/gtest.h>

#include "skorokhod/generators.hpp"
#include "skorokhod/serialization.hpp"

using namespace skorokhod;
using nlohmann::json;

TEST(FormatDouble, RoundTrips) {
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        const double v = gen::uniform(rng, -1e6, 1e6) * std::pow(10.0, gen::uniform_int(rng, -20, 20));
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(3.0), "3");
    EXPECT_EQ(format_double(INFINITY), "inf");
    EXPECT_EQ(format_double(-INFINITY), "-inf");
    EXPECT_EQ(format_double(NAN), "nan");
}

TEST(FunctionJson, RoundTrips) {
    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
        const auto f = gen::piecewise_linear(rng, i % 2 + 1, 6);
        const auto g = function_from_json(json::parse(to_json(f).dump()));
        EXPECT_EQ(g.breakpoints(), f.breakpoints());
        EXPECT_EQ(g.pieces(), f.pieces());
    }
}

TEST(FunctionJson, RejectsMalformed) {
    auto j = to_json(CadlagFunction::indicator(0.5));
    auto bad = j;
    bad["extra"] = 1;
    EXPECT_THROW(function_from_json(bad), std::invalid_argument);
    bad = j;
    bad["breakpoints"] = json::array({0.0});
    EXPECT_ANY_THROW(function_from_json(bad));
    bad = j;
    bad["pieces"][0]["kind"] = "cubic";
    EXPECT_THROW(function_from_json(bad), std::invalid_argument);
    bad = j;
    bad["breakpoints"] = {0.2, 0.5};
    EXPECT_THROW(function_from_json(bad), std::invalid_argument);
    EXPECT_ANY_THROW(function_from_json(json::array()));
}

TEST(TableOutput, CsvAndJson) {
    Table t({"name", "count", "value", "ok"});
    t.add({std::string("a,b"), 3LL, 0.1, true});
    t.add({std::string("plain"), -1LL, 2.0, false});
    EXPECT_EQ(t.to_csv(), "name,count,value,ok\n\"a,b\",3,0.1,true\nplain,-1,2,false\n");
    const auto j = t.to_json();
    EXPECT_EQ(j["schema"], kSchemaVersion);
    EXPECT_EQ(j["rows"][0]["count"], 3);
    EXPECT_EQ(j["rows"][1]["ok"], false);
    EXPECT_THROW(t.add({1LL}), std::invalid_argument);
}

TEST(ResultJson, DistanceAndEstimate) {
    const auto r = d_j1(CadlagFunction::indicator(0.5), CadlagFunction::indicator(0.6));
    const auto j = to_json(r);
    EXPECT_EQ(j["topology"], "J1");
    EXPECT_EQ(j["exactness"], "exact");
    EXPECT_TRUE(j.contains("time_change"));

    ConditionEstimate e;
    e.condition = "extra-steps";
    e.probabilities = {{0.25}};
    e.half_widths = {{0.01}};
    const auto je = to_json(e);
    EXPECT_EQ(je["condition"], "extra-steps");
    EXPECT_EQ(je["probabilities"][0][0], 0.25);
}
