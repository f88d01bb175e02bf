#include "fuzzybv/errors.hpp"
#include "fuzzybv/harness.hpp"

#include <doctest.h>

using namespace fuzzybv;
using nlohmann::json;

TEST_CASE("scenario names round-trip") {
    CHECK(all_scenarios().size() == 8);
    for (auto n : all_scenarios()) CHECK(scenario_from_string(to_string(n)) == n);
    CHECK_THROWS_AS(scenario_from_string("T9"), ConfigError);
}

TEST_CASE("every default scenario passes") {
    for (const auto& r : run_all(1, 1)) {
        CAPTURE(r.name);
        CHECK(r.pass);
        CHECK_FALSE(r.assertions.empty());
        for (const auto& a : r.assertions) {
            CAPTURE(a.name);
            CHECK(a.pass);
        }
    }
}

TEST_CASE("reports are reproducible and carry no timing") {
    const auto a = run_scenario(default_scenario(ScenarioName::T7_MIDPOINT, 1, 9));
    const auto b = run_scenario(default_scenario(ScenarioName::T7_MIDPOINT, 1, 9));
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK_FALSE(to_json(a).contains("wall_seconds"));
    CHECK(a.wall_seconds >= 0);
    const auto c = run_scenario(default_scenario(ScenarioName::T7_MIDPOINT, 1, 10));
    CHECK(to_json(c)["evidence"] != to_json(a)["evidence"]);
}

TEST_CASE("scale multiplies the horizon") {
    const auto s = default_scenario(ScenarioName::R2_CONVERSE, 3);
    CHECK(s.params["K"] == 3000);
    CHECK_THROWS_AS(default_scenario(ScenarioName::R2_CONVERSE, 0), InvalidArgument);
    CHECK(run_scenario(s).pass);
}

TEST_CASE("the unbounded-member record documents the erratum") {
    const auto r = run_scenario(default_scenario(ScenarioName::T2_STRICT_EX1));
    CHECK(r.evidence.contains("erratum"));
    CHECK(r.evidence["inner_at_3"] == 7.0);
}

TEST_CASE("a scenario that does not hold reports failure instead of throwing") {
    auto s = default_scenario(ScenarioName::R2_CONVERSE);
    // a crisp sequence has nonzero midpoint deltas
    s.params["sequence"] = {{"family", "crisp"}, {"value", {{"family", "power"}, {"p", 1}}}};
    const auto r = run_scenario(s);
    CHECK_FALSE(r.pass);
}

TEST_CASE("bad parameters name the field") {
    auto s = default_scenario(ScenarioName::T4_STAT_NULL);
    s.params["scheme"]["v"]["r"] = 0;
    try {
        run_scenario(s);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.field() == "params.scheme.v.r");
    }
    s = default_scenario(ScenarioName::T3_LIMIT_PRESERVE);
    s.params["K"] = 0;
    CHECK_THROWS_AS(run_scenario(s), ConfigError);
    s = default_scenario(ScenarioName::T5_CESARO);
    s.params["scheme"]["start"] = 0;
    s.params["scheme"]["u"]["s"] = 1;
    try {
        run_scenario(s);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.field() == "params.scheme.start");
    }
    s = default_scenario(ScenarioName::T2_INCLUSION);
    s.params.erase("p");
    CHECK_THROWS_AS(run_scenario(s), ConfigError);
}
