#pragma once

#include "fuzzybv/classify.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzybv {

/// One desk-scale experiment per inclusion result, worked example and counterexample.
enum class ScenarioName {
    T2_INCLUSION,       ///< l_p members with u in l_1, v in l_q lie in bv(u, v)
    T2_STRICT_EX1,      ///< an unbounded sequence inside bv(u, v)
    T3_LIMIT_PRESERVE,  ///< c(Delta) limits survive the bv metric
    T4_STAT_NULL,       ///< bv(u, v) sequences have statistically null differences
    T5_CESARO,          ///< Cesaro-convergent sequences under summable G(u', v) rows
    T6_EQUIVALENCE,     ///< equivalent sequences share bv membership
    T7_MIDPOINT,        ///< midpoint sequences inherit bv membership
    R2_CONVERSE,        ///< ... but not conversely
};

std::string_view to_string(ScenarioName n) noexcept;
ScenarioName scenario_from_string(std::string_view s);  // throws ConfigError
const std::vector<ScenarioName>& all_scenarios();

/// A scenario is fully described by its name and parameter record.
struct Scenario {
    ScenarioName name;
    nlohmann::json params;
};

/// Default parameters with every horizon multiplied by `scale` (>= 1).
Scenario default_scenario(ScenarioName name, std::int64_t scale = 1, std::uint64_t seed = 1);

struct Assertion {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    std::string relation;  ///< "<=", ">=", "==", or "verdict"/"growth" for classifications
    bool pass = false;
    std::string note;
};

struct ScenarioReport {
    std::string name;
    nlohmann::json params;
    std::vector<Assertion> assertions;
    nlohmann::json evidence;  ///< scenario-specific measurements (k0, errata, ...)
    bool pass = false;
    double wall_seconds = 0.0;  ///< kept out of to_json so reports stay byte-reproducible
};

/// Runs the construction and evaluates the assertions. Bad parameters throw
/// ConfigError naming the field (e.g. "params.scheme.u.p").
ScenarioReport run_scenario(const Scenario& sc);

std::vector<ScenarioReport> run_all(std::uint64_t seed, std::int64_t scale);

nlohmann::json to_json(const Assertion& a);
nlohmann::json to_json(const ScenarioReport& r);

}  // namespace fuzzybv
