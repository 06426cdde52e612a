#pragma once

#include <json.hpp>

#include "nonadd/integrals.hpp"
#include "nonadd/properties.hpp"
#include "nonadd/verify.hpp"

namespace nonadd {

// Deterministic key order in every emitted document.
using Json = nlohmann::ordered_json;

/// Rationals travel as {"num":..,"den":..,"decimal":..}; parsing also accepts
/// plain integers and "a/b" strings.
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Json extvalue_to_json(const ExtValue& v);  // "inf" or a scalar object
Json vec_to_json(const Vec& v);

Json verdict_to_json(const IntegralVerdict& v);
Json property_report_to_json(const PropertyReport& rep);
Json theorem_report_to_json(const TheoremReport& rep);

/// Set literals: "all" | "empty" | "evens" | "odds" | "finite:[a,b,...]" |
/// "upset:N=..;prefix=..;p=..;R={..}".
MSet parse_set_literal(const std::string& lit, const Ground& g);

Ground ground_from_json(const Json& j);
Json ground_to_json(const Ground& g);

MeasurePtr measure_from_json(const Json& j, const Ground& g);
FuncSpec func_from_json(const Json& j, const Ground& g);

struct ScenarioFile {
    Ground ground = Ground::omega();
    MeasurePtr measure;
    FuncSpec function = FuncSpec::zero(Ground::omega(), 1);
    std::optional<FuncSpec> function_g;
};

/// Strict parse: version tag required, unknown fields rejected at every level.
ScenarioFile scenario_from_json(const Json& j);
ScenarioFile load_scenario_file(const std::string& path);

}  // namespace nonadd
