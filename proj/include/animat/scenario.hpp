#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "animat/sim.hpp"

namespace animat {

// Scenario files are JSON documents mirroring Scenario field for field.
// Unspecified parameters fall back to the documented defaults; unknown keys
// and out-of-range values are load errors.
struct ScenarioLoadResult {
    std::optional<Scenario> scenario;
    std::vector<std::string> errors;

    bool ok() const { return scenario.has_value() && errors.empty(); }
};

ScenarioLoadResult parseScenario(const nlohmann::json& doc);
ScenarioLoadResult loadScenarioFile(const std::string& path);

// Normalized echo of the effective configuration: defaults filled in, keys
// sorted. Reloading the echo yields an identical configuration.
nlohmann::json scenarioToJson(const Scenario& scenario);

}  // namespace animat
