#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace isodens {

struct AcceptanceResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the twelve release checks (closed-form constants, crossovers,
/// inequality grids, oracle certification, stationarity, calibration).
std::vector<AcceptanceResult> run_acceptance();

nlohmann::json acceptance_to_json(const std::vector<AcceptanceResult>& results);

}  // namespace isodens
