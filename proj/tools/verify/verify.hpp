#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fdirac::verify {

/// Outcome of one numerical check.
struct CheckResult {
    std::string suite;
    std::string check;
    double residual = 0.0;
    double tolerance = 0.0;
    /// "<=" for bounds, ">" for negative controls that must exceed the bound.
    std::string relation = "<=";
    bool pass = false;
};

struct Config {
    std::uint64_t seed = 20240611;
    /// Overrides keyed "suite.check".
    std::map<std::string, double> tolerances;
    /// Runs the positive involutivity check at a non-character eta-.
    bool inject_noncharacter = false;
    /// Adds wall-clock runtime checks (non-deterministic).
    bool timing = false;
};

/// Suite names in execution order.
const std::vector<std::string>& suite_names();

/// Runs one suite; throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(const std::string& name, const Config& cfg);

/// Runs every suite.
std::vector<CheckResult> run_all(const Config& cfg);

}  // namespace fdirac::verify
