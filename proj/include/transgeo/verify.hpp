#pragma once

// The invariant battery behind the `verify` command.

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace transgeo {

struct Check {
  std::string suite;
  std::string name;
  double t = 0.0;  // NaN for checks not tied to one t
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Suite names: form, metric, group, trig, transition.
std::vector<std::string> suite_names();

/// Runs `suite` (or every suite for "all") over the grid with a fixed seed.
/// When tol is set it replaces every per-check tolerance.
std::vector<Check> run_verification(const std::string& suite, std::span<const double> grid,
                                    std::optional<double> tol = std::nullopt);

}  // namespace transgeo
