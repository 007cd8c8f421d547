#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace asianlt::cli {

struct SelfcheckOptions {
  /// all, kernel, sqrt-lemma, weber, inversion or moments.
  std::string suite = "all";
  std::int64_t samples = 100000;
  /// Replaces every suite's default tolerance when set.
  std::optional<double> tolerance;
  std::uint64_t seed = 7;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  /// Observed error (relative unless noted); for the square-root lemma the
  /// smallest margin Re(mu) - |Re(nu)|.
  double observed = 0.0;
  double tolerance = 0.0;
};

/// Throws std::invalid_argument for an unknown suite name.
[[nodiscard]] std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& opts);

}  // namespace asianlt::cli
