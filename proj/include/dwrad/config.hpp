#pragma once

#include <cstdint>
#include <string>

namespace dwrad {

/// Knobs shared by every optimizer-backed quantity.
struct OptimizerConfig {
  int restarts = 64;
  int max_iters = 500;
  int theta_grid = 2048;
  double refine_tol = 1e-12;
  int alpha_grid = 101;
  std::uint64_t seed = 0x5eed;

  /// Throws ConfigError if any field is non-positive.
  void validate() const;
  /// Same settings with restarts multiplied by factor.
  OptimizerConfig escalated(int factor = 4) const;
};

/// Reads the fields present in a JSON object file; absent fields keep the
/// values already in base.
OptimizerConfig load_optimizer_config(const std::string& path, OptimizerConfig base = {});

/// Deterministic 64-bit mixer used to derive independent per-item seeds.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace dwrad
