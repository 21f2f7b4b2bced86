#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dwrad/blocks.hpp"
#include "dwrad/bounds.hpp"
#include "dwrad/lemmas.hpp"

namespace dwrad {

struct FuzzConfig {
  std::uint64_t seed = 1;
  int count = 100;
  std::vector<int> dims = {2, 3, 4};
  /// Eigenvalues of A zeroed; cycled over items.
  std::vector<int> rank_deficit = {0, 1};
  /// Scale of the random entries of A and S.
  double magnitude = 1.0;
  OptimizerConfig opt;
  /// Worker threads; 0 picks the hardware concurrency.
  int threads = 0;
  /// Run the block equalities on even-indexed items.
  bool blocks = true;
  /// Lemma samples per lemma; 0 skips the lemma suite.
  int lemma_samples = 1000;

  /// Throws ConfigError: count >= 1, dims >= 2, every deficit < every dim.
  void validate() const;
};

/// An identity or inequality checked on one pair; error is the measured
/// deviation (0 when an inequality holds with room to spare).
struct IdentityCheck {
  std::string check_id;
  double error = 0.0;
  double tol = 0.0;
  bool holds = true;
};

/// Algebraic identities of the A-adjoint and reduction (1e-10), the
/// numerical radius relations (1e-8), norm relations and submultiplicativity
/// (1e-9). r is a second operator in B_A for the product rule.
std::vector<IdentityCheck> pair_identities(const HermitianPSD& a, const Operator& s, const Operator& r,
                                           const OptimizerConfig& cfg);

struct FuzzItem {
  int index = 0;
  int dim = 0;
  int deficit = 0;
  Matrix a;
  Operator s;
  Operator t;
  BoundReport report;
  std::vector<IdentityCheck> identities;
  std::optional<BlockEqualityReport> blocks;
  /// Set when the item threw; the message is kept for the summary.
  std::string error;

  std::string pair_id() const;
  int violations() const;
};

struct FuzzResult {
  std::vector<FuzzItem> items;
  std::vector<LemmaCheckResult> lemmas;

  int violations() const;
  /// Bound report CSV, rows ordered by item index.
  std::string csv() const;
  /// Counts plus every failing entry with its full inputs for replay.
  nlohmann::json summary(const FuzzConfig& cfg) const;
};

/// The deterministic item k of a corpus: weight, operator and partner.
FuzzItem make_fuzz_item(const FuzzConfig& cfg, int index);

/// Generates and checks cfg.count items in a worker pool. The result is
/// identical for any thread count.
FuzzResult run_fuzz(const FuzzConfig& cfg);

}  // namespace dwrad
