#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dwrad/config.hpp"
#include "dwrad/core.hpp"
#include "dwrad/radii.hpp"

// Upper and lower bounds on the A-Davis-Wielandt radius. Every function
// returns a value on the dw scale (the square root of the dw^2 quantity the
// inequality is stated for), so results compare directly with DwResult::value.
namespace dwrad {

/// alpha-parameterized upper bound; alpha = 2 is the classical midpoint case.
double bound_theo1(const HermitianPSD& a, const Operator& s, Complex alpha,
                   const OptimizerConfig& cfg = {});
/// The alpha -> infinity limit of bound_theo1.
double bound_theo1_limit(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});
/// bound_theo1 at alpha = 2 minus twice the delta correction.
double bound_delta_refined(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});

struct LowerUpper {
  double lower = 0.0;
  double upper = 0.0;
};
/// Two-sided bound through the A-real and A-imaginary parts.
LowerUpper bounds_th3(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});

/// When (Re_A(S^#))^2 = Im_A(S^#) entrywise, returns
/// ||Re_A(S)||_A sqrt(1 + ||Re_A(S)||_A^2), which then equals w_A(S).
std::optional<double> omega_equality_case(const HermitianPSD& a, const Operator& s);

/// Crawford-corrected upper bound.
double bound_th11(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});

/// Rotation-family upper bound at angle theta.
double bound_th8(const HermitianPSD& a, const Operator& s, double theta, const OptimizerConfig& cfg = {});
/// Minimum of bound_th8 over `points` equally spaced angles in [0, 2pi).
double bound_th8_grid(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {},
                      int points = 64);

/// Lower bound from the rotated real part; radicand floored at 0.
double lower_th10(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});

/// Convex-combination bound with the mu/eta corrections, alpha in [0, 1].
double bound_th17(const HermitianPSD& a, const Operator& s, double alpha, const OptimizerConfig& cfg = {});
double bound_eq17(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});

/// min{beta, gamma} over an alpha grid of cfg.alpha_grid points.
double bound_thh1(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});
/// The alpha = 1 member of bound_thh1.
double bound_eq20(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});

/// Power-n upper bound, n >= 1.
double bound_th22(const HermitianPSD& a, const Operator& s, int n);
double bound_eq23(const HermitianPSD& a, const Operator& s);

/// Lower bound through the Crawford number of S and of S^#S:
/// max{c^2(S)(1 + ||S||^2), w^2(S)(1 + c(S^#S))}.
double lower_crawford(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});
/// Lower bound through the minimum A-modulus.
double lower_th44(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});

/// Prior-work bounds kept for comparison: eq3, eq10 (lower), eq11, eq18,
/// eq21, eq25, p03 (upper). Throws UnknownBoundId otherwise.
double competitor(std::string_view id, const HermitianPSD& a, const Operator& s,
                  const OptimizerConfig& cfg = {});
const std::vector<std::string>& competitor_ids();

enum class BoundKind { Upper, Lower };
const char* to_string(BoundKind kind);

struct BoundEntry {
  std::string bound_id;
  BoundKind kind = BoundKind::Upper;
  double value = 0.0;
  std::map<std::string, double> params;
  bool holds = true;
  /// |value^2 - dw^2|
  double slack = 0.0;
  /// Value depends on an optimizer-computed infimum (mu, eta or delta).
  bool optimizer_dependent = false;
  /// A negative radicand was floored at zero.
  bool floored = false;
};

/// A relation between two computed values that must hold on every input.
struct RelationCheck {
  std::string check_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double tol = 0.0;
  bool holds = true;
};

struct BoundReport {
  DwResult dw;
  std::vector<BoundEntry> entries;
  std::vector<RelationCheck> checks;
  /// Restart escalations performed while checking lower bounds.
  int escalations = 0;
  int mu_eta_negative_samples = 0;

  bool all_hold() const;
  const BoundEntry* find(std::string_view id) const;
};

inline constexpr double kBoundTolerance = 1e-6;

/// Evaluates every bound and the sandwich, and classifies each entry against
/// the dw enclosure. A lower bound above dw.value + tol triggers a rerun of
/// the dw optimizer with four times the restarts before it is declared
/// violated.
BoundReport bound_report(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});

}  // namespace dwrad
