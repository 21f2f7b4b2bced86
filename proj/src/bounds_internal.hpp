#pragma once

#include <optional>
#include <string_view>

#include "dwrad/bounds.hpp"

// Reduced-space evaluation of every bound. The reduction is multiplicative
// and maps S^{#A} to T^*, so each A-quantity of a word in S and S^{#A} is the
// classical quantity of the same word in T and T^*.
namespace dwrad::detail {

struct BoundContext {
  BoundContext(const Matrix& reduced, const OptimizerConfig& config);

  Matrix t;
  Matrix ts;
  /// T^* T and T T^*
  Matrix p;
  Matrix q;
  Matrix re;
  Matrix im;
  Matrix id;
  OptimizerConfig cfg;
  double norm = 0.0;
  double omega = 0.0;

  double w(const Matrix& m) const;
  double c(const Matrix& m) const;
  double n(const Matrix& m) const;
  const MuEta& mu_eta() const;
  double delta() const;

 private:
  mutable std::optional<MuEta> mu_eta_;
  mutable std::optional<double> delta_;
};

/// sqrt, or 0 with *floored set for a negative radicand.
double root(double squared, bool* floored);

double theo1(const BoundContext& ctx, Complex alpha);
double theo1_limit(const BoundContext& ctx);
double delta_refined(const BoundContext& ctx, bool* floored);
LowerUpper th3(const BoundContext& ctx);
double th11(const BoundContext& ctx, bool* floored);
double th8(const BoundContext& ctx, double theta);
double th8_grid(const BoundContext& ctx, int points);
double th10(const BoundContext& ctx, bool* floored);
double th17(const BoundContext& ctx, double alpha, bool* floored);
double thh1(const BoundContext& ctx, bool* floored);
double eq20(const BoundContext& ctx);
double th22(const BoundContext& ctx, int n);
double crawford_lower(const BoundContext& ctx);
double th44(const BoundContext& ctx);
double competitor(const BoundContext& ctx, std::string_view id);

}  // namespace dwrad::detail
