#pragma once

#include "dwrad/config.hpp"
#include "dwrad/core.hpp"

namespace dwrad {

/// Enclosure of the A-Davis-Wielandt radius: value is attained by witness
/// (so it bounds the supremum from below), upper_cap is the analytic cap
/// sqrt(w_A(S)^2 + ||S||_A^4).
struct DwResult {
  double value = 0.0;
  double upper_cap = 0.0;
  Vector witness;
  int restarts_used = 0;
  bool converged = false;
};

/// sup ||Sz||_A over the unit A-sphere.
double a_op_norm(const HermitianPSD& a, const Operator& s);

/// sup |<Sz, z>_A| over the unit A-sphere.
double a_numerical_radius(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});

/// inf |<Sz, z>_A| over the unit A-sphere.
double a_crawford(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});

/// inf ||Sz||_A over the unit A-sphere.
double a_min_modulus(const HermitianPSD& a, const Operator& s);

DwResult a_dw_radius(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});

/// Same as a_dw_radius for an already reduced pair.
DwResult dw_radius_reduced(const ReducedPair& pair, const OptimizerConfig& cfg = {});

/// inf over complex lambda of ||u - lambda v||_A, in closed form.
double residual_inf(const HermitianPSD& a, const Vector& u, const Vector& v);

struct MuEta {
  double mu = 0.0;
  double eta = 0.0;
  /// Samples where the bracketed term came out negative; expected zero.
  int negative_samples = 0;
};

/// The two refinement infima (over the unit A-sphere) of
///   g(z) - g(z)^2 / (4 ||Sz||_A^2),  g(z) = inf_lambda ||Sz - lambda z||_A^2,
/// for S (mu) and for S^{#A} (eta). Upper approximations of the infima.
MuEta mu_eta(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});

/// inf over the unit A-sphere of delta(S^{#A}S z, S z, z). Upper approximation.
double delta_inf(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});

// Reduced-space kernels behind the functions above. t is the reduced matrix;
// the A-adjoint corresponds to t.adjoint().
namespace reduced {

double residual_inf(const Vector& u, const Vector& v);
double mu_term(const Matrix& t, const Vector& y);
/// delta(a, b, c) of the refined Buzano-type inequality, Euclidean inner product.
double delta(const Vector& a, const Vector& b, const Vector& c);
MuEta mu_eta(const Matrix& t, const OptimizerConfig& cfg);
double delta_inf(const Matrix& t, const OptimizerConfig& cfg);

}  // namespace reduced

}  // namespace dwrad
