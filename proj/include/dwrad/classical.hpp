#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dwrad/config.hpp"
#include "dwrad/types.hpp"

// Classical (unweighted) quantities of a plain square matrix T. The weighted
// quantities are these same functions applied to the reduced matrix.
namespace dwrad::classical {

/// (lambda_min, lambda_max) of a Hermitian matrix.
std::pair<double, double> extreme_eigenvalues(const Matrix& h);

double spectral_norm(const Matrix& t);
double min_singular_value(const Matrix& t);

/// max over theta of lambda_max(Re(e^{i theta} T)), grid scan then
/// golden-section refinement.
double numerical_radius(const Matrix& t, int theta_grid, double refine_tol);

/// max(0, max over theta of lambda_min(Re(e^{i theta} T))): distance from 0
/// to the numerical range.
double crawford_number(const Matrix& t, int theta_grid, double refine_tol);

/// f(y) = |<Ty, y>|^2 + ||Ty||^4.
double dw_objective(const Matrix& t, const Vector& y);

struct DwSearch {
  double value_sq = 0.0;
  Vector witness;
  int restarts_used = 0;
  bool converged = false;
};

/// Multistart projected gradient ascent of dw_objective on the unit sphere.
/// Starts are the top eigenvectors of a support-function scan over the
/// Davis-Wielandt shell plus cfg.restarts seeded uniform samples; for
/// dimension <= 2 a dense two-angle grid is also evaluated.
DwSearch dw_radius(const Matrix& t, const OptimizerConfig& cfg);

/// Dense (t, phi) grid over y = (cos t, e^{i phi} sin t) with zoom
/// refinement. Maximizes fn; dimension must be 2.
std::pair<double, Vector> two_angle_max(const std::function<double(const Vector&)>& fn);

using SphereFn = std::function<double(const Vector&)>;

struct SphereMin {
  double value = 0.0;
  Vector point;
};

/// Minimizes fn over the unit sphere of C^dim: every candidate is evaluated,
/// seeded random samples are added, and the best few are polished by
/// finite-difference projected descent. The result is an upper
/// approximation of the infimum.
SphereMin minimize_on_sphere(const SphereFn& fn, int dim, const std::vector<Vector>& candidates,
                             const OptimizerConfig& cfg);

/// Uniformly distributed unit vector in C^dim from a seed.
Vector random_unit_vector(int dim, std::uint64_t seed);

}  // namespace dwrad::classical
