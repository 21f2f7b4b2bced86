#include "dwrad/radii.hpp"

#include <algorithm>
#include <cmath>

#include "dwrad/classical.hpp"

namespace dwrad {

double a_op_norm(const HermitianPSD& a, const Operator& s) {
  return classical::spectral_norm(reduced_matrix(a, s));
}

double a_numerical_radius(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return classical::numerical_radius(reduced_matrix(a, s), cfg.theta_grid, cfg.refine_tol);
}

double a_crawford(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return classical::crawford_number(reduced_matrix(a, s), cfg.theta_grid, cfg.refine_tol);
}

double a_min_modulus(const HermitianPSD& a, const Operator& s) {
  return classical::min_singular_value(reduced_matrix(a, s));
}

DwResult dw_radius_reduced(const ReducedPair& pair, const OptimizerConfig& cfg) {
  const Matrix& t = pair.reduced;
  const classical::DwSearch search = classical::dw_radius(t, cfg);
  DwResult out;
  out.value = std::sqrt(std::max(0.0, search.value_sq));
  const double omega = classical::numerical_radius(t, cfg.theta_grid, cfg.refine_tol);
  const double norm = classical::spectral_norm(t);
  out.upper_cap = std::sqrt(omega * omega + std::pow(norm, 4));
  out.witness = pair.lift(search.witness);
  out.restarts_used = search.restarts_used;
  out.converged = search.converged;
  return out;
}

DwResult a_dw_radius(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return dw_radius_reduced(reduce(a, s), cfg);
}

double residual_inf(const HermitianPSD& a, const Vector& u, const Vector& v) {
  require_same_dim(a, u);
  require_same_dim(a, v);
  const double nv2 = std::pow(a_norm(a, v), 2);
  const double nu2 = std::pow(a_norm(a, u), 2);
  if (nv2 == 0.0) return std::sqrt(nu2);
  return std::sqrt(std::max(0.0, nu2 - std::norm(a_inner(a, u, v)) / nv2));
}

namespace reduced {

double residual_inf(const Vector& u, const Vector& v) {
  const double nv2 = v.squaredNorm();
  const double nu2 = u.squaredNorm();
  if (nv2 == 0.0) return std::sqrt(nu2);
  return std::sqrt(std::max(0.0, nu2 - std::norm(v.dot(u)) / nv2));
}

double mu_term(const Matrix& t, const Vector& y) {
  const Vector ty = t * y;
  const double n2 = ty.squaredNorm();
  if (n2 == 0.0) return 0.0;
  const double g = std::pow(residual_inf(ty, y), 2);
  return g - g * g / (4.0 * n2);
}

double delta(const Vector& a, const Vector& b, const Vector& c) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na * nb == 0.0) return 0.0;
  const double inner = std::abs(c.dot(a));
  const double bracket = inner * residual_inf(c, b) - 0.5 * residual_inf(a, b);
  return nb / na * bracket * bracket;
}

namespace {

// Points where the infima are typically attained: eigenvectors of t (the
// residual of t y against y vanishes there) and singular vectors of t.
std::vector<Vector> structural_candidates(const Matrix& t) {
  std::vector<Vector> out;
  Eigen::ComplexEigenSolver<Matrix> eig(t);
  if (eig.info() == Eigen::Success) {
    for (int k = 0; k < eig.eigenvectors().cols(); ++k) out.push_back(eig.eigenvectors().col(k));
  }
  Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeFullV);
  for (int k = 0; k < svd.matrixV().cols(); ++k) out.push_back(svd.matrixV().col(k));
  return out;
}

}  // namespace

MuEta mu_eta(const Matrix& t, const OptimizerConfig& cfg) {
  MuEta out;
  const Matrix ts = t.adjoint();
  auto counted = [&](const Matrix& m) {
    return [&out, &m](const Vector& y) {
      const double v = mu_term(m, y);
      if (v < 0.0) ++out.negative_samples;
      return v;
    };
  };
  out.mu = classical::minimize_on_sphere(counted(t), static_cast<int>(t.rows()),
                                         structural_candidates(t), cfg)
               .value;
  out.eta = classical::minimize_on_sphere(counted(ts), static_cast<int>(t.rows()),
                                          structural_candidates(ts), cfg)
                .value;
  return out;
}

double delta_inf(const Matrix& t, const OptimizerConfig& cfg) {
  const Matrix tst = t.adjoint() * t;
  auto fn = [&](const Vector& y) {
    const Vector ty = t * y;
    return delta(tst * y, ty, y);
  };
  std::vector<Vector> candidates = structural_candidates(t);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(tst);
  for (int k = 0; k < eig.eigenvectors().cols(); ++k) candidates.push_back(eig.eigenvectors().col(k));
  const double v = classical::minimize_on_sphere(fn, static_cast<int>(t.rows()), candidates, cfg).value;
  return std::max(0.0, v);
}

}  // namespace reduced

MuEta mu_eta(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return reduced::mu_eta(reduced_matrix(a, s), cfg);
}

double delta_inf(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return reduced::delta_inf(reduced_matrix(a, s), cfg);
}

}  // namespace dwrad
