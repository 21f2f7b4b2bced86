#include "dwrad/core.hpp"

#include <algorithm>
#include <cmath>

namespace dwrad {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInBA: return "NotInBA";
    case ErrorCode::InvalidParam: return "InvalidParam";
    case ErrorCode::UnknownBoundId: return "UnknownBoundId";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::NotAPositive: return "NotAPositive";
    case ErrorCode::NotAUnitary: return "NotAUnitary";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

namespace {

constexpr double kHermitianTol = 1e-10;

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

}  // namespace

HermitianPSD validate_psd(const Matrix& m, double rank_tol_scale) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "weight must be a non-empty square matrix");
  }
  if (!(rank_tol_scale > 0.0)) {
    throw Error(ErrorCode::InvalidParam, "rank_tol_scale must be positive");
  }
  const int n = static_cast<int>(m.rows());
  const double scale = m.cwiseAbs().maxCoeff();
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol * std::max(scale, 1e-300)) {
    throw Error(ErrorCode::NotHermitian, "asymmetry " + std::to_string(asym));
  }

  HermitianPSD a;
  a.matrix_ = (m + m.adjoint()) / 2.0;

  Eigen::SelfAdjointEigenSolver<Matrix> eig(a.matrix_);
  // Eigen returns ascending order; flip to descending.
  const RealVector asc = eig.eigenvalues();
  const Matrix vecs = eig.eigenvectors();
  a.eigenvalues_.resize(n);
  a.eigenvectors_.resize(n, n);
  for (int i = 0; i < n; ++i) {
    a.eigenvalues_(i) = asc(n - 1 - i);
    a.eigenvectors_.col(i) = vecs.col(n - 1 - i);
  }

  const double lambda_max = a.eigenvalues_.cwiseAbs().maxCoeff();
  a.rank_tol_ = rank_tol_scale * n * lambda_max;
  if (a.eigenvalues_(n - 1) < -a.rank_tol_) {
    throw Error(ErrorCode::NotPSD, "eigenvalue " + std::to_string(a.eigenvalues_(n - 1)));
  }
  if (lambda_max == 0.0 || a.eigenvalues_(0) <= a.rank_tol_) {
    throw Error(ErrorCode::ZeroWeight, "all eigenvalues are below the rank threshold");
  }

  int r = 0;
  for (int i = 0; i < n; ++i) {
    if (a.eigenvalues_(i) > a.rank_tol_) {
      ++r;
    } else {
      a.eigenvalues_(i) = 0.0;
    }
  }
  a.rank_ = r;

  RealVector root = RealVector::Zero(n);
  RealVector inv = RealVector::Zero(n);
  RealVector inv_root = RealVector::Zero(n);
  for (int i = 0; i < r; ++i) {
    root(i) = std::sqrt(a.eigenvalues_(i));
    inv(i) = 1.0 / a.eigenvalues_(i);
    inv_root(i) = 1.0 / root(i);
  }
  const Matrix& u = a.eigenvectors_;
  a.sqrt_ = u * root.cast<Complex>().asDiagonal() * u.adjoint();
  a.pinv_ = u * inv.cast<Complex>().asDiagonal() * u.adjoint();
  a.pinv_sqrt_ = u * inv_root.cast<Complex>().asDiagonal() * u.adjoint();
  a.range_basis_ = u.leftCols(r);
  a.kernel_basis_ = u.rightCols(n - r);
  return a;
}

void require_same_dim(const HermitianPSD& a, const Operator& s) {
  if (s.rows() != a.dim() || s.cols() != a.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "operator is " + std::to_string(s.rows()) + "x" + std::to_string(s.cols()) +
                    ", weight is " + std::to_string(a.dim()));
  }
}

void require_same_dim(const HermitianPSD& a, const Vector& x) {
  if (x.size() != a.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector has length " + std::to_string(x.size()) + ", weight is " +
                    std::to_string(a.dim()));
  }
}

Complex a_inner(const HermitianPSD& a, const Vector& x, const Vector& z) {
  require_same_dim(a, x);
  require_same_dim(a, z);
  // Eigen's dot conjugates its left operand: z.dot(Ax) = z^* A x.
  return z.dot(a.matrix() * x);
}

double a_norm(const HermitianPSD& a, const Vector& z) {
  require_same_dim(a, z);
  return (a.sqrt() * z).norm();
}

bool admits_a_adjoint(const HermitianPSD& a, const Operator& s) {
  require_same_dim(a, s);
  const Matrix& kernel = a.kernel_basis();
  if (kernel.cols() == 0) return true;
  const double threshold = a.rank_tol() * spectral_norm(s) * a.dim();
  const Matrix leak = a.matrix() * s * kernel;
  for (int k = 0; k < leak.cols(); ++k) {
    if (leak.col(k).norm() > threshold) return false;
  }
  return true;
}

Operator a_adjoint(const HermitianPSD& a, const Operator& s) {
  if (!admits_a_adjoint(a, s)) {
    throw Error(ErrorCode::NotInBA, "S does not map N(A) into N(A)");
  }
  return a.pinv() * s.adjoint() * a.matrix();
}

Operator re_part(const HermitianPSD& a, const Operator& s) {
  return (s + a_adjoint(a, s)) / 2.0;
}

Operator im_part(const HermitianPSD& a, const Operator& s) {
  return (s - a_adjoint(a, s)) / Complex(0.0, 2.0);
}

bool is_a_selfadjoint(const HermitianPSD& a, const Operator& s, double tol) {
  require_same_dim(a, s);
  const Matrix as = a.matrix() * s;
  const double scale = std::max(a.matrix().norm() * s.norm(), 1e-300);
  return (as - as.adjoint()).norm() <= tol * scale;
}

bool is_a_positive(const HermitianPSD& a, const Operator& s, double tol) {
  if (!is_a_selfadjoint(a, s, tol)) return false;
  const Matrix as = a.matrix() * s;
  const Matrix herm = (as + as.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(herm, Eigen::EigenvaluesOnly);
  const double scale = std::max(a.matrix().norm() * s.norm(), 1e-300);
  return eig.eigenvalues()(0) >= -tol * scale;
}

Matrix reduced_matrix(const HermitianPSD& a, const Operator& s) {
  if (!admits_a_adjoint(a, s)) {
    throw Error(ErrorCode::NotInBA, "S does not map N(A) into N(A)");
  }
  const Matrix& v = a.range_basis();
  return v.adjoint() * a.sqrt() * s * a.pinv_sqrt() * v;
}

ReducedPair reduce(const HermitianPSD& a, const Operator& s) {
  return ReducedPair{a, reduced_matrix(a, s)};
}

Vector ReducedPair::lift(const Vector& y) const {
  return weight.pinv_sqrt() * (weight.range_basis() * y);
}

Vector ReducedPair::project(const Vector& z) const {
  return weight.range_basis().adjoint() * (weight.sqrt() * z);
}

}  // namespace dwrad
