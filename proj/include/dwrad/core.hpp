#pragma once

#include "dwrad/types.hpp"

namespace dwrad {

/// A validated positive semidefinite weight A with every derived matrix the
/// semi-Hilbertian machinery needs. Immutable once built; share freely.
class HermitianPSD {
 public:
  int dim() const { return static_cast<int>(matrix_.rows()); }
  int rank() const { return rank_; }
  double rank_tol() const { return rank_tol_; }

  const Matrix& matrix() const { return matrix_; }
  /// Eigenvalues in descending order, discarded ones clamped to exactly 0.
  const RealVector& eigenvalues() const { return eigenvalues_; }
  const Matrix& eigenvectors() const { return eigenvectors_; }
  const Matrix& sqrt() const { return sqrt_; }
  const Matrix& pinv() const { return pinv_; }
  const Matrix& pinv_sqrt() const { return pinv_sqrt_; }
  /// n x r, orthonormal columns spanning range(A).
  const Matrix& range_basis() const { return range_basis_; }
  /// n x (n - r), orthonormal columns spanning N(A).
  const Matrix& kernel_basis() const { return kernel_basis_; }
  /// Orthogonal projection P onto range(A).
  Matrix range_projection() const { return range_basis_ * range_basis_.adjoint(); }

  /// The only way to build one: see validate_psd.
  friend HermitianPSD validate_psd(const Matrix& m, double rank_tol_scale);

 private:
  HermitianPSD() = default;

  Matrix matrix_;
  RealVector eigenvalues_;
  Matrix eigenvectors_;
  int rank_ = 0;
  double rank_tol_ = 0.0;
  Matrix sqrt_;
  Matrix pinv_;
  Matrix pinv_sqrt_;
  Matrix range_basis_;
  Matrix kernel_basis_;
};

inline constexpr double kDefaultRankTolScale = 1e-12;

/// Validates M as a Hermitian PSD weight. The rank threshold is
/// rank_tol_scale * n * max|lambda|; eigenvalues under it are clamped to 0
/// before A^{1/2}, A^+ and A^{+1/2} are formed.
/// Throws NotHermitian, NotPSD or ZeroWeight.
HermitianPSD validate_psd(const Matrix& m, double rank_tol_scale = kDefaultRankTolScale);

/// <x, z>_A = <Ax, z>, linear in x and conjugate-linear in z.
Complex a_inner(const HermitianPSD& a, const Vector& x, const Vector& z);
double a_norm(const HermitianPSD& a, const Vector& z);

/// S admits an A-adjoint iff S maps N(A) into N(A) (finite dimensions).
bool admits_a_adjoint(const HermitianPSD& a, const Operator& s);

/// S^{#A} = A^+ S^* A. Throws NotInBA when S does not admit one.
Operator a_adjoint(const HermitianPSD& a, const Operator& s);

/// (S + S^{#A}) / 2
Operator re_part(const HermitianPSD& a, const Operator& s);
/// (S - S^{#A}) / 2i
Operator im_part(const HermitianPSD& a, const Operator& s);

/// A S is Hermitian (within tol, relative to ||A|| ||S||).
bool is_a_selfadjoint(const HermitianPSD& a, const Operator& s, double tol = 1e-10);
/// A S is Hermitian positive semidefinite (within tol, relative).
bool is_a_positive(const HermitianPSD& a, const Operator& s, double tol = 1e-10);

/// The r x r compression of S onto range(A) in A-orthonormal coordinates.
/// For z with ||z||_A = 1 and y = V^* A^{1/2} z:
///   <Sz, z>_A = <T y, y>  and  ||Sz||_A = ||T y||,
/// and z -> y maps onto the unit sphere of C^r.
struct ReducedPair {
  HermitianPSD weight;
  Matrix reduced;

  /// z = A^{+1/2} V y, a vector of unit A-norm when ||y|| = 1.
  Vector lift(const Vector& y) const;
  /// y = V^* A^{1/2} z.
  Vector project(const Vector& z) const;
};

ReducedPair reduce(const HermitianPSD& a, const Operator& s);

/// The reduced matrix only; cheaper when the weight copy is not needed.
Matrix reduced_matrix(const HermitianPSD& a, const Operator& s);

void require_same_dim(const HermitianPSD& a, const Operator& s);
void require_same_dim(const HermitianPSD& a, const Vector& x);

}  // namespace dwrad
