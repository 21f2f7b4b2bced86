#include "dwrad/random.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace dwrad::rnd {

Matrix gaussian_matrix(int rows, int cols, std::uint64_t seed, double magnitude) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = magnitude * Complex(re, im);
    }
  }
  return m;
}

Vector gaussian_vector(int dim, std::uint64_t seed, double magnitude) {
  return gaussian_matrix(dim, 1, seed, magnitude).col(0);
}

Matrix random_psd(int dim, int deficit, std::uint64_t seed, double magnitude) {
  if (dim < 1 || deficit < 0 || deficit >= dim) {
    throw Error(ErrorCode::InvalidParam, "need 0 <= deficit < dim");
  }
  const Matrix g = gaussian_matrix(dim, dim, seed, magnitude);
  const Matrix h = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
  RealVector lambda = eig.eigenvalues().cwiseAbs().array() + 0.1 * magnitude;
  // Zero the smallest after the shift; sort indices by value.
  std::vector<int> order(dim);
  for (int i = 0; i < dim; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return lambda(x) < lambda(y); });
  for (int k = 0; k < deficit; ++k) lambda(order[k]) = 0.0;
  const Matrix& u = eig.eigenvectors();
  const Matrix a = u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
  return 0.5 * (a + a.adjoint());
}

Matrix random_unitary(int dim, std::uint64_t seed) {
  const Matrix g = gaussian_matrix(dim, dim, seed);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  // Fix the phases so the distribution does not depend on QR conventions.
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const double mod = std::abs(r(j, j));
    if (mod > 0.0) q.col(j) *= r(j, j) / mod;
  }
  return q;
}

Operator random_ba_operator(const HermitianPSD& a, std::uint64_t seed, double magnitude) {
  const int n = a.dim();
  const int r = a.rank();
  Matrix u(n, n);
  u.leftCols(r) = a.range_basis();
  u.rightCols(n - r) = a.kernel_basis();
  Matrix block = gaussian_matrix(n, n, seed, magnitude);
  block.topRightCorner(r, n - r).setZero();
  return u * block * u.adjoint();
}

}  // namespace dwrad::rnd
