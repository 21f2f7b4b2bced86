#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

Matrix sphere_map(const Matrix& a, double tol) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double cut = tol * std::max(1.0, sv(0));
  int r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  Matrix out(a.rows(), r);
  for (int k = 0; k < r; ++k) out.col(k) = svd.matrixU().col(k) / std::sqrt(sv(k));
  return out;
}

Matrix adjoint_lsq(const Matrix& a, const Matrix& s) {
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
  cod.setThreshold(1e-12);
  return cod.solve(s.adjoint() * a);
}

Complex inner_a(const Matrix& a, const Vector& x, const Vector& z) { return z.dot(a * x); }

double norm_a(const Matrix& a, const Vector& z) { return std::sqrt(std::max(0.0, inner_a(a, z, z).real())); }

double dw_objective(const Matrix& a, const Matrix& s, const Vector& z) {
  const Vector sz = s * z;
  const double n2 = inner_a(a, sz, sz).real();
  return std::norm(inner_a(a, sz, z)) + n2 * n2;
}

namespace {

Vector point(double t, double phi) {
  Vector y(2);
  y << std::cos(t), std::polar(std::sin(t), phi);
  return y;
}

double zoom_max(const std::function<double(const Vector&)>& g, int nt, int np) {
  const double pi = std::numbers::pi;
  struct Cell {
    double v, t, phi;
  };
  std::vector<Cell> cells;
  for (int i = 0; i <= nt; ++i) {
    const double t = 0.5 * pi * i / nt;
    for (int j = 0; j < np; ++j) {
      const double phi = 2.0 * pi * j / np;
      cells.push_back({g(point(t, phi)), t, phi});
    }
  }
  const std::size_t keep = std::min<std::size_t>(6, cells.size());
  std::partial_sort(cells.begin(), cells.begin() + keep, cells.end(),
                    [](const Cell& x, const Cell& y) { return x.v > y.v; });
  double best = cells[0].v;
  for (std::size_t c = 0; c < keep; ++c) {
    double t0 = cells[c].t;
    double p0 = cells[c].phi;
    double v0 = cells[c].v;
    double ht = 0.5 * pi / nt;
    double hp = 2.0 * pi / np;
    for (int it = 0; it < 60; ++it) {
      double bt = t0;
      double bp = p0;
      for (int i = -5; i <= 5; ++i) {
        for (int j = -5; j <= 5; ++j) {
          const double t = std::clamp(t0 + ht * i / 5.0, 0.0, 0.5 * pi);
          const double phi = p0 + hp * j / 5.0;
          const double v = g(point(t, phi));
          if (v > v0) {
            v0 = v;
            bt = t;
            bp = phi;
          }
        }
      }
      t0 = bt;
      p0 = bp;
      ht *= 0.5;
      hp *= 0.5;
    }
    best = std::max(best, v0);
  }
  return best;
}

template <typename F>
double over_sphere_max(const Matrix& a, F&& f) {
  const Matrix map = sphere_map(a);
  if (map.cols() == 1) return f(Vector(map.col(0)));
  if (map.cols() != 2) throw std::invalid_argument("oracle grid needs rank 1 or 2");
  return two_angle_max([&](const Vector& y) { return f(Vector(map * y)); });
}

template <typename F>
double over_sphere_min(const Matrix& a, F&& f) {
  const Matrix map = sphere_map(a);
  if (map.cols() == 1) return f(Vector(map.col(0)));
  if (map.cols() != 2) throw std::invalid_argument("oracle grid needs rank 1 or 2");
  return two_angle_min([&](const Vector& y) { return f(Vector(map * y)); });
}

Vector random_sphere_point(const Matrix& map, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector y(map.cols());
  for (int i = 0; i < y.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    y(i) = Complex(re, im);
  }
  return map * (y / y.norm());
}

}  // namespace

double two_angle_max(const std::function<double(const Vector&)>& g, int nt, int np) { return zoom_max(g, nt, np); }

double two_angle_min(const std::function<double(const Vector&)>& g, int nt, int np) {
  return -zoom_max([&](const Vector& y) { return -g(y); }, nt, np);
}

double dw_grid(const Matrix& a, const Matrix& s) {
  return std::sqrt(over_sphere_max(a, [&](const Vector& z) { return dw_objective(a, s, z); }));
}

double omega_grid(const Matrix& a, const Matrix& s) {
  return over_sphere_max(a, [&](const Vector& z) { return std::abs(inner_a(a, s * z, z)); });
}

double crawford_grid(const Matrix& a, const Matrix& s) {
  return over_sphere_min(a, [&](const Vector& z) { return std::abs(inner_a(a, s * z, z)); });
}

double dw_sampled(const Matrix& a, const Matrix& s, int samples, std::uint64_t seed) {
  const Matrix map = sphere_map(a);
  std::mt19937_64 rng(seed);
  double best = 0.0;
  for (int k = 0; k < samples; ++k) best = std::max(best, dw_objective(a, s, random_sphere_point(map, rng)));
  return std::sqrt(best);
}

double omega_sampled(const Matrix& a, const Matrix& s, int samples, std::uint64_t seed) {
  const Matrix map = sphere_map(a);
  std::mt19937_64 rng(seed);
  double best = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Vector z = random_sphere_point(map, rng);
    best = std::max(best, std::abs(inner_a(a, s * z, z)));
  }
  return best;
}

double norm_pencil(const Matrix& a, const Matrix& s) {
  const Matrix map = sphere_map(a);
  const Matrix g = map.adjoint() * s.adjoint() * a * s * map;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (g + g.adjoint()), Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));
}

}  // namespace oracle
