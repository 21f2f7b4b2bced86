#include "dwrad/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace dwrad::classical {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvPhi = 0.6180339887498949;
constexpr int kSupportDirections = 256;
constexpr int kSupportSeeds = 4;
constexpr int kSupportScan = 64;
constexpr int kSupportEvalCap = 20000;

struct HermitianParts {
  Matrix re;  // (T + T^*) / 2
  Matrix im;  // (T - T^*) / 2i
};

HermitianParts hermitian_parts(const Matrix& t) {
  return {(t + t.adjoint()) / 2.0, (t - t.adjoint()) / Complex(0.0, 2.0)};
}

// Maximizes g on [lo, hi] by golden-section search.
template <typename F>
double golden_max(F&& g, double lo, double hi, double tol) {
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double gc = g(c);
  double gd = g(d);
  double best = std::max(gc, gd);
  for (int it = 0; it < 200 && (b - a) > tol; ++it) {
    if (gc > gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - kInvPhi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + kInvPhi * (b - a);
      gd = g(d);
    }
    best = std::max(best, std::max(gc, gd));
  }
  return best;
}

// Max over theta of g(theta), g 2pi-periodic: grid scan, then golden-section
// refinement around the three highest local maxima.
template <typename F>
double periodic_max(F&& g, int grid, double tol) {
  std::vector<double> vals(grid);
  const double step = kTwoPi / grid;
  for (int k = 0; k < grid; ++k) vals[k] = g(k * step);

  std::vector<int> peaks;
  for (int k = 0; k < grid; ++k) {
    const double prev = vals[(k + grid - 1) % grid];
    const double next = vals[(k + 1) % grid];
    if (vals[k] >= prev && vals[k] >= next) peaks.push_back(k);
  }
  std::sort(peaks.begin(), peaks.end(), [&](int x, int y) { return vals[x] > vals[y]; });
  double best = *std::max_element(vals.begin(), vals.end());
  const int refine = std::min<int>(3, static_cast<int>(peaks.size()));
  for (int i = 0; i < refine; ++i) {
    const double center = peaks[i] * step;
    best = std::max(best, golden_max(g, center - step, center + step, tol));
  }
  return best;
}

// Apex of the two support lines <x, e^{ia}> = ha and <x, e^{ib}> = hb. The
// numerical range lies in the wedge they cut out, so on [a, b] the support
// function is at most the support of the apex.
double wedge_bound(double a, double ha, double b, double hb) {
  const double det = std::sin(b - a);
  const double u = (ha * std::sin(b) - hb * std::sin(a)) / det;
  const double v = (hb * std::cos(a) - ha * std::cos(b)) / det;
  const double arg = std::atan2(v, u);
  double rel = std::remainder(arg - a, kTwoPi);
  if (rel < 0.0) rel += kTwoPi;
  if (rel <= b - a) return std::hypot(u, v);
  return std::max(ha, hb);
}

// Max of the support function h of a numerical range: scan `grid` angles,
// then bisect every bracket whose wedge bound exceeds the incumbent by more
// than tol (relative), so the result is within tolerance of the true max.
template <typename F>
double support_max(F&& h, int grid, double tol, double scale) {
  struct Bracket {
    double a, ha, b, hb;
  };
  const double step = kTwoPi / grid;
  std::vector<double> vals(grid + 1);
  for (int k = 0; k < grid; ++k) vals[k] = h(k * step);
  vals[grid] = vals[0];
  double best = *std::max_element(vals.begin(), vals.end());
  const double slack_abs = 64.0 * std::numeric_limits<double>::epsilon() * scale;

  std::vector<Bracket> open;
  for (int k = 0; k < grid; ++k) open.push_back({k * step, vals[k], (k + 1) * step, vals[k + 1]});
  int evals = 0;
  while (!open.empty() && evals < kSupportEvalCap) {
    std::vector<Bracket> next;
    for (const Bracket& br : open) {
      const double bound = wedge_bound(br.a, br.ha, br.b, br.hb);
      if (bound <= best + tol * std::abs(best) + slack_abs) continue;
      if (br.b - br.a < 1e-13) continue;
      const double mid = 0.5 * (br.a + br.b);
      const double hm = h(mid);
      ++evals;
      best = std::max(best, hm);
      next.push_back({br.a, br.ha, mid, hm});
      next.push_back({mid, hm, br.b, br.hb});
    }
    open.swap(next);
  }
  return best;
}

// Hermitian up to rounding, as products like T^* T come out.
bool is_hermitian(const Matrix& t) {
  const double scale = t.cwiseAbs().maxCoeff();
  return (t - t.adjoint()).cwiseAbs().maxCoeff() <= 1e-14 * scale;
}

Vector normalized(const Vector& y) { return y / y.norm(); }

struct DwTerms {
  Complex p;
  double q;
  Vector ty;
  Vector tsy;
  Vector hy;
};

DwTerms dw_terms(const Matrix& t, const Matrix& h, const Vector& y) {
  DwTerms d;
  d.ty = t * y;
  d.tsy = t.adjoint() * y;
  d.hy = h * y;
  d.p = y.dot(d.ty);
  d.q = y.dot(d.hy).real();
  return d;
}

double dw_value(const Matrix& t, const Vector& y) {
  const Vector ty = t * y;
  const Complex p = y.dot(ty);
  const double q = ty.squaredNorm();
  return std::norm(p) + q * q;
}

// Projected gradient ascent with backtracking; y is updated in place.
// Returns the final objective; converged is set when the tangential gradient
// vanishes or no ascent step is found at working precision.
double ascend(const Matrix& t, const Matrix& h, Vector& y, int max_iters, double tol,
              bool& converged) {
  converged = false;
  double f = dw_value(t, y);
  double step = 1.0;
  for (int it = 0; it < max_iters; ++it) {
    const DwTerms d = dw_terms(t, h, y);
    const Vector g = 2.0 * (d.p * d.tsy + std::conj(d.p) * d.ty + 2.0 * d.q * d.hy);
    const Vector gt = g - y.dot(g).real() * y;
    const double gn = gt.norm();
    if (gn <= tol * (1.0 + std::abs(f))) {
      converged = true;
      break;
    }
    double s = step / gn;
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      const Vector cand = normalized(y + s * gt);
      const double fc = dw_value(t, cand);
      if (fc > f + 1e-4 * s * gn * gn) {
        y = cand;
        f = fc;
        accepted = true;
        break;
      }
      s *= 0.5;
    }
    if (!accepted) {
      converged = true;
      break;
    }
    step = std::min(2.0 * s * gn, 10.0);
  }
  return f;
}

std::vector<Vector> fibonacci_directions(int count) {
  std::vector<Vector> dirs;
  dirs.reserve(count);
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / count;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = i * golden_angle;
    Vector u(3);
    u << rho * std::cos(phi), rho * std::sin(phi), z;
    dirs.push_back(u);
  }
  return dirs;
}

}  // namespace

std::pair<double, double> extreme_eigenvalues(const Matrix& h) {
  const auto n = h.rows();
  if (n == 1) {
    const double v = h(0, 0).real();
    return {v, v};
  }
  if (n == 2) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double mid = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
    return {mid - rad, mid + rad};
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h, Eigen::EigenvaluesOnly);
  return {eig.eigenvalues()(0), eig.eigenvalues()(n - 1)};
}

double spectral_norm(const Matrix& t) {
  if (t.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(t);
  return svd.singularValues()(0);
}

double min_singular_value(const Matrix& t) {
  if (t.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(t);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

double numerical_radius(const Matrix& t, int theta_grid, double refine_tol) {
  if (t.rows() == 1) return std::abs(t(0, 0));
  if (is_hermitian(t)) {
    const auto [lo, hi] = extreme_eigenvalues(hermitian_parts(t).re);
    return std::max(std::abs(lo), std::abs(hi));
  }
  const HermitianParts parts = hermitian_parts(t);
  auto h = [&](double theta) {
    const Matrix m = std::cos(theta) * parts.re + std::sin(theta) * parts.im;
    return extreme_eigenvalues(m).second;
  };
  return std::max(0.0, support_max(h, std::clamp(theta_grid, 16, kSupportScan), refine_tol,
                                   parts.re.norm() + parts.im.norm()));
}

double crawford_number(const Matrix& t, int theta_grid, double refine_tol) {
  if (t.rows() == 1) return std::abs(t(0, 0));
  if (is_hermitian(t)) {
    // The numerical range is the interval [lo, hi].
    const auto [lo, hi] = extreme_eigenvalues(hermitian_parts(t).re);
    return lo > 0.0 ? lo : (hi < 0.0 ? -hi : 0.0);
  }
  const HermitianParts parts = hermitian_parts(t);
  auto g = [&](double theta) {
    const Matrix m = std::cos(theta) * parts.re + std::sin(theta) * parts.im;
    return extreme_eigenvalues(m).first;
  };
  return std::max(0.0, periodic_max(g, theta_grid, refine_tol));
}

double dw_objective(const Matrix& t, const Vector& y) { return dw_value(t, y); }

Vector random_unit_vector(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector y(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    y(i) = Complex(re, im);
  }
  return normalized(y);
}

std::pair<double, Vector> two_angle_max(const std::function<double(const Vector&)>& fn) {
  constexpr int kT = 97;
  constexpr int kPhi = 192;
  const double half_pi = std::numbers::pi / 2.0;
  auto point = [](double t, double phi) {
    Vector y(2);
    y << Complex(std::cos(t), 0.0), std::polar(std::sin(t), phi);
    return y;
  };

  struct Cell {
    double value;
    double t;
    double phi;
  };
  std::vector<Cell> cells;
  cells.reserve(kT * kPhi);
  const double dt = half_pi / (kT - 1);
  const double dphi = kTwoPi / kPhi;
  for (int i = 0; i < kT; ++i) {
    for (int j = 0; j < kPhi; ++j) {
      const double t = i * dt;
      const double phi = j * dphi;
      cells.push_back({fn(point(t, phi)), t, phi});
    }
  }
  const int keep = 6;
  std::partial_sort(cells.begin(), cells.begin() + keep, cells.end(),
                    [](const Cell& a, const Cell& b) { return a.value > b.value; });

  Cell best = cells.front();
  for (int c = 0; c < keep; ++c) {
    Cell cur = cells[c];
    double ht = dt;
    double hp = dphi;
    // Compass search: move to the best neighbour, halve the stencil when the
    // centre wins.
    for (int it = 0; it < 400 && (ht > 1e-11 || hp > 1e-11); ++it) {
      Cell cand = cur;
      for (int di = -1; di <= 1; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const double t = std::clamp(cur.t + di * ht, 0.0, half_pi);
          const double phi = cur.phi + dj * hp;
          const double v = fn(point(t, phi));
          if (v > cand.value) cand = {v, t, phi};
        }
      }
      if (cand.value > cur.value) {
        cur = cand;
      } else {
        ht *= 0.5;
        hp *= 0.5;
      }
    }
    if (cur.value > best.value) best = cur;
  }
  return {best.value, point(best.t, best.phi)};
}

DwSearch dw_radius(const Matrix& t, const OptimizerConfig& cfg) {
  const int r = static_cast<int>(t.rows());
  DwSearch out;
  if (r == 1) {
    out.witness = Vector::Ones(1);
    out.value_sq = dw_value(t, out.witness);
    out.converged = true;
    return out;
  }

  const HermitianParts parts = hermitian_parts(t);
  const Matrix h = t.adjoint() * t;

  // Support function of the Davis-Wielandt shell in direction u is
  // lambda_max(u0 Re T + u1 Im T + u2 T^*T); its top eigenvectors are good
  // global starting points.
  std::vector<std::pair<double, Vector>> support;
  for (const Vector& u : fibonacci_directions(kSupportDirections)) {
    const Matrix m = u(0).real() * parts.re + u(1).real() * parts.im + u(2).real() * h;
    support.emplace_back(extreme_eigenvalues(m).second, u);
  }
  std::partial_sort(support.begin(), support.begin() + kSupportSeeds, support.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<Vector> starts;
  for (int k = 0; k < kSupportSeeds; ++k) {
    const Vector& u = support[k].second;
    const Matrix m = u(0).real() * parts.re + u(1).real() * parts.im + u(2).real() * h;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
    starts.push_back(eig.eigenvectors().col(r - 1));
  }
  for (int k = 0; k < cfg.restarts; ++k) {
    starts.push_back(random_unit_vector(r, derive_seed(cfg.seed, static_cast<std::uint64_t>(k))));
  }

  out.value_sq = -1.0;
  for (Vector y : starts) {
    bool conv = false;
    const double f = ascend(t, h, y, cfg.max_iters, 1e-10, conv);
    ++out.restarts_used;
    if (f > out.value_sq) {
      out.value_sq = f;
      out.witness = y;
      out.converged = conv;
    }
  }

  if (r == 2) {
    auto [grid_val, grid_y] = two_angle_max([&](const Vector& y) { return dw_value(t, y); });
    if (grid_val > out.value_sq) {
      out.value_sq = grid_val;
      out.witness = grid_y;
    }
    // The grid pins down the global maximum for r = 2.
    out.converged = true;
  }
  return out;
}

SphereMin minimize_on_sphere(const SphereFn& fn, int dim, const std::vector<Vector>& candidates,
                             const OptimizerConfig& cfg) {
  SphereMin best;
  if (dim == 1) {
    best.point = Vector::Ones(1);
    best.value = fn(best.point);
    return best;
  }

  std::vector<std::pair<double, Vector>> pool;
  for (const Vector& c : candidates) {
    if (c.norm() > 0.0) {
      const Vector y = normalized(c);
      pool.emplace_back(fn(y), y);
    }
  }
  for (int k = 0; k < cfg.restarts; ++k) {
    const Vector y = random_unit_vector(dim, derive_seed(cfg.seed ^ 0x9e37u, static_cast<std::uint64_t>(k)));
    pool.emplace_back(fn(y), y);
  }
  const int polish = std::min<int>(8, static_cast<int>(pool.size()));
  std::partial_sort(pool.begin(), pool.begin() + polish, pool.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });

  best.value = pool.front().first;
  best.point = pool.front().second;

  const double fd = 1e-7;
  const int iters = std::min(cfg.max_iters, 200);
  for (int c = 0; c < polish; ++c) {
    Vector y = pool[c].second;
    double f = pool[c].first;
    double step = 0.1;
    for (int it = 0; it < iters; ++it) {
      Vector g = Vector::Zero(dim);
      for (int j = 0; j < dim; ++j) {
        for (int part = 0; part < 2; ++part) {
          Vector e = Vector::Zero(dim);
          e(j) = part == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
          const double up = fn(normalized(y + fd * e));
          const double down = fn(normalized(y - fd * e));
          const double deriv = (up - down) / (2.0 * fd);
          if (part == 0) {
            g(j) = Complex(deriv, g(j).imag());
          } else {
            g(j) = Complex(g(j).real(), deriv);
          }
        }
      }
      const Vector gt = g - y.dot(g).real() * y;
      const double gn = gt.norm();
      if (gn < 1e-12) break;
      double s = step / gn;
      bool accepted = false;
      for (int bt = 0; bt < 40; ++bt) {
        const Vector cand = normalized(y - s * gt);
        const double fc = fn(cand);
        if (fc < f) {
          y = cand;
          f = fc;
          accepted = true;
          break;
        }
        s *= 0.5;
      }
      if (!accepted) break;
      step = std::min(2.0 * s * gn, 1.0);
    }
    if (f < best.value) {
      best.value = f;
      best.point = y;
    }
  }

  if (dim == 2) {
    auto [neg, y] = two_angle_max([&](const Vector& v) { return -fn(v); });
    if (-neg < best.value) {
      best.value = -neg;
      best.point = y;
    }
  }
  return best;
}

}  // namespace dwrad::classical
