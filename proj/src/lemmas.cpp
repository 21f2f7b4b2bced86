#include "dwrad/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "dwrad/config.hpp"
#include "dwrad/radii.hpp"
#include "dwrad/random.hpp"

namespace dwrad {

namespace {

void require_unit(const HermitianPSD& a, const Vector& v, const char* name) {
  require_same_dim(a, v);
  const double n = a_norm(a, v);
  if (n < 1e-12) throw Error(ErrorCode::NotUnitVector, std::string(name) + " has zero A-norm");
  if (std::abs(n - 1.0) > 1e-8) throw Error(ErrorCode::NotUnitVector, std::string(name) + " must have unit A-norm");
}

}  // namespace

double check_kz(const HermitianPSD& a, const Vector& va, const Vector& vb, const Vector& vc, Complex alpha) {
  if (alpha == Complex(0.0, 0.0)) throw Error(ErrorCode::InvalidParam, "alpha must be nonzero");
  require_same_dim(a, va);
  require_same_dim(a, vb);
  require_unit(a, vc, "c");
  const double lhs = std::abs(a_inner(a, va, vc) * a_inner(a, vc, vb));
  const double mod = std::abs(alpha);
  const double rhs =
      (std::max(1.0, std::abs(alpha - 1.0)) * a_norm(a, va) * a_norm(a, vb) + std::abs(a_inner(a, va, vb))) / mod;
  return rhs - lhs;
}

double a_delta(const HermitianPSD& a, const Vector& va, const Vector& vb, const Vector& vc) {
  const double na = a_norm(a, va);
  const double nb = a_norm(a, vb);
  if (na * nb == 0.0) return 0.0;
  const double bracket = std::abs(a_inner(a, va, vc)) * residual_inf(a, vc, vb) - 0.5 * residual_inf(a, va, vb);
  return nb / na * bracket * bracket;
}

double check_kzlaa(const HermitianPSD& a, const Vector& va, const Vector& vb, const Vector& vc) {
  require_same_dim(a, va);
  require_same_dim(a, vb);
  require_unit(a, vc, "c");
  const double lhs = std::abs(a_inner(a, va, vc) * a_inner(a, vc, vb));
  const double rhs =
      0.5 * (a_norm(a, va) * a_norm(a, vb) + std::abs(a_inner(a, va, vb))) - a_delta(a, va, vb, vc);
  return rhs - lhs;
}

double check_ll(const HermitianPSD& a, const Operator& s, const Vector& x, const Vector& z) {
  require_unit(a, x, "x");
  require_unit(a, z, "z");
  const Operator sa = a_adjoint(a, s);
  const double lhs = std::norm(a_inner(a, s * x, z));
  const double px = std::max(0.0, a_inner(a, sa * (s * x), x).real());
  const double qz = std::max(0.0, a_inner(a, s * (sa * z), z).real());
  return std::sqrt(px) * std::sqrt(qz) - lhs;
}

double check_power(const HermitianPSD& a, const Operator& s, const Vector& z, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParam, "n must be at least 1");
  require_same_dim(a, s);
  if (!is_a_positive(a, s)) throw Error(ErrorCode::NotAPositive, "S must be A-positive");
  require_unit(a, z, "z");
  Vector snz = z;
  for (int k = 0; k < n; ++k) snz = s * snz;
  const double lhs = std::pow(a_inner(a, s * z, z).real(), n);
  return a_inner(a, snz, z).real() - lhs;
}

double check_kkk(const HermitianPSD& a, const Vector& x, const Vector& z) {
  require_same_dim(a, x);
  require_same_dim(a, z);
  const double nx = a_norm(a, x);
  if (nx <= 1e-12) throw Error(ErrorCode::InvalidParam, "x must have nonzero A-norm");
  const double res = residual_inf(a, x, z);
  return a_norm(a, z) * (nx - res * res / (2.0 * nx)) - std::abs(a_inner(a, x, z));
}

std::pair<double, double> check_scalar_interp(double a, double c, double alpha, double r) {
  if (!(a > 0.0) || !(c > 0.0)) throw Error(ErrorCode::InvalidParam, "a and c must be positive");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorCode::InvalidParam, "alpha must lie in [0, 1]");
  if (!(r >= 1.0)) throw Error(ErrorCode::InvalidParam, "r must be at least 1");
  const double geometric = std::pow(a, alpha) * std::pow(c, 1.0 - alpha);
  const double arithmetic = alpha * a + (1.0 - alpha) * c;
  const double power = std::pow(alpha * std::pow(a, r) + (1.0 - alpha) * std::pow(c, r), 1.0 / r);
  return {arithmetic - geometric, power - arithmetic};
}

double check_l(const HermitianPSD& a, const Vector& x, const Vector& u, const Vector& v) {
  require_same_dim(a, x);
  require_same_dim(a, u);
  require_same_dim(a, v);
  const double lhs = std::norm(a_inner(a, x, v)) + std::norm(a_inner(a, x, u));
  const double nx = a_norm(a, x);
  const double nv = a_norm(a, v);
  const double nu = a_norm(a, u);
  return nx * nx * (std::max(nv * nv, nu * nu) + std::abs(a_inner(a, v, u))) - lhs;
}

double check_lm310(const HermitianPSD& a, const Vector& x, const Vector& u, const Vector& v) {
  require_same_dim(a, x);
  require_same_dim(a, u);
  require_same_dim(a, v);
  const double lhs = std::norm(a_inner(a, x, u)) + std::norm(a_inner(a, x, v));
  const double nx = a_norm(a, x);
  const double root = std::sqrt(std::norm(a_inner(a, u, u)) + 2.0 * std::norm(a_inner(a, u, v)) +
                                std::norm(a_inner(a, v, v)));
  return nx * nx * root - lhs;
}

namespace {

Vector unit_a(const HermitianPSD& a, Vector v) {
  double n = a_norm(a, v);
  if (n < 1e-6) {
    v += a.range_basis().col(0);
    n = a_norm(a, v);
  }
  return v / n;
}

class Tally {
 public:
  void record(const std::string& id, double slack) {
    LemmaCheckResult& r = results_[id];
    if (r.samples == 0) {
      r.lemma_id = id;
      r.min_slack = std::numeric_limits<double>::infinity();
    }
    ++r.samples;
    r.min_slack = std::min(r.min_slack, slack);
    if (slack < -kLemmaTolerance) ++r.violations;
  }

  std::vector<LemmaCheckResult> ordered(const std::vector<std::string>& ids) const {
    std::vector<LemmaCheckResult> out;
    for (const auto& id : ids) {
      auto it = results_.find(id);
      if (it != results_.end()) out.push_back(it->second);
    }
    return out;
  }

 private:
  std::map<std::string, LemmaCheckResult> results_;
};

}  // namespace

std::vector<LemmaCheckResult> run_lemma_suite(const LemmaSuiteConfig& cfg) {
  if (cfg.samples < 1) throw Error(ErrorCode::ConfigError, "samples must be positive");
  if (cfg.dims.empty() || cfg.rank_deficits.empty()) throw Error(ErrorCode::ConfigError, "dims and deficits required");
  for (int d : cfg.dims) {
    if (d < 1) throw Error(ErrorCode::ConfigError, "dims must be positive");
  }
  Tally tally;
  const std::size_t nd = cfg.dims.size();
  for (int k = 0; k < cfg.samples; ++k) {
    const auto uk = static_cast<std::uint64_t>(k);
    const int dim = cfg.dims[uk % nd];
    int deficit = cfg.rank_deficits[(uk / nd) % cfg.rank_deficits.size()];
    if (deficit >= dim || deficit < 0) deficit = 0;
    const std::uint64_t base = derive_seed(cfg.seed, uk);
    auto seed = [&](std::uint64_t slot) { return derive_seed(base, slot); };
    const double mag = 1.0 / std::sqrt(static_cast<double>(dim));

    const HermitianPSD a = validate_psd(rnd::random_psd(dim, deficit, seed(0), mag));
    const Vector va = rnd::gaussian_vector(dim, seed(1));
    const Vector vb = rnd::gaussian_vector(dim, seed(2));
    const Vector vc = unit_a(a, rnd::gaussian_vector(dim, seed(3)));
    const Vector x = unit_a(a, rnd::gaussian_vector(dim, seed(4)));
    const Operator s = rnd::random_ba_operator(a, seed(5), mag);

    std::mt19937_64 rng(seed(6));
    std::normal_distribution<double> normal(0.0, 1.0);
    const double alpha_re = normal(rng);
    const double alpha_im = normal(rng);
    Complex alpha(alpha_re, alpha_im);
    if (alpha == Complex(0.0, 0.0)) alpha = 1.0;

    tally.record("kz", check_kz(a, va, vb, vc, alpha));
    const double kz2 = check_kz(a, va, vb, vc, 2.0);
    const double kzlaa = check_kzlaa(a, va, vb, vc);
    tally.record("kzlaa", kzlaa);
    tally.record("kz_kzlaa", kz2 - kzlaa);
    tally.record("ll", check_ll(a, s, x, vc));

    const Operator positive = a_adjoint(a, s) * s;
    tally.record("power", check_power(a, positive, vc, 1 + k % 4));
    tally.record("kkk", check_kkk(a, x, vb));

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double sa = std::exp(2.0 * normal(rng));
    const double sc = std::exp(2.0 * normal(rng));
    const double salpha = unit(rng);
    const double sr = 1.0 + 4.0 * unit(rng);
    const auto [geo, pow] = check_scalar_interp(sa, sc, salpha, sr);
    // Relative to the scale of the arguments; they span several decades.
    const double scale = std::max({1.0, sa, sc});
    tally.record("scalar_interp", std::min(geo, pow) / scale);

    tally.record("l", check_l(a, va, vb, vc));
    tally.record("lm310", check_lm310(a, va, vb, x));
  }
  return tally.ordered({"kz", "kzlaa", "kz_kzlaa", "ll", "power", "kkk", "scalar_interp", "l", "lm310"});
}

}  // namespace dwrad
