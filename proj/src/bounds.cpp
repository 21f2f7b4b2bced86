#include "dwrad/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bounds_internal.hpp"
#include "dwrad/classical.hpp"

namespace dwrad {
namespace detail {

BoundContext::BoundContext(const Matrix& reduced, const OptimizerConfig& config)
    : t(reduced),
      ts(reduced.adjoint()),
      p(ts * t),
      q(t * ts),
      re(0.5 * (t + ts)),
      im(Complex(0.0, -0.5) * (t - ts)),
      id(Matrix::Identity(t.rows(), t.cols())),
      cfg(config) {
  norm = classical::spectral_norm(t);
  omega = w(t);
}

double BoundContext::w(const Matrix& m) const {
  return classical::numerical_radius(m, cfg.theta_grid, cfg.refine_tol);
}

double BoundContext::c(const Matrix& m) const {
  return classical::crawford_number(m, cfg.theta_grid, cfg.refine_tol);
}

double BoundContext::n(const Matrix& m) const { return classical::spectral_norm(m); }

const MuEta& BoundContext::mu_eta() const {
  if (!mu_eta_) mu_eta_ = reduced::mu_eta(t, cfg);
  return *mu_eta_;
}

double BoundContext::delta() const {
  if (!delta_) delta_ = reduced::delta_inf(t, cfg);
  return *delta_;
}

double root(double squared, bool* floored) {
  if (squared < 0.0) {
    if (floored != nullptr) *floored = true;
    return 0.0;
  }
  return std::sqrt(squared);
}

double theo1(const BoundContext& ctx, Complex alpha) {
  const double mod = std::abs(alpha);
  if (mod == 0.0 || !std::isfinite(mod)) throw Error(ErrorCode::InvalidParam, "alpha must be nonzero and finite");
  const double w1 = ctx.w(ctx.p + ctx.t);
  const double w2 = ctx.w(ctx.ts * ctx.t * ctx.t);
  const double n3 = ctx.n(ctx.p * ctx.p + ctx.p);
  const double coeff = std::max(1.0, std::abs(alpha - 1.0)) / mod;
  return root(w1 * w1 + 2.0 / mod * w2 + coeff * n3, nullptr);
}

double theo1_limit(const BoundContext& ctx) {
  const double w1 = ctx.w(ctx.p + ctx.t);
  return root(w1 * w1 + ctx.n(ctx.p * ctx.p + ctx.p), nullptr);
}

double delta_refined(const BoundContext& ctx, bool* floored) {
  const double w1 = ctx.w(ctx.p + ctx.t);
  const double w2 = ctx.w(ctx.ts * ctx.t * ctx.t);
  const double n3 = ctx.n(ctx.p * ctx.p + ctx.p);
  return root(w1 * w1 + w2 + 0.5 * n3 - 2.0 * ctx.delta(), floored);
}

LowerUpper th3(const BoundContext& ctx) {
  const Complex i(0.0, 1.0);
  const double wr = ctx.w(ctx.re + i * ctx.p);
  const double wi = ctx.w(ctx.im + i * ctx.p);
  const double nr = ctx.n(ctx.re);
  const double ni = ctx.n(ctx.im);
  LowerUpper out;
  out.lower = std::max(wr, wi);
  out.upper = std::min(std::sqrt(wr * wr + ni * ni), std::sqrt(wi * wi + nr * nr));
  return out;
}

double th11(const BoundContext& ctx, bool* floored) {
  const double n2 = ctx.norm * ctx.norm;
  return root(n2 * n2 + 2.0 * n2 - std::sqrt(ctx.c(ctx.p) * ctx.c(ctx.q)), floored);
}

double th8(const BoundContext& ctx, double theta) {
  const Complex rot = std::polar(1.0, theta);
  const double w1 = ctx.w(rot * ctx.t + ctx.p);
  const double nr = ctx.n(0.5 * (rot * ctx.t + std::conj(rot) * ctx.ts));
  return root(w1 * w1 + 2.0 * ctx.norm * ctx.norm * nr, nullptr);
}

double th8_grid(const BoundContext& ctx, int points) {
  if (points < 1) throw Error(ErrorCode::InvalidParam, "theta grid must be positive");
  double best = th8(ctx, 0.0);
  for (int k = 1; k < points; ++k) best = std::min(best, th8(ctx, 2.0 * std::numbers::pi * k / points));
  return best;
}

double th10(const BoundContext& ctx, bool* floored) {
  const double wp = ctx.w(ctx.t + ctx.p);
  const double wm = ctx.w(ctx.t - ctx.p);
  const double sq = std::max(wp * wp, wm * wm) - 2.0 * ctx.norm * ctx.norm * ctx.n(ctx.re);
  return root(sq, floored);
}

double th17(const BoundContext& ctx, double alpha, bool* floored) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorCode::InvalidParam, "alpha must lie in [0, 1]");
  const MuEta& me = ctx.mu_eta();
  const double nrm = ctx.n(alpha * ctx.p + (1.0 - alpha) * ctx.q + ctx.p * ctx.p);
  return root(nrm - (alpha * me.mu + (1.0 - alpha) * me.eta), floored);
}

double thh1_member(const BoundContext& ctx, double alpha, bool swap, double w2) {
  const MuEta& me = ctx.mu_eta();
  const Matrix& first = swap ? ctx.q : ctx.p;
  const Matrix& second = swap ? ctx.p : ctx.q;
  const double corr = swap ? me.mu : me.eta;
  return ctx.n(alpha / 4.0 * first + (1.0 - 0.75 * alpha) * second + ctx.p * ctx.p) + alpha / 2.0 * w2 -
         (1.0 - alpha) * corr;
}

double thh1(const BoundContext& ctx, bool* floored) {
  const int pts = std::max(2, ctx.cfg.alpha_grid);
  const double w2 = ctx.w(ctx.t * ctx.t);
  double best = thh1_member(ctx, 0.0, false, w2);
  for (int k = 0; k < pts; ++k) {
    const double alpha = static_cast<double>(k) / (pts - 1);
    best = std::min({best, thh1_member(ctx, alpha, false, w2), thh1_member(ctx, alpha, true, w2)});
  }
  return root(best, floored);
}

double eq20(const BoundContext& ctx) {
  const double w2 = ctx.w(ctx.t * ctx.t);
  return root(0.25 * ctx.n(ctx.p + ctx.q + 4.0 * ctx.p * ctx.p) + 0.5 * w2, nullptr);
}

double th22(const BoundContext& ctx, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParam, "power must be at least 1");
  Matrix pn = ctx.id;
  Matrix qn = ctx.id;
  for (int k = 0; k < n; ++k) {
    pn = pn * ctx.p;
    qn = qn * ctx.q;
  }
  const Matrix p2n = pn * pn;
  const double prod = std::pow(4.0, n - 1) * ctx.n(pn + p2n) * ctx.n(qn + p2n);
  return std::pow(prod, 1.0 / (4.0 * n));
}

double crawford_lower(const BoundContext& ctx) {
  const double c = ctx.c(ctx.t);
  const double cp = ctx.c(ctx.p);
  return std::sqrt(std::max(c * c * (1.0 + ctx.norm * ctx.norm), ctx.omega * ctx.omega * (1.0 + cp)));
}

double th44(const BoundContext& ctx) {
  const double m = classical::min_singular_value(ctx.t);
  const double c = ctx.c(ctx.t);
  return std::sqrt(
      std::max((1.0 + m * m) * ctx.omega * ctx.omega, (1.0 + ctx.norm * ctx.norm) * c * c));
}

double competitor(const BoundContext& ctx, std::string_view id) {
  const Matrix tst2 = ctx.ts * ctx.t * ctx.t;
  if (id == "eq3" || id == "eq10") {
    const double v = 2.0 * std::max(ctx.omega * ctx.c(ctx.p), ctx.c(ctx.t) * ctx.norm * ctx.norm);
    return std::sqrt(v);
  }
  if (id == "eq11") {
    const double n2 = ctx.norm * ctx.norm;
    return std::sqrt(std::max(n2, n2 * n2) + ctx.w(tst2));
  }
  if (id == "eq18") {
    const Matrix p2 = ctx.p * ctx.p;
    const double w = ctx.w(tst2);
    return std::pow(ctx.w(p2 + p2 * p2) + 2.0 * w * w, 0.25);
  }
  if (id == "eq21") {
    const Matrix p2 = ctx.p * ctx.p;
    return std::sqrt(0.5 * (ctx.w(p2 + ctx.p) + ctx.w(p2 - ctx.p)) + ctx.w(tst2));
  }
  if (id == "eq25") return std::sqrt(ctx.n(ctx.p + ctx.p * ctx.p));
  if (id == "p03") {
    const double w = ctx.w(ctx.p - ctx.t);
    return std::sqrt(w * w + 2.0 * ctx.norm * ctx.norm * ctx.omega);
  }
  throw Error(ErrorCode::UnknownBoundId, "unknown competitor bound '" + std::string(id) + "'");
}

}  // namespace detail

namespace {

detail::BoundContext context(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  cfg.validate();
  return detail::BoundContext(reduced_matrix(a, s), cfg);
}

}  // namespace

double bound_theo1(const HermitianPSD& a, const Operator& s, Complex alpha, const OptimizerConfig& cfg) {
  if (alpha == Complex(0.0, 0.0)) throw Error(ErrorCode::InvalidParam, "alpha must be nonzero");
  return detail::theo1(context(a, s, cfg), alpha);
}

double bound_theo1_limit(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return detail::theo1_limit(context(a, s, cfg));
}

double bound_delta_refined(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return detail::delta_refined(context(a, s, cfg), nullptr);
}

LowerUpper bounds_th3(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return detail::th3(context(a, s, cfg));
}

std::optional<double> omega_equality_case(const HermitianPSD& a, const Operator& s) {
  const Operator sa = a_adjoint(a, s);
  const Operator re = re_part(a, sa);
  const Operator im = im_part(a, sa);
  const Matrix diff = re * re - im;
  const double scale = std::max(1.0, std::max(re.cwiseAbs().maxCoeff(), im.cwiseAbs().maxCoeff()));
  if (diff.size() > 0 && diff.cwiseAbs().maxCoeff() > 1e-8 * scale) return std::nullopt;
  const double nr = a_op_norm(a, re_part(a, s));
  return nr * std::sqrt(1.0 + nr * nr);
}

double bound_th11(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return detail::th11(context(a, s, cfg), nullptr);
}

double bound_th8(const HermitianPSD& a, const Operator& s, double theta, const OptimizerConfig& cfg) {
  return detail::th8(context(a, s, cfg), theta);
}

double bound_th8_grid(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg, int points) {
  return detail::th8_grid(context(a, s, cfg), points);
}

double lower_th10(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return detail::th10(context(a, s, cfg), nullptr);
}

double bound_th17(const HermitianPSD& a, const Operator& s, double alpha, const OptimizerConfig& cfg) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorCode::InvalidParam, "alpha must lie in [0, 1]");
  return detail::th17(context(a, s, cfg), alpha, nullptr);
}

double bound_eq17(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return bound_th17(a, s, 0.0, cfg);
}

double bound_thh1(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return detail::thh1(context(a, s, cfg), nullptr);
}

double bound_eq20(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return detail::eq20(context(a, s, cfg));
}

double bound_th22(const HermitianPSD& a, const Operator& s, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParam, "power must be at least 1");
  return detail::th22(detail::BoundContext(reduced_matrix(a, s), OptimizerConfig{}), n);
}

double bound_eq23(const HermitianPSD& a, const Operator& s) { return bound_th22(a, s, 1); }

double lower_crawford(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return detail::crawford_lower(context(a, s, cfg));
}

double lower_th44(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return detail::th44(context(a, s, cfg));
}

double competitor(std::string_view id, const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  const auto& ids = competitor_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw Error(ErrorCode::UnknownBoundId, "unknown competitor bound '" + std::string(id) + "'");
  }
  return detail::competitor(context(a, s, cfg), id);
}

const std::vector<std::string>& competitor_ids() {
  static const std::vector<std::string> ids = {"eq3", "eq10", "eq11", "eq18", "eq21", "eq25", "p03"};
  return ids;
}

}  // namespace dwrad
