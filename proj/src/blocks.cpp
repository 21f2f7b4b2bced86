#include "dwrad/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "dwrad/classical.hpp"
#include "dwrad/radii.hpp"

namespace dwrad {

HermitianPSD lift_weight(const HermitianPSD& a) {
  const int n = a.dim();
  Matrix lifted = Matrix::Zero(2 * n, 2 * n);
  lifted.topLeftCorner(n, n) = a.matrix();
  lifted.bottomRightCorner(n, n) = a.matrix();
  return validate_psd(lifted);
}

BlockOperator BlockOperator::from(const Operator& s11, const Operator& s12, const Operator& s21,
                                  const Operator& s22) {
  const auto n = s11.rows();
  for (const Operator* m : {&s11, &s12, &s21, &s22}) {
    if (m->rows() != n || m->cols() != n) throw Error(ErrorCode::DimensionMismatch, "blocks must share one size");
  }
  BlockOperator b;
  b.blocks = {{{s11, s12}, {s21, s22}}};
  return b;
}

BlockOperator BlockOperator::diag(const Operator& s, const Operator& t) {
  const Matrix z = Matrix::Zero(s.rows(), s.cols());
  return from(s, z, z, t);
}

BlockOperator BlockOperator::antidiag(const Operator& b, const Operator& c) {
  const Matrix z = Matrix::Zero(b.rows(), b.cols());
  return from(z, b, c, z);
}

BlockOperator BlockOperator::symmetric(const Operator& s, const Operator& t) { return from(s, t, t, s); }

Operator BlockOperator::assembled() const {
  const int n = block_dim();
  Operator out(2 * n, 2 * n);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block(i * n, j * n, n, n) = blocks[i][j];
  }
  return out;
}

bool block_adjoint_check(const HermitianPSD& a, const BlockOperator& s) {
  require_same_dim(a, s.blocks[0][0]);
  const HermitianPSD lifted = lift_weight(a);
  const Operator whole = a_adjoint(lifted, s.assembled());
  const BlockOperator expected = BlockOperator::from(a_adjoint(a, s.blocks[0][0]), a_adjoint(a, s.blocks[1][0]),
                                                     a_adjoint(a, s.blocks[0][1]), a_adjoint(a, s.blocks[1][1]));
  const Operator rhs = expected.assembled();
  const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
  return (whole - rhs).cwiseAbs().maxCoeff() <= 1e-10 * scale;
}

namespace {

double dw(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return a_dw_radius(a, s, cfg).value;
}

double omega(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  return a_numerical_radius(a, s, cfg);
}

// Both sides are lower approximations of suprema. On disagreement the
// optimizer is rerun with four times the restarts and the larger value kept.
EqualityCheck dw_check(std::string id, const std::function<Sides(const OptimizerConfig&)>& sides,
                       const OptimizerConfig& cfg) {
  Sides v = sides(cfg);
  EqualityCheck out{std::move(id), v.first, v.second, kEqualityTolerance, true, 0};
  if (std::abs(v.first - v.second) > kEqualityTolerance) {
    const Sides again = sides(cfg.escalated(4));
    out.escalations = 1;
    out.lhs = std::max(v.first, again.first);
    out.rhs = std::max(v.second, again.second);
  }
  out.holds = std::abs(out.lhs - out.rhs) <= out.tol;
  return out;
}

EqualityCheck exact_check(std::string id, double lhs, double rhs, double tol) {
  return EqualityCheck{std::move(id), lhs, rhs, tol, std::abs(lhs - rhs) <= tol, 0};
}

}  // namespace

Sides dw_diag_equality(const HermitianPSD& a, const Operator& s, const Operator& t, const OptimizerConfig& cfg) {
  require_same_dim(a, s);
  require_same_dim(a, t);
  const HermitianPSD lifted = lift_weight(a);
  return {dw(lifted, BlockOperator::diag(s, t).assembled(), cfg), std::max(dw(a, s, cfg), dw(a, t, cfg))};
}

Sides dw_sym_equality(const HermitianPSD& a, const Operator& s, const Operator& t, const OptimizerConfig& cfg) {
  require_same_dim(a, s);
  require_same_dim(a, t);
  const HermitianPSD lifted = lift_weight(a);
  return {dw(lifted, BlockOperator::symmetric(s, t).assembled(), cfg),
          dw(lifted, BlockOperator::diag(s - t, s + t).assembled(), cfg)};
}

Sides dw_antidiag(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  require_same_dim(a, s);
  const HermitianPSD lifted = lift_weight(a);
  return {dw(lifted, BlockOperator::antidiag(s, s).assembled(), cfg), dw(a, s, cfg)};
}

namespace {

struct OffDiagonal {
  Operator bsb;  // B^# B
  Operator csc;  // C^# C
  Operator bbs;  // B B^#
  Operator ccs;  // C C^#
  double cross;  // w under the lifted weight of [[0, C^# C B], [B^# B C, 0]]
};

OffDiagonal off_diagonal(const HermitianPSD& a, const Operator& b, const Operator& c, const OptimizerConfig& cfg,
                         bool need_cross) {
  require_same_dim(a, b);
  require_same_dim(a, c);
  cfg.validate();
  OffDiagonal o;
  const Operator bs = a_adjoint(a, b);
  const Operator cs = a_adjoint(a, c);
  o.bsb = bs * b;
  o.csc = cs * c;
  o.bbs = b * bs;
  o.ccs = c * cs;
  o.cross = 0.0;
  if (need_cross) {
    const HermitianPSD lifted = lift_weight(a);
    o.cross = omega(lifted, BlockOperator::antidiag(o.csc * b, o.bsb * c).assembled(), cfg);
  }
  return o;
}

}  // namespace

double bound_TT(const HermitianPSD& a, const Operator& b, const Operator& c, const OptimizerConfig& cfg) {
  const OffDiagonal o = off_diagonal(a, b, c, cfg, false);
  const double first = std::max(omega(a, o.bbs + o.csc + 4.0 * o.csc * o.csc, cfg),
                                omega(a, o.bsb + o.ccs + 4.0 * o.bsb * o.bsb, cfg));
  const double second = std::max(omega(a, b * c, cfg), omega(a, c * b, cfg));
  return std::sqrt(0.25 * first + 0.5 * second);
}

double bound_th310(const HermitianPSD& a, const Operator& b, const Operator& c, const OptimizerConfig& cfg) {
  const OffDiagonal o = off_diagonal(a, b, c, cfg, true);
  const double plus = std::max(omega(a, o.csc * o.csc + o.csc, cfg), omega(a, o.bsb + o.bsb * o.bsb, cfg));
  const double minus = std::max(omega(a, o.csc * o.csc - o.csc, cfg), omega(a, o.bsb - o.bsb * o.bsb, cfg));
  return std::sqrt(0.5 * plus + 0.5 * minus + o.cross);
}

double bound_th312(const HermitianPSD& a, const Operator& b, const Operator& c, const OptimizerConfig& cfg) {
  const OffDiagonal o = off_diagonal(a, b, c, cfg, true);
  const Operator c2 = o.csc * o.csc;
  const Operator b2 = o.bsb * o.bsb;
  const double first = std::max(omega(a, c2 + c2 * c2, cfg), omega(a, b2 + b2 * b2, cfg));
  return std::pow(first + 2.0 * o.cross * o.cross, 0.25);
}

bool is_a_unitary(const HermitianPSD& a, const Operator& v, std::uint64_t seed, int samples) {
  require_same_dim(a, v);
  const Operator vs = a_adjoint(a, v);
  for (int k = 0; k < samples; ++k) {
    const Vector x = classical::random_unit_vector(a.dim(), derive_seed(seed, static_cast<std::uint64_t>(k)));
    const double nx = a_norm(a, x);
    const double tol = 1e-8 * std::max(1.0, nx);
    if (std::abs(a_norm(a, v * x) - nx) > tol || std::abs(a_norm(a, vs * x) - nx) > tol) return false;
  }
  return true;
}

Operator a_unitary_from(const HermitianPSD& a, const Matrix& w) {
  const Matrix& basis = a.range_basis();
  if (w.rows() != basis.cols() || w.cols() != basis.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "w must be rank x rank");
  }
  const int n = a.dim();
  return a.pinv_sqrt() * basis * w * basis.adjoint() * a.sqrt() + (Matrix::Identity(n, n) - a.range_projection());
}

bool BlockEqualityReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const EqualityCheck& c) { return c.holds; });
}

const EqualityCheck* BlockEqualityReport::find(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.check_id == id) return &c;
  }
  return nullptr;
}

BlockEqualityReport omega_block_equalities(const HermitianPSD& a, const Operator& s, const Operator& t,
                                           const OptimizerConfig& cfg, const std::optional<Operator>& v) {
  require_same_dim(a, s);
  require_same_dim(a, t);
  cfg.validate();
  if (v && !is_a_unitary(a, *v, cfg.seed)) throw Error(ErrorCode::NotAUnitary, "supplied V is not A-unitary");
  const HermitianPSD lifted = lift_weight(a);
  BlockEqualityReport r;
  r.checks.push_back(exact_check("omega_diag", omega(lifted, BlockOperator::diag(s, t).assembled(), cfg),
                                 std::max(omega(a, s, cfg), omega(a, t, cfg)), kEqualityTolerance));
  r.checks.push_back(exact_check("omega_sym", omega(lifted, BlockOperator::symmetric(s, t).assembled(), cfg),
                                 std::max(omega(a, s + t, cfg), omega(a, s - t, cfg)), kEqualityTolerance));
  r.checks.push_back(exact_check("omega_antidiag", omega(lifted, BlockOperator::antidiag(s, s).assembled(), cfg),
                                 omega(a, s, cfg), kEqualityTolerance));
  if (v) {
    const Operator conj = a_adjoint(a, *v) * s * *v;
    r.checks.push_back(dw_check(
        "dw_unitary", [&](const OptimizerConfig& c) { return Sides{dw(a, conj, c), dw(a, s, c)}; }, cfg));
  }
  return r;
}

BlockEqualityReport block_equalities(const HermitianPSD& a, const Operator& s, const Operator& t,
                                     const OptimizerConfig& cfg, const std::optional<Operator>& v) {
  BlockEqualityReport r = omega_block_equalities(a, s, t, cfg, v);
  r.checks.push_back(dw_check(
      "dw_diag", [&](const OptimizerConfig& c) { return dw_diag_equality(a, s, t, c); }, cfg));
  r.checks.push_back(dw_check(
      "dw_sym", [&](const OptimizerConfig& c) { return dw_sym_equality(a, s, t, c); }, cfg));
  r.checks.push_back(dw_check(
      "dw_antidiag", [&](const OptimizerConfig& c) { return dw_antidiag(a, s, c); }, cfg));
  const Operator ps = a.range_projection() * s;
  r.checks.push_back(dw_check(
      "dw_projection", [&](const OptimizerConfig& c) { return Sides{dw(a, ps, c), dw(a, s, c)}; }, cfg));
  const bool adj = block_adjoint_check(a, BlockOperator::symmetric(s, t));
  r.checks.push_back(EqualityCheck{"block_adjoint", adj ? 1.0 : 0.0, 1.0, 0.0, adj, 0});
  return r;
}

}  // namespace dwrad
