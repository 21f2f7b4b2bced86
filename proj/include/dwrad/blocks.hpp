#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dwrad/config.hpp"
#include "dwrad/core.hpp"

// 2x2 operator matrices on C^n (+) C^n under the lifted weight diag(A, A).
namespace dwrad {

/// diag(A, A), validated; rank doubles.
HermitianPSD lift_weight(const HermitianPSD& a);

struct BlockOperator {
  /// blocks[i][j] is the (i, j) block, each n x n.
  std::array<std::array<Operator, 2>, 2> blocks;

  static BlockOperator from(const Operator& s11, const Operator& s12, const Operator& s21, const Operator& s22);
  static BlockOperator diag(const Operator& s, const Operator& t);
  /// [[0, b], [c, 0]]
  static BlockOperator antidiag(const Operator& b, const Operator& c);
  /// [[s, t], [t, s]]
  static BlockOperator symmetric(const Operator& s, const Operator& t);

  int block_dim() const { return static_cast<int>(blocks[0][0].rows()); }
  Operator assembled() const;
};

/// The lifted adjoint of an operator matrix equals the transposed matrix of
/// block adjoints, within 1e-10 relative.
bool block_adjoint_check(const HermitianPSD& a, const BlockOperator& s);

/// Two sides of an equality; first is the lifted (block) side.
using Sides = std::pair<double, double>;

/// (dw(diag(S, T)), max{dw(S), dw(T)})
Sides dw_diag_equality(const HermitianPSD& a, const Operator& s, const Operator& t, const OptimizerConfig& cfg = {});
/// (dw([[S, T], [T, S]]), dw(diag(S - T, S + T)))
Sides dw_sym_equality(const HermitianPSD& a, const Operator& s, const Operator& t, const OptimizerConfig& cfg = {});
/// (dw([[0, S], [S, 0]]), dw(S))
Sides dw_antidiag(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg = {});

/// Upper bounds on dw([[0, B], [C, 0]]) under the lifted weight.
double bound_TT(const HermitianPSD& a, const Operator& b, const Operator& c, const OptimizerConfig& cfg = {});
double bound_th310(const HermitianPSD& a, const Operator& b, const Operator& c, const OptimizerConfig& cfg = {});
double bound_th312(const HermitianPSD& a, const Operator& b, const Operator& c, const OptimizerConfig& cfg = {});

/// ||Vx||_A = ||V^{#A}x||_A = ||x||_A on `samples` seeded vectors, within
/// 1e-8 relative. Throws NotInBA if V has no A-adjoint.
bool is_a_unitary(const HermitianPSD& a, const Operator& v, std::uint64_t seed = 1, int samples = 50);

/// An A-unitary operator built from a unitary r x r matrix w acting on
/// range(A) in A-orthonormal coordinates; identity on N(A).
Operator a_unitary_from(const HermitianPSD& a, const Matrix& w);

struct EqualityCheck {
  std::string check_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double tol = 0.0;
  bool holds = true;
  /// Restart escalations spent before the verdict.
  int escalations = 0;
};

struct BlockEqualityReport {
  std::vector<EqualityCheck> checks;
  bool all_hold() const;
  const EqualityCheck* find(const std::string& id) const;
};

inline constexpr double kEqualityTolerance = 1e-5;

/// Numerical radius equalities for diag(S, T), [[S, T], [T, S]] and
/// [[0, S], [S, 0]], plus dw(V^{#A} S V) = dw(S) when v is supplied.
/// Throws NotAUnitary if v fails is_a_unitary.
BlockEqualityReport omega_block_equalities(const HermitianPSD& a, const Operator& s, const Operator& t,
                                           const OptimizerConfig& cfg = {},
                                           const std::optional<Operator>& v = std::nullopt);

/// Everything above plus the three dw equalities, dw(PS) = dw(S) and the
/// block adjoint formula on [[S, T], [T, S]].
BlockEqualityReport block_equalities(const HermitianPSD& a, const Operator& s, const Operator& t,
                                     const OptimizerConfig& cfg = {},
                                     const std::optional<Operator>& v = std::nullopt);

}  // namespace dwrad
