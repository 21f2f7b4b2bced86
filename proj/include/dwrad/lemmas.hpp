#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dwrad/core.hpp"

// Numerical checks of the auxiliary inequalities. Each check returns the
// slack RHS - LHS, which the inequality says is nonnegative.
namespace dwrad {

/// |<a,c>_A <c,b>_A| <= (max{1, |alpha-1|} ||a||_A ||b||_A + |<a,b>_A|) / |alpha|
/// for ||c||_A = 1. Throws InvalidParam (alpha = 0) or NotUnitVector.
double check_kz(const HermitianPSD& a, const Vector& va, const Vector& vb, const Vector& vc, Complex alpha);

/// The alpha = 2 case of check_kz sharpened by delta(a, b, c).
double check_kzlaa(const HermitianPSD& a, const Vector& va, const Vector& vb, const Vector& vc);

/// delta(a, b, c) under the A-inner product; 0 when ||a||_A ||b||_A = 0.
double a_delta(const HermitianPSD& a, const Vector& va, const Vector& vb, const Vector& vc);

/// |<Sx,z>_A|^2 <= <S^#S x,x>_A^{1/2} <S S^# z,z>_A^{1/2} for unit x, z.
double check_ll(const HermitianPSD& a, const Operator& s, const Vector& x, const Vector& z);

/// <Sz,z>_A^n <= <S^n z,z>_A for A-positive S and unit z.
/// Throws NotAPositive, NotUnitVector or InvalidParam (n < 1).
double check_power(const HermitianPSD& a, const Operator& s, const Vector& z, int n);

/// |<x,z>_A| <= ||z||_A (||x||_A - inf_l ||x - l z||_A^2 / (2 ||x||_A)),
/// ||x||_A > 1e-12.
double check_kkk(const HermitianPSD& a, const Vector& x, const Vector& z);

/// Slacks of a^alpha c^(1-alpha) <= alpha a + (1-alpha) c and of
/// alpha a + (1-alpha) c <= (alpha a^r + (1-alpha) c^r)^(1/r).
std::pair<double, double> check_scalar_interp(double a, double c, double alpha, double r);

/// |<x,v>_A|^2 + |<x,u>_A|^2 <= ||x||_A^2 (max{||v||_A^2, ||u||_A^2} + |<v,u>_A|)
double check_l(const HermitianPSD& a, const Vector& x, const Vector& u, const Vector& v);

/// |<x,u>_A|^2 + |<x,v>_A|^2 <= ||x||_A^2 sqrt(|<u,u>|^2 + 2|<u,v>|^2 + |<v,v>|^2)
double check_lm310(const HermitianPSD& a, const Vector& x, const Vector& u, const Vector& v);

struct LemmaCheckResult {
  std::string lemma_id;
  int samples = 0;
  double min_slack = 0.0;
  int violations = 0;
};

inline constexpr double kLemmaTolerance = 1e-10;

struct LemmaSuiteConfig {
  std::uint64_t seed = 1;
  int samples = 10000;
  std::vector<int> dims = {2, 3, 4, 5};
  /// Deficits cycled per sample; those >= dim are skipped.
  std::vector<int> rank_deficits = {0, 1};
};

/// Runs every lemma on cfg.samples seeded samples. Ids: kz, kzlaa, kz_kzlaa
/// (KZ at alpha = 2 minus KZLAA, which must equal delta >= 0), ll, power, kkk,
/// scalar_interp, l, lm310.
std::vector<LemmaCheckResult> run_lemma_suite(const LemmaSuiteConfig& cfg);

}  // namespace dwrad
