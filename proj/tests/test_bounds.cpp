#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dwrad/bounds.hpp"
#include "dwrad/radii.hpp"
#include "dwrad/random.hpp"
#include "oracles.hpp"

using namespace dwrad;

namespace {

Matrix m2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

const Matrix kD12 = m2(1, 0, 0, 2);
const Matrix kD10 = m2(1, 0, 0, 0);
const Matrix kNil = m2(0, 1, 0, 0);

double sq(double x) { return x * x; }

// Full-space quantities of a rank <= 2 pair, all from the oracles.
struct FullSpace {
  Matrix a, s, sa, p, q, re, im;
  explicit FullSpace(const Matrix& weight, const Matrix& op) : a(weight), s(op) {
    sa = oracle::adjoint_lsq(a, s);
    p = sa * s;
    q = s * sa;
    re = 0.5 * (s + sa);
    im = Complex(0, -0.5) * (s - sa);
  }
  double w(const Matrix& m) const { return oracle::omega_grid(a, m); }
  double c(const Matrix& m) const { return oracle::crawford_grid(a, m); }
  double n(const Matrix& m) const { return oracle::norm_pencil(a, m); }
};

struct Pair {
  HermitianPSD a;
  Operator s;
};

Pair rank_two_pair(int k) {
  const int n = 2 + k % 2;
  const auto a = validate_psd(rnd::random_psd(n, n - 2, 4000 + k));
  return {a, rnd::random_ba_operator(a, 4100 + k)};
}

}  // namespace

TEST(ExampleValues, UpperAndLowerBoundsOnDiag12) {
  const auto a = validate_psd(kD12);
  EXPECT_NEAR(sq(bound_th11(a, kD12)), 23.0, 1e-9);
  EXPECT_NEAR(sq(competitor("eq11", a, kD12)), 24.0, 1e-9);
  EXPECT_NEAR(sq(lower_th10(a, kD12)), 20.0, 1e-9);
  EXPECT_NEAR(sq(competitor("eq10", a, kD12)), 8.0, 1e-9);
  EXPECT_NEAR(sq(bound_eq20(a, kD12)), 20.0, 1e-9);
  EXPECT_NEAR(sq(competitor("eq21", a, kD12)), 24.0, 1e-9);
}

TEST(ExampleValues, NilpotentUnderDiag12) {
  const auto a = validate_psd(kD12);
  EXPECT_NEAR(sq(bound_eq17(a, kNil)), 0.5, 1e-9);
  EXPECT_NEAR(sq(competitor("eq18", a, kNil)), std::sqrt(5.0) / 4.0, 1e-9);
  EXPECT_NEAR(sq(bound_eq23(a, kNil)), std::sqrt(3.0) / (2.0 * std::sqrt(2.0)), 1e-9);
  EXPECT_NEAR(sq(competitor("eq25", a, kNil)), 0.75, 1e-9);
}

TEST(ExampleValues, ProjectionUnderDiag12) {
  const auto a = validate_psd(kD12);
  EXPECT_NEAR(bounds_th3(a, kD10).lower, std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(competitor("eq3", a, kD10), 0.0, 1e-9);
}

TEST(OmegaEqualityCase, PremiseAndValue) {
  const auto id = validate_psd(Matrix::Identity(2, 2));
  const Matrix s = m2(Complex(1, -1), 0, 0, 0);
  const auto v = omega_equality_case(id, s);
  ASSERT_TRUE(v.has_value());
  EXPECT_NEAR(*v, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(*v, a_numerical_radius(id, s), 1e-10);
  EXPECT_FALSE(omega_equality_case(id, m2(1, 2, 3, 4)).has_value());
}

TEST(FullSpaceOracle, ClosedFormBoundsAgree) {
  for (int k = 0; k < 6; ++k) {
    const auto [a, s] = rank_two_pair(k);
    const FullSpace f(a.matrix(), s);
    const double nn = f.n(s);
    const double tol = 1e-5 * std::max(1.0, sq(nn) * sq(nn));
    EXPECT_NEAR(sq(sq(bound_eq23(a, s))), f.n(f.p + f.p * f.p) * f.n(f.q + f.p * f.p), tol) << k;
    EXPECT_NEAR(sq(competitor("eq25", a, s)), f.n(f.p + f.p * f.p), tol) << k;
    EXPECT_NEAR(sq(bound_eq20(a, s)), 0.25 * f.n(f.p + f.q + 4.0 * f.p * f.p) + 0.5 * f.w(s * s), tol) << k;
    const double n2 = sq(nn);
    EXPECT_NEAR(sq(bound_th11(a, s)), n2 * n2 + 2.0 * n2 - std::sqrt(f.c(f.p) * f.c(f.q)), tol) << k;
    for (double th : {0.0, 1.0, std::numbers::pi}) {
      const Complex rot = std::polar(1.0, th);
      const double w1 = f.w(rot * s + f.p);
      const double nr = f.n(0.5 * (rot * s + std::conj(rot) * f.sa));
      EXPECT_NEAR(sq(bound_th8(a, s, th)), sq(w1) + 2.0 * n2 * nr, tol) << k;
    }
    const Complex i(0, 1);
    const double wr = f.w(f.re + i * f.p);
    const double wi = f.w(f.im + i * f.p);
    const auto lu = bounds_th3(a, s);
    EXPECT_NEAR(lu.lower, std::max(wr, wi), 1e-5) << k;
    EXPECT_NEAR(lu.upper, std::min(std::hypot(wr, f.n(f.im)), std::hypot(wi, f.n(f.re))), 1e-5) << k;
    const double w2 = f.w(f.sa * s * s);
    EXPECT_NEAR(sq(bound_theo1(a, s, 2.0)), sq(f.w(f.p + s)) + w2 + 0.5 * f.n(f.p * f.p + f.p), tol) << k;
  }
}

TEST(Validity, EveryBoundAgainstSampledAndGridOracles) {
  for (int k = 0; k < 8; ++k) {
    const auto [a, s] = rank_two_pair(k);
    const double dw = oracle::dw_grid(a.matrix(), s);
    const BoundReport rep = bound_report(a, s);
    EXPECT_NEAR(rep.dw.value, dw, 1e-6) << k;
    for (const auto& e : rep.entries) {
      if (e.kind == BoundKind::Upper) {
        EXPECT_GE(e.value, dw - 1e-6) << e.bound_id << " " << k;
      } else {
        EXPECT_LE(e.value, dw + 1e-6) << e.bound_id << " " << k;
      }
    }
  }
  for (int k = 0; k < 8; ++k) {
    const int n = 3 + k % 2;
    const auto a = validate_psd(rnd::random_psd(n, k % 2, 4200 + k));
    const Operator s = rnd::random_ba_operator(a, 4300 + k);
    const double lo = oracle::dw_sampled(a.matrix(), s, 4000, 4400 + k);
    const BoundReport rep = bound_report(a, s);
    for (const auto& e : rep.entries) {
      if (e.kind == BoundKind::Upper) EXPECT_GE(e.value, lo - 1e-6) << e.bound_id << " " << k;
    }
    EXPECT_TRUE(rep.all_hold()) << k;
  }
}

TEST(Report, StructureAndChecks) {
  const auto a = validate_psd(kD12);
  const BoundReport rep = bound_report(a, kD12);
  EXPECT_NEAR(rep.dw.value, std::sqrt(20.0), 1e-9);
  EXPECT_TRUE(rep.all_hold());
  for (const char* id : {"theo1", "theo1_limit", "delta_refined", "th3_lower", "th3_upper", "th11", "th8", "th8_grid",
                         "th10", "eq17", "th17", "thh1", "eq20", "eq23", "th22", "lower_crawford", "th44", "eq3",
                         "eq10", "eq11", "eq18", "eq21", "eq25", "p03", "sandwich_lower", "sandwich_upper"}) {
    EXPECT_NE(rep.find(id), nullptr) << id;
  }
  EXPECT_EQ(rep.find("th10")->kind, BoundKind::Lower);
  EXPECT_EQ(rep.find("th11")->kind, BoundKind::Upper);
  EXPECT_NEAR(rep.find("th11")->slack, 3.0, 1e-9);
  EXPECT_TRUE(rep.find("thh1")->optimizer_dependent);
  EXPECT_FALSE(rep.find("eq23")->optimizer_dependent);
  EXPECT_FALSE(rep.checks.empty());
  for (const auto& c : rep.checks) EXPECT_TRUE(c.holds) << c.check_id;
  EXPECT_EQ(rep.find("nonexistent"), nullptr);
}

TEST(Relations, OrderingsBetweenBounds) {
  for (int k = 0; k < 10; ++k) {
    const int n = 2 + k % 3;
    const auto a = validate_psd(rnd::random_psd(n, k % 2, 4500 + k));
    const Operator s = rnd::random_ba_operator(a, 4600 + k);
    EXPECT_LE(bound_th8_grid(a, s), bound_th8(a, s, 0.0) + 1e-12);
    EXPECT_LE(bound_thh1(a, s), bound_eq20(a, s) + 1e-9);
    EXPECT_LE(bound_delta_refined(a, s), bound_theo1(a, s, 2.0) + 1e-8);
    const auto lu = bounds_th3(a, s);
    EXPECT_LE(lu.lower, lu.upper + 1e-9);
    const auto ad = a_adjoint(a, s);
    const double n3 = a_op_norm(a, ad * s * ad * s + ad * s);
    const double w2 = a_numerical_radius(a, ad * s * s);
    for (double alpha : {2.0, 10.0, 1000.0}) {
      const double gap = sq(bound_theo1(a, s, alpha)) - sq(bound_theo1_limit(a, s));
      EXPECT_LE(std::abs(gap), (n3 + 2.0 * w2) / alpha + 1e-9);
    }
    // th22 at n = 1 is eq23.
    EXPECT_DOUBLE_EQ(bound_th22(a, s, 1), bound_eq23(a, s));
  }
}

TEST(Scaling, HomogeneousBoundsScaleAsExpected) {
  // For S = x I under A = I: dw^2 = x^2 + x^4.
  const auto id = validate_psd(Matrix::Identity(3, 3));
  for (double x : {0.5, 1.0, 3.0}) {
    const Matrix s = x * Matrix::Identity(3, 3);
    const double dw2 = x * x + x * x * x * x;
    EXPECT_NEAR(sq(a_dw_radius(id, s).value), dw2, 1e-9 * dw2);
    EXPECT_GE(sq(bound_th11(id, s)), dw2 - 1e-9);
    EXPECT_NEAR(sq(lower_crawford(id, s)), dw2, 1e-9 * dw2);
    EXPECT_NEAR(sq(lower_th44(id, s)), dw2, 1e-9 * dw2);
    EXPECT_NEAR(sq(bound_eq23(id, s)), dw2, 1e-9 * dw2);
  }
}

TEST(CrawfordLower, SquaredCrawfordTermWouldExceedDw) {
  // With c(S^#S) squared the second term overshoots once c(S^#S) > 1.
  const auto id = validate_psd(Matrix::Identity(2, 2));
  const Matrix s = 3.0 * Matrix::Identity(2, 2);
  const double dw2 = sq(a_dw_radius(id, s).value);
  EXPECT_NEAR(dw2, 90.0, 1e-9);
  const double w = a_numerical_radius(id, s);
  const double cp = a_crawford(id, a_adjoint(id, s) * s);
  EXPECT_GT(sq(w) * (1.0 + sq(cp)), dw2 + 1.0);
  EXPECT_NEAR(sq(lower_crawford(id, s)), 90.0, 1e-9);
}

TEST(Errors, InvalidParameters) {
  const auto a = validate_psd(kD12);
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code([&] { bound_theo1(a, kD12, 0.0); }), ErrorCode::InvalidParam);
  EXPECT_EQ(code([&] { bound_th17(a, kD12, 1.5); }), ErrorCode::InvalidParam);
  EXPECT_EQ(code([&] { bound_th22(a, kD12, 0); }), ErrorCode::InvalidParam);
  EXPECT_EQ(code([&] { bound_th8_grid(a, kD12, {}, 0); }), ErrorCode::InvalidParam);
  EXPECT_EQ(code([&] { competitor("eq99", a, kD12); }), ErrorCode::UnknownBoundId);
  EXPECT_EQ(competitor_ids().size(), 7u);
}
