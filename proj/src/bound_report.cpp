#include <algorithm>
#include <cmath>
#include <numbers>

#include "bounds_internal.hpp"
#include "dwrad/bounds.hpp"
#include "dwrad/classical.hpp"

namespace dwrad {

const char* to_string(BoundKind kind) { return kind == BoundKind::Upper ? "upper" : "lower"; }

bool BoundReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const BoundEntry& e) { return e.holds; }) &&
         std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.holds; });
}

const BoundEntry* BoundReport::find(std::string_view id) const {
  for (const auto& e : entries) {
    if (e.bound_id == id) return &e;
  }
  return nullptr;
}

namespace {

void classify(BoundEntry& e, double dw) {
  if (e.kind == BoundKind::Upper) {
    e.holds = e.value >= dw - kBoundTolerance;
  } else {
    e.holds = e.value <= dw + kBoundTolerance;
  }
  e.slack = std::abs(e.value * e.value - dw * dw);
}

RelationCheck relation(std::string id, double lhs, double rhs, double tol) {
  return RelationCheck{std::move(id), lhs, rhs, tol, lhs <= rhs + tol};
}

}  // namespace

BoundReport bound_report(const HermitianPSD& a, const Operator& s, const OptimizerConfig& cfg) {
  cfg.validate();
  const ReducedPair pair = reduce(a, s);
  const detail::BoundContext ctx(pair.reduced, cfg);

  BoundReport report;
  report.dw = dw_radius_reduced(pair, cfg);

  auto add = [&](std::string id, BoundKind kind, double value, std::map<std::string, double> params = {},
                 bool optimizer_dependent = false, bool floored = false) {
    BoundEntry e;
    e.bound_id = std::move(id);
    e.kind = kind;
    e.value = value;
    e.params = std::move(params);
    e.optimizer_dependent = optimizer_dependent;
    e.floored = floored;
    report.entries.push_back(std::move(e));
  };
  constexpr auto U = BoundKind::Upper;
  constexpr auto L = BoundKind::Lower;

  const double theo1_2 = detail::theo1(ctx, 2.0);
  add("theo1", U, theo1_2, {{"alpha_re", 2.0}, {"alpha_im", 0.0}});
  add("theo1", U, detail::theo1(ctx, Complex(1.0, 1.0)), {{"alpha_re", 1.0}, {"alpha_im", 1.0}});
  add("theo1_limit", U, detail::theo1_limit(ctx));
  bool floored = false;
  const double refined = detail::delta_refined(ctx, &floored);
  add("delta_refined", U, refined, {}, true, floored);

  const LowerUpper t3 = detail::th3(ctx);
  add("th3_lower", L, t3.lower);
  add("th3_upper", U, t3.upper);

  floored = false;
  add("th11", U, detail::th11(ctx, &floored), {}, false, floored);

  const double th8_0 = detail::th8(ctx, 0.0);
  const double th8_pi = detail::th8(ctx, std::numbers::pi);
  add("th8", U, th8_0, {{"theta", 0.0}});
  add("th8", U, th8_pi, {{"theta", std::numbers::pi}});
  const double th8_min = detail::th8_grid(ctx, 64);
  add("th8_grid", U, th8_min, {{"points", 64.0}});

  floored = false;
  add("th10", L, detail::th10(ctx, &floored), {}, false, floored);

  for (double alpha : {0.0, 0.5, 1.0}) {
    floored = false;
    const double v = detail::th17(ctx, alpha, &floored);
    add(alpha == 0.0 ? "eq17" : "th17", U, v, {{"alpha", alpha}}, true, floored);
  }
  floored = false;
  add("thh1", U, detail::thh1(ctx, &floored), {{"alpha_grid", static_cast<double>(cfg.alpha_grid)}}, true,
      floored);
  add("eq20", U, detail::eq20(ctx));

  add("eq23", U, detail::th22(ctx, 1), {{"n", 1.0}});
  for (int n : {2, 3}) add("th22", U, detail::th22(ctx, n), {{"n", static_cast<double>(n)}});

  add("lower_crawford", L, detail::crawford_lower(ctx));
  add("th44", L, detail::th44(ctx));

  for (const auto& id : competitor_ids()) {
    const bool lower = id == "eq3" || id == "eq10";
    add(id, lower ? L : U, detail::competitor(ctx, id));
  }

  add("sandwich_lower", L, std::max(ctx.omega, ctx.norm * ctx.norm));
  add("sandwich_upper", U, report.dw.upper_cap);

  const double best_lower = [&] {
    double m = 0.0;
    for (const auto& e : report.entries) {
      if (e.kind == L) m = std::max(m, e.value);
    }
    return m;
  }();
  if (best_lower > report.dw.value + kBoundTolerance) {
    const DwResult again = dw_radius_reduced(pair, cfg.escalated(4));
    ++report.escalations;
    if (again.value > report.dw.value) {
      report.dw.value = again.value;
      report.dw.witness = again.witness;
      report.dw.converged = again.converged;
    }
    report.dw.restarts_used += again.restarts_used;
  }

  for (auto& e : report.entries) classify(e, report.dw.value);

  report.checks.push_back(relation("dw_within_cap", report.dw.value, report.dw.upper_cap, 1e-9));
  report.checks.push_back(relation("delta_refined_le_theo1", refined, theo1_2, 1e-8));
  report.checks.push_back(relation("th8_pi_le_p03", th8_pi, detail::competitor(ctx, "p03"), 1e-8));
  report.checks.push_back(relation("th8_grid_le_th8", th8_min, th8_0, 1e-12));
  report.checks.push_back(relation("th3_lower_le_upper", t3.lower, t3.upper, 1e-9));
  report.mu_eta_negative_samples = ctx.mu_eta().negative_samples;
  return report;
}

}  // namespace dwrad
