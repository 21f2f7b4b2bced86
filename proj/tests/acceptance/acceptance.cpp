// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dwrad/blocks.hpp"
#include "dwrad/bounds.hpp"
#include "dwrad/fuzz.hpp"
#include "dwrad/lemmas.hpp"
#include "dwrad/radii.hpp"
#include "dwrad/random.hpp"
#include "dwrad/reproduce.hpp"
#include "oracles.hpp"

using namespace dwrad;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Matrix m2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

bool report(int id, const std::string& name, const std::function<Outcome()>& fn) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("criterion %d %s: %s (%s; %.1f s)\n", id, name.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str(),
              seconds_since(start));
  std::fflush(stdout);
  return o.pass;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome reproduction() {
  const auto start = Clock::now();
  const auto rows = run_reproduce();
  const double secs = seconds_since(start);
  int bad = 0;
  std::string failing;
  for (const auto& r : rows) {
    if (!r.ok) {
      ++bad;
      failing += " " + r.remark_id;
    }
  }
  const bool pass = rows.size() == 7 && bad == 0 && secs < 1.0;
  return {pass, std::to_string(rows.size() - bad) + "/" + std::to_string(rows.size()) + " rows confirmed," +
                    fmt(" runtime %.3f s", secs) + failing};
}

Outcome closed_forms() {
  struct Case {
    Matrix a, s;
    double expected;
  };
  const std::vector<Case> cases = {
      {Matrix::Identity(2, 2), Matrix::Identity(2, 2), std::sqrt(2.0)},
      {m2(1, 0, 0, 2), m2(1, 0, 0, 2), std::sqrt(20.0)},
      {m2(1, 0, 0, 2), m2(1, 0, 0, 0), std::sqrt(2.0)},
      {m2(1, 0, 0, 2), m2(0, 1, 0, 0), 0.5},
  };
  double worst = 0.0;
  for (const auto& c : cases) {
    const double ours = a_dw_radius(validate_psd(c.a), c.s).value;
    const double grid = oracle::dw_grid(c.a, c.s);
    worst = std::max({worst, std::abs(ours - c.expected), std::abs(grid - c.expected), std::abs(ours - grid)});
  }
  return {worst <= 1e-6, "4 cases, max deviation " + fmt("%.2e", worst)};
}

Outcome inequality_suite() {
  FuzzConfig cfg;
  cfg.seed = 1;
  cfg.count = 1000;
  cfg.dims = {2, 3, 4};
  cfg.rank_deficit = {0, 1};
  cfg.blocks = false;
  cfg.lemma_samples = 0;
  const FuzzResult r = run_fuzz(cfg);
  std::size_t entries = 0;
  int escalations = 0;
  int bound_violations = 0;
  for (const auto& item : r.items) {
    entries += item.report.entries.size();
    escalations += item.report.escalations;
    for (const auto& e : item.report.entries) bound_violations += e.holds ? 0 : 1;
  }
  return {r.violations() == 0 && r.items.size() == 1000,
          std::to_string(r.items.size()) + " pairs, " + std::to_string(entries) + " bound entries, " +
              std::to_string(bound_violations) + " bound violations, " + std::to_string(r.violations()) +
              " total violations, " + std::to_string(escalations) + " escalations"};
}

Outcome equality_suite() {
  const std::uint64_t base = 0xe9a11;
  int failures = 0;
  int triples = 0;
  std::string first;
  auto fail = [&](const std::string& what, int k) {
    ++failures;
    if (first.empty()) first = " first: " + what + " at " + std::to_string(k);
  };
  for (int k = 0; k < 200; ++k) {
    const std::uint64_t seed = derive_seed(base, k);
    const int n = 2 + k % 3;
    const int deficit = (k / 3) % 2;
    const auto a = validate_psd(rnd::random_psd(n, deficit, derive_seed(seed, 0)));
    const double mag = 1.0 / std::sqrt(static_cast<double>(n));
    const Operator s = rnd::random_ba_operator(a, derive_seed(seed, 1), mag);
    const Operator t = rnd::random_ba_operator(a, derive_seed(seed, 2), mag);
    const Operator v = a_unitary_from(a, rnd::random_unitary(a.rank(), derive_seed(seed, 3)));
    ++triples;

    const auto eq = block_equalities(a, s, t, {}, v);
    for (const auto& c : eq.checks) {
      if (!c.holds) fail(c.check_id, k);
    }
    for (const auto& c : pair_identities(a, s, t, {})) {
      if (!c.holds) fail(c.check_id, k);
    }
    // Sandwich max{w, ||S||^2} <= dw <= sqrt(w^2 + ||S||^4) and w(S) = w(S^#).
    const DwResult dw = a_dw_radius(a, s);
    const double w = a_numerical_radius(a, s);
    const double nn = a_op_norm(a, s);
    if (std::max(w, nn * nn) > dw.value + 1e-8) fail("sandwich_lower", k);
    if (dw.value > std::sqrt(w * w + nn * nn * nn * nn) + 1e-8) fail("sandwich_upper", k);
    if (std::abs(w - a_numerical_radius(a, a_adjoint(a, s))) > 1e-8) fail("omega_adjoint", k);
  }
  return {failures == 0, std::to_string(triples) + " triples, " + std::to_string(failures) + " failures" + first};
}

Outcome lemma_suite() {
  LemmaSuiteConfig cfg;
  cfg.seed = 7;
  cfg.samples = 10000;
  const auto results = run_lemma_suite(cfg);
  int violations = 0;
  double worst = 0.0;
  bool counts_ok = true;
  for (const auto& r : results) {
    violations += r.violations;
    worst = std::min(worst, r.min_slack);
    counts_ok = counts_ok && r.samples == 10000;
  }
  return {violations == 0 && counts_ok && worst >= -kLemmaTolerance && results.size() == 9,
          std::to_string(results.size()) + " lemma checks x 10000 samples, " + std::to_string(violations) +
              " violations, min slack " + fmt("%.2e", worst)};
}

Outcome oracle_equivalence() {
  const std::uint64_t base = 0x0ac1e;
  double worst = 0.0;
  int over = 0;
  for (int k = 0; k < 100; ++k) {
    const std::uint64_t seed = derive_seed(base, k);
    const int n = 2 + k % 3;
    const int rank = (k % 5 == 4) ? 1 : 2;
    const auto a = validate_psd(rnd::random_psd(n, n - rank, derive_seed(seed, 0)));
    const Operator s = rnd::random_ba_operator(a, derive_seed(seed, 1), 1.0 / std::sqrt(static_cast<double>(n)));
    const double ours = a_dw_radius(a, s).value;
    const double grid = oracle::dw_grid(a.matrix(), s);
    const double d = std::abs(ours - grid);
    worst = std::max(worst, d);
    if (d > 1e-6) ++over;
  }
  return {over == 0, "100 pairs with rank <= 2, " + std::to_string(over) + " outside 1e-6, max deviation " +
                         fmt("%.2e", worst)};
}

Outcome determinism() {
  FuzzConfig cfg;
  cfg.seed = 2024;
  cfg.count = 40;
  cfg.lemma_samples = 200;
  cfg.threads = 1;
  const std::string a = run_fuzz(cfg).csv();
  const std::string b = run_fuzz(cfg).csv();
  cfg.threads = 4;
  const std::string c = run_fuzz(cfg).csv();
  const bool pass = !a.empty() && a == b && a == c;
  return {pass, "40-pair corpus, " + std::to_string(a.size()) + " CSV bytes, same-seed runs " +
                    (a == b ? "identical" : "differ") + ", 1 vs 4 threads " + (a == c ? "identical" : "differ")};
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "example reproduction", reproduction);
  all &= report(2, "closed-form dw values", closed_forms);
  all &= report(3, "inequality suite", inequality_suite);
  all &= report(4, "equality suite", equality_suite);
  all &= report(5, "lemma suite", lemma_suite);
  all &= report(6, "oracle equivalence", oracle_equivalence);
  all &= report(7, "determinism", determinism);
  std::printf("overall: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
