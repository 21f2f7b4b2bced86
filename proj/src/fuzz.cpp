#include "dwrad/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "dwrad/classical.hpp"
#include "dwrad/io.hpp"
#include "dwrad/radii.hpp"
#include "dwrad/random.hpp"

namespace dwrad {

void FuzzConfig::validate() const {
  if (count < 1) throw Error(ErrorCode::ConfigError, "count must be at least 1");
  if (dims.empty()) throw Error(ErrorCode::ConfigError, "dims must not be empty");
  if (rank_deficit.empty()) throw Error(ErrorCode::ConfigError, "rank_deficit must not be empty");
  const int min_dim = *std::min_element(dims.begin(), dims.end());
  if (min_dim < 2) throw Error(ErrorCode::ConfigError, "dims must be at least 2");
  for (int d : rank_deficit) {
    if (d < 0 || d >= min_dim) throw Error(ErrorCode::ConfigError, "rank_deficit must lie in [0, dim)");
  }
  if (!(magnitude > 0.0)) throw Error(ErrorCode::ConfigError, "magnitude must be positive");
  if (threads < 0) throw Error(ErrorCode::ConfigError, "threads must be nonnegative");
  if (lemma_samples < 0) throw Error(ErrorCode::ConfigError, "lemma_samples must be nonnegative");
  opt.validate();
}

namespace {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

IdentityCheck within(std::string id, double error, double tol) {
  return IdentityCheck{std::move(id), error, tol, error <= tol};
}

// lhs <= rhs + tol, reported as the overshoot.
IdentityCheck at_most(std::string id, double lhs, double rhs, double tol) {
  return within(std::move(id), std::max(0.0, lhs - rhs), tol);
}

}  // namespace

std::vector<IdentityCheck> pair_identities(const HermitianPSD& a, const Operator& s, const Operator& r,
                                           const OptimizerConfig& cfg) {
  std::vector<IdentityCheck> out;
  const Matrix& m = a.matrix();
  const Matrix& pinv = a.pinv();
  const Matrix proj = a.range_projection();
  const int n = a.dim();
  const double sa_scale = std::max(1.0, max_abs(m));

  const Matrix apa = m * pinv;
  const double mp = std::max({max_abs(apa * m - m) / sa_scale, max_abs(pinv * m * pinv - pinv) / std::max(1.0, max_abs(pinv)),
                              max_abs(apa.adjoint() - apa)});
  out.push_back(within("moore_penrose", mp, 1e-10));

  const Operator ss = a_adjoint(a, s);
  const double scale = std::max(1.0, max_abs(s)) * std::max(1.0, max_abs(ss)) * sa_scale;
  out.push_back(within("adjoint_defining", max_abs(m * ss - s.adjoint() * m) / scale, 1e-10));
  out.push_back(within("adjoint_range", max_abs((Matrix::Identity(n, n) - proj) * ss) / scale, 1e-10));
  const Operator sss = a_adjoint(a, ss);
  out.push_back(within("adjoint_double", max_abs(sss - proj * s * proj) / scale, 1e-10));
  out.push_back(within("adjoint_involution", max_abs(a_adjoint(a, sss) - ss) / scale, 1e-10));
  const Operator rs = a_adjoint(a, r);
  const double pscale = scale * std::max(1.0, max_abs(r)) * std::max(1.0, max_abs(rs));
  out.push_back(within("product_rule", max_abs(a_adjoint(a, s * r) - rs * ss) / pscale, 1e-10));

  const Matrix pos = m * ss * s;
  const Matrix herm = 0.5 * (pos + pos.adjoint());
  const double lmin = classical::extreme_eigenvalues(herm).first;
  out.push_back(within("a_positivity", std::max(0.0, -lmin) / scale + max_abs(pos - pos.adjoint()) / scale, 1e-10));

  const Operator re = re_part(a, s);
  const Operator im = im_part(a, s);
  out.push_back(within("re_im_sum", max_abs(m * (re + Complex(0.0, 1.0) * im) - m * s) / scale, 1e-10));
  out.push_back(within("re_selfadjoint", max_abs(m * re - (m * re).adjoint()) / scale, 1e-10));

  // Reduction exactness on lifted unit vectors.
  const ReducedPair pair = reduce(a, s);
  double red_err = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Vector y = classical::random_unit_vector(a.rank(), derive_seed(cfg.seed ^ 0x7ed, static_cast<std::uint64_t>(k)));
    const Vector z = pair.lift(y);
    const Vector ty = pair.reduced * y;
    red_err = std::max({red_err, std::abs(a_norm(a, z) - 1.0), std::abs(y.dot(ty) - a_inner(a, s * z, z)),
                        std::abs(ty.norm() - a_norm(a, s * z))});
  }
  const double red_scale = std::max(1.0, classical::spectral_norm(pair.reduced));
  out.push_back(within("reduction_exactness", red_err / red_scale, 1e-10));

  const double w = a_numerical_radius(a, s, cfg);
  const double nrm = a_op_norm(a, s);
  out.push_back(within("omega_adjoint", std::abs(w - a_numerical_radius(a, ss, cfg)), 1e-8));
  out.push_back(within("norm_adjoint", std::abs(nrm - a_op_norm(a, ss)), 1e-9));
  out.push_back(within("norm_square", std::abs(nrm * nrm - a_op_norm(a, ss * s)), 1e-9 * std::max(1.0, nrm * nrm)));
  out.push_back(at_most("omega_lower", 0.5 * nrm, w, 1e-9));
  out.push_back(at_most("omega_upper", w, nrm, 1e-9));
  out.push_back(at_most("power_2", a_numerical_radius(a, s * s, cfg), w * w, 1e-8));
  out.push_back(at_most("power_3", a_numerical_radius(a, s * s * s, cfg), w * w * w, 1e-8));
  out.push_back(at_most("submultiplicative", a_op_norm(a, s * r), nrm * a_op_norm(a, r), 1e-9));
  return out;
}

std::string FuzzItem::pair_id() const { return std::to_string(index); }

int FuzzItem::violations() const {
  int v = error.empty() ? 0 : 1;
  for (const auto& e : report.entries) v += e.holds ? 0 : 1;
  for (const auto& c : report.checks) v += c.holds ? 0 : 1;
  v += report.mu_eta_negative_samples > 0 ? 1 : 0;
  for (const auto& c : identities) v += c.holds ? 0 : 1;
  if (blocks) {
    for (const auto& c : blocks->checks) v += c.holds ? 0 : 1;
  }
  return v;
}

int FuzzResult::violations() const {
  int v = 0;
  for (const auto& item : items) v += item.violations();
  for (const auto& l : lemmas) v += l.violations;
  return v;
}

std::string FuzzResult::csv() const {
  std::string out = io::report_csv_header();
  for (const auto& item : items) out += io::report_csv_rows(item.pair_id(), item.report);
  return out;
}

nlohmann::json FuzzResult::summary(const FuzzConfig& cfg) const {
  using nlohmann::json;
  json failures = json::array();
  int escalations = 0;
  int entries = 0;
  int identity_checks = 0;
  int block_checks = 0;
  for (const auto& item : items) {
    escalations += item.report.escalations;
    entries += static_cast<int>(item.report.entries.size());
    identity_checks += static_cast<int>(item.identities.size());
    if (item.blocks) block_checks += static_cast<int>(item.blocks->checks.size());
    if (item.violations() == 0) continue;
    json f = {{"pair_id", item.pair_id()},
              {"dim", item.dim},
              {"rank_deficit", item.deficit},
              {"A", io::matrix_to_json(item.a)},
              {"S", io::matrix_to_json(item.s)},
              {"T", io::matrix_to_json(item.t)}};
    if (!item.error.empty()) f["error"] = item.error;
    json failed = json::array();
    for (const auto& e : item.report.entries) {
      if (!e.holds) failed.push_back({{"bound_id", e.bound_id}, {"kind", to_string(e.kind)}, {"value", e.value},
                                      {"dw_lower", item.report.dw.value}});
    }
    for (const auto& c : item.report.checks) {
      if (!c.holds) failed.push_back({{"check_id", c.check_id}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    }
    if (item.report.mu_eta_negative_samples > 0) {
      failed.push_back({{"check_id", "mu_eta_negative"}, {"samples", item.report.mu_eta_negative_samples}});
    }
    for (const auto& c : item.identities) {
      if (!c.holds) failed.push_back({{"check_id", c.check_id}, {"error", c.error}, {"tol", c.tol}});
    }
    if (item.blocks) {
      for (const auto& c : item.blocks->checks) {
        if (!c.holds) failed.push_back({{"check_id", c.check_id}, {"lhs", c.lhs}, {"rhs", c.rhs}});
      }
    }
    f["failed"] = std::move(failed);
    failures.push_back(std::move(f));
  }
  json lemmas_json = json::array();
  for (const auto& l : lemmas) lemmas_json.push_back(io::lemma_result_to_json(l));
  return {{"seed", cfg.seed},
          {"count", static_cast<int>(items.size())},
          {"dims", cfg.dims},
          {"rank_deficit", cfg.rank_deficit},
          {"bound_entries", entries},
          {"identity_checks", identity_checks},
          {"block_checks", block_checks},
          {"escalations", escalations},
          {"lemmas", std::move(lemmas_json)},
          {"violations", violations()},
          {"failures", std::move(failures)}};
}

FuzzItem make_fuzz_item(const FuzzConfig& cfg, int index) {
  const auto k = static_cast<std::uint64_t>(index);
  const std::size_t nd = cfg.dims.size();
  FuzzItem item;
  item.index = index;
  item.dim = cfg.dims[k % nd];
  item.deficit = cfg.rank_deficit[(k / nd) % cfg.rank_deficit.size()];
  const std::uint64_t base = derive_seed(cfg.seed, k);
  const double mag = cfg.magnitude / std::sqrt(static_cast<double>(item.dim));
  item.a = rnd::random_psd(item.dim, item.deficit, derive_seed(base, 0), mag);
  const HermitianPSD a = validate_psd(item.a);
  item.s = rnd::random_ba_operator(a, derive_seed(base, 1), mag);
  item.t = rnd::random_ba_operator(a, derive_seed(base, 2), mag);
  return item;
}

namespace {

void evaluate(const FuzzConfig& cfg, FuzzItem& item) {
  const std::uint64_t base = derive_seed(cfg.seed, static_cast<std::uint64_t>(item.index));
  OptimizerConfig opt = cfg.opt;
  opt.seed = derive_seed(base, 4);
  try {
    const HermitianPSD a = validate_psd(item.a);
    item.report = bound_report(a, item.s, opt);
    item.identities = pair_identities(a, item.s, item.t, opt);
    if (cfg.blocks && item.index % 2 == 0) {
      const Operator v = a_unitary_from(a, rnd::random_unitary(a.rank(), derive_seed(base, 3)));
      item.blocks = block_equalities(a, item.s, item.t, opt, v);
    }
  } catch (const std::exception& e) {
    item.error = e.what();
  }
}

}  // namespace

FuzzResult run_fuzz(const FuzzConfig& cfg) {
  cfg.validate();
  FuzzResult result;
  result.items.resize(static_cast<std::size_t>(cfg.count));
  for (int k = 0; k < cfg.count; ++k) result.items[k] = make_fuzz_item(cfg, k);

  int workers = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, cfg.count);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int k = next++; k < cfg.count; k = next++) evaluate(cfg, result.items[k]);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  if (cfg.lemma_samples > 0) {
    LemmaSuiteConfig lc;
    lc.seed = derive_seed(cfg.seed, 0x1e44a);
    lc.samples = cfg.lemma_samples;
    lc.dims = cfg.dims;
    lc.rank_deficits = cfg.rank_deficit;
    result.lemmas = run_lemma_suite(lc);
  }
  return result;
}

}  // namespace dwrad
