// dwrad: weighted numerical radius and Davis-Wielandt radius toolkit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dwrad/blocks.hpp"
#include "dwrad/bounds.hpp"
#include "dwrad/fuzz.hpp"
#include "dwrad/io.hpp"
#include "dwrad/lemmas.hpp"
#include "dwrad/radii.hpp"
#include "dwrad/reproduce.hpp"

namespace {

using dwrad::io::json;

constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNonConvergence = 4;

struct OptFlags {
  std::string config;
  std::uint64_t seed = 0;
  int restarts = 0;
  int theta_grid = 0;
  int alpha_grid = 0;
  double tol = 0.0;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* restarts_opt = nullptr;
  CLI::Option* theta_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* tol_opt = nullptr;

  void attach(CLI::App* app) {
    app->add_option("--config", config, "JSON file with optimizer settings")->check(CLI::ExistingFile);
    seed_opt = app->add_option("--seed", seed, "Base seed");
    restarts_opt = app->add_option("--restarts", restarts, "Random restarts of the dw optimizer");
    theta_opt = app->add_option("--theta-grid", theta_grid, "Angle grid for numerical radius scans");
    alpha_opt = app->add_option("--alpha-grid", alpha_grid, "Alpha grid for the min-over-alpha bound");
    tol_opt = app->add_option("--tol", tol, "Refinement tolerance");
  }

  // The config file first, then each flag that was given.
  dwrad::OptimizerConfig resolve() const {
    dwrad::OptimizerConfig cfg;
    if (!config.empty()) cfg = dwrad::load_optimizer_config(config, cfg);
    if (seed_opt->count() > 0) cfg.seed = seed;
    if (restarts_opt->count() > 0) cfg.restarts = restarts;
    if (theta_opt->count() > 0) cfg.theta_grid = theta_grid;
    if (alpha_opt->count() > 0) cfg.alpha_grid = alpha_grid;
    if (tol_opt->count() > 0) cfg.refine_tol = tol;
    cfg.validate();
    return cfg;
  }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dwrad::Error(dwrad::ErrorCode::ConfigError, "cannot write '" + path + "'");
  out << text;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_compute(const std::string& file, const dwrad::OptimizerConfig& cfg) {
  const auto pair = dwrad::io::pair_from_json(dwrad::io::read_json_file(file));
  const auto a = dwrad::validate_psd(pair.a);
  const auto adj = dwrad::a_adjoint(a, pair.s);
  const auto dw = dwrad::a_dw_radius(a, pair.s, cfg);
  json out = {{"norm_A", dwrad::a_op_norm(a, pair.s)},
              {"omega_A", dwrad::a_numerical_radius(a, pair.s, cfg)},
              {"c_A", dwrad::a_crawford(a, pair.s, cfg)},
              {"m_A", dwrad::a_min_modulus(a, pair.s)},
              {"dw_A", {{"value", dw.value}, {"upper_cap", dw.upper_cap}, {"converged", dw.converged}}},
              {"S_adjoint", dwrad::io::matrix_to_json(adj)}};
  print_json(out);
  return dw.converged ? 0 : kExitNonConvergence;
}

int cmd_bounds(const std::string& file, const std::string& out_csv, const dwrad::OptimizerConfig& cfg) {
  const auto pair = dwrad::io::pair_from_json(dwrad::io::read_json_file(file));
  const auto a = dwrad::validate_psd(pair.a);
  const auto report = dwrad::bound_report(a, pair.s, cfg);
  print_json(dwrad::io::report_to_json(report));
  if (!out_csv.empty()) write_file(out_csv, dwrad::io::report_csv_header() + dwrad::io::report_csv_rows("0", report));
  if (!report.all_hold()) return kExitViolation;
  return report.dw.converged ? 0 : kExitNonConvergence;
}

int cmd_verify(const std::string& file, const dwrad::OptimizerConfig& cfg) {
  const json j = dwrad::io::read_json_file(file);
  bool ok = true;
  json out = json::object();
  if (j.contains("S") && !j.contains("T")) {
    const auto pair = dwrad::io::pair_from_json(j);
    const auto a = dwrad::validate_psd(pair.a);
    const auto report = dwrad::bound_report(a, pair.s, cfg);
    const auto ids = dwrad::pair_identities(a, pair.s, pair.s, cfg);
    json checks = json::array();
    for (const auto& c : ids) {
      checks.push_back({{"check_id", c.check_id}, {"error", c.error}, {"tol", c.tol}, {"holds", c.holds}});
      ok = ok && c.holds;
    }
    out["bounds"] = dwrad::io::report_to_json(report);
    out["identities"] = std::move(checks);
    ok = ok && report.all_hold();
  } else {
    const auto blocks = dwrad::io::block_from_json(j);
    const auto a = dwrad::validate_psd(blocks.a);
    if (blocks.has_bc()) {
      const auto lifted = dwrad::lift_weight(a);
      const double dw =
          dwrad::a_dw_radius(lifted, dwrad::BlockOperator::antidiag(blocks.b, blocks.c).assembled(), cfg).value;
      json entries = json::array();
      auto add = [&](const char* id, double v) {
        const bool holds = v >= dw - dwrad::kBoundTolerance;
        ok = ok && holds;
        entries.push_back({{"bound_id", id}, {"value", v}, {"holds", holds}});
      };
      add("TT", dwrad::bound_TT(a, blocks.b, blocks.c, cfg));
      add("th310", dwrad::bound_th310(a, blocks.b, blocks.c, cfg));
      add("th312", dwrad::bound_th312(a, blocks.b, blocks.c, cfg));
      out["dw_lifted"] = dw;
      out["block_bounds"] = std::move(entries);
    }
    if (blocks.has_st()) {
      const auto report = dwrad::block_equalities(a, blocks.s, blocks.t, cfg);
      out["equalities"] = dwrad::io::equalities_to_json(report);
      ok = ok && report.all_hold();
    }
  }
  out["all_hold"] = ok;
  print_json(out);
  return ok ? 0 : kExitViolation;
}

int cmd_fuzz(dwrad::FuzzConfig fc, const std::string& out_csv, const std::string& summary_path) {
  const auto result = dwrad::run_fuzz(fc);
  if (!out_csv.empty()) write_file(out_csv, result.csv());
  const json summary = result.summary(fc);
  if (!summary_path.empty()) {
    write_file(summary_path, summary.dump(2) + "\n");
  } else {
    print_json(summary);
  }
  return result.violations() == 0 ? 0 : kExitViolation;
}

int cmd_lemmas(const dwrad::LemmaSuiteConfig& lc) {
  const auto results = dwrad::run_lemma_suite(lc);
  int violations = 0;
  for (const auto& r : results) {
    std::cout << dwrad::io::lemma_result_to_json(r).dump() << '\n';
    violations += r.violations;
  }
  return violations == 0 ? 0 : kExitViolation;
}

int cmd_reproduce(const std::string& out_csv, const dwrad::OptimizerConfig& cfg) {
  const auto rows = dwrad::run_reproduce(cfg);
  const std::string csv = dwrad::reproduce_csv(rows);
  std::cout << csv;
  if (!out_csv.empty()) write_file(out_csv, csv);
  bool ok = true;
  for (const auto& r : rows) {
    if (!r.ok) {
      std::cerr << "mismatch: " << r.remark_id << " (" << r.verdict << ")\n";
      ok = false;
    }
  }
  return ok ? 0 : kExitViolation;
}

int exit_code_for(dwrad::ErrorCode code) {
  switch (code) {
    case dwrad::ErrorCode::ParseError:
    case dwrad::ErrorCode::ConfigError:
    case dwrad::ErrorCode::DimensionMismatch:
    case dwrad::ErrorCode::InvalidParam:
    case dwrad::ErrorCode::UnknownBoundId:
      return kExitParse;
    default:
      return kExitDomain;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted numerical radius, Crawford number and Davis-Wielandt radius toolkit"};
  app.require_subcommand(1);

  OptFlags flags;
  std::string file;
  std::string out;

  auto* compute = app.add_subcommand("compute", "All A-quantities of a pair file");
  compute->add_option("file", file, "Pair JSON {\"A\":..., \"S\":...}")->required();
  flags.attach(compute);

  auto* bounds = app.add_subcommand("bounds", "Bound report for a pair file");
  bounds->add_option("file", file, "Pair JSON")->required();
  bounds->add_option("--out", out, "Also write the report as CSV");
  OptFlags bounds_flags;
  bounds_flags.attach(bounds);

  auto* verify = app.add_subcommand("verify", "Check a pair file or a block file");
  verify->add_option("file", file, "Pair JSON, or block JSON with B,C and/or S,T")->required();
  OptFlags verify_flags;
  verify_flags.attach(verify);

  dwrad::FuzzConfig fc;
  std::string summary_path;
  bool no_blocks = false;
  auto* fuzz = app.add_subcommand("fuzz", "Generate and check a seeded corpus");
  fuzz->add_option("--count", fc.count, "Number of pairs");
  fuzz->add_option("--dims", fc.dims, "Dimensions, cycled")->delimiter(',');
  fuzz->add_option("--rank-deficit", fc.rank_deficit, "Rank deficits of A, cycled")->delimiter(',');
  fuzz->add_option("--magnitude", fc.magnitude, "Entry scale");
  fuzz->add_option("--threads", fc.threads, "Worker threads, 0 for all cores");
  fuzz->add_option("--lemma-samples", fc.lemma_samples, "Samples per lemma, 0 to skip");
  fuzz->add_flag("--no-blocks", no_blocks, "Skip the block equalities");
  fuzz->add_option("--out", out, "CSV of every bound entry");
  fuzz->add_option("--summary", summary_path, "Write the summary JSON here instead of stdout");
  OptFlags fuzz_flags;
  fuzz_flags.attach(fuzz);

  dwrad::LemmaSuiteConfig lc;
  auto* lemmas = app.add_subcommand("lemmas", "Run every lemma check on seeded samples");
  lemmas->add_option("--seed", lc.seed, "Base seed");
  lemmas->add_option("--count,--samples", lc.samples, "Samples per lemma");
  lemmas->add_option("--dims", lc.dims, "Dimensions, cycled")->delimiter(',');
  lemmas->add_option("--rank-deficit", lc.rank_deficits, "Rank deficits of A, cycled")->delimiter(',');

  auto* reproduce = app.add_subcommand("reproduce", "Regenerate the worked comparison table");
  reproduce->add_option("--out", out, "Also write the CSV here");
  OptFlags reproduce_flags;
  reproduce_flags.attach(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (*compute) return cmd_compute(file, flags.resolve());
    if (*bounds) return cmd_bounds(file, out, bounds_flags.resolve());
    if (*verify) return cmd_verify(file, verify_flags.resolve());
    if (*fuzz) {
      fc.opt = fuzz_flags.resolve();
      if (fuzz_flags.seed_opt->count() > 0) fc.seed = fuzz_flags.seed;
      fc.blocks = !no_blocks;
      return cmd_fuzz(fc, out, summary_path);
    }
    if (*lemmas) return cmd_lemmas(lc);
    if (*reproduce) return cmd_reproduce(out, reproduce_flags.resolve());
  } catch (const dwrad::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return 0;
}
