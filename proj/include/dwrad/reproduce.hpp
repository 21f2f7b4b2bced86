#pragma once

#include <string>
#include <vector>

#include "dwrad/config.hpp"

namespace dwrad {

/// One worked comparison between a prior bound and a sharper one on a fixed
/// example pair. Values are on the scale the comparison is stated on (dw^2
/// for most rows, dw for after_th3); dw_lower is always dw itself.
struct ReproduceRow {
  std::string remark_id;
  double paper_bound_value = 0.0;
  double our_bound_value = 0.0;
  double dw_lower = 0.0;
  std::string verdict;
  bool ok = false;
};

inline constexpr double kReproduceTolerance = 1e-9;

/// Rows: intro_adjoint, re11, re12, after_th3, re181, after_eq20, after_eq23.
/// A row is ok when both values match the expected closed forms within
/// 1e-9, the claimed improvement direction holds, and both bounds are
/// consistent with the computed dw.
std::vector<ReproduceRow> run_reproduce(const OptimizerConfig& cfg = {});

/// remark_id,paper_bound_value,our_bound_value,dw_lower,verdict
std::string reproduce_csv(const std::vector<ReproduceRow>& rows);

}  // namespace dwrad
