#include "dwrad/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dwrad::io {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return {{"dim", m.rows()}, {"entries", std::move(rows)}};
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double number(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

Matrix matrix_from_json(const json& j) {
  if (!j.is_object()) bad("matrix must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) bad("matrix needs an integer 'dim'");
  const auto n = j["dim"].get<long long>();
  if (n < 1 || n > 4096) bad("matrix dim out of range");
  if (!j.contains("entries") || !j["entries"].is_array()) bad("matrix needs an 'entries' array");
  const json& rows = j["entries"];
  if (static_cast<long long>(rows.size()) != n) bad("entries must have 'dim' rows");
  Matrix m(n, n);
  for (long long i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<long long>(row.size()) != n) bad("each row must have 'dim' entries");
    for (long long k = 0; k < n; ++k) {
      const json& e = row[static_cast<std::size_t>(k)];
      // A bare number is accepted as a real entry.
      if (e.is_number()) {
        m(i, k) = Complex(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2) {
        m(i, k) = Complex(number(e[0], "real part"), number(e[1], "imaginary part"));
      } else {
        bad("entry must be [re, im]");
      }
    }
  }
  return m;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

namespace {

Matrix field(const json& j, const char* name, bool required) {
  if (!j.contains(name)) {
    if (required) bad(std::string("missing field '") + name + "'");
    return Matrix();
  }
  return matrix_from_json(j[name]);
}

}  // namespace

PairInput pair_from_json(const json& j) {
  if (!j.is_object()) bad("pair file must be an object");
  PairInput p{field(j, "A", true), field(j, "S", true)};
  if (p.a.rows() != p.s.rows()) bad("A and S must have the same dim");
  return p;
}

BlockInput block_from_json(const json& j) {
  if (!j.is_object()) bad("block file must be an object");
  BlockInput b;
  b.a = field(j, "A", true);
  b.b = field(j, "B", false);
  b.c = field(j, "C", false);
  b.s = field(j, "S", false);
  b.t = field(j, "T", false);
  if (!b.has_bc() && !b.has_st()) bad("block file needs B and C, or S and T");
  for (const Matrix* m : {&b.b, &b.c, &b.s, &b.t}) {
    if (m->size() > 0 && m->rows() != b.a.rows()) bad("all blocks must match the dim of A");
  }
  return b;
}

json dw_to_json(const DwResult& dw) {
  return {{"value", dw.value},
          {"upper_cap", dw.upper_cap},
          {"converged", dw.converged},
          {"restarts_used", dw.restarts_used},
          {"witness", vector_to_json(dw.witness)}};
}

json report_to_json(const BoundReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"bound_id", e.bound_id},
                       {"kind", to_string(e.kind)},
                       {"value", e.value},
                       {"params", e.params},
                       {"holds", e.holds},
                       {"slack", e.slack},
                       {"optimizer_dependent", e.optimizer_dependent},
                       {"floored", e.floored}});
  }
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"check_id", c.check_id}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"tol", c.tol}, {"holds", c.holds}});
  }
  return {{"dw", dw_to_json(r.dw)},
          {"entries", std::move(entries)},
          {"checks", std::move(checks)},
          {"escalations", r.escalations},
          {"mu_eta_negative_samples", r.mu_eta_negative_samples},
          {"all_hold", r.all_hold()}};
}

json equalities_to_json(const BlockEqualityReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"check_id", c.check_id},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"tol", c.tol},
                      {"holds", c.holds},
                      {"escalations", c.escalations}});
  }
  return {{"checks", std::move(checks)}, {"all_hold", r.all_hold()}};
}

json lemma_result_to_json(const LemmaCheckResult& r) {
  return {{"lemma_id", r.lemma_id}, {"samples", r.samples}, {"min_slack", r.min_slack}, {"violations", r.violations}};
}

std::string report_csv_header() { return "pair_id,bound_id,kind,params,value,dw_lower,dw_cap,holds,slack\n"; }

std::string report_csv_rows(const std::string& pair_id, const BoundReport& r) {
  std::string out;
  for (const auto& e : r.entries) {
    std::string params;
    for (const auto& [k, v] : e.params) {
      if (!params.empty()) params += ';';
      params += k + "=" + format_double(v);
    }
    out += pair_id + ',' + e.bound_id + ',' + to_string(e.kind) + ',' + params + ',' + format_double(e.value) + ',' +
           format_double(r.dw.value) + ',' + format_double(r.dw.upper_cap) + ',' + (e.holds ? "true" : "false") +
           ',' + format_double(e.slack) + '\n';
  }
  return out;
}

}  // namespace dwrad::io
