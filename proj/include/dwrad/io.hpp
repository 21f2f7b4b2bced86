#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dwrad/blocks.hpp"
#include "dwrad/bounds.hpp"
#include "dwrad/lemmas.hpp"

// JSON and CSV formats. A matrix is {"dim": n, "entries": [[[re, im], ...], ...]}
// in row-major order.
namespace dwrad::io {

using json = nlohmann::json;

/// 17 significant digits, enough to round-trip a double.
std::string format_double(double v);

json matrix_to_json(const Matrix& m);
/// Throws ParseError on malformed input.
Matrix matrix_from_json(const json& j);
json vector_to_json(const Vector& v);

/// Parses text, throwing ParseError on malformed JSON.
json parse_json(const std::string& text);
/// Reads and parses a file, throwing ParseError if unreadable or malformed.
json read_json_file(const std::string& path);

struct PairInput {
  Matrix a;
  Matrix s;
};
/// {"A": <matrix>, "S": <matrix>}
PairInput pair_from_json(const json& j);

/// {"A": ..., "B": ..., "C": ...} or {"A": ..., "S": ..., "T": ...}; the
/// absent pair of names stays empty.
struct BlockInput {
  Matrix a;
  Matrix b;
  Matrix c;
  Matrix s;
  Matrix t;
  bool has_bc() const { return b.size() > 0 && c.size() > 0; }
  bool has_st() const { return s.size() > 0 && t.size() > 0; }
};
BlockInput block_from_json(const json& j);

json dw_to_json(const DwResult& dw);
json report_to_json(const BoundReport& r);
json equalities_to_json(const BlockEqualityReport& r);
json lemma_result_to_json(const LemmaCheckResult& r);

/// pair_id,bound_id,kind,params,value,dw_lower,dw_cap,holds,slack
std::string report_csv_header();
/// One line per entry, newline-terminated. params is "k=v;k=v".
std::string report_csv_rows(const std::string& pair_id, const BoundReport& r);

}  // namespace dwrad::io
