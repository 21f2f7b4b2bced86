#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dwrad/io.hpp"
#include "dwrad/random.hpp"

using namespace dwrad;
using io::json;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::NotPSD;
}

}  // namespace

TEST(FormatDouble, RoundTrips) {
  for (double v : {0.0, 1.0, -2.5, 1.0 / 3.0, 4.47213595499958, 1e-300, 6.02214076e23}) {
    EXPECT_EQ(std::stod(io::format_double(v)), v);
  }
  EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
}

TEST(MatrixJson, RoundTripIsExact) {
  const Matrix m = rnd::gaussian_matrix(3, 3, 11);
  const json j = io::matrix_to_json(m);
  EXPECT_EQ(j.at("dim").get<int>(), 3);
  EXPECT_EQ(io::matrix_from_json(j), m);
  EXPECT_EQ(io::matrix_from_json(io::parse_json(j.dump())), m);
}

TEST(MatrixJson, AcceptsBareRealEntries) {
  const json j = io::parse_json(R"({"dim": 2, "entries": [[1, [0, 2]], [3.5, 4]]})");
  Matrix expected(2, 2);
  expected << 1, Complex(0, 2), 3.5, 4;
  EXPECT_EQ(io::matrix_from_json(j), expected);
}

TEST(MatrixJson, RejectsMalformed) {
  for (const char* text : {R"({"dim": 2, "entries": [[1, 2]]})", R"({"dim": 2, "entries": [[1, 2], [3]]})",
                           R"({"entries": [[1]]})", R"({"dim": 1, "entries": [["x"]]})",
                           R"({"dim": 1, "entries": [[[1, 2, 3]]]})", R"([1, 2])"}) {
    EXPECT_EQ(code_of([&] { io::matrix_from_json(io::parse_json(text)); }), ErrorCode::ParseError) << text;
  }
  EXPECT_EQ(code_of([] { io::parse_json("{not json"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::read_json_file("/nonexistent/path.json"); }), ErrorCode::ParseError);
}

TEST(PairJson, ParsesAndRejects) {
  const auto p = io::pair_from_json(io::parse_json(
      R"({"A": {"dim": 2, "entries": [[1, 0], [0, 2]]}, "S": {"dim": 2, "entries": [[0, 1], [0, 0]]}})"));
  EXPECT_EQ(p.a(1, 1), Complex(2, 0));
  EXPECT_EQ(p.s(0, 1), Complex(1, 0));
  EXPECT_EQ(code_of([] { io::pair_from_json(io::parse_json(R"({"A": {"dim": 1, "entries": [[1]]}})")); }),
            ErrorCode::ParseError);
}

TEST(BlockJson, EitherPairOfNames) {
  const auto bc = io::block_from_json(io::parse_json(
      R"({"A": {"dim": 1, "entries": [[1]]}, "B": {"dim": 1, "entries": [[2]]}, "C": {"dim": 1, "entries": [[3]]}})"));
  EXPECT_TRUE(bc.has_bc());
  EXPECT_FALSE(bc.has_st());
  const auto st = io::block_from_json(io::parse_json(
      R"({"A": {"dim": 1, "entries": [[1]]}, "S": {"dim": 1, "entries": [[2]]}, "T": {"dim": 1, "entries": [[3]]}})"));
  EXPECT_TRUE(st.has_st());
  EXPECT_FALSE(st.has_bc());
}

TEST(ReadFile, ReadsWrittenFile) {
  const std::string path = ::testing::TempDir() + "dwrad_io_test.json";
  {
    std::ofstream out(path);
    out << R"({"dim": 1, "entries": [[[1.5, -2]]]})";
  }
  const Matrix m = io::matrix_from_json(io::read_json_file(path));
  EXPECT_EQ(m(0, 0), Complex(1.5, -2));
  std::remove(path.c_str());
}

TEST(ReportCsv, HeaderAndRowShape) {
  EXPECT_EQ(io::report_csv_header(), "pair_id,bound_id,kind,params,value,dw_lower,dw_cap,holds,slack\n");
  Matrix d(2, 2);
  d << 1, 0, 0, 2;
  const auto rep = bound_report(validate_psd(d), d);
  const std::string rows = io::report_csv_rows("7", rep);
  std::istringstream in(rows);
  std::string line;
  int n = 0;
  bool saw_alpha = false;
  while (std::getline(in, line)) {
    ++n;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 8) << line;
    EXPECT_EQ(line.rfind("7,", 0), 0u);
    if (line.find("alpha_re=") != std::string::npos) saw_alpha = true;
  }
  EXPECT_EQ(n, static_cast<int>(rep.entries.size()));
  EXPECT_TRUE(saw_alpha);
  EXPECT_NE(rows.find("7,th11,upper,"), std::string::npos);
}

TEST(ReportJson, Fields) {
  Matrix d(2, 2);
  d << 1, 0, 0, 2;
  const auto rep = bound_report(validate_psd(d), d);
  const json j = io::report_to_json(rep);
  EXPECT_TRUE(j.contains("dw"));
  EXPECT_TRUE(j.contains("entries"));
  EXPECT_NEAR(j.at("dw").at("value").get<double>(), std::sqrt(20.0), 1e-9);
  const json dj = io::dw_to_json(rep.dw);
  EXPECT_TRUE(dj.contains("upper_cap"));
  EXPECT_TRUE(dj.contains("converged"));
}
