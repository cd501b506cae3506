#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "isum/cli.hpp"
#include "oracle/frozen_values.hpp"

using isum::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(Cli, EvalHalf) {
  Outcome o = call({"eval", "--g", "log", "--x", "0.5", "--tol", "1e-10", "--format", "csv"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto rows = csv_rows(o.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][0], "x");
  EXPECT_EQ(rows[0][4], "method");
  double v = std::strtod(rows[1][1].c_str(), nullptr);
  double b = std::strtod(rows[1][2].c_str(), nullptr);
  EXPECT_LE(b, 1e-10);
  EXPECT_NEAR(v, frozen::kHalfLnPi, b);
}

TEST(Cli, ConstRaabe) {
  Outcome o = call({"const", "--g", "log", "--method", "raabe", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto doc = nlohmann::json::parse(o.out);
  EXPECT_NEAR(doc["rows"][0]["value"].get<double>(), frozen::kSigmaLog, 1e-9);
  EXPECT_TRUE(doc["rows"][0]["x"].is_null());
}

TEST(Cli, QuadExample) {
  Outcome o = call({"quad", "--g", "scaled-ln", "--m", "1", "--n", "20", "--q", "10", "--format", "csv"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto rows = csv_rows(o.out);
  EXPECT_EQ(rows[1][4], "gregory q=10");
  EXPECT_NEAR(std::strtod(rows[1][1].c_str(), nullptr), frozen::kGregoryTrue, 3e-10);
}

TEST(Cli, JsonRoundTripIsBitExact) {
  std::vector<std::string> base = {"eval", "--g", "reciprocal", "--grid", "0.25:3:0.25", "--threads", "3"};
  auto j = base, c = base;
  j.insert(j.end(), {"--format", "json"});
  c.insert(c.end(), {"--format", "csv"});
  Outcome oj = call(j), oc = call(c);
  ASSERT_EQ(oj.code, 0) << oj.err;
  auto doc = nlohmann::json::parse(oj.out);
  auto rows = csv_rows(oc.out);
  ASSERT_EQ(doc["rows"].size() + 1, rows.size());
  for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
    const auto& r = doc["rows"][i];
    EXPECT_EQ(r["x"].get<double>(), std::strtod(rows[i + 1][0].c_str(), nullptr));
    EXPECT_EQ(r["value"].get<double>(), std::strtod(rows[i + 1][1].c_str(), nullptr));
    EXPECT_EQ(r["error_bound"].get<double>(), std::strtod(rows[i + 1][2].c_str(), nullptr));
  }
}

TEST(Cli, GridOrderIsDeterministic) {
  Outcome a = call({"eval", "--g", "log", "--grid", "0.5:8:0.5", "--threads", "1", "--format", "csv"});
  Outcome b = call({"eval", "--g", "log", "--grid", "0.5:8:0.5", "--threads", "8", "--format", "csv"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ParseGrid) {
  auto xs = isum::cli::parse_grid("1:2:0.25");
  ASSERT_EQ(xs.size(), 5u);
  EXPECT_DOUBLE_EQ(xs.back(), 2.0);
  EXPECT_THROW(isum::cli::parse_grid("2:1:0.5"), std::invalid_argument);
  EXPECT_THROW(isum::cli::parse_grid("1:2:0"), std::invalid_argument);
  EXPECT_THROW(isum::cli::parse_grid("1:2"), std::invalid_argument);
  EXPECT_THROW(isum::cli::parse_grid("a:2:1"), std::invalid_argument);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({"eval", "--g", "no-such", "--x", "1"}).code, 1);
  EXPECT_EQ(call({"eval", "--g", "log", "--grid", "3:1:1"}).code, 1);
  EXPECT_EQ(call({"eval", "--g", "log", "--x", "1", "--tol", "0.5"}).code, 1);
  EXPECT_EQ(call({"eval", "--g", "log", "--x", "1", "--tol", "0"}).code, 1);
  EXPECT_EQ(call({"eval", "--g", "log"}).code, 1);
  EXPECT_EQ(call({"frobnicate"}).code, 1);
  EXPECT_EQ(call({"eval", "--g", "expr:x+", "--x", "1"}).code, 1);
}

TEST(Cli, RefusalExitCode) {
  // 1/x is not integrable at 0, so sigma-bar does not exist.
  Outcome o = call({"const", "--g", "reciprocal", "--what", "sigmabar"});
  EXPECT_EQ(o.code, 2);
}

TEST(Cli, Expressions) {
  Outcome o = call({"eval", "--g", "expr:ln(x)", "--x", "0.5", "--format", "csv"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NEAR(std::strtod(csv_rows(o.out)[1][1].c_str(), nullptr), frozen::kHalfLnPi, 1e-9);
}

TEST(Cli, VerifyAll) {
  Outcome o = call({"verify", "--all", "--format", "csv"});
  EXPECT_EQ(o.code, 0) << o.out;
}

TEST(Cli, VerifyFailsOnWrongGolden) {
  std::string path = ::testing::TempDir() + "bad_goldens.tsv";
  {
    std::ofstream f(path);
    f << "log\tsigma\t-0.08\twrong on purpose\n";
  }
  Outcome o = call({"verify", "--g", "log", "--goldens", path});
  EXPECT_EQ(o.code, 2);
  std::remove(path.c_str());
}

TEST(Cli, Identities) {
  EXPECT_EQ(call({"identity", "--name", "multiplication", "--g", "log", "--m", "3", "--x", "0.5"}).code, 0);
  EXPECT_EQ(call({"identity", "--name", "webster", "--g", "reciprocal", "--a", "0.5", "--x", "2"}).code, 0);
  EXPECT_EQ(call({"identity", "--name", "rational", "--g", "log", "--num", "3", "--den", "4"}).code, 0);
  EXPECT_EQ(call({"identity", "--name", "elevator", "--g", "integral-log", "--x", "2"}).code, 0);
  EXPECT_EQ(call({"identity", "--name", "wallis", "--g", "log", "--terms", "5"}).code, 0);
}

TEST(Cli, OutFile) {
  std::string path = ::testing::TempDir() + "isum_out.csv";
  Outcome o = call({"eval", "--g", "log", "--x", "2.5", "--format", "csv", "--out", path});
  ASSERT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header.rfind("x,value,error_bound,n_used,method", 0), 0u);
  std::remove(path.c_str());
}
