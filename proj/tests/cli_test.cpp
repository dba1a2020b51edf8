#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "qpart_cli.hpp"

using namespace qpart;
using qpart::cli::run_cli;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(Cli, SpecExamples) {
  EXPECT_EQ(run({"verify", "thm1", "--nmax", "300"}).code, 0);
  const Outcome c = run({"count", "p1", "18"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "1\n");
  EXPECT_EQ(run({"verify", "key26", "--ijkl-max", "0", "--degree", "10"}).code, 0);
}

TEST(Cli, MismatchExitsOneWithCounterexample) {
  const Outcome r = run({"--mutate", "drop-linear-secondary", "verify", "key26", "--ijkl-max", "1", "--degree", "10"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("FAIL key26: ", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("lhs="), std::string::npos);
  EXPECT_EQ(run({"--mutate", "multiple-gap", "verify", "thm1"}).code, 1);
  EXPECT_EQ(run({"--mutate", "quaternary-bound", "verify", "thm2", "--nmax", "12", "--ijkl-max", "2"}).code, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
  EXPECT_EQ(run({"count", "p1", "-3"}).code, 2);
  EXPECT_EQ(run({"count", "p2", "5", "--markers", "1,2"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "count", "p1", "3"}).code, 2);
  EXPECT_EQ(run({"--mutate", "everything", "verify", "thm1"}).code, 2);
  EXPECT_EQ(run({"table", "thm1", "--nmin", "5", "--nmax", "2"}).code, 2);
}

TEST(Cli, Counts) {
  EXPECT_EQ(run({"count", "g1", "18"}).out, "1\n");
  EXPECT_EQ(run({"count", "p2", "3", "--markers", "1,1,0,0"}).out, "2\n");
  EXPECT_EQ(run({"count", "g2", "3", "--freq", "a=1,d=1"}).out, "1\n");
  EXPECT_EQ(run({"count", "pG", "6"}).out, "1\n");
  EXPECT_EQ(run({"count", "gG", "6"}).out, "1\n");
}

TEST(Cli, Enumerate) {
  const Outcome r = run({"enumerate", "g2", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("D_2 A_1\n"), std::string::npos);
  EXPECT_EQ(r.out.find("A_2 D_1"), std::string::npos);
  EXPECT_EQ(run({"enumerate", "g1", "18"}).out, "18\n");
}

TEST(Cli, JsonTableRoundTrips) {
  const Outcome r = run({"--format", "json", "table", "thm1", "--nmax", "80"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["table"], "thm1");
  const auto p = p1_counts(80);
  const auto g = g1_counts(80);
  ASSERT_EQ(j["rows"].size(), 81u);
  for (const auto& row : j["rows"]) {
    const int n = row["n"];
    EXPECT_EQ(row["P"].get<std::int64_t>(), p[n].value());
    EXPECT_EQ(row["G"].get<std::int64_t>(), g[n].value());
  }
}

TEST(Cli, CsvTableRoundTrips) {
  const Outcome r = run({"--format", "csv", "table", "thm2", "--nmax", "14", "--markers", "1,2,1,1"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 16u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "P", "G"}));
  const G2Tally tally = tally_g2(14, {1, 2, 1, 1});
  for (std::size_t x = 1; x < rows.size(); ++x) {
    const int n = std::stoi(rows[x][0]);
    EXPECT_EQ(std::stoll(rows[x][1]), count_p2(n, {1, 2, 1, 1}).value());
    EXPECT_EQ(std::stoll(rows[x][2]), tally.fiber_sum(n, {1, 2, 1, 1}).value());
  }
}

TEST(Cli, ReportFormats) {
  const Outcome j = run({"--format", "json", "verify", "thmG", "--nmax", "40"});
  EXPECT_EQ(j.code, 0);
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed["status"], "pass");
  EXPECT_EQ(parsed["cells_checked"], 41);

  const Outcome f = run({"--format", "json", "--mutate", "multiple-gap", "verify", "thm1"});
  EXPECT_EQ(f.code, 1);
  const auto bad = nlohmann::json::parse(f.out);
  EXPECT_EQ(bad["status"], "fail");
  EXPECT_NE(bad["counterexample"]["lhs"], bad["counterexample"]["rhs"]);

  const Outcome c = run({"--format", "csv", "verify", "order15"});
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "identity,cells_checked,status,cell,degree,markers,lhs,rhs");
}

TEST(Cli, OutputIsStableAcrossRunsAndJobCounts) {
  const Outcome a = run({"verify", "key26", "--ijkl-max", "2", "--degree", "20"});
  const Outcome b = run({"--jobs", "3", "verify", "key26", "--ijkl-max", "2", "--degree", "20"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, run({"verify", "key26", "--ijkl-max", "2", "--degree", "20"}).out);
}
