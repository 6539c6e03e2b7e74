#include "cli/commands.hpp"

#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli/json_io.hpp"
#include "gw/severi.hpp"

namespace gw::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_gw(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliNdTest, SplitCsvRow) {
  const auto r = run_gw({"nd", "--max", "4", "--split", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "d,n,f,g\n1,1,,\n2,1,1,2\n3,12,28,40\n4,620,2228,2848\n");
}

TEST(CliNdTest, SingleDegree) {
  const auto r = run_gw({"--format", "csv", "nd", "--max", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "d,n\n1,1\n");
}

TEST(CliNdTest, Json) {
  const auto r = run_gw({"nd", "--max", "4", "--split", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[3], nlohmann::json::parse(
                      R"({"d":4,"n":"620","f":"2228","g":"2848"})"));
  EXPECT_FALSE(j[0].contains("f"));
}

TEST(CliNdTest, InvalidDegreeIsUsageError) {
  EXPECT_EQ(run_gw({"nd", "--max", "0"}).code, kExitUsage);
  EXPECT_EQ(run_gw({"nd"}).code, kExitUsage);
  EXPECT_EQ(run_gw({"nd", "--max", "x"}).code, kExitUsage);
  EXPECT_EQ(run_gw({}).code, kExitUsage);
  EXPECT_EQ(run_gw({"nd", "--max", "3", "--format", "xml"}).code, kExitUsage);
}

TEST(CliNdTest, HelpExitsZero) {
  const auto r = run_gw({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "severi"));
}

TEST(CliSeveriTest, Quartics) {
  const auto r = run_gw({"severi", "quartics", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "component,value\nA,15\nB,147\nC,180\nD,10\nE,200\nF,60\nG,63\n"
            "total,675\ncubic_plus_line,55\nirreducible,620\n");
}

TEST(CliSeveriTest, Roberts) {
  const auto r = run_gw({"severi", "roberts", "--max", "5", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "d,N_d_2\n3,21\n4,225\n5,882\n");
  EXPECT_EQ(run_gw({"severi", "roberts", "--max", "2"}).code, kExitUsage);
}

TEST(CliSeveriTest, Components) {
  const auto r =
      run_gw({"severi", "components", "--d", "5", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto ledger =
      nlohmann::json::parse(r.out).get<severi::ComponentLedger>();
  EXPECT_EQ(ledger, severi::delta2_components(5));
  EXPECT_EQ(run_gw({"severi", "components", "--d", "3"}).code, kExitUsage);
}

TEST(CliSeveriTest, Formula5Ledger) {
  const auto r = run_gw({"severi", "formula5", "--d", "4", "--delta", "3",
                         "--ledger", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  std::getline(lines, line);
  EXPECT_TRUE(line.starts_with("pi,pi_free,"));
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 8);

  const auto table = run_gw(
      {"severi", "formula5", "--d", "4", "--delta", "3", "--ledger"});
  EXPECT_TRUE(contains(table.out, "empty_placement"));
  const auto total_at = table.out.rfind("\ntotal ");
  ASSERT_NE(total_at, std::string::npos);
  EXPECT_TRUE(table.out.ends_with(" 675\n"));
}

TEST(CliSeveriTest, Formula5JsonRoundTrip) {
  const auto r = run_gw({"severi", "formula5", "--d", "4", "--delta", "3",
                         "--ledger", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("total"), "675");
  const auto eval = severi::evaluate_formula5(4, 3, *severi::paper_aux());
  EXPECT_EQ(j.at("terms").get<std::vector<severi::SplitTerm>>(), eval.terms);
  EXPECT_EQ(j.at("dropped").get<std::vector<severi::DroppedCandidate>>(),
            eval.dropped);
}

TEST(CliSeveriTest, Formula5Total) {
  const auto r = run_gw(
      {"severi", "formula5", "--d", "6", "--delta", "2", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "d,delta,N\n6,2," + severi::roberts_closed(6).str() + "\n");
}

TEST(CliSeveriTest, MissingAuxExitsThreeWithKey) {
  const auto r = run_gw({"severi", "formula5", "--d", "5", "--delta", "3"});
  EXPECT_EQ(r.code, kExitMissingAux);
  EXPECT_TRUE(contains(r.err, "\"e\":4"));
  EXPECT_TRUE(r.out.empty());
}

TEST(CliSeveriTest, AuxOverlayFillsGaps) {
  // The overlay supplies zero-placement keys only; the total is unchanged.
  const auto r = run_gw({"severi", "formula5", "--d", "4", "--delta", "3",
                         "--aux", GW_TEST_DATA_DIR "/extra_aux.json",
                         "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "d,delta,N\n4,3,675\n");
}

TEST(CliSeveriTest, BadAuxFileIsUsageError) {
  EXPECT_EQ(run_gw({"severi", "quartics", "--aux",
                    GW_TEST_DATA_DIR "/duplicate_aux.json"})
                .code,
            kExitUsage);
  EXPECT_EQ(run_gw({"severi", "quartics", "--aux",
                    GW_TEST_DATA_DIR "/nope.json"})
                .code,
            kExitUsage);
}

TEST(CliSeveriTest, DomainErrors) {
  EXPECT_EQ(run_gw({"severi", "formula5", "--d", "4", "--delta", "4"}).code,
            kExitUsage);
  EXPECT_EQ(run_gw({"severi"}).code, kExitUsage);
}

TEST(CliQuantumTest, FourPoint) {
  auto r = run_gw({"quantum", "fourpoint", "--d", "4", "--pairs", "pp,ll",
                   "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out),
            nlohmann::json::parse(
                R"({"d":4,"grouping":"pp|ll","value":"2848"})"));

  r = run_gw({"quantum", "fourpoint", "--d", "2", "--pairs", "pl,pl",
              "--format", "csv"});
  EXPECT_EQ(r.out, "d,grouping,value\n2,pl|pl,2\n");

  r = run_gw({"quantum", "fourpoint", "--d", "4", "--pairs", "pp,ll",
              "--no-degenerate", "--format", "csv"});
  EXPECT_EQ(r.out, "d,grouping,value\n4,pp|ll,2228\n");
}

TEST(CliQuantumTest, BadPairsIsUsageError) {
  EXPECT_EQ(
      run_gw({"quantum", "fourpoint", "--d", "4", "--pairs", "pq,ll"}).code,
      kExitUsage);
}

TEST(CliQuantumTest, Wdvv) {
  const auto r = run_gw({"quantum", "wdvv", "--max", "8", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "d,residual\n2,0\n3,0\n4,0\n5,0\n6,0\n7,0\n8,0\n");
}

TEST(CliVerifyTest, DefaultRunPasses) {
  const auto r = run_gw({"verify"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_FALSE(contains(r.out, "FAIL"));
  EXPECT_TRUE(contains(r.out, "all checks passed"));
}

TEST(CliVerifyTest, WiderRange) {
  const auto r = run_gw({"verify", "--max", "12", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& check : j) EXPECT_TRUE(check.at("passed")) << check;
  EXPECT_TRUE(contains(r.out, "d <= 12"));
}

TEST(CliVerifyTest, CorruptedAuxFails) {
  const auto r =
      run_gw({"verify", "--aux", GW_TEST_DATA_DIR "/corrupt_aux.json"});
  EXPECT_EQ(r.code, kExitVerifyFailed);
  EXPECT_TRUE(contains(r.out, "FAIL N_{4,3}"));
}

TEST(CliOutputTest, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"severi", "formula5", "--d", "6", "--delta", "2", "--ledger",
            "--format", "json"},
           {"nd", "--max", "15", "--split"},
           {"verify", "--format", "csv"}}) {
    EXPECT_EQ(run_gw(args).out, run_gw(args).out);
  }
}

}  // namespace
}  // namespace gw::cli
