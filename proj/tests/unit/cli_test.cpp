#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "../../tools/cli.hpp"

namespace tourney::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "tourney");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

const std::string& t36_text() {
  static const std::string text = run_cli({"gen", "paper36"}).out;
  return text;
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("tourney_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

TEST(Gen, Paper36ToStdoutAndFile) {
  EXPECT_EQ(t36_text().substr(0, 3), "36\n");
  EXPECT_EQ(count_lines(t36_text()), 37u);
  TempDir dir;
  const auto path = dir / "t.txt";
  EXPECT_EQ(run_cli({"gen", "paper36", "-o", path.string()}).code, kExitOk);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), t36_text());
}

// Seed 3 makes some outer triangle transitive: the partition holds but the
// score profile does not, so verification reports a finding.
TEST(Gen, VariantKeepsPartition) {
  const Result r = run_cli({"gen", "paper36", "--variant-seed", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out, t36_text());
  const Result v = run_cli({"verify-paper", "-", "--skip-orbits"}, r.out);
  EXPECT_EQ(v.code, kExitFinding) << v.out;
  EXPECT_NE(v.out.find("[pass] partition"), std::string::npos) << v.out;
  EXPECT_NE(v.out.find("[fail] degrees"), std::string::npos) << v.out;
  EXPECT_NE(v.out.find("[skipped] automorphisms"), std::string::npos) << v.out;
}

TEST(Gen, RandomIsSeeded) {
  const Result a = run_cli({"gen", "random", "--n", "7", "--seed", "5"});
  const Result b = run_cli({"gen", "random", "--n", "7", "--seed", "5"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(count_lines(a.out), 8u);
  EXPECT_EQ(run_cli({"gen", "random", "--n", "0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"gen", "random"}).code, kExitUsage);
}

TEST(Solve, BipartisanPrintsExactFractions) {
  const Result r = run_cli({"solve", "-", "--rule", "bp"}, t36_text());
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(count_lines(r.out), 9u);
  EXPECT_NE(r.out.find("v0_1_1 0 p=1/9\n"), std::string::npos);
  EXPECT_NE(r.out.find("v0_3_3 8 p=1/9\n"), std::string::npos);
}

TEST(Solve, RulesOnSmallInput) {
  const std::string cycle = "3\n010\n001\n100\n";
  EXPECT_EQ(run_cli({"solve", "-", "--rule", "tc"}, cycle).out, "0\n1\n2\n");
  EXPECT_EQ(run_cli({"solve", "-", "--rule", "copeland"}, "2\n01\n00\n").out, "0\n");
  EXPECT_EQ(run_cli({"solve", "-", "--rule", "uc"}, cycle).code, kExitOk);
  const Result b = run_cli({"solve", "-", "--rule", "banks", "--witness"}, cycle);
  EXPECT_EQ(b.code, kExitOk);
  EXPECT_NE(b.out.find("0 chain=0>1\n"), std::string::npos) << b.out;
}

TEST(Solve, Errors) {
  const Result unknown = run_cli({"solve", "-", "--rule", "borda"}, "1\n0\n");
  EXPECT_EQ(unknown.code, kExitUsage);
  const Result syntax = run_cli({"solve", "-", "--rule", "tc"}, "2\n0x\n00\n");
  EXPECT_EQ(syntax.code, kExitUsage);
  EXPECT_NE(syntax.err.find("line 2, column 2"), std::string::npos) << syntax.err;
  const Result axioms = run_cli({"solve", "-", "--rule", "tc"}, "2\n00\n00\n");
  EXPECT_EQ(axioms.code, kExitUsage);
  EXPECT_NE(axioms.err.find("connexity"), std::string::npos) << axioms.err;
  EXPECT_EQ(run_cli({"solve", "/nonexistent/file", "--rule", "tc"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"solve", "-"}, "1\n0\n").code, kExitUsage);
}

TEST(VerifyPaper, PassesAndWritesReport) {
  TempDir dir;
  const auto report = dir / "report.json";
  const Result r = run_cli({"verify-paper", "--report", report.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("[pass] banks"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.substr(r.out.size() - 5), "PASS\n");
  EXPECT_TRUE(std::filesystem::exists(report));
}

TEST(VerifyPaper, FailsOnOtherTournaments) {
  std::string chain = "36\n";
  for (int x = 0; x < 36; ++x) {
    for (int y = 0; y < 36; ++y) chain += y > x ? '1' : '0';
    chain += '\n';
  }
  const Result r = run_cli({"verify-paper", "-"}, chain);
  EXPECT_EQ(r.code, kExitFinding);
  EXPECT_EQ(r.out.substr(r.out.size() - 5), "FAIL\n");
  EXPECT_EQ(run_cli({"verify-paper", "-"}, "3\n010\n001\n100\n").code, kExitUsage);
}

TEST(Scan, ExhaustiveAndRandom) {
  const Result r = run_cli({"scan", "--rules", "banks,bp", "--max-order", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("order 5: generated 1024, examined 12, witnesses 0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("total witnesses: 0"), std::string::npos);
  const Result rnd =
      run_cli({"scan", "--rules", "banks,bp", "--max-order", "7", "--mode", "random", "--samples", "20", "--seed", "1"});
  EXPECT_EQ(rnd.code, kExitOk) << rnd.err;
  EXPECT_EQ(run_cli({"scan", "--rules", "banks", "--max-order", "3"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"scan", "--rules", "banks,nope", "--max-order", "3"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"scan", "--rules", "banks,bp", "--max-order", "9"}).code, kExitUsage);
}

TEST(Scan, WitnessFoundExitsOne) {
  // Copeland and Banks can be disjoint; any witness yields exit 1.
  const Result r = run_cli(
      {"scan", "--rules", "copeland,banks", "--max-order", "12", "--mode", "random", "--samples", "300", "--seed", "2"});
  const bool found = r.out.find("total witnesses: 0") == std::string::npos;
  EXPECT_EQ(r.code, found ? kExitFinding : kExitOk) << r.out;
}

TEST(ExportDot, WritesGraph) {
  const Result r = run_cli({"export-dot", "-", "--clusters"}, t36_text());
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("digraph tournament {", 0), 0u);
  EXPECT_NE(r.out.find("cluster_D2_1"), std::string::npos);
  EXPECT_EQ(run_cli({"export-dot", "-", "--clusters"}, "1\n0\n").code, kExitUsage);
}

TEST(Orbits, TwoOrbitsOnConstruction) {
  const Result r = run_cli({"orbits", "-"}, t36_text());
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(count_lines(r.out), 2u);
  EXPECT_EQ(r.out.rfind("orbit 1 (9): v0_1_1=0", 0), 0u);
  EXPECT_NE(r.out.find("orbit 2 (27):"), std::string::npos);
  EXPECT_EQ(run_cli({"orbits", "-"}, "1\n0\n").code, kExitUsage);
}

TEST(Usage, MissingOrUnknownSubcommand) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace tourney::cli
