#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "tourney/error.hpp"
#include "tourney/io.hpp"
#include "tourney/verify.hpp"

namespace tourney::paper36 {
namespace {

using testing::t36;

const VerificationReport& t36_report() {
  static const VerificationReport r = verify_theorem(t36());
  return r;
}

TEST(VerifyTheorem, AllChecksPassOnConstruction) {
  const VerificationReport& r = t36_report();
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.order, 36u);
  for (const char* name : {"validity", "bipartisan", "outside_profile", "banks", "partition", "degrees",
                           "automorphisms", "center_subsets", "spoilers"}) {
    const CheckResult* c = r.find(name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_EQ(c->status, CheckStatus::kPass) << name << ": " << c->detail;
  }
  const CheckResult* info = r.find("dominator_uniqueness");
  ASSERT_NE(info, nullptr);
  EXPECT_EQ(info->status, CheckStatus::kInfo);
  EXPECT_EQ(r.find("no_such_check"), nullptr);
}

TEST(VerifyTheorem, WitnessesCarryExactFractions) {
  const CheckResult* bp = t36_report().find("bipartisan");
  ASSERT_NE(bp, nullptr);
  bool saw_weights = false;
  for (const auto& [key, value] : bp->witness) {
    if (key != "weights") continue;
    saw_weights = true;
    const auto& w = std::get<std::vector<std::string>>(value);
    ASSERT_EQ(w.size(), 36u);
    for (std::size_t x = 0; x < 36; ++x) EXPECT_EQ(w[x], x < 9 ? "1/9" : "0/1");
  }
  EXPECT_TRUE(saw_weights);
}

TEST(VerifyTheorem, WrongOrderThrows) {
  EXPECT_THROW(verify_theorem(Tournament::transitive_chain(5)), InvalidTournament);
}

TEST(VerifyTheorem, TransitiveChainFailsTheClaims) {
  const VerificationReport r = verify_theorem(Tournament::transitive_chain(36));
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.find("validity")->status, CheckStatus::kPass);
  for (const char* name : {"bipartisan", "outside_profile", "banks", "partition", "degrees", "automorphisms",
                           "center_subsets"}) {
    EXPECT_EQ(r.find(name)->status, CheckStatus::kFail) << name;
  }
}

// The partition survives reorientation; the 17-score profile survives only
// while every outer triangle stays cyclic.
TEST(VerifyTheorem, VariantKeepsPartition) {
  VerifyOptions opts;
  opts.check_automorphisms = false;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const OrientationMap outer = random_orientations(seed);
    const VerificationReport r = verify_theorem(build_t36_variant(outer), opts);
    EXPECT_EQ(r.find("automorphisms")->status, CheckStatus::kSkipped);
    for (const char* name : {"validity", "bipartisan", "outside_profile", "banks", "partition"}) {
      EXPECT_EQ(r.find(name)->status, CheckStatus::kPass) << name << ": " << r.find(name)->detail;
    }
    const bool all_cyclic =
        std::all_of(outer.begin(), outer.end(), [](const auto& kv) { return kv.second.is_cyclic(); });
    EXPECT_EQ(r.find("degrees")->passed(), all_cyclic) << r.find("degrees")->detail;
  }
}

TEST(VerifyTheorem, ReversedCyclicVariantPassesEverything) {
  OrientationMap outer = cyclic_orientations();
  for (auto& kv : outer) kv.second = TriangleOrientation::from_code(0);
  VerifyOptions opts;
  opts.check_automorphisms = false;
  const VerificationReport r = verify_theorem(build_t36_variant(outer), opts);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.find("degrees")->passed()) << r.find("degrees")->detail;
}

TEST(ReportJson, StableShape) {
  const std::string json = report_to_json(t36_report());
  EXPECT_NE(json.find("\"schema\": \"tourney.verification-report\""), std::string::npos);
  EXPECT_NE(json.find("\"version\": 1"), std::string::npos);
  EXPECT_NE(json.find("\"1/9\""), std::string::npos);
  EXPECT_EQ(json.find("0.111"), std::string::npos);
}

}  // namespace
}  // namespace tourney::paper36
