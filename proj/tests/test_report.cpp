#include <gtest/gtest.h>

#include "lagr/commands.hpp"

using namespace lagr;

TEST(Report, ChecksCarryTolerances) {
  const Check a = Check::below("x", 0.5, 1.0);
  EXPECT_EQ(a.status, CheckStatus::pass);
  EXPECT_EQ(a.to_json()["tolerance"], 1.0);
  EXPECT_EQ(Check::below("nan", std::nan(""), 1.0).status, CheckStatus::fail);
  EXPECT_EQ(Check::below("edge", 1.0, 1.0).status, CheckStatus::fail);
  const Check b = Check::holds("flag", true);
  EXPECT_EQ(b.to_json()["tolerance"], 0.0);
  EXPECT_EQ(b.to_json()["expected"], 1.0);
}

TEST(Report, EvidenceNeverHidesFailure) {
  Check pass = Check::below("p", 0.0, 1.0);
  Check fail = Check::below("f", 2.0, 1.0);
  EXPECT_EQ(pass.as_evidence().status, CheckStatus::evidence);
  EXPECT_EQ(fail.as_evidence().status, CheckStatus::fail);
}

TEST(Report, FailuresPropagateFromSections) {
  Report inner;
  inner.add(Check::below("bad", 2.0, 1.0));
  Report outer;
  outer.add(Check::below("good", 0.0, 1.0));
  EXPECT_TRUE(outer.ok());
  outer.sections.push_back(inner);
  EXPECT_FALSE(outer.ok());
  EXPECT_EQ(outer.failures(), 1);
  EXPECT_EQ(outer.to_json()["status"], "fail");
}

TEST(Report, SchemaAndTimingFields) {
  Report r;
  r.command = "x";
  r.elapsed_ms = 12;
  const Json plain = r.to_json();
  EXPECT_EQ(plain["schema"], 1);
  EXPECT_FALSE(plain.contains("elapsed_ms"));
  EXPECT_EQ(r.to_json(true)["elapsed_ms"], 12);
}

TEST(Commands, VerifyExamplesPass) {
  CommandOptions o;
  for (const char* e : {"torus", "su2-cubic", "sun", "circle", "quaternion-span"}) {
    EXPECT_TRUE(cmd_verify(e, o).ok()) << e;
  }
  EXPECT_THROW(cmd_verify("nope", o), UsageError);
}

TEST(Commands, FindZerosReportsEvidence) {
  CommandOptions o;
  o.starts = 3;
  const Report r = cmd_find_zeros(o);
  EXPECT_TRUE(r.ok());
  for (const auto& c : r.checks) EXPECT_EQ(c.status, CheckStatus::evidence) << c.name;
  EXPECT_EQ(r.data["starts"].size(), 3u);
  o.starts = 0;
  EXPECT_THROW(cmd_find_zeros(o), UsageError);
}

TEST(Commands, ReportsAreReproducible) {
  CommandOptions o;
  o.starts = 2;
  EXPECT_EQ(cmd_find_zeros(o).to_json().dump(), cmd_find_zeros(o).to_json().dump());
  EXPECT_EQ(cmd_stabilizer(o).to_json().dump(), cmd_stabilizer(o).to_json().dump());
}

TEST(Commands, OtherSuitesPass) {
  CommandOptions o;
  EXPECT_TRUE(cmd_stabilizer(o).ok());
  EXPECT_TRUE(cmd_homology(o).ok());
  EXPECT_TRUE(cmd_reduction(o).ok());
}
