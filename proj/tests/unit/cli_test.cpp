#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <fstream>
#include <sstream>

#include "meetlogic_cli/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = meet::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CombineCounts) {
  auto r = run({"combine", "--l1", "CPL", "--l2", "IPL"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("arity 2: 25 pairs"), std::string::npos);
}

TEST(Cli, StructuredOutputIsDeterministic) {
  auto a = run({"combine", "--l1", "CPL", "--l2", "S43", "--format", "structured"});
  auto b = run({"combine", "--l1", "CPL", "--l2", "S43", "--format", "structured"});
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["exit"], 0);
  EXPECT_EQ(j["components"], nlohmann::json::array({"CPL", "S43"}));
}

TEST(Cli, DecideAdmissibleExitCodes) {
  auto yes = run({"decide-admissible", "--calc", "meet(CPL,CPL)", "--rule-text", "xi1 ; <->|->>(xi1, xi2) / xi2"});
  EXPECT_EQ(yes.code, 0) << yes.err;
  EXPECT_NE(yes.out.find("a1=1 a2=1 → 1"), std::string::npos);
  auto no = run({"decide-admissible", "--calc", "meet(CPL,IPL)", "--rule-text", "<or|or>(xi1, xi2) / xi1"});
  EXPECT_EQ(no.code, 1);
  EXPECT_NE(no.out.find("a1=0 a2=0 → 0"), std::string::npos);
}

TEST(Cli, SingleLogicBruteForce) {
  auto r = run({"decide-admissible", "--logic", "CPL", "--rule-text", "neg neg xi1 / xi1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"decide-admissible", "--logic", "CPL", "--rule-text", "xi1 or xi2 / xi1"}).code, 1);
}

TEST(Cli, CompletionWorkedInstance) {
  auto r = run({"complete", "--logic", "IPL", "xi1 -> neg xi2", "--target", "top", "--root-head", "or"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("or(top, neg(bot))"), std::string::npos);
}

TEST(Cli, EvalAndEntails) {
  EXPECT_EQ(run({"eval", "--logic", "CPL", "xi1 -> xi1"}).code, 0);
  EXPECT_EQ(run({"eval", "--logic", "CPL", "xi1 or xi2"}).code, 1);
  EXPECT_EQ(run({"entails", "--logic", "CPL", "--hyp", "xi1", "--goal", "xi1 or xi2"}).code, 0);
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run({}).code, meet::cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, meet::cli::kUsage);
  EXPECT_EQ(run({"eval", "--logic", "CPL", "xi1 ->"}).code, meet::cli::kUsage);
  EXPECT_EQ(run({"combine", "--l1", "CPL", "--l2", "NOPE"}).code, meet::cli::kUsage);
  EXPECT_EQ(run({"project", "--k", "3", "xi1"}).code, meet::cli::kUsage);
}

TEST(Cli, BasisListing) {
  auto r = run({"basis", "--l1", "IPL", "--l2", "S43", "--basis-n", "1", "--format", "structured"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["rules"].size(), 2u);
  EXPECT_EQ(j["rules"][0]["name"], "1:V1");
  EXPECT_EQ(j["rules"][1]["name"], "2:R1");
}

TEST(Cli, OracleTableGapIsAnError) {
  const std::string path = ::testing::TempDir() + "meet_oracle.txt";
  {
    std::ofstream f(path);
    f << "1 xi1 / xi1\n";
  }
  auto r = run({"decide-admissible", "--calc", "meet(CPL,IPL)", "--rule-text", "<or|or>(xi1, xi2) / xi1", "--o1", path});
  EXPECT_EQ(r.code, 4);
  EXPECT_FALSE(r.err.empty());
}
