#include <gtest/gtest.h>

#include "meetlogic/combination.hpp"
#include "meetlogic/parser.hpp"

using namespace meet;

namespace {

CombinedSignature two_cpl() {
  auto sig = [](const std::string& t) {
    return make_signature(t, {{"neg", 1}, {"and", 2}, {"or", 2}, {"->", 2}, {"iff", 2}});
  };
  return CombinedSignature(sig("L1"), sig("L2"));
}

}  // namespace

TEST(CombinedSignature, PairsEveryArity) {
  auto cs = two_cpl();
  // 4 nullary, 2 x 2 unary, 5 x 5 binary pairs.
  EXPECT_EQ(cs.combined().constructors(0).size(), 4u);
  EXPECT_EQ(cs.combined().constructors(1).size(), 4u);
  EXPECT_EQ(cs.combined().constructors(2).size(), 25u);
  EXPECT_EQ(cs.combined().size(), 33u);
  EXPECT_EQ(cs.combined().top(), Formula::app(cs.pair(cs.s1().verum(), cs.s2().verum())));
  EXPECT_EQ(cs.embedded(1).size(), cs.s1().size());
}

TEST(CombinedSignature, EmbeddingAndFalsum) {
  auto cs = two_cpl();
  Constructor neg1 = *cs.s1().find("neg");
  Constructor e = cs.embed_constructor(neg1, 1);
  EXPECT_EQ(e.part(1), neg1);
  EXPECT_EQ(e.part(2), cs.s2().verum_of_arity(1));
  EXPECT_TRUE(cs.is_embedded(e, 1));
  EXPECT_FALSE(cs.is_embedded(e, 2));
  EXPECT_EQ(cs.falsum_of(1), Formula::app(cs.pair(cs.s1().falsum(), cs.s2().verum())));
}

TEST(Projection, EmbedThenProjectIsIdentity) {
  auto cs = two_cpl();
  Formula f = parse_formula("neg (xi1 -> xi2) or bot", cs.s1());
  Formula e = embed(f, 1, cs);
  EXPECT_EQ(project(e, 1), f);
  EXPECT_EQ(print_formula(project(e, 2)), "topn.2(topn.1(topn.2(xi1, xi2)), top)");
}

TEST(Projection, ProjectsPairsComponentwise) {
  auto cs = two_cpl();
  Formula f = parse_formula("<and|or>(xi1, <neg|topn.1>(xi2))", cs);
  EXPECT_EQ(print_formula(project(f, 1)), "and(xi1, neg(xi2))");
  EXPECT_EQ(print_formula(project(f, 2)), "or(xi1, topn.1(xi2))");
}

TEST(Tagging, NonLiberalRulesAreKept) {
  auto cs = two_cpl();
  Rule r = parse_inline_rule("xi1 ; xi1 -> xi2 / xi2 or xi1", cs.s1(), "R");
  auto t = tag_rule(r, cs.s1());
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].rule, r);
  EXPECT_FALSE(t[0].tag.valid());
}

TEST(Tagging, LiberalRuleGetsOneVariantPerConstructor) {
  auto cs = two_cpl();
  Rule mp = parse_inline_rule("xi1 ; xi1 -> xi2 / xi2", cs.s1(), "MP");
  auto t = tag_rule(mp, cs.s1());
  EXPECT_EQ(t.size(), cs.s1().size());
  const TaggedRule* conj = nullptr;
  for (const auto& x : t)
    if (x.tag.name() == "and") conj = &x;
  ASSERT_NE(conj, nullptr);
  EXPECT_EQ(conj->rule.name, "MP[and.L1]");
  EXPECT_EQ(print_rule(conj->rule), "xi1 ; ->(xi1, and(xi3, xi4)) / and(xi3, xi4)");
}

TEST(Tagging, FreshVariablesStartAboveTheRuleMaximum) {
  auto cs = two_cpl();
  Rule ef = parse_inline_rule("xi4 and bot / xi2", cs.s1(), "EF");
  auto t = tag_rule(ef, std::vector<Constructor>{*cs.s1().find("or")});
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(print_rule(t[0].rule), "and(xi4, bot) / or(xi5, xi6)");
}
