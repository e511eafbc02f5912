#include <gtest/gtest.h>

#include "meetlogic/combination.hpp"
#include "meetlogic/parser.hpp"

using namespace meet;

namespace {

Signature cpl(const std::string& tag = "CPL") {
  return make_signature(tag, {{"neg", 1}, {"and", 2}, {"or", 2}, {"->", 2}, {"iff", 2}});
}

}  // namespace

TEST(Signature, AddsVerumFamilyAndFalsum) {
  Signature s = cpl();
  EXPECT_TRUE(s.find("top"));
  EXPECT_TRUE(s.find("bot"));
  EXPECT_TRUE(s.find("topn.1"));
  EXPECT_TRUE(s.find("topn.2"));
  EXPECT_TRUE(s.is_verum_family(s.verum_of_arity(2)));
  EXPECT_FALSE(s.is_verum_family(*s.find("and")));
  EXPECT_EQ(s.constructors(2).size(), 5u);  // and, or, ->, iff, topn.2
}

TEST(Signature, SimilarityComparesArities) {
  Signature a = cpl("A");
  Signature b = make_signature("B", {{"neg", 1}, {"and", 2}});
  Signature c = make_signature("C", {{"and", 2}});
  EXPECT_TRUE(a.similar_to(b));
  EXPECT_FALSE(a.similar_to(c));  // no arity 1 constructor, so no topn.1 either
}

TEST(Parser, PrecedenceAndAssociativity) {
  Signature s = cpl();
  Formula f = parse_formula("xi1 and xi2 or xi3 -> xi4 -> xi5", s);
  EXPECT_EQ(print_formula(f), "->(or(and(xi1, xi2), xi3), ->(xi4, xi5))");
  Formula g = parse_formula("neg neg xi1 iff xi1", s);
  EXPECT_EQ(print_formula(g), "iff(neg(neg(xi1)), xi1)");
}

TEST(Parser, PrefixAndQualifiedNames) {
  Signature s = cpl();
  EXPECT_EQ(parse_formula("->(xi1, top)", s), parse_formula("xi1 -> top", s));
  EXPECT_EQ(parse_formula("xi1 ->.CPL neg.CPL xi2", s), parse_formula("xi1 -> neg xi2", s));
  EXPECT_EQ(parse_formula("topn.2(xi1, xi2)", s).head(), s.verum_of_arity(2));
}

TEST(Parser, RoundTripsPrintedFormulas) {
  Signature s = cpl();
  for (const char* text : {"xi1", "bot", "neg(->(xi1, and(xi2, top)))", "topn.1(iff(xi3, xi1))"}) {
    Formula f = parse_formula(text, s);
    EXPECT_EQ(print_formula(f), text);
    EXPECT_EQ(parse_formula(print_formula(f), s), f);
  }
}

TEST(Parser, Errors) {
  Signature s = cpl();
  EXPECT_THROW(parse_formula("xi0", s), SyntaxError);
  EXPECT_THROW(parse_formula("xi1 and", s), SyntaxError);
  EXPECT_THROW(parse_formula("box xi1", s), SyntaxError);
  EXPECT_THROW(parse_formula("and(xi1)", s), SyntaxError);
  EXPECT_THROW(parse_formula("top(xi1)", s), SyntaxError);
  EXPECT_THROW(parse_formula("neg.GL xi1", s), SyntaxError);
}

TEST(Parser, CombinedNameResolution) {
  CombinedSignature cs(cpl("A"), make_signature("B", {{"neg", 1}, {"and", 2}, {"or", 2}, {"->", 2}, {"box", 1}}));
  Formula both = parse_formula("xi1 and xi2", cs);
  EXPECT_EQ(print_formula(both), "<and.A|and.B>(xi1, xi2)");
  Formula left = parse_formula("xi1 iff xi2", cs);  // only in A
  EXPECT_EQ(left.head(), cs.embed_constructor(*cs.s1().find("iff"), 1));
  Formula right = parse_formula("box xi1", cs);
  EXPECT_EQ(right.head(), cs.embed_constructor(*cs.s2().find("box"), 2));
  Formula tagged = parse_formula("xi1 and.A xi2", cs);
  EXPECT_EQ(tagged.head(), cs.embed_constructor(*cs.s1().find("and"), 1));
  Formula pair = parse_formula("<and|or>(xi1, xi2)", cs);
  EXPECT_EQ(pair.head().part(1), *cs.s1().find("and"));
  EXPECT_EQ(pair.head().part(2), *cs.s2().find("or"));
}

TEST(Substitution, ApplyComposeMatch) {
  Signature s = cpl();
  Formula pattern = parse_formula("xi1 -> (xi2 -> xi1)", s);
  Formula target = parse_formula("neg xi3 -> (top -> neg xi3)", s);
  auto m = match_formula(pattern, target);
  ASSERT_TRUE(m);
  EXPECT_EQ(apply_substitution(*m, pattern), target);
  EXPECT_FALSE(match_formula(pattern, parse_formula("xi1 -> (xi2 -> xi2)", s)));

  Substitution s1{{1, parse_formula("xi2 and xi3", s)}};
  Substitution s2{{2, s.top()}, {3, s.bot()}};
  Formula f = parse_formula("xi1 or xi2", s);
  EXPECT_EQ(apply_substitution(compose(s2, s1), f), apply_substitution(s2, apply_substitution(s1, f)));
}

TEST(Formula, MeasuresAndInterning) {
  Signature s = cpl();
  Formula f = parse_formula("(xi1 -> xi2) and neg xi1", s);
  EXPECT_EQ(f.size(), 6u);
  EXPECT_EQ(f.depth(), 2u);
  EXPECT_EQ(max_schema_index(f), 2u);
  EXPECT_EQ(variables(f), (std::set<unsigned>{1, 2}));
  EXPECT_EQ(f, parse_formula("and(->(xi1, xi2), neg(xi1))", s));
  EXPECT_EQ(f.hash(), parse_formula("and(->(xi1, xi2), neg(xi1))", s).hash());
}

TEST(Rules, InlineAndFileSyntax) {
  Signature s = cpl();
  Rule mp = parse_inline_rule("xi1 ; xi1 -> xi2 / xi2", s, "MP");
  EXPECT_TRUE(mp.liberal());
  EXPECT_FALSE(mp.axiom());
  EXPECT_EQ(print_rule(mp), "xi1 ; ->(xi1, xi2) / xi2");
  Rule from_file = parse_rule_file("# modus ponens\nxi1\nxi1 -> xi2\n---\nxi2\n", s);
  EXPECT_EQ(from_file, mp);
  Rule ax = parse_inline_rule("/ xi1 -> xi1", s);
  EXPECT_TRUE(ax.axiom());
  EXPECT_EQ(parse_inline_rule(print_rule(ax), s), ax);
}
