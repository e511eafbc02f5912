#include <gtest/gtest.h>

#include "meetlogic/meet.hpp"
#include "meetlogic/parser.hpp"
#include "meetlogic/search.hpp"
#include "meetlogic/templates.hpp"

using namespace meet;

namespace {

struct CplFixture : ::testing::Test {
  LogicBundle cpl = load_preset("CPL");
  Formula f(const char* text) { return parse_formula(text, cpl.sig); }
};

}  // namespace

TEST_F(CplFixture, ChecksModusPonens) {
  Derivation d;
  auto a = d.hyp(f("xi1"));
  auto b = d.hyp(f("xi1 -> neg xi2"));
  d.apply(f("neg xi2"), "MP", {a, b}, {{1, f("xi1")}, {2, f("neg xi2")}});
  auto v = check_derivation(d, cpl.calculus, {}, {f("xi1"), f("xi1 -> neg xi2")});
  EXPECT_TRUE(v.accepted) << v.reason;
}

TEST_F(CplFixture, RejectsBadLines) {
  Derivation d;
  auto a = d.hyp(f("xi1"));
  auto b = d.hyp(f("xi1 -> xi2"));
  d.apply(f("xi3"), "MP", {a, b}, {{1, f("xi1")}, {2, f("xi2")}});
  auto v = check_derivation(d, cpl.calculus, {}, {f("xi1"), f("xi1 -> xi2")});
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.line, 3u);

  Derivation unknown_hyp;
  unknown_hyp.hyp(f("xi2"));
  EXPECT_EQ(check_derivation(unknown_hyp, cpl.calculus, {}, {f("xi1")}).line, 1u);

  Derivation forward;
  forward.apply(f("xi2"), "MP", {2, 3}, {{1, f("xi1")}, {2, f("xi2")}});
  EXPECT_FALSE(check_derivation(forward, cpl.calculus, {}, {}).accepted);

  Derivation no_rule;
  no_rule.apply(f("xi1"), "NOPE", {}, {});
  EXPECT_FALSE(check_derivation(no_rule, cpl.calculus, {}, {}).accepted);

  EXPECT_FALSE(check_derivation(Derivation{}, cpl.calculus, {}, {}).accepted);
}

TEST_F(CplFixture, TextRoundTrip) {
  Derivation d;
  auto a = d.hyp(f("xi1 and xi2"));
  auto b = d.apply(f("(xi1 and xi2) -> xi1"), "A1", {}, {{1, f("xi1")}, {2, f("xi2")}});
  d.apply(f("xi1"), "MP", {a, b}, {{1, f("xi1 and xi2")}, {2, f("xi1")}});
  std::string text = print_derivation(d);
  Derivation back = parse_derivation(text, cpl.sig);
  EXPECT_EQ(print_derivation(back), text);
  EXPECT_TRUE(check_derivation(back, cpl.calculus, {}, {f("xi1 and xi2")}).accepted);
}

TEST_F(CplFixture, SearchFindsShortProofsAndGivesUpOnNonTheorems) {
  auto d = bounded_proof_search(cpl.calculus, {}, {f("xi1 and xi2")}, f("xi2 or xi3"));
  ASSERT_TRUE(d);
  EXPECT_TRUE(check_derivation(*d, cpl.calculus, {}, {f("xi1 and xi2")}).accepted);
  EXPECT_EQ(d->conclusion(), f("xi2 or xi3"));

  auto one = bounded_proof_search(cpl.calculus, {}, {f("xi1")}, f("xi1"));
  ASSERT_TRUE(one);
  EXPECT_EQ(one->size(), 1u);

  SearchBounds b;
  b.max_depth = 3;
  EXPECT_FALSE(bounded_proof_search(cpl.calculus, {}, {}, f("xi1"), b));
}

TEST(MeetCalculus, AssemblyNamesAndTags) {
  MeetSystem m = load_meet_system("CPL", "CPL");
  EXPECT_EQ(m.calculus.name(), "meet(CPL,CPL)");
  EXPECT_TRUE(m.calculus.find("1:K"));
  EXPECT_TRUE(m.calculus.find("2:S"));
  EXPECT_FALSE(m.calculus.find("1:MP"));  // liberal, so only tagged variants exist
  const Constructor and1 = m.cs->embed_constructor(*m.cs->s1().find("and"), 1);
  EXPECT_TRUE(m.calculus.find("1:MP[" + and1.spelling() + "]"));
  // 19 non-liberal plus 9 tags for each of MP and EF, per side.
  EXPECT_EQ(m.calculus.rules().size(), 2u * (18 + 2 * 9));
  EXPECT_TRUE(m.calculus.meet_families());
}

TEST(MeetCalculus, LiftColiftAndFalsumPropagation) {
  MeetSystem m = load_meet_system("CPL", "CPL");
  const auto& cs = *m.cs;
  Formula phi = parse_formula("<and|or>(xi1, xi2)", cs);
  Formula p1 = embed(project(phi, 1), 1, cs), p2 = embed(project(phi, 2), 2, cs);
  Derivation d;
  auto h = d.hyp(phi);
  auto a = d.colift(p1, h, 1);
  auto b = d.colift(p2, h, 2);
  d.lift(phi, a, b);
  EXPECT_TRUE(check_derivation(d, m.calculus, {}, {phi}).accepted);

  Derivation wrong;
  auto w = wrong.hyp(phi);
  wrong.colift(p2, w, 1);
  EXPECT_EQ(check_derivation(wrong, m.calculus, {}, {phi}).line, 2u);

  Derivation fx;
  auto f = fx.hyp(cs.falsum_of(1));
  fx.falsum(cs.falsum_of(2), f);
  EXPECT_TRUE(check_derivation(fx, m.calculus, {}, {cs.falsum_of(1)}).accepted);
  Derivation bad_fx;
  auto g = bad_fx.hyp(cs.falsum_of(1));
  bad_fx.falsum(cs.falsum_of(1), g);
  EXPECT_FALSE(check_derivation(bad_fx, m.calculus, {}, {cs.falsum_of(1)}).accepted);
}

TEST(MeetCalculus, LiftedDerivationRoundTripsThroughText) {
  MeetSystem m = load_meet_system("IPL", "S43");
  Rule r = parse_inline_rule("<and|and>(xi1, <or|or>(xi2, xi3)) / <or|or>(xi2, xi3)", *m.cs);
  SearchBounds b;
  b.liftable = true;
  auto side = [&](int k) {
    std::vector<Formula> hyps{project(r.premises[0], k)};
    auto d = bounded_proof_search(m.logic(k).calculus, {}, hyps, project(r.conclusion, k), b);
    EXPECT_TRUE(d);
    return ComponentProof{*d, &m.logic(k).calculus, {}};
  };
  Derivation d = build_both_admissible_derivation(r.premises, r.conclusion, side(1), side(2), *m.cs);
  EXPECT_EQ(d.conclusion(), r.conclusion);
  EXPECT_TRUE(check_derivation(d, m.calculus, {}, r.premises).accepted);
  Derivation back = parse_derivation(print_derivation(d), *m.cs);
  EXPECT_TRUE(check_derivation(back, m.calculus, {}, r.premises).accepted);
}

TEST(MeetCalculus, VacuousTemplate) {
  MeetSystem m = load_meet_system("CPL", "CPL");
  const auto& cs = *m.cs;
  Formula premise = cs.falsum_of(1);
  Formula beta = parse_formula("<neg|topn.1>(xi1)", cs);
  ComponentProof df{Derivation{}, &m.l1.calculus, {}};
  df.derivation.hyp(cs.s1().bot());
  auto ej = ex_falso_continuation(m.l1.calculus, cs.s1(), project(beta, 1));
  auto ek = ex_falso_continuation(m.l2.calculus, cs.s2(), project(beta, 2));
  Derivation d = build_vacuous_side_derivation({premise}, beta, 1, df, ej, ek, cs);
  auto v = check_derivation(d, m.calculus, {}, {premise});
  EXPECT_TRUE(v.accepted) << v.reason << " at " << v.line << "\n" << print_derivation(d);
  EXPECT_EQ(d.conclusion(), beta);
}

TEST(MeetCalculus, VariableConclusionIsRejectedByTheTemplates) {
  MeetSystem m = load_meet_system("CPL", "CPL");
  Formula premise = parse_formula("<and|and>(xi1, xi2)", *m.cs);
  ComponentProof d1{Derivation{}, &m.l1.calculus, {}};
  d1.derivation.hyp(Formula::var(1));
  EXPECT_THROW(build_both_admissible_derivation({premise}, Formula::var(1), d1, d1, *m.cs), Error);
}
