#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "wildchar/groupoid.hpp"

namespace wildchar {
namespace {

using testing::mat;
using testing::q;
using testing::Q;

// Two objects a, b; loops x at a, y at b; edge e: a -> b; relation x e y e^-1.
PresentationPtr small_presentation() {
  return std::make_shared<const Presentation>(
      "small", std::vector<std::string>{"a", "b"},
      std::vector<GeneratorSpec>{{"x", "a", "a"}, {"y", "b", "b"}, {"e", "a", "b"}},
      std::vector<Relation>{{"r", Word::parse("x e y e^-1")}}, "a");
}

TEST(Word, ParseAndFreeReduction) {
  const Word w = Word::parse("g12 g23^-1 g23 g34");
  EXPECT_EQ(w.to_string(), "g12 g34");
  EXPECT_TRUE(Word::parse("a a^-1").empty());
  EXPECT_EQ(Word::parse("a b^-1").inverse(), Word::parse("b a^-1"));
  EXPECT_EQ(gen("a") * gen("a", -1), Word());
  EXPECT_WILDCHAR_ERROR(Word::parse("a^2"), ErrorCode::malformed_word);
  EXPECT_WILDCHAR_ERROR(Word::parse("a^"), ErrorCode::malformed_word);
}

TEST(Presentation, EndpointsCompose) {
  const auto p = small_presentation();
  EXPECT_EQ(p->endpoints(Word::parse("x e y")), std::make_pair(std::string("a"), std::string("b")));
  EXPECT_EQ(p->endpoints(Word::parse("e^-1 x")), std::make_pair(std::string("b"), std::string("a")));
  EXPECT_TRUE(p->is_loop(Word::parse("e y e^-1")));
  EXPECT_WILDCHAR_ERROR(p->endpoints(Word::parse("e x")), ErrorCode::not_composable);
  EXPECT_WILDCHAR_ERROR(p->endpoints(Word::parse("z")), ErrorCode::unknown_generator);
}

TEST(Presentation, ValidationRejectsBadInput) {
  const std::vector<std::string> objs{"a", "b"};
  EXPECT_WILDCHAR_ERROR(Presentation("p", objs, {{"e", "a", "c"}}, {}, "a"),
                        ErrorCode::invalid_presentation);
  EXPECT_WILDCHAR_ERROR(Presentation("p", objs, {{"e", "a", "b"}}, {{"r", gen("e")}}, "a"),
                        ErrorCode::invalid_presentation);
  EXPECT_WILDCHAR_ERROR(Presentation("p", objs, {}, {}, "c"), ErrorCode::invalid_presentation);
  EXPECT_WILDCHAR_ERROR(Presentation("p", objs, {{"e", "a", "b"}, {"e", "b", "a"}}, {}, "a"),
                        ErrorCode::invalid_presentation);
}

TEST(Presentation, BuiltinsAreConsistent) {
  const auto tame = tame_presentation();
  EXPECT_EQ(tame->objects().size(), 4U);
  EXPECT_EQ(tame->generators().size(), 8U);
  EXPECT_EQ(tame->base_object(), "s1");
  const auto wild = wild_presentation();
  EXPECT_EQ(wild->objects().size(), 13U);
  EXPECT_EQ(wild->generators().size(), 19U);
  EXPECT_EQ(wild->relations().size(), 3U);
  EXPECT_EQ(wild->gauge_class("sig1m"), GaugeClass::diagonal);
  EXPECT_EQ(wild->gauge_class("s0"), GaugeClass::unrestricted);
  EXPECT_TRUE(wild->is_loop(wild->named_word("formal_loop")));
  EXPECT_EQ(wild_tree().size(), wild->objects().size() - 1);
  EXPECT_EQ(tame_tree().size(), tame->objects().size() - 1);
}

TEST(Representation, EvaluateIsLeftToRight) {
  const auto p = small_presentation();
  const ExactMat x = mat(1, 1, 0, 1);
  const ExactMat e = mat(2, 1, 1, 1);
  const ExactMat y = mat_inv(e) * mat_inv(x) * e;
  const Representation<Q> rep(p, {{"x", x}, {"y", y}, {"e", e}});
  EXPECT_EQ(evaluate(rep, Word::parse("x e")), x * e);
  EXPECT_EQ(evaluate(rep, Word::parse("e^-1")), mat_inv(e));
  EXPECT_TRUE(satisfies_relations(rep));
  EXPECT_FALSE(satisfies_relations(rep.with("y", ExactMat::identity())));
  EXPECT_WILDCHAR_ERROR(Representation<Q>(p, {{"x", x}, {"e", e}}), ErrorCode::unknown_generator);
  EXPECT_WILDCHAR_ERROR(rep.with("x", mat(1, 2, 2, 4)), ErrorCode::singular_matrix);
}

TEST(Representation, IdentitySatisfiesEveryRelation) {
  EXPECT_TRUE(satisfies_relations(Representation<Q>::identity(tame_presentation())));
  EXPECT_TRUE(satisfies_relations(Representation<Q>::identity(wild_presentation())));
  EXPECT_TRUE(satisfies_relations(Representation<Complexd>::identity(wild_presentation())));
}

TEST(Gauge, NormalizeTrivializesTree) {
  const auto p = small_presentation();
  const ExactMat x = mat(1, 1, 0, 1);
  const ExactMat e = mat(3, 2, 1, 1);
  const Representation<Q> rep(p, {{"x", x}, {"y", mat_inv(e) * mat_inv(x) * e}, {"e", e}});
  const auto n = normalize(rep, {"e"});
  EXPECT_TRUE(n.rep.at("e").is_identity());
  EXPECT_EQ(n.rep.at("x"), x);
  EXPECT_EQ(n.rep.at("y"), mat_inv(x));
  EXPECT_EQ(apply_gauge(rep, n.gauge), n.rep);
  EXPECT_TRUE(n.gauge.at("a").is_identity());
}

TEST(Gauge, TreeMustSpan) {
  const auto rep = Representation<Q>::identity(tame_presentation());
  EXPECT_WILDCHAR_ERROR(normalize(rep, {"g12", "g23"}), ErrorCode::tree_not_spanning);
  EXPECT_WILDCHAR_ERROR(normalize(rep, {"g12", "g23", "g34", "g41"}), ErrorCode::tree_not_spanning);
}

TEST(Gauge, DiagonalConstraintEnforced) {
  const auto rep = Representation<Q>::identity(wild_presentation());
  GaugeAssignment<Q> ok{{"sig1m", ExactMat::diagonal(q(2), q(1, 2))}};
  EXPECT_NO_THROW(apply_gauge(rep, ok));
  GaugeAssignment<Q> bad{{"sig1m", mat(1, 1, 0, 1)}};
  EXPECT_WILDCHAR_ERROR(apply_gauge(rep, bad), ErrorCode::gauge_constraint_violated);
  GaugeAssignment<Q> not_sl2{{"tauh2", ExactMat::diagonal(q(2), q(2))}};
  EXPECT_WILDCHAR_ERROR(apply_gauge(rep, not_sl2), ErrorCode::gauge_constraint_violated);
}

TEST(Gauge, NormalizationIsGaugeInvariant) {
  Rng rng(21);
  for (int k = 0; k < 20; ++k) {
    const auto rep = wild_to_groupoid(random_wild_rep(rng));
    const auto gauged = apply_gauge(rep, random_wild_gauge(rng));
    EXPECT_TRUE(satisfies_relations(gauged));
    EXPECT_EQ(normalize(gauged, wild_tree()).rep, normalize(rep, wild_tree()).rep);
  }
}

TEST(Automorphism, ValidatesEndpoints) {
  const auto p = small_presentation();
  EXPECT_WILDCHAR_ERROR(Automorphism("bad", p, {{"x", gen("y")}}), ErrorCode::endpoint_mismatch);
  EXPECT_WILDCHAR_ERROR(Automorphism("bad", p, {{"q", gen("x")}}), ErrorCode::unknown_generator);
  const Automorphism conj("conj", p, {{"x", Word::parse("e y e^-1")}, {"y", Word::parse("e^-1 x e")}});
  EXPECT_EQ(conj.apply(Word::parse("x e")), Word::parse("e y"));
}

TEST(Automorphism, TameBraidsPreserveRelations) {
  Rng rng(4);
  for (int i = 1; i <= 3; ++i) {
    const Automorphism h = braid_automorphism_tame(i);
    for (int k = 0; k < 10; ++k) {
      const auto rep = tame_to_groupoid(random_tame_triple(rng, 5, true));
      EXPECT_TRUE(satisfies_relations(apply_automorphism(h, rep)));
    }
  }
  EXPECT_WILDCHAR_ERROR(braid_automorphism_tame(4), ErrorCode::usage);
}

TEST(Automorphism, TameH1MatchesMatrixFormula) {
  const TameTriple<Q> t = testing::worked_tame_triple();
  const auto out = normalize(apply_automorphism(braid_automorphism_tame(1), tame_to_groupoid(t)),
                             tame_tree());
  const TameTriple<Q> via = tame_from_groupoid(out.rep);
  EXPECT_EQ(via.m1, t.m1);
  EXPECT_EQ(via.m2, t.m2);
  EXPECT_EQ(via.m3, mat(-1, -1, 6, 5));
}

TEST(Automorphism, WildBraidsMatchMatrixFormulas) {
  const WildRep<Q> r = testing::generic_wild_rep();
  const auto rep = wild_to_groupoid(r);
  const auto pure = normalize(apply_automorphism(braid_automorphism_wild(WildBraid::pure), rep),
                              wild_tree());
  EXPECT_EQ(wild_from_groupoid(pure.rep), pure_braid_matrix(r));

  // The full braid lands on the relabelled presentation; its normalized
  // tuple is (U1^-1 M0 U1, U2, Mhat U1 Mhat^-1, Mhat) before the chart return.
  const auto full = normalize(apply_automorphism(braid_automorphism_wild(WildBraid::full), rep),
                              wild_tree());
  const WildTuple<Q> t = wild_tuple_from_groupoid(full.rep);
  EXPECT_EQ(t.m0, mat_inv(r.U1()) * r.m0 * r.U1());
  EXPECT_EQ(t.u1, r.U2());
  EXPECT_EQ(t.u2, r.Mhat() * r.U1() * mat_inv(r.Mhat()));
  EXPECT_EQ(t.mhat, r.Mhat());
  EXPECT_EQ(weyl_conjugate(t), full_braid_tuple(r));
}

TEST(Automorphism, IdentityIsNeutral) {
  const auto rep = wild_to_groupoid(testing::generic_wild_rep());
  EXPECT_EQ(apply_automorphism(identity_automorphism(wild_presentation()), rep), rep);
}

}  // namespace
}  // namespace wildchar
