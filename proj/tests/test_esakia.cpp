#include <gtest/gtest.h>

#include "pkit/esakia.hpp"

using namespace pkit;

namespace {

const NatOmega W = NatOmega::omega();
NatOmega F(std::uint32_t n) { return NatOmega::finite(n); }

EmbeddingSpec identity_on_z(const SpacePresentation& z, int index) {
  EmbeddingSpec e;
  e.z_index = index;
  e.x_image = PointName{z.part_index("main"), {W, F(0)}};
  e.y_image = PointName{z.part_index("y"), {}};
  e.z_family = ZFamily{z.part_index("main"), 0, {W, F(0)}, 0};
  return e;
}

}  // namespace

TEST(IsEsakia, ZAtomsFailWithYWitness) {
  SpacePresentation z1 = atom("z1");
  Verdict v = is_esakia(z1);
  ASSERT_FALSE(v.holds);
  ASSERT_TRUE(v.offending_clopen.has_value());
  // the scan lands on the isolated point {y}
  EXPECT_EQ(v.offending_clopen->str(z1), "y");
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->pattern, 1);
}

TEST(IsEsakia, PatternsOfTheThreeAtoms) {
  for (int i = 1; i <= 3; ++i) {
    SpacePresentation z = atom("z" + std::to_string(i));
    Verdict v = is_esakia(z);
    ASSERT_FALSE(v.holds) << i;
    ASSERT_TRUE(v.witness.has_value()) << i;
    EXPECT_EQ(v.witness->pattern, i);
    // U is the singleton {y}
    EXPECT_EQ(v.witness->neighborhood, SetDescriptor::point(z, PointName{z.part_index("y"), {}}));
    EXPECT_EQ(z.point_str(v.witness->x_image), "main(omega)");
    EXPECT_EQ(z.point_str(v.witness->y_image), "y");
  }
}

TEST(IsEsakia, PositiveExamples) {
  for (const char* name : {"point", "grid", "example_e1", "example_e2", "chain_fan",
                           "antichain_fan"}) {
    Verdict v = is_esakia(atom(name));
    EXPECT_TRUE(v.holds) << name;
    EXPECT_FALSE(v.witness.has_value());
  }
}

TEST(IsEsakia, FiniteSpacesAlwaysHold) {
  FinitePoset p = FinitePoset::from_relation({"a", "b", "c", "d"},
                                             {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  EXPECT_TRUE(is_esakia(finite_space(p)).holds);
}

TEST(FindConfiguration, VerifiedByIndependentPath) {
  for (int i = 1; i <= 3; ++i) {
    SpacePresentation z = atom("z" + std::to_string(i));
    auto wit = find_forbidden_configuration(z);
    ASSERT_TRUE(wit.has_value());
    Diagnosis d = verify_forbidden_configuration(z, *wit);
    EXPECT_TRUE(d.ok) << (d.notes.empty() ? "" : d.notes[0]);
  }
}

TEST(FindConfiguration, NoneOnTheCounterexampleSpaces) {
  EXPECT_FALSE(find_forbidden_configuration(atom("example_e1")).has_value());
  EXPECT_FALSE(find_forbidden_configuration(atom("example_e2")).has_value());
  EXPECT_FALSE(find_forbidden_configuration(atom("grid")).has_value());
}

TEST(VerifyConfiguration, RejectsWidenedNeighborhood) {
  SpacePresentation z3 = atom("z3");
  auto wit = find_forbidden_configuration(z3);
  ASSERT_TRUE(wit.has_value());
  ConfigurationWitness widened = *wit;
  widened.neighborhood = SetDescriptor::total(z3);
  Diagnosis d = verify_forbidden_configuration(z3, widened);
  EXPECT_FALSE(d.ok);  // the downset of the whole space pulls back everything
}

// The z1 pattern embeds into the first counterexample space, but every
// clopen neighborhood of the y image catches a tail of the z's, so no
// witness survives verification.
TEST(VerifyConfiguration, RejectsE1PseudoWitness) {
  SpacePresentation e1 = atom("example_e1");
  ConfigurationWitness w;
  w.pattern = 1;
  w.x_image = PointName{e1.part_index("q"), {W, F(0)}};
  w.y_image = PointName{e1.part_index("p"), {W, F(0)}};
  w.z_family = ZFamily{e1.part_index("q"), 0, {W, F(0)}, 0};
  // a tail neighborhood of p(omega)
  w.neighborhood = SetDescriptor::intersect(SetDescriptor::in_part(e1, "p"),
                                            SetDescriptor::coord_geq(e1, 0, 3));
  Diagnosis d = verify_forbidden_configuration(e1, w);
  EXPECT_FALSE(d.ok);
  bool mentions_below_u = false;
  for (const auto& n : d.notes) mentions_below_u |= n.find("below U") != std::string::npos;
  EXPECT_TRUE(mentions_below_u);
}

TEST(VerifyConfiguration, RejectsWrongPatternTag) {
  SpacePresentation z2 = atom("z2");
  auto wit = find_forbidden_configuration(z2);
  ASSERT_TRUE(wit.has_value());
  ConfigurationWitness wrong = *wit;
  wrong.pattern = 1;  // z2's family is an antichain, not a chain
  EXPECT_FALSE(verify_forbidden_configuration(z2, wrong).ok);
}

TEST(PSpace, ZAtomsFailWithUpsetNeighborhoods) {
  for (int i = 1; i <= 3; ++i) {
    SpacePresentation z = atom("z" + std::to_string(i));
    Verdict v = is_p_space(z);
    ASSERT_FALSE(v.holds) << i;
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_TRUE(is_upset(z, v.witness->neighborhood));
    EXPECT_TRUE(verify_forbidden_configuration(z, *v.witness, {}, true).ok);
  }
}

TEST(PSpace, PositiveExamples) {
  EXPECT_TRUE(is_p_space(atom("grid")).holds);
  EXPECT_TRUE(is_p_space(atom("point")).holds);
  FinitePoset p = FinitePoset::chain(3);
  EXPECT_TRUE(is_p_space(finite_space(p)).holds);
}

TEST(PSpace, ImpliedByEsakiaAcrossAtoms) {
  for (const auto& name : atom_names()) {
    SpacePresentation s = atom(name);
    if (is_esakia(s).holds) EXPECT_TRUE(is_p_space(s).holds) << name;
  }
}

TEST(CoHeyting, MirrorsEsakiaOnDuals) {
  for (const auto& name : atom_names()) {
    SpacePresentation s = atom(name);
    EXPECT_EQ(is_coheyting_space(s).holds, is_esakia(order_dual(s)).holds) << name;
  }
}

TEST(CoHeyting, Z1HoldsButItsDualFails) {
  // upsets of clopens stay clopen in z1 itself
  EXPECT_TRUE(is_coheyting_space(atom("z1")).holds);
  Verdict dual_verdict = is_coheyting_space(order_dual(atom("z1")));
  EXPECT_FALSE(dual_verdict.holds);
  EXPECT_TRUE(dual_verdict.witness.has_value());
}

TEST(BiHeyting, Examples) {
  EXPECT_TRUE(is_biheyting_space(atom("point")).holds);
  EXPECT_TRUE(is_biheyting_space(atom("grid")).holds);
  EXPECT_FALSE(is_biheyting_space(atom("z1")).holds);   // not even Heyting
  FinitePoset p = FinitePoset::from_relation({"a", "b"}, {{"a", "b"}});
  EXPECT_TRUE(is_biheyting_space(finite_space(p)).holds);
}

TEST(MainTheorem, CoherenceAcrossAtomsAndDuals) {
  for (const auto& name : atom_names()) {
    for (bool dualize : {false, true}) {
      SpacePresentation s = dualize ? order_dual(atom(name)) : atom(name);
      Verdict v = is_esakia(s);
      EXPECT_EQ(v.holds, !v.witness.has_value()) << name << (dualize ? " dual" : "");
      if (v.witness)
        EXPECT_TRUE(verify_forbidden_configuration(s, *v.witness).ok) << name;
    }
  }
}

TEST(Embedding, ExactGridMapFromThePaper) {
  SpacePresentation g = atom("grid");
  EmbeddingSpec e;
  e.z_index = 2;
  e.x_image = PointName{0, {W, W}};        // alpha_{omega omega}
  e.y_image = PointName{0, {F(0), W}};     // alpha_{1 omega}
  e.z_family = ZFamily{0, 1, {W, W}, 0};   // z_i -> alpha_{omega, i+1}
  Diagnosis d = verify_embedding(g, e);
  EXPECT_TRUE(d.ok) << (d.notes.empty() ? "" : d.notes[0]);
}

TEST(Embedding, Z1IntoE1AndZ3IntoE2) {
  SpacePresentation e1 = atom("example_e1");
  EmbeddingSpec z1e;
  z1e.z_index = 1;
  z1e.x_image = PointName{e1.part_index("q"), {W, F(0)}};
  z1e.y_image = PointName{e1.part_index("p"), {W, F(0)}};
  z1e.z_family = ZFamily{e1.part_index("q"), 0, {W, F(0)}, 0};
  EXPECT_TRUE(verify_embedding(e1, z1e).ok);

  SpacePresentation e2 = atom("example_e2");
  EmbeddingSpec z3e;
  z3e.z_index = 3;
  z3e.x_image = PointName{e2.part_index("c"), {W, F(0)}};
  z3e.y_image = PointName{e2.part_index("d"), {W, F(0)}};
  z3e.z_family = ZFamily{e2.part_index("c"), 0, {W, F(0)}, 0};
  EXPECT_TRUE(verify_embedding(e2, z3e).ok);
}

TEST(Embedding, WrongTargetRejected) {
  SpacePresentation e1 = atom("example_e1");
  EmbeddingSpec bad;
  bad.z_index = 1;
  bad.x_image = PointName{e1.part_index("q"), {W, F(0)}};
  bad.y_image = PointName{e1.part_index("p"), {F(0), F(0)}};  // p0 instead of the p limit
  bad.z_family = ZFamily{e1.part_index("q"), 0, {W, F(0)}, 0};
  Diagnosis d = verify_embedding(e1, bad);
  EXPECT_FALSE(d.ok);
}

TEST(Embedding, IdentityMapsOnAtoms) {
  for (int i = 1; i <= 3; ++i) {
    SpacePresentation z = atom("z" + std::to_string(i));
    EXPECT_TRUE(verify_embedding(z, identity_on_z(z, i)).ok);
    // wrong source index must fail (the patterns are mutually exclusive)
    EmbeddingSpec wrong = identity_on_z(z, i == 3 ? 1 : i + 1);
    EXPECT_FALSE(verify_embedding(z, wrong).ok);
  }
}

// The clopen-downset criterion: attaching a point above a closed downset D
// of an Esakia space is Esakia exactly when D is clopen.
TEST(Lemma, DownUpSumClopenCriterion) {
  for (const char* name : {"chain_fan", "antichain_fan"}) {
    SpacePresentation a = atom(name);
    SpacePresentation pt = atom("point");
    for (const auto& d : closed_downsets_catalog(a, 2)) {
      SpacePresentation sum = down_up_sum(a, d, pt, SetDescriptor::total(pt));
      EngineOptions fast;
      fast.cross_check = false;
      Verdict v = is_esakia(sum, fast);
      EXPECT_EQ(v.holds, is_clopen(a, d)) << name << " with D = " << d.str(a);
    }
  }
}
