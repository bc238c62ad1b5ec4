#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "pkit/lattice.hpp"
#include "pkit/oracle.hpp"
#include "pkit/space_algebra.hpp"

using namespace pkit;

namespace {

/// Oracle for the arrow: scan all elements for the largest c with c^a <= b.
std::size_t arrow_by_scan(const FiniteDistLattice& l, std::size_t a, std::size_t b) {
  std::size_t best = l.bottom();
  for (std::size_t c = 0; c < l.size(); ++c)
    if (l.leq(l.meet(c, a), b) && l.leq(best, l.join(best, c))) best = l.join(best, c);
  return best;
}

FinitePoset lattice_order(const FiniteDistLattice& l) {
  std::vector<std::string> names;
  for (std::size_t e = 0; e < l.size(); ++e) names.push_back(l.element_name(e));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (a != b && l.leq(a, b)) pairs.emplace_back(a, b);
  return FinitePoset::from_index_relation(l.size(), pairs, std::move(names));
}

}  // namespace

TEST(UpsetLattice, SmallExamples) {
  EXPECT_EQ(FiniteDistLattice::upset_lattice(FinitePoset::antichain(1)).size(), 2u);
  EXPECT_EQ(FiniteDistLattice::upset_lattice(FinitePoset::antichain(2)).size(), 4u);
}

// The dual lattice of the depth-2 truncation of z1: nine clopen upsets,
// the ladder with {y} on the side.
TEST(UpsetLattice, Z1TruncationLadder) {
  auto [p, points] = truncate(atom("z1"), 2);
  FiniteDistLattice l = FiniteDistLattice::upset_lattice(p);
  EXPECT_EQ(l.size(), 9u);

  auto up_of = [&](std::initializer_list<const char*> names) {
    DynBitset s(p.size());
    for (const char* n : names) s.set(p.index_of(n));
    return s;
  };
  std::set<std::string> expected;
  std::vector<DynBitset> sets{
      up_of({}),
      up_of({"y"}),
      up_of({"main(0)"}),
      up_of({"main(0)", "y"}),
      up_of({"main(0)", "main(1)"}),
      up_of({"main(0)", "main(1)", "y"}),
      up_of({"main(0)", "main(1)", "main(2)"}),
      up_of({"main(0)", "main(1)", "main(2)", "y"}),
      up_of({"main(0)", "main(1)", "main(2)", "main(omega)", "y"}),
  };
  for (const auto& s : sets) EXPECT_NO_THROW(l.index_of(s));
}

TEST(JoinIrreducibles, RoundTrip) {
  for (int n = 1; n <= 4; ++n) {
    for (const FinitePoset& p : enumerate_posets(n)) {
      FiniteDistLattice l = FiniteDistLattice::upset_lattice(p);
      // canonical representation: the dual space is the base itself
      EXPECT_TRUE(find_iso(l.join_irreducibles(), p).has_value());
      // abstract round trip through a fresh Hasse presentation
      auto canonical = FiniteDistLattice::from_abstract_order(lattice_order(l));
      EXPECT_TRUE(find_iso(canonical.lattice.join_irreducibles(), p).has_value());
    }
  }
}

TEST(JoinIrreducibles, TinyExamples) {
  FiniteDistLattice two = FiniteDistLattice::upset_lattice(FinitePoset::antichain(1));
  EXPECT_EQ(two.join_irreducibles().size(), 1u);
  FiniteDistLattice four = FiniteDistLattice::upset_lattice(FinitePoset::antichain(2));
  EXPECT_EQ(four.join_irreducibles().size(), 2u);
}

TEST(HeytingArrow, ForcedCases) {
  FiniteDistLattice l = FiniteDistLattice::upset_lattice(FinitePoset::chain(3));
  for (std::size_t b = 0; b < l.size(); ++b) {
    EXPECT_EQ(l.heyting_arrow(l.top(), b), b);  // 1 -> b = b
  }
  for (std::size_t a = 0; a < l.size(); ++a) {
    EXPECT_EQ(l.heyting_arrow(a, a), l.top());  // a -> a = 1
  }
}

TEST(HeytingArrow, TwoAntichainExample) {
  FinitePoset base = FinitePoset::from_relation({"p", "q"}, {});
  FiniteDistLattice l = FiniteDistLattice::upset_lattice(base);
  DynBitset just_p(2), just_q(2), empty(2);
  just_p.set(0);
  just_q.set(1);
  std::size_t a = l.index_of(just_p), b = l.index_of(empty);
  EXPECT_EQ(l.heyting_arrow(a, b), l.index_of(just_q));
  EXPECT_EQ(l.heyting_arrow(a, b), arrow_by_scan(l, a, b));
}

TEST(HeytingArrow, Residuation) {
  for (const FinitePoset& p : enumerate_posets(4)) {
    FiniteDistLattice l = FiniteDistLattice::upset_lattice(p);
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = 0; b < l.size(); ++b) {
        std::size_t r = l.heyting_arrow(a, b);
        EXPECT_EQ(r, arrow_by_scan(l, a, b));
        for (std::size_t c = 0; c < l.size(); ++c)
          EXPECT_EQ(l.leq(l.meet(c, a), b), l.leq(c, r));
      }
  }
}

TEST(IdealIab, Examples) {
  FiniteDistLattice l = FiniteDistLattice::upset_lattice(FinitePoset::antichain(2));
  // a = 0 gives the whole lattice
  IdealOrFilter whole = ideal_I_ab(l, l.bottom(), l.bottom());
  EXPECT_EQ(whole.members.count(), l.size());
  EXPECT_EQ(is_principal(l, whole), l.top());
  // a = 1, b = 0 gives {0}
  IdealOrFilter zero = ideal_I_ab(l, l.top(), l.bottom());
  EXPECT_EQ(zero.members.count(), 1u);
  EXPECT_EQ(is_principal(l, zero), l.bottom());
  // two-antichain: a = {p}, b = empty has exactly two members
  DynBitset just_p(2), empty(2);
  just_p.set(0);
  IdealOrFilter i = ideal_I_ab(l, l.index_of(just_p), l.index_of(empty));
  EXPECT_EQ(i.members.count(), 2u);
}

TEST(IdealIab, AlwaysPrincipalGeneratedByArrow) {
  for (const FinitePoset& p : enumerate_posets(4)) {
    FiniteDistLattice l = FiniteDistLattice::upset_lattice(p);
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = 0; b < l.size(); ++b) {
        auto gen = is_principal(l, ideal_I_ab(l, a, b));
        ASSERT_TRUE(gen.has_value());
        EXPECT_EQ(*gen, l.heyting_arrow(a, b));
      }
  }
}

TEST(CorrespondIdeal, Examples) {
  FiniteDistLattice l = FiniteDistLattice::upset_lattice(FinitePoset::chain(2));
  IdealOrFilter zero{IdealOrFilter::Kind::ideal, DynBitset(l.size())};
  zero.members.set(l.bottom());
  EXPECT_TRUE(correspond_ideal(l, zero).none());

  IdealOrFilter topf{IdealOrFilter::Kind::filter, DynBitset(l.size())};
  topf.members.set(l.top());
  EXPECT_EQ(correspond_ideal(l, topf), l.upset_of(l.top()));
}

// alpha[I_{c->0}] on the z1 truncation lattice is everything except the
// downset of y, i.e. the three chain points.
TEST(CorrespondIdeal, Z1TruncationIcZero) {
  auto [p, points] = truncate(atom("z1"), 2);
  FiniteDistLattice l = FiniteDistLattice::upset_lattice(p);
  DynBitset just_y(p.size());
  just_y.set(p.index_of("y"));
  std::size_t c = l.index_of(just_y);
  DynBitset image = correspond_ideal(l, ideal_I_ab(l, c, l.bottom()));
  DynBitset expected(p.size());
  expected.set(p.index_of("main(0)"));
  expected.set(p.index_of("main(1)"));
  expected.set(p.index_of("main(2)"));
  EXPECT_EQ(image, expected);

  // the Lemma shape: X minus the down-closure of alpha(c) \ alpha(0)
  DynBitset rhs = p.closure(just_y, Direction::down).complement();
  EXPECT_EQ(image, rhs);
}

TEST(CorrespondIdeal, InverseRecoversIdeal) {
  for (const FinitePoset& p : enumerate_posets(4)) {
    FiniteDistLattice l = FiniteDistLattice::upset_lattice(p);
    for (const IdealOrFilter& i : all_ideals(l)) {
      DynBitset open_upset = correspond_ideal(l, i);
      DynBitset members(l.size());
      for (std::size_t e = 0; e < l.size(); ++e)
        if (l.upset_of(e).subset_of(open_upset)) members.set(e);
      EXPECT_EQ(members, i.members);
    }
  }
}

TEST(AbstractLattice, RejectsM3andN5) {
  // M3: bottom, three incomparable atoms, top
  FinitePoset m3 = FinitePoset::from_relation(
      {"o", "x", "y", "z", "i"},
      {{"o", "x"}, {"o", "y"}, {"o", "z"}, {"x", "i"}, {"y", "i"}, {"z", "i"}});
  EXPECT_THROW(FiniteDistLattice::from_abstract_order(m3), Error);
  EXPECT_FALSE(satisfies_distributive_law(m3));

  // N5: pentagon
  FinitePoset n5 = FinitePoset::from_relation(
      {"o", "a", "b", "c", "i"}, {{"o", "a"}, {"a", "b"}, {"b", "i"}, {"o", "c"}, {"c", "i"}});
  EXPECT_THROW(FiniteDistLattice::from_abstract_order(n5), Error);
  EXPECT_FALSE(satisfies_distributive_law(n5));
}

TEST(AbstractLattice, RejectsNonLattice) {
  FinitePoset no_top = FinitePoset::from_relation({"a", "b"}, {});
  try {
    FiniteDistLattice::from_abstract_order(no_top);
    FAIL() << "expected NotALattice";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotALattice);
  }
}

// The forbidden-sublattice scan agrees with the distributive law on every
// upset lattice (positives) and on the two canonical counterexamples
// (negatives, above).
TEST(AbstractLattice, ScanAgreesWithLaw) {
  for (int n = 1; n <= 4; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      FiniteDistLattice l = FiniteDistLattice::upset_lattice(p);
      FinitePoset order = lattice_order(l);
      EXPECT_TRUE(satisfies_distributive_law(order));
      EXPECT_NO_THROW(FiniteDistLattice::from_abstract_order(order));
    }
}
