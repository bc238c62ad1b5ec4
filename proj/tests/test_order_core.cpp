#include <gtest/gtest.h>

#include <random>

#include "pkit/natomega.hpp"
#include "pkit/poset.hpp"
#include "pkit/space_algebra.hpp"

using namespace pkit;

namespace {

FinitePoset chain3() {
  return FinitePoset::from_relation({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

FinitePoset random_poset(std::mt19937& rng, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::uniform_int_distribution<int> coin(0, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng) == 0) pairs.emplace_back(i, j);  // i < j keeps it acyclic
  return FinitePoset::from_index_relation(n, pairs);
}

DynBitset random_subset(std::mt19937& rng, std::size_t n) {
  DynBitset s(n);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng)) s.set(i);
  return s;
}

}  // namespace

TEST(NatOmega, OmegaAdd) {
  EXPECT_EQ(omega_add(NatOmega::finite(2), NatOmega::finite(3)), NatOmega::finite(5));
  EXPECT_EQ(omega_add(NatOmega::omega(), NatOmega::finite(3)), NatOmega::omega());
  EXPECT_EQ(omega_add(NatOmega::omega(), NatOmega::omega()), NatOmega::omega());
  // commutative, associative, monotone on a small grid
  std::vector<NatOmega> vals{NatOmega::finite(0), NatOmega::finite(1), NatOmega::finite(7),
                             NatOmega::omega()};
  for (auto a : vals)
    for (auto b : vals) {
      EXPECT_EQ(omega_add(a, b), omega_add(b, a));
      for (auto c : vals) {
        EXPECT_EQ(omega_add(omega_add(a, b), c), omega_add(a, omega_add(b, c)));
        if (a <= b) EXPECT_LE(omega_add(a, c), omega_add(b, c));
      }
    }
}

TEST(NatOmega, TotalOrder) {
  EXPECT_LT(NatOmega::finite(41), NatOmega::finite(42));
  EXPECT_LT(NatOmega::finite(1000000), NatOmega::omega());
  EXPECT_FALSE(NatOmega::omega() < NatOmega::omega());
}

TEST(ValidatePoset, Singleton) {
  FinitePoset p = FinitePoset::from_relation({"a"}, {});
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.leq("a", "a"));
}

TEST(ValidatePoset, TwoCycleRejected) {
  try {
    FinitePoset::from_relation({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    FAIL() << "expected AntisymmetryViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AntisymmetryViolation);
    EXPECT_NE(std::string(e.what()).find("a"), std::string::npos);
  }
}

TEST(ValidatePoset, UnknownElementRejected) {
  try {
    FinitePoset::from_relation({"a"}, {{"a", "zz"}});
    FAIL() << "expected UnknownElement";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownElement);
  }
}

// Three elements with x < y and an isolated z0 is exactly the depth-0
// truncation of the z3 atom.
TEST(ValidatePoset, MatchesZ3Truncation) {
  FinitePoset p = FinitePoset::from_relation({"x", "y", "z0"}, {{"x", "y"}});
  auto [trunc, points] = truncate(atom("z3"), 0);
  EXPECT_EQ(trunc.size(), 3u);
  EXPECT_TRUE(find_iso(p, trunc).has_value());
}

TEST(ValidatePoset, ClosureIdempotent) {
  FinitePoset p = chain3();
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.leq(i, j)) pairs.emplace_back(p.name_of(i), p.name_of(j));
  FinitePoset q = FinitePoset::from_relation(p.elements(), pairs);
  EXPECT_TRUE(p == q);
}

TEST(Closure, ChainExamples) {
  FinitePoset p = chain3();
  EXPECT_EQ(p.closure({"b"}, Direction::up), (std::vector<std::string>{"b", "c"}));
  EXPECT_EQ(p.closure({"b"}, Direction::down), (std::vector<std::string>{"a", "b"}));
}

TEST(Closure, DownY_InZ1Truncation) {
  // In every truncation of z1 the downset of {y} is {x, y}.
  auto [p, points] = truncate(atom("z1"), 2);
  auto down = p.closure({"y"}, Direction::down);
  EXPECT_EQ(down, (std::vector<std::string>{"main(omega)", "y"}));
}

TEST(Closure, Properties) {
  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    FinitePoset p = random_poset(rng, 8);
    DynBitset s = random_subset(rng, 8);
    DynBitset t = random_subset(rng, 8);
    for (Direction d : {Direction::up, Direction::down}) {
      DynBitset c = p.closure(s, d);
      EXPECT_EQ(p.closure(c, d), c);  // idempotent
      DynBitset both = s;
      both |= t;
      EXPECT_EQ(p.closure(both, d), p.closure(s, d) | p.closure(t, d));  // additive
    }
  }
}

TEST(FindIso, Examples) {
  EXPECT_TRUE(find_iso(FinitePoset::chain(2), FinitePoset::chain(2)).has_value());
  EXPECT_FALSE(find_iso(FinitePoset::chain(2), FinitePoset::antichain(2)).has_value());
}

TEST(FindIso, FanSumMatchesZ3) {
  SpacePresentation fan = atom("antichain_fan");
  SetDescriptor limit = SetDescriptor::coord_is_omega(fan, 0);
  SpacePresentation pt = atom("point");
  SpacePresentation sum = down_up_sum(fan, limit, pt, SetDescriptor::total(pt));
  auto [a, ap] = truncate(sum, 3);
  auto [b, bp] = truncate(atom("z3"), 3);
  auto iso = find_iso(a, b);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_order_embedding(*iso));
}

TEST(FindIso, Symmetry) {
  std::mt19937 rng(11);
  for (int it = 0; it < 40; ++it) {
    FinitePoset p = random_poset(rng, 6);
    FinitePoset q = random_poset(rng, 6);
    EXPECT_EQ(find_iso(p, q).has_value(), find_iso(q, p).has_value());
  }
}

TEST(OrderEmbedding, IdentityAndCollapse) {
  FinitePoset p = chain3();
  std::vector<std::size_t> id{0, 1, 2};
  EXPECT_TRUE(is_order_embedding(make_monotone_map(p, p, id)));

  FinitePoset anti = FinitePoset::antichain(2);
  FinitePoset one = FinitePoset::antichain(1);
  MonotoneMap collapse = make_monotone_map(anti, one, {0, 0});
  EXPECT_FALSE(is_order_embedding(collapse));
}

// The white-dot assignment of the first counterexample space: the z-chain
// of z1 maps onto the q chain, x to its limit, y to the p limit.
TEST(OrderEmbedding, Z1IntoExampleE1) {
  auto [z1p, z1pts] = truncate(atom("z1"), 3);
  auto [e1p, e1pts] = truncate(atom("example_e1"), 3);
  std::vector<std::size_t> assignment(z1p.size());
  SpacePresentation z1 = atom("z1");
  SpacePresentation e1 = atom("example_e1");
  for (std::size_t i = 0; i < z1pts.size(); ++i) {
    const PointName& zp = z1pts[i];
    PointName target;
    if (z1.parts()[zp.part].name == "y") {
      target = PointName{e1.part_index("p"), {NatOmega::omega(), {}}};
    } else {
      target = PointName{e1.part_index("q"), {zp.coord[0], {}}};
    }
    assignment[i] = e1p.index_of(e1.point_str(target));
  }
  MonotoneMap m = make_monotone_map(z1p, e1p, assignment);
  EXPECT_TRUE(is_order_embedding(m));
}

TEST(Hasse, ChainCovers) {
  FinitePoset p = chain3();
  auto edges = p.hasse_edges();
  ASSERT_EQ(edges.size(), 2u);
}

TEST(Upsets, CountsAndOrder) {
  EXPECT_EQ(FinitePoset::antichain(1).all_upsets().size(), 2u);
  EXPECT_EQ(FinitePoset::antichain(2).all_upsets().size(), 4u);
  EXPECT_EQ(FinitePoset::chain(3).all_upsets().size(), 4u);
  auto ups = FinitePoset::antichain(3).all_upsets();
  EXPECT_EQ(ups.size(), 8u);
  for (std::size_t i = 1; i < ups.size(); ++i)
    EXPECT_LE(ups[i - 1].count(), ups[i].count());  // deterministic order by size
}

TEST(Upsets, SizeLimit) {
  try {
    FinitePoset::antichain(8).all_upsets(100);
    FAIL() << "expected SizeLimit";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
}
