#include <gtest/gtest.h>

#include "pkit/space_algebra.hpp"
#include "pkit/window.hpp"

using namespace pkit;

namespace {

PointName pt1(const SpacePresentation& s, const std::string& part, NatOmega c) {
  return PointName{s.part_index(part), {c, NatOmega::finite(0)}};
}

PointName pt2(const SpacePresentation& s, NatOmega a, NatOmega b) {
  return PointName{0, {a, b}};
}

PointName ypt(const SpacePresentation& s) { return PointName{s.part_index("y"), {}}; }

const NatOmega W = NatOmega::omega();
NatOmega F(std::uint32_t n) { return NatOmega::finite(n); }

/// Brute-force catalog oracle for one-coordinate spaces: every subset of the
/// quotient profile space (exact values 0..budget plus the collapsed
/// tail/omega class) is clopen; keep those whose denotation is an upset.
std::size_t clopen_upset_count_by_profiles(const SpacePresentation& s, int budget) {
  struct Level {
    std::size_t part;
    bool tail;  // the collapsed class
    std::uint32_t value;
  };
  std::vector<Level> levels;
  for (std::size_t pi = 0; pi < s.parts().size(); ++pi) {
    if (s.parts()[pi].arity == 0) {
      levels.push_back({pi, false, 0});
      continue;
    }
    for (std::uint32_t c = 0; c <= static_cast<std::uint32_t>(budget); ++c)
      levels.push_back({pi, false, c});
    levels.push_back({pi, true, 0});
  }
  const int w = s.default_window() + budget + 3;
  WindowModel m = WindowModel::build(s, w);
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << levels.size()); ++mask) {
    DynBitset bits(m.size());
    for (std::size_t b = 0; b < levels.size(); ++b) {
      if (!(mask >> b & 1)) continue;
      const Level& lv = levels[b];
      if (s.parts()[lv.part].arity == 0) {
        bits.set(m.index_of(PointName{lv.part, {}}));
      } else if (lv.tail) {
        for (std::uint32_t v = static_cast<std::uint32_t>(budget) + 1;
             v <= static_cast<std::uint32_t>(w); ++v)
          bits.set(m.index_of(PointName{lv.part, {F(v), F(0)}}));
        bits.set(m.index_of(PointName{lv.part, {W, F(0)}}));
      } else {
        bits.set(m.index_of(PointName{lv.part, {F(lv.value), F(0)}}));
      }
    }
    if (m.is_upset_bits(bits)) ++count;
  }
  return count;
}

}  // namespace

TEST(EvalOrder, GridExamples) {
  SpacePresentation g = atom("grid");
  // alpha_{omega omega} <= alpha_{1 omega}: internal (omega,omega) <= (0,omega)
  EXPECT_TRUE(g.leq(pt2(g, W, W), pt2(g, F(0), W)));
  // alpha_{1 omega} <= alpha_{omega 3} fails: internal (0,omega) vs (omega,2)
  EXPECT_FALSE(g.leq(pt2(g, F(0), W), pt2(g, W, F(2))));
  // alpha_{43} <= alpha_{21}: internal (3,2) <= (1,0)
  EXPECT_TRUE(g.leq(pt2(g, F(3), F(2)), pt2(g, F(1), F(0))));
  // reflexivity
  EXPECT_TRUE(g.leq(pt2(g, F(5), W), pt2(g, F(5), W)));
}

TEST(EvalOrder, ErrorsOnForeignPoints) {
  SpacePresentation g = atom("grid");
  PointName bad{7, {}};
  EXPECT_THROW(g.leq(bad, bad), Error);
}

TEST(Validate, AtomsAreValid) {
  for (const auto& name : atom_names()) {
    ValidationReport rep = validate_presentation(atom(name));
    EXPECT_TRUE(rep.ok) << name << ": " << (rep.failures.empty() ? "" : rep.failures[0].detail);
    EXPECT_TRUE(rep.cross_checked);
  }
}

TEST(Validate, AlwaysLeqFailsAntisymmetry) {
  SpacePresentation s({{"m", 1}}, {{0, 0, Formula::truth()}}, "always");
  ValidationReport rep = validate_presentation(s, {.cross_check = false});
  ASSERT_FALSE(rep.ok);
  EXPECT_EQ(rep.failures[0].axiom, "antisymmetry");
}

TEST(Validate, NonClosedOrderFails) {
  // m(a) <= y unless a is omega: the limit of related pairs is unrelated.
  std::vector<Part> parts{{"m", 1}, {"y", 0}};
  Formula guard = Formula::neg(
      Formula::cmp(Term::make_coord(0, 0), CmpOp::eq, Term::make_const(NatOmega::omega())));
  SpacePresentation s(std::move(parts), {{0, 1, std::move(guard)}}, "open_order");
  ValidationReport rep = validate_presentation(s, {.cross_check = false});
  ASSERT_FALSE(rep.ok);
  EXPECT_EQ(rep.failures[0].axiom, "order-closedness");
}

TEST(Truncate, Z3AtZero) {
  auto [p, points] = truncate(atom("z3"), 0);
  EXPECT_EQ(p.size(), 3u);
  EXPECT_TRUE(p.leq("main(omega)", "y"));
  EXPECT_FALSE(p.leq("main(0)", "y"));
  EXPECT_FALSE(p.leq("main(0)", "main(omega)"));
}

TEST(Truncate, PointAtom) {
  auto [p, points] = truncate(atom("point"), 5);
  EXPECT_EQ(p.size(), 1u);
}

TEST(Truncate, Z1AtTwo) {
  auto [p, points] = truncate(atom("z1"), 2);
  EXPECT_EQ(p.size(), 5u);
  // x < y; x < z2 < z1 < z0; y incomparable with the chain
  EXPECT_TRUE(p.leq("main(omega)", "y"));
  EXPECT_TRUE(p.leq("main(omega)", "main(2)"));
  EXPECT_TRUE(p.leq("main(2)", "main(1)"));
  EXPECT_TRUE(p.leq("main(1)", "main(0)"));
  EXPECT_FALSE(p.leq("main(2)", "y"));
  EXPECT_FALSE(p.leq("y", "main(2)"));
  EXPECT_EQ(p.hasse_edges().size(), 4u);
}

TEST(Descriptor, EvalExamples) {
  SpacePresentation z2 = atom("z2");
  SetDescriptor in_y = SetDescriptor::in_part(z2, "y");
  EXPECT_TRUE(in_y.eval(ypt(z2)));
  EXPECT_FALSE(in_y.eval(pt1(z2, "main", F(0))));

  SetDescriptor geq5 = SetDescriptor::coord_geq(z2, 0, 5);
  EXPECT_FALSE(geq5.eval(pt1(z2, "main", F(3))));
  EXPECT_TRUE(geq5.eval(pt1(z2, "main", F(8))));
  EXPECT_TRUE(geq5.eval(pt1(z2, "main", W)));

  SetDescriptor is_w = SetDescriptor::coord_is_omega(z2, 0);
  EXPECT_TRUE(is_w.eval(pt1(z2, "main", W)));
  EXPECT_FALSE(is_w.eval(pt1(z2, "main", F(7))));
}

TEST(Descriptor, BooleanAlgebraIsExact) {
  SpacePresentation z1 = atom("z1");
  SetDescriptor a = SetDescriptor::coord_geq(z1, 0, 2);
  SetDescriptor b = SetDescriptor::coord_eq(z1, 0, 4);
  EXPECT_EQ(SetDescriptor::intersect(a, b), b);
  EXPECT_EQ(SetDescriptor::unite(a, b), a);
  EXPECT_EQ(a.complement().complement(), a);
  EXPECT_TRUE(SetDescriptor::intersect(a, a.complement()).empty());
  EXPECT_TRUE(SetDescriptor::unite(a, a.complement())
                  .complement()
                  .empty() == false);  // main part full, y part missing
  EXPECT_TRUE(SetDescriptor::unite(SetDescriptor::unite(a, a.complement()),
                                   SetDescriptor::in_part(z1, "y"))
                  .is_total());
}

TEST(IsClopen, PaperExamples) {
  SpacePresentation z1 = atom("z1");
  // {y} is clopen
  EXPECT_TRUE(is_clopen(z1, SetDescriptor::point(z1, ypt(z1))));
  // {x} is closed but not open
  SetDescriptor x = SetDescriptor::point(z1, pt1(z1, "main", W));
  EXPECT_FALSE(is_clopen(z1, x));
  EXPECT_TRUE(x.is_closed());
  EXPECT_FALSE(x.is_open());
  // the whole space is clopen
  EXPECT_TRUE(is_clopen(z1, SetDescriptor::total(z1)));
}

TEST(IsUpset, Examples) {
  SpacePresentation z1 = atom("z1");
  EXPECT_TRUE(is_upset(z1, SetDescriptor::total(z1)));
  EXPECT_TRUE(is_downset(z1, SetDescriptor::total(z1)));
  SetDescriptor y = SetDescriptor::point(z1, ypt(z1));
  EXPECT_TRUE(is_upset(z1, y));
  SetDescriptor xy = SetDescriptor::unite(y, SetDescriptor::point(z1, pt1(z1, "main", W)));
  EXPECT_TRUE(is_downset(z1, xy));
  EXPECT_FALSE(is_upset(z1, xy));
}

TEST(DownsetOf, Z1SingletonY) {
  SpacePresentation z1 = atom("z1");
  SetDescriptor down = downset_of(z1, SetDescriptor::point(z1, ypt(z1)));
  SetDescriptor expected = SetDescriptor::unite(
      SetDescriptor::point(z1, ypt(z1)),
      SetDescriptor::point(z1, pt1(z1, "main", W)));
  EXPECT_EQ(down, expected);
}

TEST(DownsetOf, Z3MainPartIsAlreadyDown) {
  SpacePresentation z3 = atom("z3");
  SetDescriptor main = SetDescriptor::in_part(z3, "main");
  EXPECT_EQ(downset_of(z3, main), main);
}

TEST(DownsetOf, GridPointExample) {
  SpacePresentation g = atom("grid");
  // alpha_21 is internal (1,0); its downset adds all points with both
  // coordinates >= 2.
  SetDescriptor d = SetDescriptor::point(g, pt2(g, F(1), F(0)));
  SetDescriptor down = downset_of(g, d);
  SetDescriptor cone = SetDescriptor::intersect(SetDescriptor::coord_geq(g, 0, 2),
                                                SetDescriptor::coord_geq(g, 1, 2));
  EXPECT_EQ(down, SetDescriptor::unite(d, cone));
}

TEST(DownsetOf, AgreesWithTruncationClosure) {
  for (const char* name : {"z1", "z2", "z3", "grid", "example_e1", "example_e2"}) {
    SpacePresentation s = atom(name);
    const int b = s.default_window();
    for (const SetDescriptor& d : profile_cylinders(s, 2)) {
      SetDescriptor down = downset_of(s, d);
      auto [p, points] = truncate(s, 2 * b + 4);
      DynBitset bits(points.size()), expect(points.size());
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (d.eval(points[i])) bits.set(i);
        if (down.eval(points[i])) expect.set(i);
      }
      EXPECT_EQ(p.closure(bits, Direction::down), expect) << name;
    }
  }
}

TEST(UpsetOf, DualityWithDownset) {
  SpacePresentation z1 = atom("z1");
  SpacePresentation d1 = order_dual(z1);
  SetDescriptor y = SetDescriptor::point(z1, ypt(z1));
  // upset in the dual equals downset in the original
  EXPECT_EQ(upset_of(d1, y), downset_of(z1, y));
}

TEST(Catalog, PointAtom) {
  auto catalog = clopen_upsets_catalog(atom("point"), 3);
  EXPECT_EQ(catalog.size(), 2u);  // empty and total
}

TEST(Catalog, Z2AtBudget2) {
  SpacePresentation z2 = atom("z2");
  auto catalog = clopen_upsets_catalog(z2, 2);
  // the empty set, the whole space, and the nonempty finite subsets of
  // {y, z0, z1, z2}: 17 distinct sets
  EXPECT_EQ(catalog.size(), 17u);
  EXPECT_EQ(catalog.size(), clopen_upset_count_by_profiles(z2, 2));
  for (const auto& d : catalog) {
    EXPECT_TRUE(d.is_clopen());
    EXPECT_TRUE(is_upset(z2, d));
  }
}

TEST(Catalog, Z3AtBudget1) {
  SpacePresentation z3 = atom("z3");
  auto catalog = clopen_upsets_catalog(z3, 1);
  EXPECT_EQ(catalog.size(), 12u);
  EXPECT_EQ(catalog.size(), clopen_upset_count_by_profiles(z3, 1));
  // the {x,y}-with-cofinite-tail shapes are present
  SetDescriptor xy_tail = SetDescriptor::unite(
      SetDescriptor::unite(SetDescriptor::coord_geq(z3, 0, 2), SetDescriptor::in_part(z3, "y")),
      SetDescriptor::coord_is_omega(z3, 0));
  bool found = false;
  for (const auto& d : catalog) found = found || d == xy_tail;
  EXPECT_TRUE(found);
}

TEST(Catalog, Z1MatchesProfileOracle) {
  SpacePresentation z1 = atom("z1");
  for (int budget : {1, 2, 3}) {
    auto catalog = clopen_upsets_catalog(z1, budget);
    EXPECT_EQ(catalog.size(), clopen_upset_count_by_profiles(z1, budget)) << budget;
    // the ladder: empty, {y}, up-z_c, up-z_c + y, total
    EXPECT_EQ(catalog.size(), 2u * (static_cast<std::size_t>(budget) + 1) + 3u);
  }
}

TEST(Catalog, LatticeLawsAndConvergence) {
  SpacePresentation z3 = atom("z3");
  auto small = clopen_upsets_catalog(z3, 1);
  auto larger = clopen_upsets_catalog(z3, 2);
  // closed under union and intersection
  for (const auto& a : small)
    for (const auto& b : small) {
      SetDescriptor u = SetDescriptor::unite(a, b);
      SetDescriptor i = SetDescriptor::intersect(a, b);
      EXPECT_NE(std::find(small.begin(), small.end(), u), small.end());
      EXPECT_NE(std::find(small.begin(), small.end(), i), small.end());
    }
  // monotone in the budget
  for (const auto& a : small)
    EXPECT_NE(std::find(larger.begin(), larger.end(), a), larger.end());
}

TEST(ClosedDownsets, ContainSingletonLimit) {
  SpacePresentation fan = atom("antichain_fan");
  auto catalog = closed_downsets_catalog(fan, 2);
  SetDescriptor x = SetDescriptor::coord_is_omega(fan, 0);
  bool found = false;
  for (const auto& d : catalog) {
    EXPECT_TRUE(d.is_closed());
    EXPECT_TRUE(is_downset(fan, d));
    found = found || d == x;
  }
  EXPECT_TRUE(found);
}

TEST(Synthesis, RoundTripOnWindow) {
  SpacePresentation g = atom("grid");
  WindowModel m = WindowModel::build(g, g.default_window());
  for (const SetDescriptor& d : profile_cylinders(g, 2)) {
    DynBitset bits = m.bits_of(d);
    SetDescriptor back = synthesize_from_bits(m, bits);
    EXPECT_EQ(m.bits_of(back), bits);
  }
}

TEST(WindowOverride, RejectsBelowBound) {
  SpacePresentation g = atom("grid");
  EngineOptions opts;
  opts.window = 2;  // far below B
  EXPECT_THROW(validate_presentation(g, opts), Error);
}
