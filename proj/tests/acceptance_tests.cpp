// Acceptance suite: one test per criterion, each printing a pass/fail line
// with its runtime. Tolerances and time budgets are pinned here.

#include <gtest/gtest.h>

#include <chrono>

#include "pkit/dsl.hpp"
#include "pkit/lattice_algebra.hpp"
#include "pkit/oracle.hpp"

using namespace pkit;

namespace {

const NatOmega W = NatOmega::omega();
NatOmega F(std::uint32_t n) { return NatOmega::finite(n); }

class Criterion {
public:
  explicit Criterion(int number, std::string what)
      : number_(number), what_(std::move(what)), t0_(std::chrono::steady_clock::now()) {}

  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

  void finish(bool passed, double budget_ms) {
    const double elapsed = ms();
    printf("[criterion %d] %-58s %s (%.0f ms)\n", number_, what_.c_str(),
           passed ? "PASS" : "FAIL", elapsed);
    fflush(stdout);
    EXPECT_TRUE(passed);
    EXPECT_LT(elapsed, budget_ms);
  }

private:
  int number_;
  std::string what_;
  std::chrono::steady_clock::time_point t0_;
};

EmbeddingSpec identity_on_z(const SpacePresentation& z, int index) {
  EmbeddingSpec e;
  e.z_index = index;
  e.x_image = PointName{z.part_index("main"), {W, F(0)}};
  e.y_image = PointName{z.part_index("y"), {}};
  e.z_family = ZFamily{z.part_index("main"), 0, {W, F(0)}, 0};
  return e;
}

/// The built-in presentation suite: atoms, their order duals, and the
/// down-up sums of each atom with its catalog closed downsets (reduced
/// constant budget on the arity-2 grid).
std::vector<SpacePresentation> builtin_suite() {
  std::vector<SpacePresentation> suite;
  EngineOptions fast;
  fast.cross_check = false;
  SpacePresentation pt = atom("point");
  for (const auto& name : atom_names()) {
    SpacePresentation s = atom(name);
    suite.push_back(s);
    suite.push_back(order_dual(s));
    const int budget = s.max_arity() >= 2 ? 1 : 2;
    for (const auto& d : closed_downsets_catalog(s, budget, fast))
      suite.push_back(down_up_sum(s, d, pt, SetDescriptor::total(pt), fast));
  }
  return suite;
}

}  // namespace

// 1. find-config on the three atoms: patterns 1, 2, 3, U = {y}, each
//    witness re-verified independently, under a second apiece.
TEST(Acceptance, C1_ForbiddenConfigurationRegression) {
  bool ok = true;
  double worst_ms = 0;
  for (int i = 1; i <= 3; ++i) {
    Criterion one(1, "(sub) find-config z" + std::to_string(i));
    SpacePresentation z = atom("z" + std::to_string(i));
    Verdict v = is_esakia(z);
    ok = ok && !v.holds && v.witness.has_value();
    if (v.witness) {
      ok = ok && v.witness->pattern == i;
      ok = ok &&
           v.witness->neighborhood == SetDescriptor::point(z, PointName{z.part_index("y"), {}});
      ok = ok && verify_forbidden_configuration(z, *v.witness).ok;
    }
    worst_ms = std::max(worst_ms, one.ms());
  }
  Criterion c(1, "forbidden-configuration regression on z1, z2, z3");
  c.finish(ok && worst_ms < 1000.0, 3000.0);
}

// 2. Main-theorem coherence across the full built-in suite: the cylinder
//    scan and the configuration search agree everywhere, witnesses verify,
//    and nothing is inconclusive.
TEST(Acceptance, C2_MainTheoremCoherence) {
  Criterion c(2, "esakia verdict == configuration search across the suite");
  EngineOptions fast;
  fast.cross_check = false;
  bool ok = true;
  std::size_t count = 0;
  try {
    for (const SpacePresentation& s : builtin_suite()) {
      ++count;
      Verdict v = is_esakia(s, fast);  // raises ValidationInconclusive on disagreement
      ok = ok && (v.holds == !v.witness.has_value());
      if (v.witness) ok = ok && verify_forbidden_configuration(s, *v.witness, fast).ok;
    }
  } catch (const Error& e) {
    ADD_FAILURE() << e.what();
    ok = false;
  }
  ok = ok && count >= 30;
  c.finish(ok, 30000.0);
}

// 3. The clopen-downset criterion, exhaustively over catalog closed
//    downsets of the two fans, the grid and all 16 posets of size 4.
TEST(Acceptance, C3_DownUpSumLemma) {
  Criterion c(3, "X (+)_D {pt} esakia iff D clopen, exhaustive");
  EngineOptions fast;
  fast.cross_check = false;
  SpacePresentation pt = atom("point");
  bool ok = true;
  auto check_space = [&](const SpacePresentation& a, int budget) {
    for (const auto& d : closed_downsets_catalog(a, budget, fast)) {
      SpacePresentation sum = down_up_sum(a, d, pt, SetDescriptor::total(pt), fast);
      Verdict v = is_esakia(sum, fast);
      if (v.holds != is_clopen(a, d)) {
        ADD_FAILURE() << "lemma fails on " << sum.provenance();
        ok = false;
      }
    }
  };
  check_space(atom("chain_fan"), atom("chain_fan").default_window());
  check_space(atom("antichain_fan"), atom("antichain_fan").default_window());
  check_space(atom("grid"), 1);
  for (const FinitePoset& p : enumerate_posets(4)) check_space(finite_space(p), 1);
  c.finish(ok, 60000.0);
}

// 4. The paper-example suite: the three Esakia spaces carry their stated
//    embeddings and no forbidden configuration.
TEST(Acceptance, C4_PaperExampleSuite) {
  Criterion c(4, "example spaces are esakia and carry the stated embeddings");
  bool ok = true;

  SpacePresentation e1 = atom("example_e1");
  SpacePresentation e2 = atom("example_e2");
  SpacePresentation g = atom("grid");
  for (const SpacePresentation* s : {&e1, &e2, &g}) {
    Verdict v = is_esakia(*s);
    ok = ok && v.holds && !v.witness.has_value();
  }

  EmbeddingSpec z1e;
  z1e.z_index = 1;
  z1e.x_image = PointName{e1.part_index("q"), {W, F(0)}};
  z1e.y_image = PointName{e1.part_index("p"), {W, F(0)}};
  z1e.z_family = ZFamily{e1.part_index("q"), 0, {W, F(0)}, 0};
  ok = ok && verify_embedding(e1, z1e).ok;

  EmbeddingSpec z3e;
  z3e.z_index = 3;
  z3e.x_image = PointName{e2.part_index("c"), {W, F(0)}};
  z3e.y_image = PointName{e2.part_index("d"), {W, F(0)}};
  z3e.z_family = ZFamily{e2.part_index("c"), 0, {W, F(0)}, 0};
  ok = ok && verify_embedding(e2, z3e).ok;

  // the exact map of the grid example: y -> alpha_{1 omega},
  // z_i -> alpha_{omega, i+1}, x -> alpha_{omega omega}
  EmbeddingSpec z2e;
  z2e.z_index = 2;
  z2e.x_image = PointName{0, {W, W}};
  z2e.y_image = PointName{0, {F(0), W}};
  z2e.z_family = ZFamily{0, 1, {W, W}, 0};
  ok = ok && verify_embedding(g, z2e).ok;

  c.finish(ok, 10000.0);
}

// 5. Non-Heyting exhibits on the duals of the three atoms, plus the
//    certificates through the identity embeddings.
TEST(Acceptance, C5_NonHeytingExhibits) {
  Criterion c(5, "missing arrows and certificates on dual(z1..z3)");
  bool ok = true;

  RepresentedLattice r1 = represent(atom("z1"), 3);
  SetDescriptor y1 = SetDescriptor::in_part(r1.space, "y");
  ok = ok && !arrow_exists(r1, y1, SetDescriptor::none(r1.space)).has_value();

  RepresentedLattice r2 = represent(atom("z2"), 3);
  for (const auto& a : r2.elements) {
    if (a.empty() || a.is_total()) continue;
    ok = ok && !arrow_exists(r2, a, SetDescriptor::none(r2.space)).has_value();
  }

  RepresentedLattice r3 = represent(atom("z3"), 3);
  SetDescriptor y3 = SetDescriptor::in_part(r3.space, "y");
  for (const auto& a : r3.elements) {
    if (a.empty() || a.is_total()) continue;
    if (SetDescriptor::intersect(a, y3).empty()) continue;  // the (F,1) shapes contain y
    ok = ok && !arrow_exists(r3, a, SetDescriptor::none(r3.space)).has_value();
  }

  for (int i = 1; i <= 3; ++i) {
    SpacePresentation z = atom("z" + std::to_string(i));
    RepresentedLattice r = represent(z, 2);
    ok = ok && non_heyting_certificate(r, identity_on_z(z, i),
                                       SetDescriptor::in_part(z, "y"), SetDescriptor::none(z));
  }
  c.finish(ok, 10000.0);
}

// 6. Birkhoff sweep for n <= 5, plus the nine-element dual lattice of the
//    depth-2 truncation of z1 with its exact member list.
TEST(Acceptance, C6_BirkhoffSweep) {
  Criterion c(6, "birkhoff round trip and residuation for n <= 5");
  bool ok = true;
  const std::size_t counts[6] = {0, 1, 2, 5, 16, 63};
  for (int n = 1; n <= 5; ++n) {
    EnumerationReport rep = sweep_birkhoff(n);
    ok = ok && rep.all_passed() && rep.instances == counts[n];
  }

  auto [p, points] = truncate(atom("z1"), 2);
  FiniteDistLattice l = FiniteDistLattice::upset_lattice(p);
  ok = ok && l.size() == 9;
  auto member = [&](std::initializer_list<const char*> names) {
    DynBitset s(p.size());
    for (const char* n : names) s.set(p.index_of(n));
    try {
      l.index_of(s);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  ok = ok && member({}) && member({"y"});
  ok = ok && member({"main(0)"}) && member({"main(0)", "y"});
  ok = ok && member({"main(0)", "main(1)"}) && member({"main(0)", "main(1)", "y"});
  ok = ok && member({"main(0)", "main(1)", "main(2)"}) &&
       member({"main(0)", "main(1)", "main(2)", "y"});
  ok = ok && member({"main(0)", "main(1)", "main(2)", "main(omega)", "y"});
  c.finish(ok, 20000.0);
}

// 7. The product/sum duality over every pair with at most three
//    join-irreducibles, every ideal and every filter, plus the worked
//    six-element instance.
TEST(Acceptance, C7_IdealFilterDualitySweep) {
  Criterion c(7, "ideal-filter product duality, maxJ = 3");
  EnumerationReport rep = sweep_ifp_duality(3);
  bool ok = rep.all_passed() && rep.instances > 1000;

  FinitePoset base = FinitePoset::from_relation({"p", "q"}, {});
  FiniteDistLattice l = FiniteDistLattice::upset_lattice(base);
  FiniteDistLattice m = FiniteDistLattice::upset_lattice(FinitePoset::antichain(1));
  DynBitset just_p(2);
  just_p.set(0);
  IfpResult product = ideal_filter_product(l, principal_ideal(l, l.index_of(just_p)), m,
                                           principal_filter(m, m.top()));
  ok = ok && product.members.size() == 6;
  IfpDualityResult duality = dual_of_ifp_matches_sum(
      l, principal_ideal(l, l.index_of(just_p)), m, principal_filter(m, m.top()));
  ok = ok && duality.holds && duality.iso_found && duality.gamma_ok;
  c.finish(ok, 60000.0);
}

// 8. The window-soundness harness over every built-in atom.
TEST(Acceptance, C8_WindowSoundnessHarness) {
  Criterion c(8, "windowed decisions stable at {B, B+1, 2B+4}");
  bool ok = true;
  for (const auto& name : atom_names()) {
    EnumerationReport rep = sweep_truncation_stability(atom(name));
    if (!rep.all_passed()) {
      ADD_FAILURE() << name << ": " << (rep.failures.empty() ? "?" : rep.failures[0]);
      ok = false;
    }
  }
  c.finish(ok, 60000.0);
}

// 9. The p-space corollary and the co-Heyting mirror across the suite.
TEST(Acceptance, C9_PSpaceAndCoHeyting) {
  Criterion c(9, "p-space verdicts and the co-heyting mirror");
  EngineOptions fast;
  fast.cross_check = false;
  bool ok = true;
  for (int i = 1; i <= 3; ++i) {
    SpacePresentation z = atom("z" + std::to_string(i));
    Verdict v = is_p_space(z);
    ok = ok && !v.holds && v.witness.has_value();
    if (v.witness) {
      ok = ok && is_upset(z, v.witness->neighborhood);
      ok = ok && verify_forbidden_configuration(z, *v.witness, {}, true).ok;
    }
  }
  for (const auto& name : atom_names()) {
    SpacePresentation s = atom(name);
    ok = ok && is_coheyting_space(s, fast).holds == is_esakia(order_dual(s), fast).holds;
    ok = ok && is_coheyting_space(order_dual(s), fast).holds == is_esakia(s, fast).holds;
  }
  c.finish(ok, 10000.0);
}
