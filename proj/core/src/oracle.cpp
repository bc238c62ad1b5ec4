#include "pkit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pkit {

namespace {

/// Canonical key: the lexicographically least adjacency encoding over all
/// relabelings. Fine at n <= 6.
std::string canonical_key(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key(n * n, '0');
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (p.leq(perm[i], perm[j])) key[i * n + j] = '1';
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<FinitePoset> enumerate_posets(int n) {
  if (n < 1 || n > 6) fail(ErrorKind::SizeLimit, "poset enumeration supports 1..6 elements");
  std::vector<FinitePoset> level{FinitePoset::antichain(1)};
  for (int size = 2; size <= n; ++size) {
    std::vector<FinitePoset> next;
    std::set<std::string> seen;
    for (const FinitePoset& p : level) {
      for (const DynBitset& down : p.all_downsets()) {
        // New maximal element whose strict downset is `down`.
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < p.size(); ++a)
          for (std::size_t b = 0; b < p.size(); ++b)
            if (a != b && p.leq(a, b)) pairs.emplace_back(a, b);
        for (std::size_t a = down.find_first(); a < down.size(); a = down.find_next(a + 1))
          pairs.emplace_back(a, p.size());
        FinitePoset grown =
            FinitePoset::from_index_relation(p.size() + 1, pairs);
        if (seen.insert(canonical_key(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

EnumerationReport sweep_birkhoff(int n) {
  EnumerationReport rep;
  rep.sweep = "birkhoff";
  rep.size = n;
  for (const FinitePoset& p : enumerate_posets(n)) {
    ++rep.instances;
    bool ok = true;
    std::string why;
    FiniteDistLattice lattice = FiniteDistLattice::upset_lattice(p);

    // Antichain count, independently by subset scan.
    std::size_t antichains = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << p.size()); ++mask) {
      bool anti = true;
      for (std::size_t a = 0; a < p.size() && anti; ++a)
        for (std::size_t b = 0; b < p.size() && anti; ++b)
          if (a != b && (mask >> a & 1) && (mask >> b & 1) && p.leq(a, b)) anti = false;
      if (anti) ++antichains;
    }
    if (antichains != lattice.size()) {
      ok = false;
      why = "upset count differs from antichain count";
    }

    // Round trip through the abstract path.
    if (ok) {
      std::vector<std::string> names;
      for (std::size_t e = 0; e < lattice.size(); ++e) names.push_back(lattice.element_name(e));
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t a = 0; a < lattice.size(); ++a)
        for (std::size_t b = 0; b < lattice.size(); ++b)
          if (a != b && lattice.leq(a, b)) pairs.emplace_back(a, b);
      FinitePoset order =
          FinitePoset::from_index_relation(lattice.size(), pairs, std::move(names));
      auto canonical = FiniteDistLattice::from_abstract_order(order);
      if (!find_iso(canonical.lattice.base(), p)) {
        ok = false;
        why = "join-irreducibles do not recover the poset";
      }
    }

    // Residuation law for the arrow.
    if (ok) {
      for (std::size_t a = 0; a < lattice.size() && ok; ++a)
        for (std::size_t b = 0; b < lattice.size() && ok; ++b) {
          const std::size_t r = lattice.heyting_arrow(a, b);
          for (std::size_t c = 0; c < lattice.size(); ++c) {
            if ((lattice.leq(lattice.meet(c, a), b)) != lattice.leq(c, r)) {
              ok = false;
              why = "residuation fails";
              break;
            }
          }
        }
    }

    // alpha[I_{a->b}] = X \ down(alpha(a) \ alpha(b)).
    if (ok) {
      for (std::size_t a = 0; a < lattice.size() && ok; ++a)
        for (std::size_t b = 0; b < lattice.size() && ok; ++b) {
          DynBitset diff = lattice.upset_of(a);
          diff.subtract(lattice.upset_of(b));
          DynBitset rhs = p.closure(diff, Direction::down).complement();
          DynBitset lhs = correspond_ideal(lattice, ideal_I_ab(lattice, a, b));
          if (lhs != rhs) {
            ok = false;
            why = "ideal correspondence identity fails";
          }
        }
    }

    if (ok)
      ++rep.passed;
    else
      rep.failures.push_back("poset #" + std::to_string(rep.instances - 1) + ": " + why);
  }
  return rep;
}

EnumerationReport sweep_ifp_duality(int max_ji) {
  EnumerationReport rep;
  rep.sweep = "ifp";
  rep.size = max_ji;
  std::vector<FinitePoset> bases;
  for (int n = 1; n <= max_ji; ++n)
    for (auto& p : enumerate_posets(n)) bases.push_back(std::move(p));
  for (const FinitePoset& pl : bases) {
    FiniteDistLattice l = FiniteDistLattice::upset_lattice(pl);
    for (const FinitePoset& pm : bases) {
      FiniteDistLattice m = FiniteDistLattice::upset_lattice(pm);
      for (const IdealOrFilter& i : all_ideals(l)) {
        for (const IdealOrFilter& f : all_filters(m)) {
          ++rep.instances;
          IfpDualityResult result = dual_of_ifp_matches_sum(l, i, m, f);
          if (result.holds)
            ++rep.passed;
          else
            rep.failures.push_back("pair with |L|=" + std::to_string(l.size()) +
                                   " |M|=" + std::to_string(m.size()) +
                                   (result.iso_found ? " gamma check fails" : " no isomorphism"));
        }
      }
    }
  }
  return rep;
}

EnumerationReport sweep_truncation_stability(const SpacePresentation& s, std::vector<int> levels) {
  EnumerationReport rep;
  rep.sweep = "stability";
  const int b = s.default_window();
  rep.size = b;
  if (levels.empty()) levels = {b, b + 1, 2 * b + 4};

  EngineOptions fast;
  fast.cross_check = false;

  // Test family: the profile cylinders at a small level plus total.
  std::vector<SetDescriptor> tests = profile_cylinders(s, std::min(b, 3));
  tests.push_back(SetDescriptor::total(s));

  auto check = [&](bool condition, const std::string& what) {
    ++rep.instances;
    if (condition)
      ++rep.passed;
    else
      rep.failures.push_back(what);
  };

  // Reference decisions at B.
  std::vector<bool> ref_upset, ref_clopen;
  std::vector<SetDescriptor> ref_down;
  for (const auto& d : tests) {
    ref_upset.push_back(is_upset(s, d, fast));
    ref_clopen.push_back(is_clopen(s, d));
    ref_down.push_back(downset_of(s, d, fast));
  }
  const bool ref_esakia = is_esakia(s, fast).holds;

  for (int level : levels) {
    auto [poset, points] = truncate(s, level);
    WindowModel m = WindowModel::build(s, level);
    for (std::size_t t = 0; t < tests.size(); ++t) {
      const SetDescriptor& d = tests[t];
      // Pointwise membership on the truncation.
      DynBitset bits(points.size());
      for (std::size_t i = 0; i < points.size(); ++i)
        if (d.eval(points[i])) bits.set(i);
      check(poset.is_upset(bits) == ref_upset[t],
            "is_upset disagrees at level " + std::to_string(level));
      check(m.is_clopen_bits(m.bits_of(d)) == ref_clopen[t],
            "is_clopen disagrees at level " + std::to_string(level));
      DynBitset closed = poset.closure(bits, Direction::down);
      DynBitset synth(points.size());
      for (std::size_t i = 0; i < points.size(); ++i)
        if (ref_down[t].eval(points[i])) synth.set(i);
      check(closed == synth, "downset_of disagrees at level " + std::to_string(level));
    }
    EngineOptions at_level = fast;
    at_level.window = std::max(level, b);
    check(is_esakia(s, at_level).holds == ref_esakia,
          "esakia verdict disagrees at level " + std::to_string(level));
  }
  return rep;
}

}  // namespace pkit
