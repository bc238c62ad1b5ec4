#pragma once

#include <string>
#include <vector>

#include "pkit/lattice_algebra.hpp"

namespace pkit {

struct EnumerationReport {
  std::string sweep;
  int size = 0;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;

  bool all_passed() const { return failures.empty() && passed == instances; }
};

/// All posets on n elements up to isomorphism, in a deterministic canonical
/// order. Built by adding a maximal element over every downset of each
/// smaller poset, pruned by canonical forms. n is capped at 6.
std::vector<FinitePoset> enumerate_posets(int n);

/// Birkhoff round trip through the abstract-lattice path, the residuation
/// law, the antichain count and the ideal correspondence identity, over
/// every poset of the given size.
EnumerationReport sweep_birkhoff(int n);

/// The product/sum duality over every pair of lattices with at most maxJ
/// join-irreducibles, every ideal and every filter.
EnumerationReport sweep_ifp_duality(int max_ji);

/// Windowed decisions recomputed pointwise on truncations at the given
/// levels (default {B, B+1, 2B+4}); every disagreement is a failure.
EnumerationReport sweep_truncation_stability(const SpacePresentation& s,
                                             std::vector<int> levels = {});

}  // namespace pkit
