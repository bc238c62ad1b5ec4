#pragma once

#include <string>

#include "pkit/lattice.hpp"
#include "pkit/presentation.hpp"

namespace pkit {

/// Hasse diagram as a DOT digraph, edges drawn upward (rankdir=BT).
/// Deterministic node order; nodes flagged in `limit_marks` get a double
/// outline (used for limit points of truncations).
std::string dot_of_poset(const FinitePoset& p, const std::string& name,
                         const std::vector<bool>* limit_marks = nullptr);

/// Hasse diagram of truncate(s, depth), limit points tagged.
std::string dot_of_truncation(const SpacePresentation& s, int depth, const std::string& name);

/// Inclusion Hasse diagram of a finite distributive lattice.
std::string dot_of_lattice(const FiniteDistLattice& l, const std::string& name);

}  // namespace pkit
