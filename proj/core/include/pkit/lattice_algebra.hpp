#pragma once

#include <optional>
#include <vector>

#include "pkit/esakia.hpp"
#include "pkit/lattice.hpp"

namespace pkit {

/// A (possibly infinite) bounded distributive lattice handled through its
/// dual presentation: the elements are the clopen upsets of the space,
/// materialized up to a constant budget. The lattice itself is never built.
struct RepresentedLattice {
  SpacePresentation space;
  int budget = 0;
  std::vector<SetDescriptor> elements;

  std::optional<std::size_t> index_of(const SetDescriptor& d) const;
};

RepresentedLattice represent(const SpacePresentation& s, int budget,
                             const EngineOptions& opts = {});

/// alpha[I_{a->b}] = X \ down(a \ b): the open upset corresponding to the
/// ideal I_{a->b}. Certified open and an upset before returning.
SetDescriptor ideal_descriptor_Iab(const RepresentedLattice& r, const SetDescriptor& a,
                                   const SetDescriptor& b, const EngineOptions& opts = {});

/// The relative pseudo-complement a -> b when it exists as a clopen upset
/// (exactly when I_{a->b} is principal); nullopt otherwise.
std::optional<SetDescriptor> arrow_exists(const RepresentedLattice& r, const SetDescriptor& a,
                                          const SetDescriptor& b, const EngineOptions& opts = {});

/// L x_I^F M: pairs (l,m) with l in I or m in F, as a bounded sublattice of
/// the product, canonicalized through its join-irreducibles.
struct IfpResult {
  FiniteDistLattice lattice;
  /// member pairs (element of L, element of M) in deterministic order
  std::vector<std::pair<std::size_t, std::size_t>> members;
  /// member index -> canonical lattice element
  std::vector<std::size_t> element_map;
};

IfpResult ideal_filter_product(const FiniteDistLattice& l, const IdealOrFilter& i,
                               const FiniteDistLattice& m, const IdealOrFilter& f);

/// Builds both sides of the duality: the dual space of L x_I^F M on one
/// hand, and the down-up sum of the dual spaces (D = complement of the open
/// upset of I, U = closed upset of F) on the other; checks they are
/// order-isomorphic and that gamma(l,m) = alpha(l) u beta(m) is a lattice
/// isomorphism onto the upsets of the sum.
struct IfpDualityResult {
  bool holds = false;
  bool iso_found = false;
  bool gamma_ok = false;
};

IfpDualityResult dual_of_ifp_matches_sum(const FiniteDistLattice& l, const IdealOrFilter& i,
                                         const FiniteDistLattice& m, const IdealOrFilter& f);

/// Preimage of a definable set along a canonical Z_i embedding: the dual
/// map h_i = e^{-1} applied to an open-upset ideal descriptor. Computable
/// coordinatewise; NotExpressible if the trace does not stabilize.
SetDescriptor preimage_on_z(const SpacePresentation& z_space, const EmbeddingSpec& e,
                            const SetDescriptor& target_set, const EngineOptions& opts = {});

/// The fixed descriptor of I_{c_i -> 0} on a Z atom: everything except
/// {x, y}. Hard-coded from the downset identity, independent of the
/// downset engine.
SetDescriptor z_minus_xy(const SpacePresentation& z_space);

/// True iff h_i[I_{a->b}] equals I_{c_i->0} on Z_i along the verified
/// embedding e; by the dual characterization theorem this certifies that
/// the represented lattice is not a Heyting algebra.
bool non_heyting_certificate(const RepresentedLattice& r, const EmbeddingSpec& e,
                             const SetDescriptor& a, const SetDescriptor& b,
                             const EngineOptions& opts = {});

}  // namespace pkit
