#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pkit/poset.hpp"

namespace pkit {

/// A finite bounded distributive lattice in canonical Birkhoff form: the
/// lattice of upsets of its poset of join-irreducibles (the dual space).
/// Join is union, meet is intersection, order is inclusion. Upsets are
/// bitsets over the base poset's element order, so iteration and equality
/// are deterministic and structural.
class FiniteDistLattice {
public:
  /// Empty placeholder; every real instance comes from the factories below.
  FiniteDistLattice() = default;

  /// Lattice of all upsets of `base`. Size equals the antichain count of
  /// base; throws SizeLimit past `limit`.
  static FiniteDistLattice upset_lattice(const FinitePoset& base,
                                         std::size_t limit = std::size_t{1} << 20);

  struct Canonicalized;

  /// Accepts an abstract bounded lattice given by its order, validates the
  /// lattice axioms and distributivity (M3/N5 sublattice scan), and
  /// canonicalizes through the join-irreducibles. Throws NotALattice or
  /// NotDistributive.
  static Canonicalized from_abstract_order(const FinitePoset& order);

  std::size_t size() const { return elements_.size(); }
  const FinitePoset& base() const { return base_; }

  /// alpha(e): the upset of join-irreducibles representing element e.
  const DynBitset& upset_of(std::size_t e) const { return elements_[e]; }
  std::size_t index_of(const DynBitset& upset) const;

  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  bool leq(std::size_t a, std::size_t b) const {
    return elements_[a].subset_of(elements_[b]);
  }
  std::size_t join(std::size_t a, std::size_t b) const {
    return index_of(elements_[a] | elements_[b]);
  }
  std::size_t meet(std::size_t a, std::size_t b) const {
    return index_of(elements_[a] & elements_[b]);
  }

  /// Relative pseudo-complement, computed on the dual side as the
  /// complement of the downward closure of alpha(a) \ alpha(b). Always
  /// exists here; satisfies c ^ a <= b iff c <= arrow(a,b).
  std::size_t heyting_arrow(std::size_t a, std::size_t b) const;

  /// The dual space: join-irreducibles in prime-filter order. For the
  /// canonical representation this is the base poset itself.
  FinitePoset join_irreducibles() const { return base_; }

  std::string element_name(std::size_t e) const;

private:
  FinitePoset base_;
  std::vector<DynBitset> elements_;
  std::unordered_map<DynBitset, std::size_t, DynBitsetHash> index_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

struct FiniteDistLattice::Canonicalized {
  FiniteDistLattice lattice;
  /// input element index -> canonical element index
  std::vector<std::size_t> element_map;
};

struct IdealOrFilter {
  enum class Kind { ideal, filter };
  Kind kind;
  DynBitset members;  // over lattice element indices
};

bool is_ideal(const FiniteDistLattice& l, const DynBitset& members);
bool is_filter(const FiniteDistLattice& l, const DynBitset& members);

IdealOrFilter principal_ideal(const FiniteDistLattice& l, std::size_t a);
IdealOrFilter principal_filter(const FiniteDistLattice& l, std::size_t a);

/// I_{a->b} = { c | c ^ a <= b }. An ideal; principal in the finite case,
/// generated by heyting_arrow(a,b).
IdealOrFilter ideal_I_ab(const FiniteDistLattice& l, std::size_t a, std::size_t b);

/// Generator of a principal ideal (its max) or filter (its min), when the
/// extremum lies in the members. Always some for finite lattices.
std::optional<std::size_t> is_principal(const FiniteDistLattice& l, const IdealOrFilter& i);

/// Ideals correspond to open upsets of the dual space (union of alphas);
/// filters to closed upsets (intersection of alphas). Returns a subset of
/// base() elements.
DynBitset correspond_ideal(const FiniteDistLattice& l, const IdealOrFilter& i);

/// In a finite lattice every ideal and filter is principal, so these are in
/// bijection with the elements. Deterministic element order.
std::vector<IdealOrFilter> all_ideals(const FiniteDistLattice& l);
std::vector<IdealOrFilter> all_filters(const FiniteDistLattice& l);

/// Direct distributive-law check; the oracle counterpart of the M3/N5 scan
/// used by from_abstract_order. Intended for small lattices.
bool satisfies_distributive_law(const FinitePoset& order);

}  // namespace pkit
