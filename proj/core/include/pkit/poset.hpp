#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pkit/bitset.hpp"
#include "pkit/error.hpp"

namespace pkit {

enum class Direction { up, down };

/// A finite set with a validated partial order. The stored relation is the
/// full reflexive-transitive closure; Hasse covers are derived on demand.
/// Immutable after construction.
class FinitePoset {
public:
  /// Empty poset; real instances come from the factories below.
  FinitePoset() = default;

  /// Builds a poset from generator pairs (a,b) meaning a <= b. Takes the
  /// reflexive-transitive closure and rejects it if antisymmetry fails,
  /// naming a cycle. Throws UnknownElement for pairs over unknown names.
  static FinitePoset from_relation(std::vector<std::string> elements,
                                   const std::vector<std::pair<std::string, std::string>>& pairs);

  /// Poset on {0..n-1} with generated relation given by index pairs.
  static FinitePoset from_index_relation(std::size_t n,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                         std::vector<std::string> names = {});

  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name_of(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const std::string& name) const;
  bool contains(const std::string& name) const;

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  bool leq(const std::string& a, const std::string& b) const {
    return leq(index_of(a), index_of(b));
  }

  /// Row bitsets of the closure: up(i) = { j : i <= j }, down(i) = { j : j <= i }.
  const DynBitset& up(std::size_t i) const { return up_[i]; }
  const DynBitset& down(std::size_t i) const { return down_[i]; }

  /// Up- or downward closure of a subset; a fixed point of itself.
  DynBitset closure(const DynBitset& s, Direction d) const;
  std::vector<std::string> closure(const std::vector<std::string>& s, Direction d) const;

  DynBitset subset(const std::vector<std::string>& names) const;
  std::vector<std::string> names(const DynBitset& s) const;

  bool is_upset(const DynBitset& s) const;
  bool is_downset(const DynBitset& s) const;

  /// Covering pairs (a,b): a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

  /// All upsets, deterministically ordered (by size, then by bit pattern).
  /// Throws SizeLimit when the count would exceed `limit`.
  std::vector<DynBitset> all_upsets(std::size_t limit = std::size_t{1} << 20) const;
  std::vector<DynBitset> all_downsets(std::size_t limit = std::size_t{1} << 20) const;

  FinitePoset dual() const;

  /// Relabels elements; order is untouched.
  FinitePoset renamed(const std::vector<std::string>& names) const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.elements_ == b.elements_ && a.up_ == b.up_;
  }

private:
  std::vector<std::string> elements_;
  std::vector<DynBitset> up_;
  std::vector<DynBitset> down_;
};

/// A total order-preserving map between finite posets, stored by element index.
struct MonotoneMap {
  FinitePoset source;
  FinitePoset target;
  std::vector<std::size_t> assignment;

  std::size_t operator()(std::size_t i) const { return assignment[i]; }
};

/// Validates that `assignment` is total and order-preserving.
MonotoneMap make_monotone_map(FinitePoset source, FinitePoset target,
                              std::vector<std::size_t> assignment);

/// Order isomorphism if one exists: bijective with both directions
/// order-preserving. Backtracking over up/down-set-size invariants;
/// deterministic given input element order.
std::optional<MonotoneMap> find_iso(const FinitePoset& p, const FinitePoset& q);

/// a <= b iff m(a) <= m(b), and m injective. The order half of an embedding.
bool is_order_embedding(const MonotoneMap& m);

}  // namespace pkit
