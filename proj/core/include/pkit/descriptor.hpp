#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pkit/presentation.hpp"

namespace pkit {

/// A subset of omega+1 cut out by boolean combinations of "= c", ">= c" and
/// "is omega": explicit membership below a threshold, constant membership
/// for all larger naturals, and an independent bit for omega. This is the
/// exact closure of the descriptor atoms on one coordinate, so every set
/// operation stays in the class and equality is structural.
class CoordSet {
public:
  CoordSet() : threshold_(0), tail_(false), omega_(false) {}

  static CoordSet none() { return CoordSet(); }
  static CoordSet all() { return from_profile({}, true, true); }
  static CoordSet single(std::uint32_t c);
  static CoordSet geq(std::uint32_t c);   // {c, c+1, ...} and omega
  static CoordSet le(std::uint32_t c);    // {0..c}
  static CoordSet omega_only();
  static CoordSet from_profile(std::vector<bool> low, bool tail, bool omega);

  bool contains(NatOmega v) const {
    if (v.is_omega()) return omega_;
    return v.value() < threshold_ ? low_[v.value()] : tail_;
  }

  CoordSet complement() const;
  static CoordSet unite(const CoordSet& a, const CoordSet& b);
  static CoordSet intersect(const CoordSet& a, const CoordSet& b);

  bool empty() const;
  bool is_all() const;

  std::uint32_t threshold() const { return threshold_; }
  bool low(std::uint32_t i) const { return low_[i]; }
  bool tail() const { return tail_; }
  bool omega() const { return omega_; }
  std::uint32_t max_constant() const { return threshold_; }

  /// Open in omega+1: if omega is in, a tail of naturals must be too.
  bool is_open() const { return !omega_ || tail_; }
  bool is_closed() const { return !tail_ || omega_; }
  bool is_clopen() const { return tail_ == omega_; }

  /// Membership formula for one rule variable coordinate.
  Formula to_formula(CoordRef ref) const;

  std::string str() const;

  friend bool operator==(const CoordSet& a, const CoordSet& b) {
    return a.threshold_ == b.threshold_ && a.low_ == b.low_ && a.tail_ == b.tail_ &&
           a.omega_ == b.omega_;
  }
  friend bool operator!=(const CoordSet& a, const CoordSet& b) { return !(a == b); }

private:
  void normalize();

  std::uint32_t threshold_;
  std::vector<bool> low_;
  bool tail_;
  bool omega_;
};

/// A subset of (omega+1)^2: a CoordSet-valued profile over the first
/// coordinate, again with finitely many explicit rows, a constant tail row
/// and an omega row.
class PairSet {
public:
  PairSet() = default;

  static PairSet none() { return PairSet(); }
  static PairSet all() { return product(CoordSet::all(), CoordSet::all()); }
  static PairSet product(const CoordSet& first, const CoordSet& second);
  static PairSet from_rows(std::vector<CoordSet> rows, CoordSet tail_row, CoordSet omega_row);

  const CoordSet& row(NatOmega a) const {
    if (a.is_omega()) return omega_row_;
    return a.value() < threshold_ ? rows_[a.value()] : tail_row_;
  }
  bool contains(NatOmega a, NatOmega b) const { return row(a).contains(b); }

  PairSet complement() const;
  static PairSet unite(const PairSet& a, const PairSet& b);
  static PairSet intersect(const PairSet& a, const PairSet& b);

  bool empty() const;
  std::uint32_t max_constant() const;

  bool is_open() const;
  bool is_closed() const { return complement().is_open(); }
  bool is_clopen() const { return is_open() && is_closed(); }

  std::uint32_t threshold() const { return threshold_; }
  const CoordSet& explicit_row(std::uint32_t i) const { return rows_[i]; }
  const CoordSet& tail_row() const { return tail_row_; }
  const CoordSet& omega_row() const { return omega_row_; }

  Formula to_formula(int var) const;

  std::string str() const;

  friend bool operator==(const PairSet& a, const PairSet& b) {
    return a.threshold_ == b.threshold_ && a.rows_ == b.rows_ && a.tail_row_ == b.tail_row_ &&
           a.omega_row_ == b.omega_row_;
  }
  friend bool operator!=(const PairSet& a, const PairSet& b) { return !(a == b); }

private:
  void normalize();

  std::uint32_t threshold_ = 0;
  std::vector<CoordSet> rows_;
  CoordSet tail_row_;
  CoordSet omega_row_;
};

/// The trace of a descriptor on one part, dispatched on the part's arity.
struct PartSet {
  int arity = 0;
  bool bit = false;  // arity 0
  CoordSet cs;       // arity 1
  PairSet ps;        // arity 2

  static PartSet none(int arity);
  static PartSet full(int arity);
  bool contains(const PointName& p) const;
  PartSet complement() const;
  static PartSet unite(const PartSet& a, const PartSet& b);
  static PartSet intersect(const PartSet& a, const PartSet& b);
  bool empty() const;
  bool is_open() const;
  bool is_closed() const;
  std::uint32_t max_constant() const;

  friend bool operator==(const PartSet& a, const PartSet& b);
};

/// A definable subset of a presented space, stored per part in exact normal
/// form. Denotes the same set as the boolean combination of InPart /
/// CoordEq / CoordGeq / CoordIsOmega atoms it was built from; membership,
/// boolean algebra, emptiness, equality and the topological predicates are
/// all exact and structural. Only order-dependent questions (upsets,
/// downward closures) need the window engine.
class SetDescriptor {
public:
  SetDescriptor() = default;

  static SetDescriptor none(const SpacePresentation& s);
  static SetDescriptor total(const SpacePresentation& s);
  static SetDescriptor in_part(const SpacePresentation& s, std::size_t part);
  static SetDescriptor in_part(const SpacePresentation& s, const std::string& part);
  /// Coordinate atoms constrain every part that has coordinate i; parts of
  /// smaller arity contribute nothing.
  static SetDescriptor coord_eq(const SpacePresentation& s, int i, std::uint32_t c);
  static SetDescriptor coord_geq(const SpacePresentation& s, int i, std::uint32_t c);
  static SetDescriptor coord_is_omega(const SpacePresentation& s, int i);
  static SetDescriptor point(const SpacePresentation& s, const PointName& p);

  SetDescriptor complement() const;
  static SetDescriptor unite(const SetDescriptor& a, const SetDescriptor& b);
  static SetDescriptor intersect(const SetDescriptor& a, const SetDescriptor& b);
  static SetDescriptor minus(const SetDescriptor& a, const SetDescriptor& b);

  bool eval(const PointName& p) const;

  bool empty() const;
  bool is_total() const;
  bool is_open() const;
  bool is_closed() const;
  bool is_clopen() const { return is_open() && is_closed(); }
  std::uint32_t max_constant() const;

  std::size_t num_parts() const { return parts_.size(); }
  const PartSet& part(std::size_t i) const { return parts_[i]; }
  PartSet& part(std::size_t i) { return parts_[i]; }

  /// Membership formula for rule variable `var`, restricted to one part
  /// (used when lifting descriptors into order clauses).
  Formula part_formula(std::size_t part, int var) const;

  std::string str(const SpacePresentation& s) const;

  friend bool operator==(const SetDescriptor& a, const SetDescriptor& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const SetDescriptor& a, const SetDescriptor& b) { return !(a == b); }

private:
  explicit SetDescriptor(std::vector<PartSet> parts) : parts_(std::move(parts)) {}

  static void check_shapes(const SetDescriptor& a, const SetDescriptor& b);

  std::vector<PartSet> parts_;
};

}  // namespace pkit
