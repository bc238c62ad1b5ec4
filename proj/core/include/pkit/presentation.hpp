#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pkit/natomega.hpp"
#include "pkit/poset.hpp"

namespace pkit {

/// One indexed block of a presented space: its points are tuples in
/// (omega+1)^arity, arity <= 2. The topology is fixed coordinatewise
/// convergence; a point is isolated iff all its coordinates are finite.
struct Part {
  std::string name;
  int arity = 0;
};

/// A concrete point of a presented space.
struct PointName {
  std::size_t part = 0;
  std::array<NatOmega, 2> coord{};

  friend bool operator==(const PointName& a, const PointName& b) {
    return a.part == b.part && a.coord == b.coord;
  }
  friend bool operator!=(const PointName& a, const PointName& b) { return !(a == b); }
};

/// A coordinate of one of the two point variables of an order rule.
/// var 0 is the left point (u), var 1 the right point (v).
struct CoordRef {
  int var = 0;
  int index = 0;
};

/// Linear term of the decidable rule fragment: a sum of at most two
/// coordinates plus a constant (which may be omega). Evaluation uses
/// omega-absorbing addition.
struct Term {
  std::vector<CoordRef> coords;
  NatOmega constant = NatOmega::finite(0);

  static Term make_const(NatOmega c) { return Term{{}, c}; }
  static Term make_coord(int var, int index, std::uint32_t offset = 0) {
    return Term{{CoordRef{var, index}}, NatOmega::finite(offset)};
  }
  static Term make_sum(CoordRef a, CoordRef b, std::uint32_t offset = 0) {
    return Term{{a, b}, NatOmega::finite(offset)};
  }

  NatOmega eval(const PointName& u, const PointName& v) const;
};

enum class CmpOp { eq, le, lt, ge, gt };

bool compare(NatOmega a, CmpOp op, NatOmega b);

/// Boolean combination of comparisons between terms; the body of one order
/// clause. Part membership is handled by the clause guard, not here.
struct Formula {
  enum class Kind { truth, cmp, conj, disj, neg };

  Kind kind = Kind::truth;
  Term lhs, rhs;  // cmp
  CmpOp op = CmpOp::eq;
  std::vector<Formula> kids;

  static Formula truth() { return Formula{}; }
  static Formula cmp(Term l, CmpOp o, Term r);
  static Formula conj(std::vector<Formula> kids);
  static Formula disj(std::vector<Formula> kids);
  static Formula neg(Formula f);

  bool eval(const PointName& u, const PointName& v) const;
  std::uint32_t max_constant() const;
  /// u and v exchanged; used by the order dual.
  Formula swapped() const;
  /// Largest coordinate index mentioned for the given variable, or -1.
  int max_index(int var) const;
};

/// "part_u(a) <= part_v(b) := guard". The full order is the reflexive
/// closure of the union of all clauses.
struct OrderClause {
  std::size_t part_u = 0;
  std::size_t part_v = 0;
  Formula guard;
};

/// A member of the effective class of countable Priestley spaces: finitely
/// many parts indexed by (omega+1)^k, k <= 2, with the order defined by
/// clauses in the decidable comparison fragment. Immutable once built.
///
/// Construction checks the fragment only; whether the rule really is a
/// partial order with the Priestley properties is the job of
/// validate_presentation.
class SpacePresentation {
public:
  SpacePresentation(std::vector<Part> parts, std::vector<OrderClause> clauses,
                    std::string provenance);

  const std::vector<Part>& parts() const { return parts_; }
  const std::vector<OrderClause>& clauses() const { return clauses_; }
  const std::string& provenance() const { return provenance_; }

  std::size_t part_index(const std::string& name) const;

  /// u <= v. Reflexivity is built in; everything else comes from clauses.
  bool leq(const PointName& u, const PointName& v) const;

  /// Largest finite constant in any clause term.
  std::uint32_t rule_constant() const { return rule_constant_; }
  int max_arity() const { return max_arity_; }

  /// The small-model window bound B used by every decision procedure.
  int default_window() const {
    return static_cast<int>(rule_constant_) + 3 * max_arity_ + 3;
  }

  void check_point(const PointName& p) const;
  std::string point_str(const PointName& p) const;

private:
  std::vector<Part> parts_;
  std::vector<OrderClause> clauses_;
  std::string provenance_;
  std::uint32_t rule_constant_ = 0;
  int max_arity_ = 0;
};

/// Finite poset of all points with coordinates in {0..n, omega}, ordered by
/// the presentation rule, together with the point behind each element.
/// The relation is evaluated pointwise; a broken rule surfaces as
/// AxiomFailure.
std::pair<FinitePoset, std::vector<PointName>> truncate(const SpacePresentation& s, int n);

}  // namespace pkit
