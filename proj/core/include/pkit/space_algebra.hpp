#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pkit/descriptor.hpp"
#include "pkit/window.hpp"

namespace pkit {

/// Built-in atoms:
///   point          one isolated point
///   z1             descending chain z0 > z1 > ... with limit x below, plus y above x
///   z2             antichain z_n above the limit x, plus y above x
///   z3             antichain z_n with limit x aside, plus y above x
///   chain_fan      z1 without y (a converging descending chain)
///   antichain_fan  z3 without y (a converging antichain)
///   grid           the (omega+1)^2 grid with order u <= v iff u = v or both
///                  coordinates of u are >= v0+v1+1; coordinates here are
///                  0-based, one less than the 1-based labels alpha_{mn}
///   example_e1     two descending chains p, q with q(a) <= p(b) iff b <= a;
///                  carries an order embedding of z1 on q plus both limits
///   example_e2     columns c(a) < d(a); carries an embedding of z3
SpacePresentation atom(const std::string& name);
const std::vector<std::string>& atom_names();

SpacePresentation finite_space(const FinitePoset& p);

/// Rule with u and v exchanged; an involution up to provenance.
SpacePresentation order_dual(const SpacePresentation& s);

/// Parts renamed apart with "l." and "r."; no cross relations.
SpacePresentation disjoint_union(const SpacePresentation& a, const SpacePresentation& b);

/// Every left point below every right point.
SpacePresentation linear_sum(const SpacePresentation& a, const SpacePresentation& b);

/// Disjoint union plus d x u across, for d a closed downset of a and u a
/// closed upset of b (both verified; NotClosedDownset / NotClosedUpset).
SpacePresentation down_up_sum(const SpacePresentation& a, const SetDescriptor& d,
                              const SpacePresentation& b, const SetDescriptor& u,
                              const EngineOptions& opts = {});

/// Descriptor syntax tree as written in the DSL, resolved against a
/// concrete presentation. Named references are looked up through the
/// resolver, which may be empty.
struct DescriptorExpr {
  enum class Kind { all, none, named, in_part, coord_eq, coord_geq, coord_is_omega,
                    unite, intersect, complement };
  Kind kind = Kind::all;
  std::string name;         // named, in_part
  int index = 0;            // coord atoms
  std::uint32_t value = 0;  // coord_eq / coord_geq
  std::vector<DescriptorExpr> kids;

  using Resolver = std::function<const DescriptorExpr*(const std::string&)>;
  SetDescriptor resolve(const SpacePresentation& s, const Resolver& named = nullptr) const;
};

/// Space expression tree: atoms, finite posets and the four combinators.
/// Compilation is total on validated inputs and records provenance.
struct SpaceExpr {
  enum class Kind { atom, named, finite, direct, dual, uni, lsum, dsum };
  Kind kind = Kind::atom;
  std::string name;  // atom or named reference
  std::shared_ptr<FinitePoset> poset;
  std::shared_ptr<SpacePresentation> presentation;  // direct (a "space" block)
  std::shared_ptr<SpaceExpr> a, b;
  DescriptorExpr down, up;  // dsum only

  static SpaceExpr make_atom(std::string name);
  static SpaceExpr make_named(std::string name);
  static SpaceExpr make_finite(FinitePoset p);
  static SpaceExpr make_direct(SpacePresentation p);
  static SpaceExpr make_dual(SpaceExpr inner);
  static SpaceExpr make_union(SpaceExpr lhs, SpaceExpr rhs);
  static SpaceExpr make_lsum(SpaceExpr lhs, SpaceExpr rhs);
  static SpaceExpr make_dsum(SpaceExpr lhs, DescriptorExpr d, SpaceExpr rhs, DescriptorExpr u);
};

struct CompileContext {
  std::function<const FinitePoset*(const std::string&)> find_poset;
  std::function<const SpaceExpr*(const std::string&)> find_space;
  DescriptorExpr::Resolver find_descriptor;
  EngineOptions engine;
};

SpacePresentation compile(const SpaceExpr& e, const CompileContext& ctx = {});

}  // namespace pkit
