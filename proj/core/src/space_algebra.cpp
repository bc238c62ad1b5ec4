#include "pkit/space_algebra.hpp"

#include <algorithm>

namespace pkit {

namespace {

Term uc(int index) { return Term::make_coord(0, index); }
Term vc(int index) { return Term::make_coord(1, index); }
Term konst(NatOmega c) { return Term::make_const(c); }

Formula u_is_omega() { return Formula::cmp(uc(0), CmpOp::eq, konst(NatOmega::omega())); }

SpacePresentation build_z1() {
  std::vector<Part> parts{{"main", 1}, {"y", 0}};
  std::vector<OrderClause> clauses;
  clauses.push_back({0, 0, Formula::cmp(vc(0), CmpOp::le, uc(0))});
  clauses.push_back({0, 1, u_is_omega()});
  return SpacePresentation(std::move(parts), std::move(clauses), "z1");
}

SpacePresentation build_z2() {
  std::vector<Part> parts{{"main", 1}, {"y", 0}};
  std::vector<OrderClause> clauses;
  clauses.push_back({0, 0, u_is_omega()});
  clauses.push_back({0, 1, u_is_omega()});
  return SpacePresentation(std::move(parts), std::move(clauses), "z2");
}

SpacePresentation build_z3() {
  std::vector<Part> parts{{"main", 1}, {"y", 0}};
  std::vector<OrderClause> clauses;
  clauses.push_back({0, 1, u_is_omega()});
  return SpacePresentation(std::move(parts), std::move(clauses), "z3");
}

SpacePresentation build_point() {
  return SpacePresentation({{"pt", 0}}, {}, "point");
}

SpacePresentation build_chain_fan() {
  std::vector<OrderClause> clauses;
  clauses.push_back({0, 0, Formula::cmp(vc(0), CmpOp::le, uc(0))});
  return SpacePresentation({{"main", 1}}, std::move(clauses), "chain_fan");
}

SpacePresentation build_antichain_fan() {
  return SpacePresentation({{"main", 1}}, {}, "antichain_fan");
}

SpacePresentation build_grid() {
  // u <= v iff u = v or u0,u1 >= v0+v1+1; the 0-based translation of
  // "h,k >= m+n" on 1-based labels, with omega-absorbing sums.
  Term bound = Term::make_sum(CoordRef{1, 0}, CoordRef{1, 1}, 1);
  std::vector<Formula> both;
  both.push_back(Formula::cmp(uc(0), CmpOp::ge, bound));
  both.push_back(Formula::cmp(uc(1), CmpOp::ge, bound));
  std::vector<OrderClause> clauses;
  clauses.push_back({0, 0, Formula::conj(std::move(both))});
  return SpacePresentation({{"g", 2}}, std::move(clauses), "grid");
}

SpacePresentation build_example_e1() {
  std::vector<Part> parts{{"p", 1}, {"q", 1}};
  std::vector<OrderClause> clauses;
  clauses.push_back({0, 0, Formula::cmp(vc(0), CmpOp::le, uc(0))});
  clauses.push_back({1, 1, Formula::cmp(vc(0), CmpOp::le, uc(0))});
  // q(a) <= p(b) iff b <= a
  clauses.push_back({1, 0, Formula::cmp(vc(0), CmpOp::le, uc(0))});
  return SpacePresentation(std::move(parts), std::move(clauses), "example_e1");
}

SpacePresentation build_example_e2() {
  std::vector<Part> parts{{"c", 1}, {"d", 1}};
  std::vector<OrderClause> clauses;
  clauses.push_back({0, 1, Formula::cmp(uc(0), CmpOp::eq, vc(0))});
  return SpacePresentation(std::move(parts), std::move(clauses), "example_e2");
}

}  // namespace

const std::vector<std::string>& atom_names() {
  static const std::vector<std::string> names{"point",         "z1",   "z2",
                                              "z3",            "chain_fan", "antichain_fan",
                                              "grid",          "example_e1", "example_e2"};
  return names;
}

SpacePresentation atom(const std::string& name) {
  if (name == "point") return build_point();
  if (name == "z1") return build_z1();
  if (name == "z2") return build_z2();
  if (name == "z3") return build_z3();
  if (name == "chain_fan") return build_chain_fan();
  if (name == "antichain_fan") return build_antichain_fan();
  if (name == "grid") return build_grid();
  if (name == "example_e1") return build_example_e1();
  if (name == "example_e2") return build_example_e2();
  fail(ErrorKind::UnknownAtom, "'" + name + "'");
}

SpacePresentation finite_space(const FinitePoset& p) {
  std::vector<Part> parts;
  parts.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) parts.push_back(Part{p.name_of(i), 0});
  std::vector<OrderClause> clauses;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j && p.leq(i, j)) clauses.push_back({i, j, Formula::truth()});
  return SpacePresentation(std::move(parts), std::move(clauses), "finite");
}

SpacePresentation order_dual(const SpacePresentation& s) {
  std::vector<OrderClause> clauses;
  clauses.reserve(s.clauses().size());
  for (const auto& cl : s.clauses())
    clauses.push_back({cl.part_v, cl.part_u, cl.guard.swapped()});
  std::string prov = s.provenance();
  // dual(dual(X)) renders as X for readability
  if (prov.rfind("dual(", 0) == 0 && prov.back() == ')')
    prov = prov.substr(5, prov.size() - 6);
  else
    prov = "dual(" + prov + ")";
  return SpacePresentation(s.parts(), std::move(clauses), prov);
}

namespace {

struct LiftedParts {
  std::vector<Part> parts;
  std::size_t right_offset;
};

LiftedParts lift_parts(const SpacePresentation& a, const SpacePresentation& b) {
  LiftedParts out;
  for (const auto& p : a.parts()) out.parts.push_back(Part{"l." + p.name, p.arity});
  out.right_offset = out.parts.size();
  for (const auto& p : b.parts()) out.parts.push_back(Part{"r." + p.name, p.arity});
  return out;
}

std::vector<OrderClause> lift_clauses(const SpacePresentation& a, const SpacePresentation& b,
                                      std::size_t right_offset) {
  std::vector<OrderClause> clauses;
  for (const auto& cl : a.clauses()) clauses.push_back(cl);
  for (const auto& cl : b.clauses())
    clauses.push_back({cl.part_u + right_offset, cl.part_v + right_offset, cl.guard});
  return clauses;
}

}  // namespace

SpacePresentation disjoint_union(const SpacePresentation& a, const SpacePresentation& b) {
  LiftedParts lifted = lift_parts(a, b);
  auto clauses = lift_clauses(a, b, lifted.right_offset);
  return SpacePresentation(std::move(lifted.parts), std::move(clauses),
                           "union(" + a.provenance() + "," + b.provenance() + ")");
}

SpacePresentation linear_sum(const SpacePresentation& a, const SpacePresentation& b) {
  LiftedParts lifted = lift_parts(a, b);
  auto clauses = lift_clauses(a, b, lifted.right_offset);
  for (std::size_t pa = 0; pa < a.parts().size(); ++pa)
    for (std::size_t pb = 0; pb < b.parts().size(); ++pb)
      clauses.push_back({pa, lifted.right_offset + pb, Formula::truth()});
  return SpacePresentation(std::move(lifted.parts), std::move(clauses),
                           "lsum(" + a.provenance() + "," + b.provenance() + ")");
}

SpacePresentation down_up_sum(const SpacePresentation& a, const SetDescriptor& d,
                              const SpacePresentation& b, const SetDescriptor& u,
                              const EngineOptions& opts) {
  if (!d.is_closed() || !is_downset(a, d, opts))
    fail(ErrorKind::NotClosedDownset, "left descriptor is not a closed downset");
  if (!u.is_closed() || !is_upset(b, u, opts))
    fail(ErrorKind::NotClosedUpset, "right descriptor is not a closed upset");
  LiftedParts lifted = lift_parts(a, b);
  auto clauses = lift_clauses(a, b, lifted.right_offset);
  for (std::size_t pa = 0; pa < a.parts().size(); ++pa) {
    if (d.part(pa).empty()) continue;
    for (std::size_t pb = 0; pb < b.parts().size(); ++pb) {
      if (u.part(pb).empty()) continue;
      std::vector<Formula> both;
      both.push_back(d.part_formula(pa, 0));
      both.push_back(u.part_formula(pb, 1));
      clauses.push_back({pa, lifted.right_offset + pb, Formula::conj(std::move(both))});
    }
  }
  return SpacePresentation(std::move(lifted.parts), std::move(clauses),
                           "dsum(" + a.provenance() + "," + d.str(a) + "," + b.provenance() + "," +
                               u.str(b) + ")");
}

// ---------------------------------------------------------------------------
// Expressions

SetDescriptor DescriptorExpr::resolve(const SpacePresentation& s, const Resolver& named) const {
  switch (kind) {
    case Kind::all: return SetDescriptor::total(s);
    case Kind::none: return SetDescriptor::none(s);
    case Kind::named: {
      const DescriptorExpr* target = named ? named(name) : nullptr;
      if (!target) fail(ErrorKind::UnknownElement, "descriptor '" + name + "' is not defined");
      return target->resolve(s, named);
    }
    case Kind::in_part: return SetDescriptor::in_part(s, name);
    case Kind::coord_eq: return SetDescriptor::coord_eq(s, index, value);
    case Kind::coord_geq: return SetDescriptor::coord_geq(s, index, value);
    case Kind::coord_is_omega: return SetDescriptor::coord_is_omega(s, index);
    case Kind::unite:
      return SetDescriptor::unite(kids[0].resolve(s, named), kids[1].resolve(s, named));
    case Kind::intersect:
      return SetDescriptor::intersect(kids[0].resolve(s, named), kids[1].resolve(s, named));
    case Kind::complement: return kids[0].resolve(s, named).complement();
  }
  fail(ErrorKind::InvalidArgument, "bad descriptor expression");
}

SpaceExpr SpaceExpr::make_atom(std::string name) {
  SpaceExpr e;
  e.kind = Kind::atom;
  e.name = std::move(name);
  return e;
}

SpaceExpr SpaceExpr::make_named(std::string name) {
  SpaceExpr e;
  e.kind = Kind::named;
  e.name = std::move(name);
  return e;
}

SpaceExpr SpaceExpr::make_finite(FinitePoset p) {
  SpaceExpr e;
  e.kind = Kind::finite;
  e.poset = std::make_shared<FinitePoset>(std::move(p));
  return e;
}

SpaceExpr SpaceExpr::make_direct(SpacePresentation p) {
  SpaceExpr e;
  e.kind = Kind::direct;
  e.presentation = std::make_shared<SpacePresentation>(std::move(p));
  return e;
}

SpaceExpr SpaceExpr::make_dual(SpaceExpr inner) {
  SpaceExpr e;
  e.kind = Kind::dual;
  e.a = std::make_shared<SpaceExpr>(std::move(inner));
  return e;
}

SpaceExpr SpaceExpr::make_union(SpaceExpr lhs, SpaceExpr rhs) {
  SpaceExpr e;
  e.kind = Kind::uni;
  e.a = std::make_shared<SpaceExpr>(std::move(lhs));
  e.b = std::make_shared<SpaceExpr>(std::move(rhs));
  return e;
}

SpaceExpr SpaceExpr::make_lsum(SpaceExpr lhs, SpaceExpr rhs) {
  SpaceExpr e = make_union(std::move(lhs), std::move(rhs));
  e.kind = Kind::lsum;
  return e;
}

SpaceExpr SpaceExpr::make_dsum(SpaceExpr lhs, DescriptorExpr d, SpaceExpr rhs, DescriptorExpr u) {
  SpaceExpr e = make_union(std::move(lhs), std::move(rhs));
  e.kind = Kind::dsum;
  e.down = std::move(d);
  e.up = std::move(u);
  return e;
}

SpacePresentation compile(const SpaceExpr& e, const CompileContext& ctx) {
  switch (e.kind) {
    case SpaceExpr::Kind::atom: return atom(e.name);
    case SpaceExpr::Kind::named: {
      const SpaceExpr* target = ctx.find_space ? ctx.find_space(e.name) : nullptr;
      if (!target) fail(ErrorKind::UnknownElement, "space '" + e.name + "' is not defined");
      return compile(*target, ctx);
    }
    case SpaceExpr::Kind::finite: {
      if (e.poset) return finite_space(*e.poset);
      const FinitePoset* p = ctx.find_poset ? ctx.find_poset(e.name) : nullptr;
      if (!p) fail(ErrorKind::UnknownElement, "poset '" + e.name + "' is not defined");
      return finite_space(*p);
    }
    case SpaceExpr::Kind::direct: return *e.presentation;
    case SpaceExpr::Kind::dual: return order_dual(compile(*e.a, ctx));
    case SpaceExpr::Kind::uni: return disjoint_union(compile(*e.a, ctx), compile(*e.b, ctx));
    case SpaceExpr::Kind::lsum: return linear_sum(compile(*e.a, ctx), compile(*e.b, ctx));
    case SpaceExpr::Kind::dsum: {
      SpacePresentation left = compile(*e.a, ctx);
      SpacePresentation right = compile(*e.b, ctx);
      SetDescriptor d = e.down.resolve(left, ctx.find_descriptor);
      SetDescriptor u = e.up.resolve(right, ctx.find_descriptor);
      return down_up_sum(left, d, right, u, ctx.engine);
    }
  }
  fail(ErrorKind::InvalidArgument, "bad space expression");
}

}  // namespace pkit
