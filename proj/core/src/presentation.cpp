#include "pkit/presentation.hpp"

#include <algorithm>

namespace pkit {

NatOmega Term::eval(const PointName& u, const PointName& v) const {
  NatOmega acc = constant;
  for (const auto& ref : coords) {
    const PointName& p = (ref.var == 0) ? u : v;
    acc = omega_add(acc, p.coord[static_cast<std::size_t>(ref.index)]);
  }
  return acc;
}

bool compare(NatOmega a, CmpOp op, NatOmega b) {
  switch (op) {
    case CmpOp::eq: return a == b;
    case CmpOp::le: return a <= b;
    case CmpOp::lt: return a < b;
    case CmpOp::ge: return a >= b;
    case CmpOp::gt: return a > b;
  }
  return false;
}

Formula Formula::cmp(Term l, CmpOp o, Term r) {
  Formula f;
  f.kind = Kind::cmp;
  f.lhs = std::move(l);
  f.rhs = std::move(r);
  f.op = o;
  return f;
}

Formula Formula::conj(std::vector<Formula> kids) {
  Formula f;
  f.kind = Kind::conj;
  f.kids = std::move(kids);
  return f;
}

Formula Formula::disj(std::vector<Formula> kids) {
  Formula f;
  f.kind = Kind::disj;
  f.kids = std::move(kids);
  return f;
}

Formula Formula::neg(Formula inner) {
  Formula f;
  f.kind = Kind::neg;
  f.kids.push_back(std::move(inner));
  return f;
}

bool Formula::eval(const PointName& u, const PointName& v) const {
  switch (kind) {
    case Kind::truth: return true;
    case Kind::cmp: return compare(lhs.eval(u, v), op, rhs.eval(u, v));
    case Kind::conj:
      for (const auto& k : kids)
        if (!k.eval(u, v)) return false;
      return true;
    case Kind::disj:
      for (const auto& k : kids)
        if (k.eval(u, v)) return true;
      return false;
    case Kind::neg: return !kids[0].eval(u, v);
  }
  return false;
}

std::uint32_t Formula::max_constant() const {
  std::uint32_t c = 0;
  if (kind == Kind::cmp) {
    if (lhs.constant.is_finite()) c = std::max(c, lhs.constant.value());
    if (rhs.constant.is_finite()) c = std::max(c, rhs.constant.value());
  }
  for (const auto& k : kids) c = std::max(c, k.max_constant());
  return c;
}

Formula Formula::swapped() const {
  Formula f = *this;
  auto swap_term = [](Term& t) {
    for (auto& ref : t.coords) ref.var = 1 - ref.var;
  };
  if (f.kind == Kind::cmp) {
    swap_term(f.lhs);
    swap_term(f.rhs);
  }
  for (std::size_t i = 0; i < f.kids.size(); ++i) f.kids[i] = kids[i].swapped();
  return f;
}

int Formula::max_index(int var) const {
  int m = -1;
  auto scan = [&](const Term& t) {
    for (const auto& ref : t.coords)
      if (ref.var == var) m = std::max(m, ref.index);
  };
  if (kind == Kind::cmp) {
    scan(lhs);
    scan(rhs);
  }
  for (const auto& k : kids) m = std::max(m, k.max_index(var));
  return m;
}

SpacePresentation::SpacePresentation(std::vector<Part> parts, std::vector<OrderClause> clauses,
                                     std::string provenance)
    : parts_(std::move(parts)), clauses_(std::move(clauses)), provenance_(std::move(provenance)) {
  for (const auto& p : parts_) {
    if (p.arity < 0 || p.arity > 2)
      fail(ErrorKind::FragmentViolation, "part '" + p.name + "' has arity outside 0..2");
    max_arity_ = std::max(max_arity_, p.arity);
  }
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (std::size_t j = i + 1; j < parts_.size(); ++j)
      if (parts_[i].name == parts_[j].name)
        fail(ErrorKind::InvalidArgument, "duplicate part name '" + parts_[i].name + "'");
  for (const auto& cl : clauses_) {
    if (cl.part_u >= parts_.size() || cl.part_v >= parts_.size())
      fail(ErrorKind::UnknownPart, "clause over unknown part");
    if (cl.guard.max_index(0) >= parts_[cl.part_u].arity)
      fail(ErrorKind::ArityMismatch, "clause reads past arity of '" + parts_[cl.part_u].name + "'");
    if (cl.guard.max_index(1) >= parts_[cl.part_v].arity)
      fail(ErrorKind::ArityMismatch, "clause reads past arity of '" + parts_[cl.part_v].name + "'");
    rule_constant_ = std::max(rule_constant_, cl.guard.max_constant());
  }
}

std::size_t SpacePresentation::part_index(const std::string& name) const {
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i].name == name) return i;
  fail(ErrorKind::UnknownPart, "'" + name + "'");
}

void SpacePresentation::check_point(const PointName& p) const {
  if (p.part >= parts_.size()) fail(ErrorKind::UnknownPart, "point part out of range");
}

bool SpacePresentation::leq(const PointName& u, const PointName& v) const {
  check_point(u);
  check_point(v);
  if (u == v) return true;
  for (const auto& cl : clauses_) {
    if (cl.part_u != u.part || cl.part_v != v.part) continue;
    if (cl.guard.eval(u, v)) return true;
  }
  return false;
}

std::string SpacePresentation::point_str(const PointName& p) const {
  check_point(p);
  const Part& part = parts_[p.part];
  if (part.arity == 0) return part.name;
  std::string out = part.name + "(";
  for (int i = 0; i < part.arity; ++i) {
    if (i) out += ",";
    out += p.coord[static_cast<std::size_t>(i)].str();
  }
  return out + ")";
}

std::pair<FinitePoset, std::vector<PointName>> truncate(const SpacePresentation& s, int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "negative truncation level");
  std::vector<PointName> points;
  std::vector<NatOmega> values;
  for (int c = 0; c <= n; ++c) values.push_back(NatOmega::finite(static_cast<std::uint32_t>(c)));
  values.push_back(NatOmega::omega());
  for (std::size_t pi = 0; pi < s.parts().size(); ++pi) {
    const int arity = s.parts()[pi].arity;
    if (arity == 0) {
      points.push_back(PointName{pi, {}});
    } else if (arity == 1) {
      for (auto v : values) points.push_back(PointName{pi, {v, NatOmega::finite(0)}});
    } else {
      for (auto v0 : values)
        for (auto v1 : values) points.push_back(PointName{pi, {v0, v1}});
    }
  }
  std::vector<std::string> names;
  names.reserve(points.size());
  for (const auto& p : points) names.push_back(s.point_str(p));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j)
      if (i != j && s.leq(points[i], points[j])) pairs.emplace_back(i, j);
  try {
    return {FinitePoset::from_index_relation(points.size(), pairs, std::move(names)),
            std::move(points)};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::AntisymmetryViolation)
      fail(ErrorKind::AxiomFailure, std::string("truncation is not a poset: ") + e.what());
    throw;
  }
}

}  // namespace pkit
