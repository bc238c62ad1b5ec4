#include "pkit/lattice.hpp"

#include <algorithm>

namespace pkit {

namespace {

/// Least upper bound index in an abstract order, or SIZE_MAX if none.
std::size_t lub(const FinitePoset& p, std::size_t a, std::size_t b) {
  DynBitset ub = p.up(a) & p.up(b);
  std::size_t best = SIZE_MAX;
  for (std::size_t i = ub.find_first(); i < ub.size(); i = ub.find_next(i + 1)) {
    if (ub.subset_of(p.up(i))) {
      best = i;
      break;
    }
  }
  return best;
}

std::size_t glb(const FinitePoset& p, std::size_t a, std::size_t b) {
  DynBitset lb = p.down(a) & p.down(b);
  std::size_t best = SIZE_MAX;
  for (std::size_t i = lb.find_first(); i < lb.size(); i = lb.find_next(i + 1)) {
    if (lb.subset_of(p.down(i))) {
      best = i;
      break;
    }
  }
  return best;
}

}  // namespace

FiniteDistLattice FiniteDistLattice::upset_lattice(const FinitePoset& base, std::size_t limit) {
  FiniteDistLattice l;
  l.base_ = base;
  l.elements_ = base.all_upsets(limit);
  for (std::size_t i = 0; i < l.elements_.size(); ++i) l.index_.emplace(l.elements_[i], i);
  DynBitset empty(base.size());
  DynBitset full(base.size());
  full.set_all();
  l.bottom_ = l.index_.at(empty);
  l.top_ = l.index_.at(full);
  return l;
}

std::size_t FiniteDistLattice::index_of(const DynBitset& upset) const {
  auto it = index_.find(upset);
  if (it == index_.end()) fail(ErrorKind::UnknownElement, "set is not a lattice element");
  return it->second;
}

std::size_t FiniteDistLattice::heyting_arrow(std::size_t a, std::size_t b) const {
  DynBitset diff = elements_[a];
  diff.subtract(elements_[b]);
  DynBitset arrow = base_.closure(diff, Direction::down).complement();
  return index_of(arrow);
}

std::string FiniteDistLattice::element_name(std::size_t e) const {
  const DynBitset& s = elements_[e];
  std::string out = "{";
  bool first = true;
  for (std::size_t i = s.find_first(); i < s.size(); i = s.find_next(i + 1)) {
    if (!first) out += ",";
    out += base_.name_of(i);
    first = false;
  }
  out += "}";
  return out;
}

bool satisfies_distributive_law(const FinitePoset& order) {
  const std::size_t n = order.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t bc = lub(order, b, c);
        std::size_t ab = glb(order, a, b);
        std::size_t ac = glb(order, a, c);
        if (bc == SIZE_MAX || ab == SIZE_MAX || ac == SIZE_MAX) return false;
        std::size_t lhs = glb(order, a, bc);
        std::size_t rhs = lub(order, ab, ac);
        if (lhs == SIZE_MAX || rhs == SIZE_MAX || lhs != rhs) return false;
      }
  return true;
}

FiniteDistLattice::Canonicalized FiniteDistLattice::from_abstract_order(const FinitePoset& order) {
  const std::size_t n = order.size();
  if (n == 0) fail(ErrorKind::NotALattice, "empty carrier");

  // Bounds.
  std::size_t bot = SIZE_MAX, top = SIZE_MAX;
  for (std::size_t i = 0; i < n; ++i) {
    if (order.up(i).count() == n) bot = i;
    if (order.down(i).count() == n) top = i;
  }
  if (bot == SIZE_MAX || top == SIZE_MAX) fail(ErrorKind::NotALattice, "missing bottom or top");

  // Meet/join tables; existence is part of being a lattice.
  std::vector<std::vector<std::size_t>> joinT(n, std::vector<std::size_t>(n)),
      meetT(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t j = lub(order, a, b);
      std::size_t m = glb(order, a, b);
      if (j == SIZE_MAX)
        fail(ErrorKind::NotALattice,
             "no join of '" + order.name_of(a) + "' and '" + order.name_of(b) + "'");
      if (m == SIZE_MAX)
        fail(ErrorKind::NotALattice,
             "no meet of '" + order.name_of(a) + "' and '" + order.name_of(b) + "'");
      joinT[a][b] = j;
      meetT[a][b] = m;
    }

  // Forbidden sublattice scan. An N5 shows up as a < b with some c such
  // that a v c = b v c and a ^ c = b ^ c; an M3 as a pairwise-incomparable
  // triple with all pairwise meets and joins agreeing.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !order.leq(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (order.leq(c, a) == false && order.leq(a, c) == false &&
            joinT[a][c] == joinT[b][c] && meetT[a][c] == meetT[b][c])
          fail(ErrorKind::NotDistributive,
               "N5 sublattice at ('" + order.name_of(a) + "','" + order.name_of(b) + "','" +
                   order.name_of(c) + "')");
      }
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (order.leq(a, b) || order.leq(b, a)) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (order.leq(a, c) || order.leq(c, a) || order.leq(b, c) || order.leq(c, b)) continue;
        if (joinT[a][b] == joinT[a][c] && joinT[a][b] == joinT[b][c] &&
            meetT[a][b] == meetT[a][c] && meetT[a][b] == meetT[b][c])
          fail(ErrorKind::NotDistributive,
               "M3 sublattice at ('" + order.name_of(a) + "','" + order.name_of(b) + "','" +
                   order.name_of(c) + "')");
      }
    }

  // Join-irreducibles: non-bottom elements with a unique lower cover.
  std::vector<std::size_t> ji;
  for (std::size_t e = 0; e < n; ++e) {
    if (e == bot) continue;
    std::size_t covers = 0;
    for (std::size_t d = 0; d < n; ++d) {
      if (d == e || !order.leq(d, e)) continue;
      bool cover = true;
      for (std::size_t m = 0; m < n && cover; ++m)
        if (m != d && m != e && order.leq(d, m) && order.leq(m, e)) cover = false;
      if (cover) ++covers;
    }
    if (covers == 1) ji.push_back(e);
  }

  // The dual space orders join-irreducibles by reverse lattice order
  // (prime-filter inclusion).
  std::vector<std::string> ji_names;
  for (auto j : ji) ji_names.push_back(order.name_of(j));
  std::vector<std::pair<std::size_t, std::size_t>> dual_pairs;
  for (std::size_t x = 0; x < ji.size(); ++x)
    for (std::size_t y = 0; y < ji.size(); ++y)
      if (x != y && order.leq(ji[y], ji[x])) dual_pairs.emplace_back(x, y);
  FinitePoset dual_space =
      FinitePoset::from_index_relation(ji.size(), dual_pairs, std::move(ji_names));

  Canonicalized out{upset_lattice(dual_space), std::vector<std::size_t>(n, 0)};
  if (out.lattice.size() != n)
    fail(ErrorKind::NotDistributive, "element count does not match its upset lattice");
  for (std::size_t e = 0; e < n; ++e) {
    DynBitset bits(ji.size());
    for (std::size_t x = 0; x < ji.size(); ++x)
      if (order.leq(ji[x], e)) bits.set(x);
    out.element_map[e] = out.lattice.index_of(bits);
  }
  return out;
}

bool is_ideal(const FiniteDistLattice& l, const DynBitset& members) {
  if (!members.test(l.bottom())) return false;
  for (std::size_t a = members.find_first(); a < members.size(); a = members.find_next(a + 1)) {
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (l.leq(b, a) && !members.test(b)) return false;
      if (members.test(b) && !members.test(l.join(a, b))) return false;
    }
  }
  return true;
}

bool is_filter(const FiniteDistLattice& l, const DynBitset& members) {
  if (!members.test(l.top())) return false;
  for (std::size_t a = members.find_first(); a < members.size(); a = members.find_next(a + 1)) {
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (l.leq(a, b) && !members.test(b)) return false;
      if (members.test(b) && !members.test(l.meet(a, b))) return false;
    }
  }
  return true;
}

IdealOrFilter principal_ideal(const FiniteDistLattice& l, std::size_t a) {
  DynBitset m(l.size());
  for (std::size_t e = 0; e < l.size(); ++e)
    if (l.leq(e, a)) m.set(e);
  return IdealOrFilter{IdealOrFilter::Kind::ideal, std::move(m)};
}

IdealOrFilter principal_filter(const FiniteDistLattice& l, std::size_t a) {
  DynBitset m(l.size());
  for (std::size_t e = 0; e < l.size(); ++e)
    if (l.leq(a, e)) m.set(e);
  return IdealOrFilter{IdealOrFilter::Kind::filter, std::move(m)};
}

IdealOrFilter ideal_I_ab(const FiniteDistLattice& l, std::size_t a, std::size_t b) {
  DynBitset m(l.size());
  for (std::size_t c = 0; c < l.size(); ++c)
    if (l.leq(l.meet(c, a), b)) m.set(c);
  return IdealOrFilter{IdealOrFilter::Kind::ideal, std::move(m)};
}

std::optional<std::size_t> is_principal(const FiniteDistLattice& l, const IdealOrFilter& i) {
  if (i.members.none()) return std::nullopt;
  std::size_t acc = SIZE_MAX;
  for (std::size_t e = i.members.find_first(); e < i.members.size();
       e = i.members.find_next(e + 1)) {
    if (acc == SIZE_MAX)
      acc = e;
    else
      acc = (i.kind == IdealOrFilter::Kind::ideal) ? l.join(acc, e) : l.meet(acc, e);
  }
  if (!i.members.test(acc)) return std::nullopt;
  return acc;
}

DynBitset correspond_ideal(const FiniteDistLattice& l, const IdealOrFilter& i) {
  DynBitset out(l.base().size());
  if (i.kind == IdealOrFilter::Kind::ideal) {
    for (std::size_t e = i.members.find_first(); e < i.members.size();
         e = i.members.find_next(e + 1))
      out |= l.upset_of(e);
  } else {
    out.set_all();
    for (std::size_t e = i.members.find_first(); e < i.members.size();
         e = i.members.find_next(e + 1))
      out &= l.upset_of(e);
  }
  return out;
}

std::vector<IdealOrFilter> all_ideals(const FiniteDistLattice& l) {
  std::vector<IdealOrFilter> out;
  out.reserve(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) out.push_back(principal_ideal(l, a));
  return out;
}

std::vector<IdealOrFilter> all_filters(const FiniteDistLattice& l) {
  std::vector<IdealOrFilter> out;
  out.reserve(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) out.push_back(principal_filter(l, a));
  return out;
}

}  // namespace pkit
