#include "pkit/poset.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace pkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::UnknownAtom: return "UnknownAtom";
    case ErrorKind::UnknownPart: return "UnknownPart";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::FragmentViolation: return "FragmentViolation";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
    case ErrorKind::ValidationInconclusive: return "ValidationInconclusive";
    case ErrorKind::NotExpressible: return "NotExpressible";
    case ErrorKind::NotClosedDownset: return "NotClosedDownset";
    case ErrorKind::NotClosedUpset: return "NotClosedUpset";
    case ErrorKind::NotIdeal: return "NotIdeal";
    case ErrorKind::NotFilter: return "NotFilter";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

FinitePoset FinitePoset::from_relation(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], i).second)
      fail(ErrorKind::InvalidArgument, "duplicate element '" + elements[i] + "'");
  }
  std::vector<std::pair<std::size_t, std::size_t>> ipairs;
  ipairs.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) fail(ErrorKind::UnknownElement, "'" + a + "' in relation");
    if (ib == index.end()) fail(ErrorKind::UnknownElement, "'" + b + "' in relation");
    ipairs.emplace_back(ia->second, ib->second);
  }
  return from_index_relation(elements.size(), ipairs, std::move(elements));
}

FinitePoset FinitePoset::from_index_relation(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
    std::vector<std::string> names) {
  FinitePoset p;
  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  }
  p.elements_ = std::move(names);
  p.up_.assign(n, DynBitset(n));
  for (std::size_t i = 0; i < n; ++i) p.up_[i].set(i);
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) fail(ErrorKind::UnknownElement, "index out of range");
    p.up_[a].set(b);
  }
  // Floyd-Warshall style transitive closure on bitset rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.up_[i].test(k)) p.up_[i] |= p.up_[k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.up_[i].test(j) && p.up_[j].test(i))
        fail(ErrorKind::AntisymmetryViolation,
             "cycle between '" + p.elements_[i] + "' and '" + p.elements_[j] + "'");
  p.down_.assign(n, DynBitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.up_[i].test(j)) p.down_[j].set(i);
  return p;
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return from_index_relation(n, pairs);
}

FinitePoset FinitePoset::antichain(std::size_t n) { return from_index_relation(n, {}); }

std::size_t FinitePoset::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == name) return i;
  fail(ErrorKind::UnknownElement, "'" + name + "'");
}

bool FinitePoset::contains(const std::string& name) const {
  return std::find(elements_.begin(), elements_.end(), name) != elements_.end();
}

DynBitset FinitePoset::closure(const DynBitset& s, Direction d) const {
  if (s.size() != size()) fail(ErrorKind::UnknownElement, "subset size mismatch");
  DynBitset r(size());
  const auto& rows = (d == Direction::up) ? up_ : down_;
  for (std::size_t i = s.find_first(); i < s.size(); i = s.find_next(i + 1)) r |= rows[i];
  return r;
}

std::vector<std::string> FinitePoset::closure(const std::vector<std::string>& s,
                                              Direction d) const {
  return names(closure(subset(s), d));
}

DynBitset FinitePoset::subset(const std::vector<std::string>& in) const {
  DynBitset s(size());
  for (const auto& name : in) s.set(index_of(name));
  return s;
}

std::vector<std::string> FinitePoset::names(const DynBitset& s) const {
  std::vector<std::string> out;
  for (std::size_t i = s.find_first(); i < s.size(); i = s.find_next(i + 1))
    out.push_back(elements_[i]);
  return out;
}

bool FinitePoset::is_upset(const DynBitset& s) const {
  for (std::size_t i = s.find_first(); i < s.size(); i = s.find_next(i + 1))
    if (!up_[i].subset_of(s)) return false;
  return true;
}

bool FinitePoset::is_downset(const DynBitset& s) const {
  for (std::size_t i = s.find_first(); i < s.size(); i = s.find_next(i + 1))
    if (!down_[i].subset_of(s)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) edges.emplace_back(a, b);
    }
  }
  return edges;
}

std::vector<DynBitset> FinitePoset::all_upsets(std::size_t limit) const {
  // Processing elements in an order where all strict successors come first
  // lets each element be either excluded or included-if-its-upset-is-present.
  const std::size_t n = size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return up_[a].count() < up_[b].count();
  });
  std::vector<DynBitset> result{DynBitset(n)};
  for (std::size_t oi = 0; oi < n; ++oi) {
    const std::size_t e = order[oi];
    std::vector<DynBitset> next;
    next.reserve(result.size() * 2);
    for (const auto& s : result) {
      next.push_back(s);
      DynBitset with = s;
      with.set(e);
      // e may join only if everything strictly above e is already in.
      DynBitset above = up_[e];
      above.reset(e);
      if (above.subset_of(s)) next.push_back(with);
      if (next.size() > limit) fail(ErrorKind::SizeLimit, "more than limit upsets");
    }
    result = std::move(next);
  }
  std::sort(result.begin(), result.end(), [](const DynBitset& a, const DynBitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return result;
}

std::vector<DynBitset> FinitePoset::all_downsets(std::size_t limit) const {
  auto ups = dual().all_upsets(limit);
  return ups;
}

FinitePoset FinitePoset::dual() const {
  FinitePoset p;
  p.elements_ = elements_;
  p.up_ = down_;
  p.down_ = up_;
  return p;
}

FinitePoset FinitePoset::renamed(const std::vector<std::string>& names) const {
  if (names.size() != size()) fail(ErrorKind::InvalidArgument, "rename size mismatch");
  FinitePoset p = *this;
  p.elements_ = names;
  return p;
}

MonotoneMap make_monotone_map(FinitePoset source, FinitePoset target,
                              std::vector<std::size_t> assignment) {
  if (assignment.size() != source.size())
    fail(ErrorKind::InvalidArgument, "assignment not total");
  for (auto t : assignment)
    if (t >= target.size()) fail(ErrorKind::UnknownElement, "assignment target out of range");
  for (std::size_t a = 0; a < source.size(); ++a)
    for (std::size_t b = 0; b < source.size(); ++b)
      if (source.leq(a, b) && !target.leq(assignment[a], assignment[b]))
        fail(ErrorKind::InvalidArgument,
             "not order-preserving at (" + source.name_of(a) + "," + source.name_of(b) + ")");
  return MonotoneMap{std::move(source), std::move(target), std::move(assignment)};
}

namespace {

struct IsoSearch {
  const FinitePoset& p;
  const FinitePoset& q;
  std::vector<std::size_t> p_to_q;
  std::vector<bool> used;

  bool compatible(std::size_t a, std::size_t b) const {
    // Degree invariants, then consistency with the partial assignment.
    if (p.up(a).count() != q.up(b).count()) return false;
    if (p.down(a).count() != q.down(b).count()) return false;
    for (std::size_t a2 = 0; a2 < p_to_q.size(); ++a2) {
      if (p_to_q[a2] == SIZE_MAX) continue;
      if (p.leq(a, a2) != q.leq(b, p_to_q[a2])) return false;
      if (p.leq(a2, a) != q.leq(p_to_q[a2], b)) return false;
    }
    return true;
  }

  bool extend(std::size_t a) {
    if (a == p.size()) return true;
    for (std::size_t b = 0; b < q.size(); ++b) {
      if (used[b] || !compatible(a, b)) continue;
      p_to_q[a] = b;
      used[b] = true;
      if (extend(a + 1)) return true;
      p_to_q[a] = SIZE_MAX;
      used[b] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<MonotoneMap> find_iso(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size()) return std::nullopt;
  IsoSearch search{p, q, std::vector<std::size_t>(p.size(), SIZE_MAX),
                   std::vector<bool>(q.size(), false)};
  if (!search.extend(0)) return std::nullopt;
  return MonotoneMap{p, q, std::move(search.p_to_q)};
}

bool is_order_embedding(const MonotoneMap& m) {
  const auto& s = m.source;
  const auto& t = m.target;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (a != b && m.assignment[a] == m.assignment[b]) return false;
      if (s.leq(a, b) != t.leq(m.assignment[a], m.assignment[b])) return false;
    }
  return true;
}

}  // namespace pkit
