#include "pkit/dot.hpp"

namespace pkit {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string dot_of_poset(const FinitePoset& p, const std::string& name,
                         const std::vector<bool>* limit_marks) {
  std::string out = "digraph " + quote(name) + " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=" + quote(p.name_of(i));
    if (limit_marks && (*limit_marks)[i]) out += ", peripheries=2";
    out += "];\n";
  }
  for (const auto& [a, b] : p.hasse_edges())
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

std::string dot_of_truncation(const SpacePresentation& s, int depth, const std::string& name) {
  auto [poset, points] = truncate(s, depth);
  std::vector<bool> limits(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int arity = s.parts()[points[i].part].arity;
    for (int c = 0; c < arity; ++c)
      if (points[i].coord[static_cast<std::size_t>(c)].is_omega()) limits[i] = true;
  }
  return dot_of_poset(poset, name, &limits);
}

std::string dot_of_lattice(const FiniteDistLattice& l, const std::string& name) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (a != b && l.leq(a, b)) pairs.emplace_back(a, b);
  std::vector<std::string> names;
  for (std::size_t e = 0; e < l.size(); ++e) names.push_back(l.element_name(e));
  FinitePoset order = FinitePoset::from_index_relation(l.size(), pairs, std::move(names));
  return dot_of_poset(order, name);
}

}  // namespace pkit
