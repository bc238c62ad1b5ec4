#pragma once

#include <map>
#include <string>

#include "pkit/lattice.hpp"
#include "pkit/space_algebra.hpp"

namespace pkit {

struct NamedLattice {
  FinitePoset order;  // as given in the source
  FiniteDistLattice lattice;
  std::vector<std::size_t> element_map;  // order element -> canonical element
};

/// Parsed definitions: `poset`, `lattice` and `space` blocks plus `let`
/// (space expressions) and `set` (descriptor expressions). Names are
/// unique across all kinds; every definition is validated at parse time.
struct Workspace {
  std::map<std::string, FinitePoset> posets;
  std::map<std::string, NamedLattice> lattices;
  std::map<std::string, SpaceExpr> spaces;
  std::map<std::string, DescriptorExpr> descriptors;

  bool has_name(const std::string& name) const;
  CompileContext context(const EngineOptions& engine = {}) const;

  /// Compiles a named or ad-hoc space expression against this workspace.
  SpacePresentation compile_expr(const std::string& text,
                                 const EngineOptions& engine = {}) const;

  void merge(Workspace other);
};

/// Parses one source file. Diagnostics carry line and column.
Workspace parse_workspace(const std::string& source);

SpaceExpr parse_space_expr(const std::string& text);
DescriptorExpr parse_descriptor_expr(const std::string& text);

/// Prints a workspace back to DSL text; parse(print(w)) defines the same
/// objects.
std::string print_workspace(const Workspace& w);

std::string print_space_expr(const SpaceExpr& e);
std::string print_descriptor_expr(const DescriptorExpr& e);

}  // namespace pkit
