#include "pkit/dsl.hpp"

#include <algorithm>
#include <cctype>

namespace pkit {

namespace {

struct Token {
  enum class Type { ident, number, punct, end };
  Type type = Type::end;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void error(const std::string& expected) const {
    fail(ErrorKind::ParseError,
         "line " + std::to_string(tok_.line) + " col " + std::to_string(tok_.col) + ": expected " +
             expected + ", found '" + (tok_.type == Token::Type::end ? "<eof>" : tok_.text) + "'");
  }

  Token expect_ident(const std::string& what) {
    if (tok_.type != Token::Type::ident) error(what);
    return next();
  }

  Token expect(const std::string& punct) {
    if (tok_.type != Token::Type::punct || tok_.text != punct) error("'" + punct + "'");
    return next();
  }

  bool accept(const std::string& punct) {
    if (tok_.type == Token::Type::punct && tok_.text == punct) {
      advance();
      return true;
    }
    return false;
  }

  bool accept_ident(const std::string& word) {
    if (tok_.type == Token::Type::ident && tok_.text == word) {
      advance();
      return true;
    }
    return false;
  }

  bool at_ident(const std::string& word) const {
    return tok_.type == Token::Type::ident && tok_.text == word;
  }

  bool at_end() const { return tok_.type == Token::Type::end; }

  std::uint32_t expect_number() {
    if (tok_.type != Token::Type::number) error("a number");
    return static_cast<std::uint32_t>(std::stoul(next().text));
  }

private:
  void advance() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.type = Token::Type::end;
      tok_.text.clear();
      return;
    }
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
              src_[pos_] == '.'))
        ++pos_;
      tok_.type = Token::Type::ident;
      tok_.text = src_.substr(start, pos_ - start);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      tok_.type = Token::Type::number;
      tok_.text = src_.substr(start, pos_ - start);
    } else {
      // multi-char operators first
      static const char* two[] = {"<=", ">=", "==", "!=", ":="};
      tok_.type = Token::Type::punct;
      tok_.text.clear();
      for (const char* op : two) {
        if (src_.compare(pos_, 2, op) == 0) {
          tok_.text = op;
          pos_ += 2;
          break;
        }
      }
      if (tok_.text.empty()) {
        tok_.text = std::string(1, c);
        ++pos_;
      }
    }
    col_ += static_cast<int>(tok_.text.size());
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

// ---------------------------------------------------------------------------
// Formula parsing (inside `space` blocks)

struct VarBinding {
  std::map<std::string, CoordRef> vars;
};

Term parse_term(Lexer& lx, const VarBinding& binding) {
  Term t;
  std::uint32_t constant = 0;
  bool constant_is_omega = false;
  while (true) {
    if (lx.peek().type == Token::Type::number) {
      constant += lx.expect_number();
    } else if (lx.at_ident("omega")) {
      lx.next();
      constant_is_omega = true;
    } else if (lx.peek().type == Token::Type::ident) {
      Token v = lx.next();
      auto it = binding.vars.find(v.text);
      if (it == binding.vars.end())
        fail(ErrorKind::ParseError, "line " + std::to_string(v.line) + ": unbound variable '" +
                                        v.text + "'");
      for (const auto& ref : t.coords)
        if (ref.var == it->second.var && ref.index == it->second.index)
          fail(ErrorKind::FragmentViolation, "variable '" + v.text + "' repeated in one term");
      if (t.coords.size() == 2)
        fail(ErrorKind::FragmentViolation, "terms may sum at most two coordinates");
      t.coords.push_back(it->second);
    } else {
      lx.error("a term");
    }
    if (!lx.accept("+")) break;
  }
  t.constant = constant_is_omega ? NatOmega::omega() : NatOmega::finite(constant);
  return t;
}

Formula parse_formula(Lexer& lx, const VarBinding& binding);

Formula parse_formula_unary(Lexer& lx, const VarBinding& binding) {
  if (lx.accept_ident("not")) return Formula::neg(parse_formula_unary(lx, binding));
  if (lx.accept("(")) {
    Formula f = parse_formula(lx, binding);
    lx.expect(")");
    return f;
  }
  Term lhs = parse_term(lx, binding);
  const Token op = lx.peek();
  if (op.type != Token::Type::punct) lx.error("a comparison operator");
  lx.next();
  Term rhs = parse_term(lx, binding);
  if (op.text == "==") return Formula::cmp(std::move(lhs), CmpOp::eq, std::move(rhs));
  if (op.text == "!=")
    return Formula::neg(Formula::cmp(std::move(lhs), CmpOp::eq, std::move(rhs)));
  if (op.text == "<=") return Formula::cmp(std::move(lhs), CmpOp::le, std::move(rhs));
  if (op.text == "<") return Formula::cmp(std::move(lhs), CmpOp::lt, std::move(rhs));
  if (op.text == ">=") return Formula::cmp(std::move(lhs), CmpOp::ge, std::move(rhs));
  if (op.text == ">") return Formula::cmp(std::move(lhs), CmpOp::gt, std::move(rhs));
  fail(ErrorKind::FragmentViolation, "operator '" + op.text + "' is outside the rule fragment");
}

Formula parse_formula_conj(Lexer& lx, const VarBinding& binding) {
  std::vector<Formula> kids;
  kids.push_back(parse_formula_unary(lx, binding));
  while (lx.accept_ident("and")) kids.push_back(parse_formula_unary(lx, binding));
  if (kids.size() == 1) return std::move(kids[0]);
  return Formula::conj(std::move(kids));
}

Formula parse_formula(Lexer& lx, const VarBinding& binding) {
  std::vector<Formula> kids;
  kids.push_back(parse_formula_conj(lx, binding));
  while (lx.accept_ident("or")) kids.push_back(parse_formula_conj(lx, binding));
  if (kids.size() == 1) return std::move(kids[0]);
  return Formula::disj(std::move(kids));
}

// ---------------------------------------------------------------------------
// Blocks

std::pair<std::vector<std::string>, std::vector<std::pair<std::string, std::string>>>
parse_elements_and_order(Lexer& lx) {
  lx.expect("{");
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> pairs;
  while (!lx.accept("}")) {
    if (lx.accept_ident("elements")) {
      lx.expect(":");
      while (lx.peek().type == Token::Type::ident) elements.push_back(lx.next().text);
      lx.expect(";");
    } else if (lx.accept_ident("order")) {
      lx.expect(":");
      while (lx.peek().type == Token::Type::ident) {
        std::string a = lx.next().text;
        lx.expect("<");
        std::string b = lx.expect_ident("an element name").text;
        pairs.emplace_back(std::move(a), std::move(b));
      }
      lx.expect(";");
    } else {
      lx.error("'elements', 'order' or '}'");
    }
  }
  return {std::move(elements), std::move(pairs)};
}

SpacePresentation parse_space_block(Lexer& lx, const std::string& name) {
  lx.expect("{");
  std::vector<Part> parts;
  std::vector<OrderClause> clauses;
  auto part_index = [&](const std::string& pname, const Token& at) -> std::size_t {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i].name == pname) return i;
    fail(ErrorKind::ParseError,
         "line " + std::to_string(at.line) + ": unknown part '" + pname + "'");
  };
  while (!lx.accept("}")) {
    if (lx.accept_ident("part")) {
      Token pname = lx.expect_ident("a part name");
      lx.expect(":");
      std::uint32_t arity = lx.expect_number();
      lx.expect(";");
      parts.push_back(Part{pname.text, static_cast<int>(arity)});
    } else if (lx.accept_ident("order")) {
      VarBinding binding;
      auto parse_patom = [&](int var) -> std::size_t {
        Token pname = lx.expect_ident("a part name");
        std::size_t pi = part_index(pname.text, pname);
        int coord = 0;
        if (lx.accept("(")) {
          if (!lx.accept(")")) {
            do {
              Token v = lx.expect_ident("a variable name");
              if (!binding.vars.emplace(v.text, CoordRef{var, coord}).second)
                fail(ErrorKind::ParseError,
                     "line " + std::to_string(v.line) + ": variable '" + v.text + "' rebound");
              ++coord;
            } while (lx.accept(","));
            lx.expect(")");
          }
        }
        if (coord != parts[pi].arity)
          fail(ErrorKind::ArityMismatch,
               "part '" + pname.text + "' has arity " + std::to_string(parts[pi].arity));
        return pi;
      };
      std::size_t pu = parse_patom(0);
      lx.expect("<=");
      std::size_t pv = parse_patom(1);
      lx.expect(":=");
      Formula guard = parse_formula(lx, binding);
      lx.expect(";");
      clauses.push_back(OrderClause{pu, pv, std::move(guard)});
    } else {
      lx.error("'part', 'order' or '}'");
    }
  }
  return SpacePresentation(std::move(parts), std::move(clauses), name);
}

// ---------------------------------------------------------------------------
// Expressions

const std::map<std::string, std::string>& atom_aliases() {
  static const std::map<std::string, std::string> aliases{
      {"Z1", "z1"},       {"Z2", "z2"},        {"Z3", "z3"},
      {"z1", "z1"},       {"z2", "z2"},        {"z3", "z3"},
      {"E1", "example_e1"}, {"E2", "example_e2"},
      {"example_e1", "example_e1"}, {"example_e2", "example_e2"},
      {"grid", "grid"},   {"point", "point"},
      {"chain_fan", "chain_fan"}, {"antichain_fan", "antichain_fan"}};
  return aliases;
}

DescriptorExpr parse_descriptor(Lexer& lx);

DescriptorExpr parse_descriptor_unary(Lexer& lx) {
  if (lx.accept("!")) {
    DescriptorExpr e;
    e.kind = DescriptorExpr::Kind::complement;
    e.kids.push_back(parse_descriptor_unary(lx));
    return e;
  }
  if (lx.accept("(")) {
    DescriptorExpr e = parse_descriptor(lx);
    lx.expect(")");
    return e;
  }
  DescriptorExpr e;
  if (lx.accept_ident("all")) {
    e.kind = DescriptorExpr::Kind::all;
  } else if (lx.accept_ident("none")) {
    e.kind = DescriptorExpr::Kind::none;
  } else if (lx.accept_ident("in")) {
    lx.expect("(");
    e.kind = DescriptorExpr::Kind::in_part;
    e.name = lx.expect_ident("a part name").text;
    lx.expect(")");
  } else if (lx.accept_ident("eq") || lx.at_ident("geq")) {
    bool geq = lx.accept_ident("geq");
    lx.expect("(");
    int index = static_cast<int>(lx.expect_number());
    lx.expect(",");
    if (lx.accept_ident("omega")) {
      if (geq) fail(ErrorKind::FragmentViolation, "geq against omega is the whole coordinate");
      e.kind = DescriptorExpr::Kind::coord_is_omega;
      e.index = index;
    } else {
      e.kind = geq ? DescriptorExpr::Kind::coord_geq : DescriptorExpr::Kind::coord_eq;
      e.index = index;
      e.value = lx.expect_number();
    }
    lx.expect(")");
  } else if (lx.accept_ident("isomega")) {
    lx.expect("(");
    e.kind = DescriptorExpr::Kind::coord_is_omega;
    e.index = static_cast<int>(lx.expect_number());
    lx.expect(")");
  } else if (lx.peek().type == Token::Type::ident) {
    e.kind = DescriptorExpr::Kind::named;
    e.name = lx.next().text;
  } else {
    lx.error("a descriptor");
  }
  return e;
}

DescriptorExpr parse_descriptor_and(Lexer& lx) {
  DescriptorExpr e = parse_descriptor_unary(lx);
  while (lx.accept("&")) {
    DescriptorExpr rhs = parse_descriptor_unary(lx);
    DescriptorExpr both;
    both.kind = DescriptorExpr::Kind::intersect;
    both.kids.push_back(std::move(e));
    both.kids.push_back(std::move(rhs));
    e = std::move(both);
  }
  return e;
}

DescriptorExpr parse_descriptor(Lexer& lx) {
  DescriptorExpr e = parse_descriptor_and(lx);
  while (lx.accept("|")) {
    DescriptorExpr rhs = parse_descriptor_and(lx);
    DescriptorExpr either;
    either.kind = DescriptorExpr::Kind::unite;
    either.kids.push_back(std::move(e));
    either.kids.push_back(std::move(rhs));
    e = std::move(either);
  }
  return e;
}

SpaceExpr parse_space_expression(Lexer& lx) {
  if (lx.accept_ident("dual")) {
    lx.expect("(");
    SpaceExpr inner = parse_space_expression(lx);
    lx.expect(")");
    return SpaceExpr::make_dual(std::move(inner));
  }
  if (lx.accept_ident("union") || lx.at_ident("lsum")) {
    bool linear = lx.accept_ident("lsum");
    lx.expect("(");
    SpaceExpr lhs = parse_space_expression(lx);
    lx.expect(",");
    SpaceExpr rhs = parse_space_expression(lx);
    lx.expect(")");
    return linear ? SpaceExpr::make_lsum(std::move(lhs), std::move(rhs))
                  : SpaceExpr::make_union(std::move(lhs), std::move(rhs));
  }
  if (lx.accept_ident("dsum")) {
    lx.expect("(");
    SpaceExpr lhs = parse_space_expression(lx);
    lx.expect(",");
    DescriptorExpr d = parse_descriptor(lx);
    lx.expect(",");
    SpaceExpr rhs = parse_space_expression(lx);
    lx.expect(",");
    DescriptorExpr u = parse_descriptor(lx);
    lx.expect(")");
    return SpaceExpr::make_dsum(std::move(lhs), std::move(d), std::move(rhs), std::move(u));
  }
  if (lx.accept_ident("finite")) {
    lx.expect("(");
    Token name = lx.expect_ident("a poset name");
    lx.expect(")");
    SpaceExpr e = SpaceExpr::make_named(name.text);
    e.kind = SpaceExpr::Kind::finite;  // resolved against workspace posets
    return e;
  }
  Token name = lx.expect_ident("a space expression");
  auto alias = atom_aliases().find(name.text);
  if (alias != atom_aliases().end()) return SpaceExpr::make_atom(alias->second);
  return SpaceExpr::make_named(name.text);
}

}  // namespace

// ---------------------------------------------------------------------------
// Workspace

bool Workspace::has_name(const std::string& name) const {
  return posets.contains(name) || lattices.contains(name) || spaces.contains(name) ||
         descriptors.contains(name);
}

CompileContext Workspace::context(const EngineOptions& engine) const {
  CompileContext ctx;
  ctx.engine = engine;
  ctx.find_poset = [this](const std::string& name) -> const FinitePoset* {
    auto it = posets.find(name);
    return it == posets.end() ? nullptr : &it->second;
  };
  ctx.find_space = [this](const std::string& name) -> const SpaceExpr* {
    auto it = spaces.find(name);
    return it == spaces.end() ? nullptr : &it->second;
  };
  ctx.find_descriptor = [this](const std::string& name) -> const DescriptorExpr* {
    auto it = descriptors.find(name);
    return it == descriptors.end() ? nullptr : &it->second;
  };
  return ctx;
}

SpacePresentation Workspace::compile_expr(const std::string& text,
                                          const EngineOptions& engine) const {
  SpaceExpr e = parse_space_expr(text);
  return compile(e, context(engine));
}

void Workspace::merge(Workspace other) {
  for (auto& [name, v] : other.posets) {
    if (has_name(name)) fail(ErrorKind::InvalidArgument, "duplicate definition '" + name + "'");
    posets.emplace(name, std::move(v));
  }
  for (auto& [name, v] : other.lattices) {
    if (has_name(name)) fail(ErrorKind::InvalidArgument, "duplicate definition '" + name + "'");
    lattices.emplace(name, std::move(v));
  }
  for (auto& [name, v] : other.spaces) {
    if (has_name(name)) fail(ErrorKind::InvalidArgument, "duplicate definition '" + name + "'");
    spaces.emplace(name, std::move(v));
  }
  for (auto& [name, v] : other.descriptors) {
    if (has_name(name)) fail(ErrorKind::InvalidArgument, "duplicate definition '" + name + "'");
    descriptors.emplace(name, std::move(v));
  }
}

Workspace parse_workspace(const std::string& source) {
  Lexer lx(source);
  Workspace w;
  auto fresh = [&](const std::string& name, const Token& at) {
    if (w.has_name(name))
      fail(ErrorKind::ParseError,
           "line " + std::to_string(at.line) + ": duplicate definition '" + name + "'");
  };
  while (!lx.at_end()) {
    if (lx.accept_ident("poset")) {
      Token name = lx.expect_ident("a poset name");
      fresh(name.text, name);
      auto [elements, pairs] = parse_elements_and_order(lx);
      w.posets.emplace(name.text, FinitePoset::from_relation(std::move(elements), pairs));
    } else if (lx.accept_ident("lattice")) {
      Token name = lx.expect_ident("a lattice name");
      fresh(name.text, name);
      auto [elements, pairs] = parse_elements_and_order(lx);
      FinitePoset order = FinitePoset::from_relation(std::move(elements), pairs);
      auto canonical = FiniteDistLattice::from_abstract_order(order);
      w.lattices.emplace(name.text, NamedLattice{std::move(order), std::move(canonical.lattice),
                                                 std::move(canonical.element_map)});
    } else if (lx.accept_ident("space")) {
      Token name = lx.expect_ident("a space name");
      fresh(name.text, name);
      w.spaces.emplace(name.text, SpaceExpr::make_direct(parse_space_block(lx, name.text)));
    } else if (lx.accept_ident("let")) {
      Token name = lx.expect_ident("a name");
      fresh(name.text, name);
      lx.expect("=");
      SpaceExpr e = parse_space_expression(lx);
      lx.expect(";");
      w.spaces.emplace(name.text, std::move(e));
    } else if (lx.accept_ident("set")) {
      Token name = lx.expect_ident("a name");
      fresh(name.text, name);
      lx.expect("=");
      DescriptorExpr e = parse_descriptor(lx);
      lx.expect(";");
      w.descriptors.emplace(name.text, std::move(e));
    } else {
      lx.error("'poset', 'lattice', 'space', 'let' or 'set'");
    }
  }
  return w;
}

SpaceExpr parse_space_expr(const std::string& text) {
  Lexer lx(text);
  SpaceExpr e = parse_space_expression(lx);
  if (!lx.at_end()) lx.error("end of expression");
  return e;
}

DescriptorExpr parse_descriptor_expr(const std::string& text) {
  Lexer lx(text);
  DescriptorExpr e = parse_descriptor(lx);
  if (!lx.at_end()) lx.error("end of expression");
  return e;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string print_term(const Term& t) {
  static const char* names[2][2] = {{"a", "b"}, {"c", "d"}};
  std::string out;
  for (const auto& ref : t.coords) {
    if (!out.empty()) out += " + ";
    out += names[ref.var][ref.index];
  }
  if (t.constant.is_omega()) {
    if (!out.empty()) out += " + ";
    out += "omega";
  } else if (t.constant.value() != 0 || out.empty()) {
    if (!out.empty()) out += " + ";
    out += std::to_string(t.constant.value());
  }
  return out;
}

std::string print_formula(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::truth: return "0 == 0";
    case Formula::Kind::cmp: {
      const char* op = "==";
      switch (f.op) {
        case CmpOp::eq: op = "=="; break;
        case CmpOp::le: op = "<="; break;
        case CmpOp::lt: op = "<"; break;
        case CmpOp::ge: op = ">="; break;
        case CmpOp::gt: op = ">"; break;
      }
      return print_term(f.lhs) + " " + op + " " + print_term(f.rhs);
    }
    case Formula::Kind::conj: {
      std::string out;
      for (const auto& k : f.kids) {
        if (!out.empty()) out += " and ";
        out += "(" + print_formula(k) + ")";
      }
      return out;
    }
    case Formula::Kind::disj: {
      std::string out;
      for (const auto& k : f.kids) {
        if (!out.empty()) out += " or ";
        out += "(" + print_formula(k) + ")";
      }
      return out;
    }
    case Formula::Kind::neg: return "not (" + print_formula(f.kids[0]) + ")";
  }
  return "";
}

std::string print_poset_block(const std::string& keyword, const std::string& name,
                              const FinitePoset& p) {
  std::string out = keyword + " " + name + " {\n  elements:";
  for (const auto& e : p.elements()) out += " " + e;
  out += ";\n";
  auto edges = p.hasse_edges();
  if (!edges.empty()) {
    out += "  order:";
    for (const auto& [a, b] : edges) out += " " + p.name_of(a) + "<" + p.name_of(b);
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string print_space_block(const std::string& name, const SpacePresentation& s) {
  std::string out = "space " + name + " {\n";
  for (const auto& p : s.parts())
    out += "  part " + p.name + ": " + std::to_string(p.arity) + ";\n";
  static const char* names[2][2] = {{"a", "b"}, {"c", "d"}};
  for (const auto& cl : s.clauses()) {
    auto patom = [&](std::size_t pi, int var) {
      const Part& p = s.parts()[pi];
      std::string t = p.name + "(";
      for (int c = 0; c < p.arity; ++c) {
        if (c) t += ",";
        t += names[var][c];
      }
      return t + ")";
    };
    out += "  order " + patom(cl.part_u, 0) + " <= " + patom(cl.part_v, 1) + " := " +
           print_formula(cl.guard) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string print_descriptor_expr(const DescriptorExpr& e) {
  switch (e.kind) {
    case DescriptorExpr::Kind::all: return "all";
    case DescriptorExpr::Kind::none: return "none";
    case DescriptorExpr::Kind::named: return e.name;
    case DescriptorExpr::Kind::in_part: return "in(" + e.name + ")";
    case DescriptorExpr::Kind::coord_eq:
      return "eq(" + std::to_string(e.index) + "," + std::to_string(e.value) + ")";
    case DescriptorExpr::Kind::coord_geq:
      return "geq(" + std::to_string(e.index) + "," + std::to_string(e.value) + ")";
    case DescriptorExpr::Kind::coord_is_omega: return "isomega(" + std::to_string(e.index) + ")";
    case DescriptorExpr::Kind::unite:
      return "(" + print_descriptor_expr(e.kids[0]) + " | " + print_descriptor_expr(e.kids[1]) +
             ")";
    case DescriptorExpr::Kind::intersect:
      return "(" + print_descriptor_expr(e.kids[0]) + " & " + print_descriptor_expr(e.kids[1]) +
             ")";
    case DescriptorExpr::Kind::complement: return "!(" + print_descriptor_expr(e.kids[0]) + ")";
  }
  return "";
}

std::string print_space_expr(const SpaceExpr& e) {
  switch (e.kind) {
    case SpaceExpr::Kind::atom: return e.name;
    case SpaceExpr::Kind::named: return e.name;
    case SpaceExpr::Kind::finite: return "finite(" + e.name + ")";
    case SpaceExpr::Kind::direct: return e.presentation->provenance();
    case SpaceExpr::Kind::dual: return "dual(" + print_space_expr(*e.a) + ")";
    case SpaceExpr::Kind::uni:
      return "union(" + print_space_expr(*e.a) + "," + print_space_expr(*e.b) + ")";
    case SpaceExpr::Kind::lsum:
      return "lsum(" + print_space_expr(*e.a) + "," + print_space_expr(*e.b) + ")";
    case SpaceExpr::Kind::dsum:
      return "dsum(" + print_space_expr(*e.a) + "," + print_descriptor_expr(e.down) + "," +
             print_space_expr(*e.b) + "," + print_descriptor_expr(e.up) + ")";
  }
  return "";
}

std::string print_workspace(const Workspace& w) {
  std::string out;
  for (const auto& [name, p] : w.posets) out += print_poset_block("poset", name, p);
  for (const auto& [name, l] : w.lattices) out += print_poset_block("lattice", name, l.order);
  for (const auto& [name, e] : w.spaces) {
    if (e.kind == SpaceExpr::Kind::direct)
      out += print_space_block(name, *e.presentation);
    else
      out += "let " + name + " = " + print_space_expr(e) + ";\n";
  }
  for (const auto& [name, d] : w.descriptors)
    out += "set " + name + " = " + print_descriptor_expr(d) + ";\n";
  return out;
}

}  // namespace pkit
