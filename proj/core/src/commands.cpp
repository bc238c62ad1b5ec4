#include "pkit/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pkit/dot.hpp"
#include "pkit/dsl.hpp"
#include "pkit/lattice_algebra.hpp"
#include "pkit/oracle.hpp"
#include "pkit/report.hpp"

namespace pkit {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Session {
  std::vector<std::string> files;
  std::optional<int> window;
  bool no_cross_check = false;
  bool json = false;

  Workspace workspace;
  EngineOptions engine;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void prepare() {
    engine.window = window;
    engine.cross_check = !no_cross_check;
    if (!window) {
      if (const char* env = std::getenv("PKIT_WINDOW")) {
        try {
          engine.window = std::stoi(env);
        } catch (...) {
          fail(ErrorKind::InvalidArgument, "PKIT_WINDOW is not a number");
        }
      }
    }
    for (const auto& file : files) {
      std::ifstream in(file);
      if (!in) fail(ErrorKind::InvalidArgument, "cannot open '" + file + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      workspace.merge(parse_workspace(buffer.str()));
    }
  }

  SpacePresentation compile(const std::string& expr) const {
    SpaceExpr e = parse_space_expr(expr);
    return pkit::compile(e, workspace.context(engine));
  }

  SetDescriptor resolve(const std::string& text, const SpacePresentation& s) const {
    DescriptorExpr e = parse_descriptor_expr(text);
    return e.resolve(s, workspace.context(engine).find_descriptor);
  }

  int finish(Report rep, std::ostream& out) const {
    rep.cross_check = engine.cross_check;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    out << (json ? rep.to_json() : rep.to_text()) << "\n";
    return rep.exit_code;
  }
};

int window_of(const Session& session, const SpacePresentation& s) {
  return session.engine.window ? *session.engine.window : s.default_window();
}

int cmd_check(Session& session, const std::string& expr, const std::string& property,
              std::ostream& out) {
  session.prepare();
  SpacePresentation s = session.compile(expr);
  Report rep;
  rep.command = "check " + expr + " --property " + property;
  rep.window = window_of(session, s);

  if (property == "priestley") {
    ValidationReport v = validate_presentation(s, session.engine);
    rep.verdict = v.ok ? "holds" : "fails";
    rep.exit_code = v.ok ? 0 : 1;
    rep.payload_json = validation_json(v);
    return session.finish(rep, out);
  }

  Verdict v;
  if (property == "esakia")
    v = is_esakia(s, session.engine);
  else if (property == "p-space")
    v = is_p_space(s, session.engine);
  else if (property == "co-heyting")
    v = is_coheyting_space(s, session.engine);
  else if (property == "bi-heyting")
    v = is_biheyting_space(s, session.engine);
  else
    fail(ErrorKind::InvalidArgument, "unknown property '" + property + "'");

  rep.verdict = v.holds ? "holds" : "fails";
  rep.exit_code = v.holds ? 0 : 1;
  ordered_json payload;
  if (v.offending_clopen) {
    const SpacePresentation& base =
        (property == "co-heyting") ? order_dual(s) : s;
    payload["offending_clopen"] = v.offending_clopen->str(base);
  }
  if (v.witness) {
    const SpacePresentation& base =
        (property == "co-heyting") ? order_dual(s) : s;
    payload["witness"] = ordered_json::parse(witness_json(base, *v.witness));
  }
  rep.payload_json = payload.dump();
  return session.finish(rep, out);
}

int cmd_find_config(Session& session, const std::string& expr, std::ostream& out) {
  session.prepare();
  SpacePresentation s = session.compile(expr);
  Report rep;
  rep.command = "find-config " + expr;
  rep.window = window_of(session, s);
  Verdict v = is_esakia(s, session.engine);
  ordered_json payload;
  if (v.witness) {
    payload["witness"] = ordered_json::parse(witness_json(s, *v.witness));
    rep.verdict = "fails";
    rep.exit_code = 1;
  } else {
    payload["witness"] = nullptr;
    rep.verdict = "holds";
    rep.exit_code = 0;
  }
  rep.payload_json = payload.dump();
  return session.finish(rep, out);
}

int cmd_dual(Session& session, const std::string& expr, std::optional<int> budget,
             std::ostream& out) {
  session.prepare();
  SpacePresentation s = session.compile(expr);
  const int w = budget.value_or(s.default_window());
  RepresentedLattice r = represent(s, w, session.engine);

  // Inclusion order and join-irreducibility via the window trace.
  WindowModel m = WindowModel::build(s, std::max(s.default_window(), w + 3));
  std::vector<DynBitset> bits;
  bits.reserve(r.elements.size());
  for (const auto& d : r.elements) bits.push_back(m.bits_of(d));

  // Cover extraction is cubic; for very large catalogs only the element
  // list is emitted.
  const bool with_covers = r.elements.size() <= 512;
  ordered_json elements = ordered_json::array();
  ordered_json order = ordered_json::array();
  for (std::size_t i = 0; i < r.elements.size(); ++i) {
    std::size_t lower_covers = 0;
    if (with_covers) {
      for (std::size_t j = 0; j < r.elements.size(); ++j) {
        if (i == j || !bits[j].subset_of(bits[i])) continue;
        bool cover = true;
        for (std::size_t k = 0; k < r.elements.size() && cover; ++k)
          if (k != i && k != j && bits[j].subset_of(bits[k]) && bits[k].subset_of(bits[i]))
            cover = false;
        if (cover) {
          ++lower_covers;
          order.push_back(ordered_json::array({j, i}));
        }
      }
    }
    ordered_json e;
    e["index"] = i;
    e["set"] = r.elements[i].str(s);
    if (with_covers) e["join_irreducible"] = (lower_covers == 1);
    elements.push_back(e);
  }

  Report rep;
  rep.command = "dual " + expr;
  rep.window = w;
  rep.verdict = "ok";
  ordered_json payload;
  payload["size"] = r.elements.size();
  payload["elements"] = elements;
  if (with_covers)
    payload["covers"] = order;
  else
    payload["covers_omitted"] = true;
  rep.payload_json = payload.dump();
  return session.finish(rep, out);
}

int cmd_implies(Session& session, const std::string& expr, const std::string& a_text,
                const std::string& b_text, std::ostream& out) {
  session.prepare();
  SpacePresentation s = session.compile(expr);
  SetDescriptor a = session.resolve(a_text, s);
  SetDescriptor b = session.resolve(b_text, s);
  if (!a.is_clopen() || !is_upset(s, a, session.engine))
    fail(ErrorKind::InvalidArgument, "-a is not a clopen upset");
  if (!b.is_clopen() || !is_upset(s, b, session.engine))
    fail(ErrorKind::InvalidArgument, "-b is not a clopen upset");
  RepresentedLattice r{s, s.default_window(), {}};

  Report rep;
  rep.command = "implies " + expr;
  rep.window = window_of(session, s);
  ordered_json payload;
  std::optional<SetDescriptor> arrow = arrow_exists(r, a, b, session.engine);
  SetDescriptor ideal = ideal_descriptor_Iab(r, a, b, session.engine);
  payload["ideal"] = ordered_json::parse(descriptor_json(s, ideal));
  if (arrow) {
    payload["arrow"] = ordered_json::parse(descriptor_json(s, *arrow));
    rep.verdict = "holds";
    rep.exit_code = 0;
  } else {
    payload["arrow"] = nullptr;
    rep.verdict = "fails";
    rep.exit_code = 1;
  }
  rep.payload_json = payload.dump();
  return session.finish(rep, out);
}

int cmd_dsum_check(Session& session, const std::string& expr, const std::string& d_text,
                   const std::string& right_expr, std::ostream& out) {
  session.prepare();
  SpacePresentation a = session.compile(expr);
  SetDescriptor d = session.resolve(d_text, a);
  SpacePresentation b = session.compile(right_expr);
  SpacePresentation sum = down_up_sum(a, d, b, SetDescriptor::total(b), session.engine);

  Report rep;
  rep.command = "dsum-check " + expr;
  rep.window = window_of(session, sum);
  const bool clopen = is_clopen(a, d);
  Verdict v = is_esakia(sum, session.engine);
  ordered_json payload;
  payload["d_clopen"] = clopen;
  payload["sum_esakia"] = v.holds;
  payload["lemma_agrees"] = (clopen == v.holds);
  if (v.witness) payload["witness"] = ordered_json::parse(witness_json(sum, *v.witness));
  rep.payload_json = payload.dump();
  rep.verdict = (clopen == v.holds) ? "holds" : "fails";
  rep.exit_code = (clopen == v.holds) ? 0 : 1;
  return session.finish(rep, out);
}

int cmd_oracle(Session& session, int max_size, const std::string& sweep, std::ostream& out) {
  session.prepare();
  Report rep;
  rep.command = "oracle --sweep " + sweep;
  rep.window = 0;
  ordered_json payload = ordered_json::array();
  bool all_ok = true;
  auto push = [&](const EnumerationReport& r) {
    ordered_json j;
    j["sweep"] = r.sweep;
    j["size"] = r.size;
    j["instances"] = r.instances;
    j["passed"] = r.passed;
    j["failures"] = r.failures;
    payload.push_back(j);
    all_ok = all_ok && r.all_passed();
  };
  if (sweep == "birkhoff") {
    for (int n = 1; n <= max_size; ++n) push(sweep_birkhoff(n));
  } else if (sweep == "ifp") {
    push(sweep_ifp_duality(std::min(max_size, 3)));
  } else if (sweep == "stability") {
    for (const auto& name : atom_names()) {
      EnumerationReport r = sweep_truncation_stability(atom(name));
      r.sweep = "stability(" + name + ")";
      push(r);
    }
  } else {
    fail(ErrorKind::InvalidArgument, "unknown sweep '" + sweep + "'");
  }
  rep.verdict = all_ok ? "ok" : "fails";
  rep.exit_code = all_ok ? 0 : 1;
  rep.payload_json = ordered_json{{"reports", payload}}.dump();
  return session.finish(rep, out);
}

int cmd_render(Session& session, const std::string& target, int depth, bool upset_lattice,
               std::ostream& out) {
  session.prepare();
  auto poset_it = session.workspace.posets.find(target);
  if (poset_it != session.workspace.posets.end()) {
    out << dot_of_poset(poset_it->second, target);
    return 0;
  }
  auto lattice_it = session.workspace.lattices.find(target);
  if (lattice_it != session.workspace.lattices.end()) {
    out << dot_of_lattice(lattice_it->second.lattice, target);
    return 0;
  }
  SpacePresentation s = session.compile(target);
  if (upset_lattice) {
    auto [poset, points] = truncate(s, depth);
    out << dot_of_lattice(FiniteDistLattice::upset_lattice(poset), target);
    return 0;
  }
  out << dot_of_truncation(s, depth, target);
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"computing with finite distributive lattices and countable Priestley spaces"};
  app.require_subcommand(1);

  Session session;
  app.add_option("--window", session.window, "decision window (must be >= the bound B)");
  app.add_flag("--no-cross-check", session.no_cross_check, "skip the doubled-window cross-check");
  app.add_flag("--json", session.json, "machine-readable report");

  std::string expr, property = "esakia", a_text, b_text, d_text, right_expr = "point";
  std::string sweep = "birkhoff", target;
  std::optional<int> budget;
  int max_size = 5, depth = 2;
  bool upsets = false;

  auto add_files = [&](CLI::App* cmd) {
    cmd->add_option("files", session.files, "definition files");
    cmd->fallthrough();  // global flags may follow the subcommand
  };

  CLI::App* check = app.add_subcommand("check", "decide a property of a space");
  check->add_option("expr", expr)->required();
  check->add_option("--property", property,
                    "priestley | esakia | p-space | co-heyting | bi-heyting");
  add_files(check);

  CLI::App* findc = app.add_subcommand("find-config", "search for a forbidden configuration");
  findc->add_option("expr", expr)->required();
  add_files(findc);

  CLI::App* dual = app.add_subcommand("dual", "clopen-upset catalog of a space");
  dual->add_option("expr", expr)->required();
  dual->add_option("--budget", budget, "constant budget of the catalog (default B)");
  add_files(dual);

  CLI::App* implies = app.add_subcommand("implies", "relative pseudo-complement of clopen upsets");
  implies->add_option("expr", expr)->required();
  implies->add_option("-a", a_text)->required();
  implies->add_option("-b", b_text)->required();
  add_files(implies);

  CLI::App* dsumc = app.add_subcommand("dsum-check", "the clopen-downset criterion for X (+)_D {pt}");
  dsumc->add_option("expr", expr)->required();
  dsumc->add_option("-d", d_text)->required();
  dsumc->add_option("--right", right_expr, "right summand (default point)");
  add_files(dsumc);

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive ground-truth sweeps");
  oracle->add_option("--max-size", max_size);
  oracle->add_option("--sweep", sweep, "birkhoff | ifp | stability");
  add_files(oracle);

  CLI::App* render = app.add_subcommand("render", "DOT output of diagrams and truncations");
  render->add_option("target", target)->required();
  render->add_option("--depth", depth, "truncation level");
  render->add_flag("--upset-lattice", upsets, "render the upset lattice of the truncation");
  add_files(render);

  try {
    // CLI11 consumes the vector back to front.
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(session, expr, property, out);
    if (findc->parsed()) return cmd_find_config(session, expr, out);
    if (dual->parsed()) return cmd_dual(session, expr, budget, out);
    if (implies->parsed()) return cmd_implies(session, expr, a_text, b_text, out);
    if (dsumc->parsed()) return cmd_dsum_check(session, expr, d_text, right_expr, out);
    if (oracle->parsed()) return cmd_oracle(session, max_size, sweep, out);
    if (render->parsed()) return cmd_render(session, target, depth, upsets, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::ValidationInconclusive ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no command\n";
  return 2;
}

}  // namespace pkit
