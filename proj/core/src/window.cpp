#include "pkit/window.hpp"

#include <algorithm>
#include <unordered_map>

namespace pkit {

namespace {

std::vector<NatOmega> window_values(int w) {
  std::vector<NatOmega> values;
  values.reserve(static_cast<std::size_t>(w) + 2);
  for (int c = 0; c <= w; ++c) values.push_back(NatOmega::finite(static_cast<std::uint32_t>(c)));
  values.push_back(NatOmega::omega());
  return values;
}

int effective_window(const SpacePresentation& s, const EngineOptions& opts) {
  const int b = s.default_window();
  if (opts.window) {
    if (*opts.window < b)
      fail(ErrorKind::InvalidArgument,
           "window " + std::to_string(*opts.window) + " below the presentation bound " +
               std::to_string(b));
    return *opts.window;
  }
  return b;
}

}  // namespace

std::size_t WindowModel::encode(NatOmega v) const {
  return v.is_omega() ? static_cast<std::size_t>(window_) + 1 : v.value();
}

WindowModel WindowModel::build(const SpacePresentation& s, int window) {
  WindowModel m;
  m.pres_ = &s;
  m.window_ = window;
  const auto values = window_values(window);
  const std::size_t stride = values.size();
  for (std::size_t pi = 0; pi < s.parts().size(); ++pi) {
    m.part_offset_.push_back(m.points_.size());
    const int arity = s.parts()[pi].arity;
    if (arity == 0) {
      m.points_.push_back(PointName{pi, {}});
    } else if (arity == 1) {
      for (auto v : values) m.points_.push_back(PointName{pi, {v, NatOmega::finite(0)}});
    } else {
      for (auto v0 : values)
        for (auto v1 : values) m.points_.push_back(PointName{pi, {v0, v1}});
    }
  }
  const std::size_t n = m.points_.size();

  // Clauses grouped by part pair keep the pairwise evaluation tight.
  const std::size_t pc = s.parts().size();
  std::vector<std::vector<const OrderClause*>> by_pair(pc * pc);
  for (const auto& cl : s.clauses()) by_pair[cl.part_u * pc + cl.part_v].push_back(&cl);

  m.up_.assign(n, DynBitset(n));
  m.down_.assign(n, DynBitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    const PointName& u = m.points_[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        m.up_[i].set(i);
        continue;
      }
      const PointName& v = m.points_[j];
      for (const OrderClause* cl : by_pair[u.part * pc + v.part]) {
        if (cl->guard.eval(u, v)) {
          m.up_[i].set(j);
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = m.up_[i].find_first(); j < n; j = m.up_[i].find_next(j + 1))
      m.down_[j].set(i);
  return m;
}

std::size_t WindowModel::index_of(const PointName& p) const {
  pres_->check_point(p);
  const int arity = pres_->parts()[p.part].arity;
  for (int c = 0; c < arity; ++c) {
    const NatOmega v = p.coord[static_cast<std::size_t>(c)];
    if (v.is_finite() && v.value() > static_cast<std::uint32_t>(window_)) return SIZE_MAX;
  }
  const std::size_t stride = static_cast<std::size_t>(window_) + 2;
  const std::size_t base = part_offset_[p.part];
  if (arity == 0) return base;
  if (arity == 1) return base + encode(p.coord[0]);
  return base + encode(p.coord[0]) * stride + encode(p.coord[1]);
}

DynBitset WindowModel::bits_of(const SetDescriptor& d) const {
  DynBitset out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (d.eval(points_[i])) out.set(i);
  return out;
}

DynBitset WindowModel::down_closure(const DynBitset& s) const {
  DynBitset out(points_.size());
  for (std::size_t i = s.find_first(); i < s.size(); i = s.find_next(i + 1)) out |= down_[i];
  return out;
}

DynBitset WindowModel::up_closure(const DynBitset& s) const {
  DynBitset out(points_.size());
  for (std::size_t i = s.find_first(); i < s.size(); i = s.find_next(i + 1)) out |= up_[i];
  return out;
}

bool WindowModel::is_upset_bits(const DynBitset& s) const {
  for (std::size_t i = s.find_first(); i < s.size(); i = s.find_next(i + 1))
    if (!up_[i].subset_of(s)) return false;
  return true;
}

bool WindowModel::is_downset_bits(const DynBitset& s) const {
  for (std::size_t i = s.find_first(); i < s.size(); i = s.find_next(i + 1))
    if (!down_[i].subset_of(s)) return false;
  return true;
}

bool WindowModel::is_open_bits(const DynBitset& s) const {
  const std::uint32_t w = static_cast<std::uint32_t>(window_);
  for (std::size_t i = s.find_first(); i < s.size(); i = s.find_next(i + 1)) {
    const PointName& p = points_[i];
    const int arity = pres_->parts()[p.part].arity;
    int omega_slots[2];
    int k = 0;
    for (int c = 0; c < arity; ++c)
      if (p.coord[static_cast<std::size_t>(c)].is_omega()) omega_slots[k++] = c;
    if (k == 0) continue;
    // Every pattern replacing a nonempty subset of omega coordinates by a
    // large finite value must stay inside the set.
    const NatOmega reps[2] = {NatOmega::finite(w - 1), NatOmega::finite(w)};
    for (int mask = 1; mask < (1 << k); ++mask) {
      int slots_in[2];
      int m = 0;
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) slots_in[m++] = omega_slots[b];
      const int combos = (m == 1) ? 2 : 4;
      for (int combo = 0; combo < combos; ++combo) {
        PointName q = p;
        for (int b = 0; b < m; ++b)
          q.coord[static_cast<std::size_t>(slots_in[b])] = reps[(combo >> b) & 1];
        if (!s.test(index_of(q))) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Synthesis

namespace {

CoordSet synthesize_coordset(const std::vector<bool>& mem, bool mem_omega, int w) {
  // mem[v] for v in 0..w. Find the suffix on which membership is constant;
  // it must start no later than w-1 so that at least two window values
  // confirm the tail.
  int t = w;
  while (t > 0 && mem[static_cast<std::size_t>(t - 1)] == mem[static_cast<std::size_t>(w)]) --t;
  if (t > w - 1)
    fail(ErrorKind::NotExpressible, "coordinate trace does not stabilize inside the window");
  std::vector<bool> low(mem.begin(), mem.begin() + t);
  return CoordSet::from_profile(std::move(low), mem[static_cast<std::size_t>(w)], mem_omega);
}

}  // namespace

CoordSet synthesize_coord_trace(const std::vector<bool>& membership, bool omega, int window) {
  return synthesize_coordset(membership, omega, window);
}

SetDescriptor synthesize_from_bits(const WindowModel& m, const DynBitset& bits) {
  const SpacePresentation& s = m.pres();
  const int w = m.window();
  SetDescriptor out = SetDescriptor::none(s);
  for (std::size_t pi = 0; pi < s.parts().size(); ++pi) {
    const int arity = s.parts()[pi].arity;
    if (arity == 0) {
      PointName p{pi, {}};
      if (bits.test(m.index_of(p))) out = SetDescriptor::unite(out, SetDescriptor::in_part(s, pi));
      continue;
    }
    if (arity == 1) {
      std::vector<bool> mem(static_cast<std::size_t>(w) + 1);
      for (int v = 0; v <= w; ++v)
        mem[static_cast<std::size_t>(v)] = bits.test(
            m.index_of(PointName{pi, {NatOmega::finite(static_cast<std::uint32_t>(v)), {}}}));
      bool mem_omega = bits.test(m.index_of(PointName{pi, {NatOmega::omega(), {}}}));
      CoordSet cs = synthesize_coordset(mem, mem_omega, w);
      SetDescriptor part = SetDescriptor::none(s);
      part.part(pi).cs = cs;
      out = SetDescriptor::unite(out, part);
      continue;
    }
    auto row_of = [&](NatOmega a) {
      std::vector<bool> mem(static_cast<std::size_t>(w) + 1);
      for (int v = 0; v <= w; ++v)
        mem[static_cast<std::size_t>(v)] = bits.test(
            m.index_of(PointName{pi, {a, NatOmega::finite(static_cast<std::uint32_t>(v))}}));
      bool mem_omega = bits.test(m.index_of(PointName{pi, {a, NatOmega::omega()}}));
      return synthesize_coordset(mem, mem_omega, w);
    };
    std::vector<CoordSet> rows(static_cast<std::size_t>(w) + 1);
    for (int a = 0; a <= w; ++a)
      rows[static_cast<std::size_t>(a)] = row_of(NatOmega::finite(static_cast<std::uint32_t>(a)));
    CoordSet omega_row = row_of(NatOmega::omega());
    int t = w;
    while (t > 0 && rows[static_cast<std::size_t>(t - 1)] == rows[static_cast<std::size_t>(w)]) --t;
    if (t > w - 1)
      fail(ErrorKind::NotExpressible, "row trace does not stabilize inside the window");
    std::vector<CoordSet> low(rows.begin(), rows.begin() + t);
    PairSet ps = PairSet::from_rows(std::move(low), rows[static_cast<std::size_t>(t)], omega_row);
    SetDescriptor part = SetDescriptor::none(s);
    part.part(pi).ps = ps;
    out = SetDescriptor::unite(out, part);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

constexpr std::size_t kMaxFailures = 8;

void check_axioms(const SpacePresentation& s, const WindowModel& m,
                  std::vector<ValidationFailure>& failures) {
  const std::size_t n = m.size();
  const int w = m.window();
  auto str = [&](std::size_t i) { return s.point_str(m.point(i)); };
  auto report = [&](const char* axiom, std::string detail) {
    if (failures.size() < kMaxFailures) failures.push_back({axiom, std::move(detail)});
  };

  for (std::size_t i = 0; i < n && failures.size() < kMaxFailures; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.leq(i, j) && m.leq(j, i)) {
        report("antisymmetry", str(i) + " and " + str(j) + " are mutually related");
        break;
      }

  for (std::size_t i = 0; i < n && failures.size() < kMaxFailures; ++i) {
    const DynBitset& ui = m.up(i);
    for (std::size_t j = ui.find_first(); j < n; j = ui.find_next(j + 1)) {
      if (m.up(j).subset_of(ui)) continue;
      DynBitset missing = m.up(j);
      missing.subtract(ui);
      std::size_t k = missing.find_first();
      report("transitivity",
             str(i) + " <= " + str(j) + " <= " + str(k) + " but not " + str(i) + " <= " + str(k));
      break;
    }
  }

  // Order-closedness: if pairs related cofinally converge to a pair, the
  // limit pair must be related. For each related window pair and each
  // subset of its finite coordinates we push that subset toward omega:
  // place the subset at the top band of the window with the pair's gaps
  // preserved (staying above every fixed coordinate and every rule
  // constant, so the profile is that of arbitrarily large values), demand
  // the relation at three consecutive shifts, then check the omega limit.
  struct Slot {
    int which;  // 0 = left point, 1 = right point
    int coord;
    std::uint32_t value;
  };
  const std::uint32_t cmax = s.rule_constant();
  for (std::size_t i = 0; i < n && failures.size() < kMaxFailures; ++i) {
    for (std::size_t j = m.up(i).find_first(); j < n; j = m.up(i).find_next(j + 1)) {
      if (i == j) continue;
      const PointName pu = m.point(i), pv = m.point(j);
      Slot slots[4];
      int k = 0;
      auto collect = [&](const PointName& p, int which) {
        const int arity = s.parts()[p.part].arity;
        for (int c = 0; c < arity; ++c) {
          const NatOmega v = p.coord[static_cast<std::size_t>(c)];
          if (v.is_finite()) slots[k++] = Slot{which, c, v.value()};
        }
      };
      collect(pu, 0);
      collect(pv, 1);
      if (k == 0) continue;
      for (int mask = 1; mask < (1 << k); ++mask) {
        std::uint32_t gap_base = 0;   // largest value inside the subset
        std::uint32_t fixed_max = cmax;  // values the subset must clear
        for (int b = 0; b < k; ++b) {
          if (mask & (1 << b))
            gap_base = std::max(gap_base, slots[b].value);
          else
            fixed_max = std::max(fixed_max, slots[b].value);
        }
        const std::uint32_t top = static_cast<std::uint32_t>(w) - 2;
        std::uint32_t max_delta = 0;
        for (int b = 0; b < k; ++b)
          if (mask & (1 << b)) max_delta = std::max(max_delta, gap_base - slots[b].value);
        if (top < max_delta || top - max_delta <= fixed_max) continue;
        bool stable = true;
        for (std::uint32_t shift = 0; shift <= 2 && stable; ++shift) {
          PointName qu = pu, qv = pv;
          for (int b = 0; b < k; ++b) {
            if (!(mask & (1 << b))) continue;
            PointName& q = slots[b].which == 0 ? qu : qv;
            q.coord[static_cast<std::size_t>(slots[b].coord)] =
                NatOmega::finite(top + shift - (gap_base - slots[b].value));
          }
          if (!s.leq(qu, qv)) stable = false;
        }
        if (!stable) continue;
        PointName qu = pu, qv = pv;
        for (int b = 0; b < k; ++b) {
          if (!(mask & (1 << b))) continue;
          PointName& q = slots[b].which == 0 ? qu : qv;
          q.coord[static_cast<std::size_t>(slots[b].coord)] = NatOmega::omega();
        }
        if (!s.leq(qu, qv)) {
          report("order-closedness",
                 "pairs near (" + s.point_str(pu) + " <= " + s.point_str(pv) +
                     ") are related cofinally but the limit pair (" + s.point_str(qu) +
                     " <= " + s.point_str(qv) + ") is not");
          break;
        }
      }
    }
  }

  // Priestley separation: for u !<= v we try the upward closure of a tail
  // neighborhood of u as the separating clopen upset. Pairs too close to
  // the window edge are represented by interior copies and skipped.
  std::vector<char> have_u(n, 0);
  std::vector<DynBitset> sep(n);
  std::vector<char> sep_clopen(n, 0);
  // Separating candidate for p: the upset of p, thickened by finite tails
  // at every limit point it contains, then closed upward again. This is
  // the window picture of "a clopen upset squeezing down onto the closed
  // upset of p".
  auto separator = [&](std::size_t i) -> std::pair<const DynBitset&, bool> {
    if (!have_u[i]) {
      const NatOmega reps[3] = {NatOmega::finite(static_cast<std::uint32_t>(w - 1)),
                                NatOmega::finite(static_cast<std::uint32_t>(w)),
                                NatOmega::omega()};
      DynBitset seed = m.up(i);
      for (std::size_t r = seed.find_first(); r < n; r = seed.find_next(r + 1)) {
        const PointName& p = m.point(r);
        const int arity = s.parts()[p.part].arity;
        int omega_slots[2];
        int k = 0;
        for (int c = 0; c < arity; ++c)
          if (p.coord[static_cast<std::size_t>(c)].is_omega()) omega_slots[k++] = c;
        if (k == 0) continue;
        const int combos = (k == 1) ? 3 : 9;
        DynBitset extra(n);
        for (int combo = 0; combo < combos; ++combo) {
          PointName q = p;
          q.coord[static_cast<std::size_t>(omega_slots[0])] = reps[combo % 3];
          if (k == 2) q.coord[static_cast<std::size_t>(omega_slots[1])] = reps[combo / 3];
          extra.set(m.index_of(q));
        }
        seed |= extra;
      }
      sep[i] = m.up_closure(seed);
      sep_clopen[i] = m.is_clopen_bits(sep[i]) ? 1 : 0;
      have_u[i] = 1;
    }
    return {sep[i], sep_clopen[i] != 0};
  };
  auto near_edge = [&](std::size_t i) {
    const PointName& p = m.point(i);
    const int arity = s.parts()[p.part].arity;
    for (int c = 0; c < arity; ++c) {
      const NatOmega v = p.coord[static_cast<std::size_t>(c)];
      if (v.is_finite() && v.value() + 1 >= static_cast<std::uint32_t>(w)) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < n && failures.size() < kMaxFailures; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || m.leq(i, j)) continue;
      auto [u1, clopen1] = separator(i);
      if (clopen1 && !u1.test(j)) continue;
      DynBitset up_only = m.up(i);
      if (m.is_clopen_bits(up_only) && !up_only.test(j)) continue;
      if (near_edge(i) || near_edge(j)) continue;
      report("priestley-separation",
             "no clopen upset separates " + str(i) + " from " + str(j));
      break;
    }
  }
}

ValidationReport run_validation(const SpacePresentation& s, int w) {
  ValidationReport rep;
  rep.window = w;
  WindowModel m = WindowModel::build(s, w);
  rep.points = m.size();
  check_axioms(s, m, rep.failures);
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace

ValidationReport validate_presentation(const SpacePresentation& s, const EngineOptions& opts) {
  const int w = effective_window(s, opts);
  ValidationReport rep = run_validation(s, w);
  if (opts.cross_check) {
    ValidationReport rep2 = run_validation(s, 2 * w + 4);
    rep.cross_checked = true;
    if (rep.ok != rep2.ok)
      fail(ErrorKind::ValidationInconclusive,
           "validation at window " + std::to_string(w) + " disagrees with window " +
               std::to_string(2 * w + 4) + " on " + s.provenance());
    // Deeper windows can only refine failure details; the verdict agrees.
  }
  return rep;
}

void require_valid(const SpacePresentation& s, const EngineOptions& opts) {
  ValidationReport rep = validate_presentation(s, opts);
  if (!rep.ok)
    fail(ErrorKind::AxiomFailure, rep.failures[0].axiom + " fails on " + s.provenance() + ": " +
                                      rep.failures[0].detail);
}

// ---------------------------------------------------------------------------
// Order-dependent set decisions

namespace {

int decision_window(const SpacePresentation& s, const SetDescriptor& d, const EngineOptions& opts) {
  const int base = effective_window(s, opts);
  return std::max(base, static_cast<int>(d.max_constant()) + 3);
}

bool upset_decision(const SpacePresentation& s, const SetDescriptor& d, int w, bool up) {
  WindowModel m = WindowModel::build(s, w);
  DynBitset bits = m.bits_of(d);
  return up ? m.is_upset_bits(bits) : m.is_downset_bits(bits);
}

}  // namespace

bool is_upset(const SpacePresentation& s, const SetDescriptor& d, const EngineOptions& opts) {
  const int w = decision_window(s, d, opts);
  bool v = upset_decision(s, d, w, true);
  if (opts.cross_check && upset_decision(s, d, 2 * w + 4, true) != v)
    fail(ErrorKind::ValidationInconclusive, "is_upset unstable across windows");
  return v;
}

bool is_downset(const SpacePresentation& s, const SetDescriptor& d, const EngineOptions& opts) {
  const int w = decision_window(s, d, opts);
  bool v = upset_decision(s, d, w, false);
  if (opts.cross_check && upset_decision(s, d, 2 * w + 4, false) != v)
    fail(ErrorKind::ValidationInconclusive, "is_downset unstable across windows");
  return v;
}

bool is_clopen(const SpacePresentation& s, const SetDescriptor& d) {
  if (d.num_parts() != s.parts().size())
    fail(ErrorKind::InvalidArgument, "descriptor over a different space");
  return d.is_clopen();
}

namespace {

SetDescriptor closure_descriptor(const SpacePresentation& s, const SetDescriptor& d,
                                 const EngineOptions& opts, Direction dir) {
  const int w = decision_window(s, d, opts);
  WindowModel m = WindowModel::build(s, w);
  DynBitset bits = m.bits_of(d);
  DynBitset closed = (dir == Direction::down) ? m.down_closure(bits) : m.up_closure(bits);
  SetDescriptor out = synthesize_from_bits(m, closed);
  if (opts.cross_check) {
    const int w2 = 2 * w + 4;
    WindowModel m2 = WindowModel::build(s, w2);
    DynBitset bits2 = m2.bits_of(d);
    DynBitset closed2 = (dir == Direction::down) ? m2.down_closure(bits2) : m2.up_closure(bits2);
    if (m2.bits_of(out) != closed2)
      fail(ErrorKind::ValidationInconclusive,
           "closure synthesis disagrees with the doubled window");
  }
  return out;
}

}  // namespace

SetDescriptor downset_of(const SpacePresentation& s, const SetDescriptor& d,
                         const EngineOptions& opts) {
  return closure_descriptor(s, d, opts, Direction::down);
}

SetDescriptor upset_of(const SpacePresentation& s, const SetDescriptor& d,
                       const EngineOptions& opts) {
  return closure_descriptor(s, d, opts, Direction::up);
}

// ---------------------------------------------------------------------------
// Catalogs

namespace {

std::vector<CoordSet> coordinate_options(int budget, bool include_omega_only) {
  // Anything whose membership atoms use constants <= budget: tails from
  // budget+1 qualify, being complements of {0..budget} patterns.
  std::vector<CoordSet> opts;
  opts.push_back(CoordSet::all());
  for (int c = 0; c <= budget; ++c) {
    opts.push_back(CoordSet::single(static_cast<std::uint32_t>(c)));
    opts.push_back(CoordSet::le(static_cast<std::uint32_t>(c)));
    opts.push_back(CoordSet::geq(static_cast<std::uint32_t>(c) + 1));
  }
  if (include_omega_only) opts.push_back(CoordSet::omega_only());
  return opts;
}

std::vector<SetDescriptor> cylinder_seeds(const SpacePresentation& s, int budget,
                                          bool include_omega_only) {
  std::vector<SetDescriptor> seeds;
  const auto opts = coordinate_options(budget, include_omega_only);
  for (std::size_t pi = 0; pi < s.parts().size(); ++pi) {
    const int arity = s.parts()[pi].arity;
    if (arity == 0) {
      seeds.push_back(SetDescriptor::in_part(s, pi));
    } else if (arity == 1) {
      for (const auto& cs : opts) {
        SetDescriptor d = SetDescriptor::none(s);
        d.part(pi).cs = cs;
        if (!d.empty()) seeds.push_back(std::move(d));
      }
    } else {
      for (const auto& c0 : opts)
        for (const auto& c1 : opts) {
          SetDescriptor d = SetDescriptor::none(s);
          d.part(pi).ps = PairSet::product(c0, c1);
          if (!d.empty()) seeds.push_back(std::move(d));
        }
    }
  }
  return seeds;
}

/// Closes a seed family under union and intersection. The window traces
/// drive everything: unions and intersections of descriptors are exactly
/// bitwise or/and of traces, so the closure runs on bitsets and descriptors
/// are only assembled for accepted members. Deterministic; throws SizeLimit
/// past the cap.
std::vector<SetDescriptor> lattice_closure(const WindowModel& m, std::vector<SetDescriptor> seeds,
                                           std::size_t limit) {
  std::vector<SetDescriptor> members;
  std::vector<DynBitset> traces;
  std::unordered_map<DynBitset, std::size_t, DynBitsetHash> seen;
  auto add = [&](DynBitset tr, auto make) {
    if (seen.contains(tr)) return;
    seen.emplace(tr, members.size());
    members.push_back(make());
    traces.push_back(std::move(tr));
    if (members.size() > limit) fail(ErrorKind::SizeLimit, "catalog exceeds its cap");
  };
  for (auto& s : seeds) {
    DynBitset tr = m.bits_of(s);
    add(std::move(tr), [&] { return std::move(s); });
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      add(traces[i] | traces[j],
          [&] { return SetDescriptor::unite(members[i], members[j]); });
      add(traces[i] & traces[j],
          [&] { return SetDescriptor::intersect(members[i], members[j]); });
    }
  }
  std::vector<std::size_t> order(members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (traces[a].count() != traces[b].count()) return traces[a].count() < traces[b].count();
    return traces[a] < traces[b];
  });
  std::vector<SetDescriptor> out;
  out.reserve(members.size());
  for (auto i : order) out.push_back(std::move(members[i]));
  return out;
}

}  // namespace

std::vector<SetDescriptor> clopen_upsets_catalog(const SpacePresentation& s, int budget,
                                                 const EngineOptions& opts) {
  const int w = std::max(effective_window(s, opts), budget + 3);
  WindowModel m = WindowModel::build(s, w);
  std::vector<SetDescriptor> seeds;
  seeds.push_back(SetDescriptor::none(s));
  seeds.push_back(SetDescriptor::total(s));
  for (const auto& cyl : cylinder_seeds(s, budget, false)) {
    DynBitset hull = m.up_closure(m.bits_of(cyl));
    if (!m.is_clopen_bits(hull)) continue;
    try {
      SetDescriptor d = synthesize_from_bits(m, hull);
      if (d.is_clopen()) seeds.push_back(std::move(d));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotExpressible) throw;
    }
  }
  return lattice_closure(m, std::move(seeds), opts.catalog_limit);
}

std::vector<SetDescriptor> closed_downsets_catalog(const SpacePresentation& s, int budget,
                                                   const EngineOptions& opts) {
  const int w = std::max(effective_window(s, opts), budget + 3);
  WindowModel m = WindowModel::build(s, w);
  std::vector<SetDescriptor> seeds;
  seeds.push_back(SetDescriptor::none(s));
  for (const auto& cyl : cylinder_seeds(s, budget, true)) {
    if (!cyl.is_closed()) continue;
    DynBitset hull = m.down_closure(m.bits_of(cyl));
    try {
      SetDescriptor d = synthesize_from_bits(m, hull);
      if (d.is_closed()) seeds.push_back(std::move(d));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotExpressible) throw;
    }
  }
  return lattice_closure(m, std::move(seeds), opts.catalog_limit);
}

std::vector<SetDescriptor> profile_cylinders(const SpacePresentation& s, int level) {
  std::vector<SetDescriptor> out;
  std::vector<CoordSet> options;
  for (int c = 0; c <= level; ++c) options.push_back(CoordSet::single(static_cast<std::uint32_t>(c)));
  options.push_back(CoordSet::geq(static_cast<std::uint32_t>(level) + 1));
  for (std::size_t pi = 0; pi < s.parts().size(); ++pi) {
    const int arity = s.parts()[pi].arity;
    if (arity == 0) {
      out.push_back(SetDescriptor::in_part(s, pi));
    } else if (arity == 1) {
      for (const auto& cs : options) {
        SetDescriptor d = SetDescriptor::none(s);
        d.part(pi).cs = cs;
        out.push_back(std::move(d));
      }
    } else {
      for (const auto& c0 : options)
        for (const auto& c1 : options) {
          SetDescriptor d = SetDescriptor::none(s);
          d.part(pi).ps = PairSet::product(c0, c1);
          out.push_back(std::move(d));
        }
    }
  }
  return out;
}

}  // namespace pkit
