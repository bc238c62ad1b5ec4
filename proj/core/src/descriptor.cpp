#include "pkit/descriptor.hpp"

#include <algorithm>

namespace pkit {

// ---------------------------------------------------------------------------
// CoordSet

CoordSet CoordSet::single(std::uint32_t c) {
  std::vector<bool> low(c + 1, false);
  low[c] = true;
  return from_profile(std::move(low), false, false);
}

CoordSet CoordSet::geq(std::uint32_t c) {
  return from_profile(std::vector<bool>(c, false), true, true);
}

CoordSet CoordSet::le(std::uint32_t c) {
  return from_profile(std::vector<bool>(c + 1, true), false, false);
}

CoordSet CoordSet::omega_only() { return from_profile({}, false, true); }

CoordSet CoordSet::from_profile(std::vector<bool> low, bool tail, bool omega) {
  CoordSet s;
  s.low_ = std::move(low);
  s.threshold_ = static_cast<std::uint32_t>(s.low_.size());
  s.tail_ = tail;
  s.omega_ = omega;
  s.normalize();
  return s;
}

void CoordSet::normalize() {
  while (!low_.empty() && low_.back() == tail_) low_.pop_back();
  threshold_ = static_cast<std::uint32_t>(low_.size());
}

CoordSet CoordSet::complement() const {
  std::vector<bool> low(low_.size());
  for (std::size_t i = 0; i < low_.size(); ++i) low[i] = !low_[i];
  return from_profile(std::move(low), !tail_, !omega_);
}

CoordSet CoordSet::unite(const CoordSet& a, const CoordSet& b) {
  std::uint32_t t = std::max(a.threshold_, b.threshold_);
  std::vector<bool> low(t);
  for (std::uint32_t i = 0; i < t; ++i)
    low[i] = a.contains(NatOmega::finite(i)) || b.contains(NatOmega::finite(i));
  return from_profile(std::move(low), a.tail_ || b.tail_, a.omega_ || b.omega_);
}

CoordSet CoordSet::intersect(const CoordSet& a, const CoordSet& b) {
  std::uint32_t t = std::max(a.threshold_, b.threshold_);
  std::vector<bool> low(t);
  for (std::uint32_t i = 0; i < t; ++i)
    low[i] = a.contains(NatOmega::finite(i)) && b.contains(NatOmega::finite(i));
  return from_profile(std::move(low), a.tail_ && b.tail_, a.omega_ && b.omega_);
}

bool CoordSet::empty() const {
  if (tail_ || omega_) return false;
  return std::none_of(low_.begin(), low_.end(), [](bool b) { return b; });
}

bool CoordSet::is_all() const {
  if (!tail_ || !omega_) return false;
  return std::all_of(low_.begin(), low_.end(), [](bool b) { return b; });
}

Formula CoordSet::to_formula(CoordRef ref) const {
  std::vector<Formula> alts;
  Term coord = Term::make_coord(ref.var, ref.index);
  for (std::uint32_t i = 0; i < threshold_; ++i)
    if (low_[i])
      alts.push_back(Formula::cmp(coord, CmpOp::eq, Term::make_const(NatOmega::finite(i))));
  if (tail_) {
    std::vector<Formula> both;
    both.push_back(Formula::cmp(coord, CmpOp::ge, Term::make_const(NatOmega::finite(threshold_))));
    both.push_back(
        Formula::neg(Formula::cmp(coord, CmpOp::eq, Term::make_const(NatOmega::omega()))));
    alts.push_back(Formula::conj(std::move(both)));
  }
  if (omega_)
    alts.push_back(Formula::cmp(coord, CmpOp::eq, Term::make_const(NatOmega::omega())));
  if (alts.empty()) {
    // empty set: an unsatisfiable comparison
    return Formula::cmp(Term::make_const(NatOmega::finite(0)), CmpOp::eq,
                        Term::make_const(NatOmega::finite(1)));
  }
  return Formula::disj(std::move(alts));
}

std::string CoordSet::str() const {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t i = 0; i < threshold_; ++i) {
    if (!low_[i]) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  if (tail_) {
    if (!first) out += ",";
    out += ">=" + std::to_string(threshold_);
    first = false;
  }
  if (omega_) {
    if (!first) out += ",";
    out += "omega";
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// PairSet

PairSet PairSet::product(const CoordSet& first, const CoordSet& second) {
  std::vector<CoordSet> rows(first.threshold());
  for (std::uint32_t i = 0; i < first.threshold(); ++i)
    rows[i] = first.low(i) ? second : CoordSet::none();
  return from_rows(std::move(rows), first.tail() ? second : CoordSet::none(),
                   first.omega() ? second : CoordSet::none());
}

PairSet PairSet::from_rows(std::vector<CoordSet> rows, CoordSet tail_row, CoordSet omega_row) {
  PairSet s;
  s.rows_ = std::move(rows);
  s.threshold_ = static_cast<std::uint32_t>(s.rows_.size());
  s.tail_row_ = std::move(tail_row);
  s.omega_row_ = std::move(omega_row);
  s.normalize();
  return s;
}

void PairSet::normalize() {
  while (!rows_.empty() && rows_.back() == tail_row_) rows_.pop_back();
  threshold_ = static_cast<std::uint32_t>(rows_.size());
}

PairSet PairSet::complement() const {
  std::vector<CoordSet> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.push_back(r.complement());
  return from_rows(std::move(rows), tail_row_.complement(), omega_row_.complement());
}

PairSet PairSet::unite(const PairSet& a, const PairSet& b) {
  std::uint32_t t = std::max(a.threshold_, b.threshold_);
  std::vector<CoordSet> rows(t);
  for (std::uint32_t i = 0; i < t; ++i)
    rows[i] = CoordSet::unite(a.row(NatOmega::finite(i)), b.row(NatOmega::finite(i)));
  return from_rows(std::move(rows), CoordSet::unite(a.tail_row_, b.tail_row_),
                   CoordSet::unite(a.omega_row_, b.omega_row_));
}

PairSet PairSet::intersect(const PairSet& a, const PairSet& b) {
  std::uint32_t t = std::max(a.threshold_, b.threshold_);
  std::vector<CoordSet> rows(t);
  for (std::uint32_t i = 0; i < t; ++i)
    rows[i] = CoordSet::intersect(a.row(NatOmega::finite(i)), b.row(NatOmega::finite(i)));
  return from_rows(std::move(rows), CoordSet::intersect(a.tail_row_, b.tail_row_),
                   CoordSet::intersect(a.omega_row_, b.omega_row_));
}

bool PairSet::empty() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return tail_row_.empty() && omega_row_.empty();
}

std::uint32_t PairSet::max_constant() const {
  std::uint32_t c = threshold_;
  for (const auto& r : rows_) c = std::max(c, r.max_constant());
  c = std::max(c, tail_row_.max_constant());
  c = std::max(c, omega_row_.max_constant());
  return c;
}

bool PairSet::is_open() const {
  // Openness at points with a finite first coordinate: each row must be
  // open in the second coordinate.
  for (const auto& r : rows_)
    if (!r.is_open()) return false;
  if (!tail_row_.is_open()) return false;
  // Openness at (omega, b): a tail of rows must contain b. The omega row's
  // finite part must sit inside the tail row's finite part.
  std::uint32_t t = std::max(omega_row_.threshold(), tail_row_.threshold());
  for (std::uint32_t b = 0; b < t; ++b)
    if (omega_row_.contains(NatOmega::finite(b)) && !tail_row_.contains(NatOmega::finite(b)))
      return false;
  if (omega_row_.tail() && !tail_row_.tail()) return false;
  // Openness at (omega, omega): all three finite/omega replacement patterns.
  if (omega_row_.omega() &&
      !(tail_row_.omega() && omega_row_.tail() && tail_row_.tail()))
    return false;
  return true;
}

Formula PairSet::to_formula(int var) const {
  std::vector<Formula> alts;
  Term first = Term::make_coord(var, 0);
  CoordRef second{var, 1};
  for (std::uint32_t a = 0; a < threshold_; ++a) {
    if (rows_[a].empty()) continue;
    std::vector<Formula> both;
    both.push_back(Formula::cmp(first, CmpOp::eq, Term::make_const(NatOmega::finite(a))));
    both.push_back(rows_[a].to_formula(second));
    alts.push_back(Formula::conj(std::move(both)));
  }
  if (!tail_row_.empty()) {
    std::vector<Formula> both;
    both.push_back(Formula::cmp(first, CmpOp::ge, Term::make_const(NatOmega::finite(threshold_))));
    both.push_back(
        Formula::neg(Formula::cmp(first, CmpOp::eq, Term::make_const(NatOmega::omega()))));
    both.push_back(tail_row_.to_formula(second));
    alts.push_back(Formula::conj(std::move(both)));
  }
  if (!omega_row_.empty()) {
    std::vector<Formula> both;
    both.push_back(Formula::cmp(first, CmpOp::eq, Term::make_const(NatOmega::omega())));
    both.push_back(omega_row_.to_formula(second));
    alts.push_back(Formula::conj(std::move(both)));
  }
  if (alts.empty())
    return Formula::cmp(Term::make_const(NatOmega::finite(0)), CmpOp::eq,
                        Term::make_const(NatOmega::finite(1)));
  return Formula::disj(std::move(alts));
}

std::string PairSet::str() const {
  std::string out = "[";
  for (std::uint32_t a = 0; a < threshold_; ++a) out += std::to_string(a) + ":" + rows_[a].str() + " ";
  out += ">=" + std::to_string(threshold_) + ":" + tail_row_.str();
  out += " omega:" + omega_row_.str() + "]";
  return out;
}

// ---------------------------------------------------------------------------
// PartSet

PartSet PartSet::none(int arity) {
  PartSet p;
  p.arity = arity;
  return p;
}

PartSet PartSet::full(int arity) {
  PartSet p;
  p.arity = arity;
  p.bit = true;
  p.cs = CoordSet::all();
  p.ps = PairSet::all();
  return p;
}

bool PartSet::contains(const PointName& pt) const {
  switch (arity) {
    case 0: return bit;
    case 1: return cs.contains(pt.coord[0]);
    default: return ps.contains(pt.coord[0], pt.coord[1]);
  }
}

PartSet PartSet::complement() const {
  PartSet p;
  p.arity = arity;
  p.bit = !bit;
  p.cs = cs.complement();
  p.ps = ps.complement();
  return p;
}

PartSet PartSet::unite(const PartSet& a, const PartSet& b) {
  PartSet p;
  p.arity = a.arity;
  p.bit = a.bit || b.bit;
  p.cs = CoordSet::unite(a.cs, b.cs);
  p.ps = PairSet::unite(a.ps, b.ps);
  return p;
}

PartSet PartSet::intersect(const PartSet& a, const PartSet& b) {
  PartSet p;
  p.arity = a.arity;
  p.bit = a.bit && b.bit;
  p.cs = CoordSet::intersect(a.cs, b.cs);
  p.ps = PairSet::intersect(a.ps, b.ps);
  return p;
}

bool PartSet::empty() const {
  switch (arity) {
    case 0: return !bit;
    case 1: return cs.empty();
    default: return ps.empty();
  }
}

bool PartSet::is_open() const {
  switch (arity) {
    case 0: return true;
    case 1: return cs.is_open();
    default: return ps.is_open();
  }
}

bool PartSet::is_closed() const {
  switch (arity) {
    case 0: return true;
    case 1: return cs.is_closed();
    default: return ps.is_closed();
  }
}

std::uint32_t PartSet::max_constant() const {
  switch (arity) {
    case 0: return 0;
    case 1: return cs.max_constant();
    default: return ps.max_constant();
  }
}

bool operator==(const PartSet& a, const PartSet& b) {
  if (a.arity != b.arity) return false;
  switch (a.arity) {
    case 0: return a.bit == b.bit;
    case 1: return a.cs == b.cs;
    default: return a.ps == b.ps;
  }
}

// ---------------------------------------------------------------------------
// SetDescriptor

SetDescriptor SetDescriptor::none(const SpacePresentation& s) {
  std::vector<PartSet> parts;
  parts.reserve(s.parts().size());
  for (const auto& p : s.parts()) parts.push_back(PartSet::none(p.arity));
  return SetDescriptor(std::move(parts));
}

SetDescriptor SetDescriptor::total(const SpacePresentation& s) {
  std::vector<PartSet> parts;
  parts.reserve(s.parts().size());
  for (const auto& p : s.parts()) parts.push_back(PartSet::full(p.arity));
  return SetDescriptor(std::move(parts));
}

SetDescriptor SetDescriptor::in_part(const SpacePresentation& s, std::size_t part) {
  if (part >= s.parts().size()) fail(ErrorKind::UnknownPart, "in_part index out of range");
  SetDescriptor d = none(s);
  d.parts_[part] = PartSet::full(s.parts()[part].arity);
  return d;
}

SetDescriptor SetDescriptor::in_part(const SpacePresentation& s, const std::string& part) {
  return in_part(s, s.part_index(part));
}

SetDescriptor SetDescriptor::coord_eq(const SpacePresentation& s, int i, std::uint32_t c) {
  SetDescriptor d = none(s);
  for (std::size_t pi = 0; pi < s.parts().size(); ++pi) {
    const int arity = s.parts()[pi].arity;
    if (i >= arity) continue;
    if (arity == 1)
      d.parts_[pi].cs = CoordSet::single(c);
    else if (i == 0)
      d.parts_[pi].ps = PairSet::product(CoordSet::single(c), CoordSet::all());
    else
      d.parts_[pi].ps = PairSet::product(CoordSet::all(), CoordSet::single(c));
  }
  return d;
}

SetDescriptor SetDescriptor::coord_geq(const SpacePresentation& s, int i, std::uint32_t c) {
  SetDescriptor d = none(s);
  for (std::size_t pi = 0; pi < s.parts().size(); ++pi) {
    const int arity = s.parts()[pi].arity;
    if (i >= arity) continue;
    if (arity == 1)
      d.parts_[pi].cs = CoordSet::geq(c);
    else if (i == 0)
      d.parts_[pi].ps = PairSet::product(CoordSet::geq(c), CoordSet::all());
    else
      d.parts_[pi].ps = PairSet::product(CoordSet::all(), CoordSet::geq(c));
  }
  return d;
}

SetDescriptor SetDescriptor::coord_is_omega(const SpacePresentation& s, int i) {
  SetDescriptor d = none(s);
  for (std::size_t pi = 0; pi < s.parts().size(); ++pi) {
    const int arity = s.parts()[pi].arity;
    if (i >= arity) continue;
    if (arity == 1)
      d.parts_[pi].cs = CoordSet::omega_only();
    else if (i == 0)
      d.parts_[pi].ps = PairSet::product(CoordSet::omega_only(), CoordSet::all());
    else
      d.parts_[pi].ps = PairSet::product(CoordSet::all(), CoordSet::omega_only());
  }
  return d;
}

SetDescriptor SetDescriptor::point(const SpacePresentation& s, const PointName& p) {
  s.check_point(p);
  SetDescriptor d = none(s);
  const int arity = s.parts()[p.part].arity;
  PartSet& ps = d.parts_[p.part];
  auto coord_single = [](NatOmega v) {
    return v.is_omega() ? CoordSet::omega_only() : CoordSet::single(v.value());
  };
  if (arity == 0)
    ps.bit = true;
  else if (arity == 1)
    ps.cs = coord_single(p.coord[0]);
  else
    ps.ps = PairSet::product(coord_single(p.coord[0]), coord_single(p.coord[1]));
  return d;
}

void SetDescriptor::check_shapes(const SetDescriptor& a, const SetDescriptor& b) {
  if (a.parts_.size() != b.parts_.size())
    fail(ErrorKind::InvalidArgument, "descriptors over different spaces");
  for (std::size_t i = 0; i < a.parts_.size(); ++i)
    if (a.parts_[i].arity != b.parts_[i].arity)
      fail(ErrorKind::ArityMismatch, "descriptors over different spaces");
}

SetDescriptor SetDescriptor::complement() const {
  std::vector<PartSet> parts;
  parts.reserve(parts_.size());
  for (const auto& p : parts_) parts.push_back(p.complement());
  return SetDescriptor(std::move(parts));
}

SetDescriptor SetDescriptor::unite(const SetDescriptor& a, const SetDescriptor& b) {
  check_shapes(a, b);
  std::vector<PartSet> parts;
  parts.reserve(a.parts_.size());
  for (std::size_t i = 0; i < a.parts_.size(); ++i)
    parts.push_back(PartSet::unite(a.parts_[i], b.parts_[i]));
  return SetDescriptor(std::move(parts));
}

SetDescriptor SetDescriptor::intersect(const SetDescriptor& a, const SetDescriptor& b) {
  check_shapes(a, b);
  std::vector<PartSet> parts;
  parts.reserve(a.parts_.size());
  for (std::size_t i = 0; i < a.parts_.size(); ++i)
    parts.push_back(PartSet::intersect(a.parts_[i], b.parts_[i]));
  return SetDescriptor(std::move(parts));
}

SetDescriptor SetDescriptor::minus(const SetDescriptor& a, const SetDescriptor& b) {
  return intersect(a, b.complement());
}

bool SetDescriptor::eval(const PointName& p) const {
  if (p.part >= parts_.size()) fail(ErrorKind::UnknownPart, "point part out of range");
  return parts_[p.part].contains(p);
}

bool SetDescriptor::empty() const {
  for (const auto& p : parts_)
    if (!p.empty()) return false;
  return true;
}

bool SetDescriptor::is_total() const { return complement().empty(); }

bool SetDescriptor::is_open() const {
  for (const auto& p : parts_)
    if (!p.is_open()) return false;
  return true;
}

bool SetDescriptor::is_closed() const {
  for (const auto& p : parts_)
    if (!p.is_closed()) return false;
  return true;
}

std::uint32_t SetDescriptor::max_constant() const {
  std::uint32_t c = 0;
  for (const auto& p : parts_) c = std::max(c, p.max_constant());
  return c;
}

Formula SetDescriptor::part_formula(std::size_t part, int var) const {
  const PartSet& p = parts_.at(part);
  switch (p.arity) {
    case 0:
      if (p.bit) return Formula::truth();
      return Formula::cmp(Term::make_const(NatOmega::finite(0)), CmpOp::eq,
                          Term::make_const(NatOmega::finite(1)));
    case 1: return p.cs.to_formula(CoordRef{var, 0});
    default: return p.ps.to_formula(var);
  }
}

std::string SetDescriptor::str(const SpacePresentation& s) const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].empty()) continue;
    if (!out.empty()) out += " | ";
    out += s.parts()[i].name;
    switch (parts_[i].arity) {
      case 0: break;
      case 1: out += parts_[i].cs.str(); break;
      default: out += parts_[i].ps.str(); break;
    }
  }
  return out.empty() ? "(empty)" : out;
}

}  // namespace pkit
