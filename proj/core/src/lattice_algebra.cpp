#include "pkit/lattice_algebra.hpp"

#include <algorithm>

namespace pkit {

std::optional<std::size_t> RepresentedLattice::index_of(const SetDescriptor& d) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == d) return i;
  return std::nullopt;
}

RepresentedLattice represent(const SpacePresentation& s, int budget, const EngineOptions& opts) {
  RepresentedLattice r{s, budget, clopen_upsets_catalog(s, budget, opts)};
  return r;
}

SetDescriptor ideal_descriptor_Iab(const RepresentedLattice& r, const SetDescriptor& a,
                                   const SetDescriptor& b, const EngineOptions& opts) {
  SetDescriptor diff = SetDescriptor::minus(a, b);
  SetDescriptor ideal = downset_of(r.space, diff, opts).complement();
  if (!ideal.is_open() || !is_upset(r.space, ideal, opts))
    fail(ErrorKind::ValidationInconclusive, "I_{a->b} descriptor is not an open upset");
  return ideal;
}

std::optional<SetDescriptor> arrow_exists(const RepresentedLattice& r, const SetDescriptor& a,
                                          const SetDescriptor& b, const EngineOptions& opts) {
  SetDescriptor candidate = ideal_descriptor_Iab(r, a, b, opts);
  if (!candidate.is_clopen()) return std::nullopt;
  return candidate;
}

// ---------------------------------------------------------------------------
// Ideal-filter product

IfpResult ideal_filter_product(const FiniteDistLattice& l, const IdealOrFilter& i,
                               const FiniteDistLattice& m, const IdealOrFilter& f) {
  if (i.kind != IdealOrFilter::Kind::ideal || !is_ideal(l, i.members))
    fail(ErrorKind::NotIdeal, "left argument is not an ideal");
  if (f.kind != IdealOrFilter::Kind::filter || !is_filter(m, f.members))
    fail(ErrorKind::NotFilter, "right argument is not a filter");

  IfpResult out;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      if (i.members.test(a) || f.members.test(b)) out.members.emplace_back(a, b);

  // Sublattice closure, guaranteed by the membership condition.
  auto member_index = [&](std::size_t a, std::size_t b) {
    auto it = std::lower_bound(out.members.begin(), out.members.end(), std::make_pair(a, b));
    if (it == out.members.end() || *it != std::make_pair(a, b))
      fail(ErrorKind::NotALattice, "product members are not closed under join/meet");
    return static_cast<std::size_t>(it - out.members.begin());
  };
  for (const auto& [a1, b1] : out.members)
    for (const auto& [a2, b2] : out.members) {
      member_index(l.join(a1, a2), m.join(b1, b2));
      member_index(l.meet(a1, a2), m.meet(b1, b2));
    }

  std::vector<std::string> names;
  names.reserve(out.members.size());
  for (const auto& [a, b] : out.members)
    names.push_back("(" + l.element_name(a) + "," + m.element_name(b) + ")");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < out.members.size(); ++x)
    for (std::size_t y = 0; y < out.members.size(); ++y) {
      if (x == y) continue;
      if (l.leq(out.members[x].first, out.members[y].first) &&
          m.leq(out.members[x].second, out.members[y].second))
        pairs.emplace_back(x, y);
    }
  FinitePoset order =
      FinitePoset::from_index_relation(out.members.size(), pairs, std::move(names));
  auto canonical = FiniteDistLattice::from_abstract_order(order);
  out.lattice = std::move(canonical.lattice);
  out.element_map = std::move(canonical.element_map);
  return out;
}

IfpDualityResult dual_of_ifp_matches_sum(const FiniteDistLattice& l, const IdealOrFilter& i,
                                         const FiniteDistLattice& m, const IdealOrFilter& f) {
  IfpResult product = ideal_filter_product(l, i, m, f);

  const FinitePoset& x = l.base();
  const FinitePoset& y = m.base();
  DynBitset v_open = correspond_ideal(l, i);     // open upset of X
  DynBitset d = v_open.complement();             // closed downset of X
  DynBitset u = correspond_ideal(m, f);          // closed upset of Y

  // The finite down-up sum X (+)_D^U Y.
  const std::size_t nx = x.size(), ny = y.size();
  std::vector<std::string> names;
  for (std::size_t a = 0; a < nx; ++a) names.push_back("l." + x.name_of(a));
  for (std::size_t b = 0; b < ny; ++b) names.push_back("r." + y.name_of(b));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < nx; ++b)
      if (a != b && x.leq(a, b)) pairs.emplace_back(a, b);
  for (std::size_t a = 0; a < ny; ++a)
    for (std::size_t b = 0; b < ny; ++b)
      if (a != b && y.leq(a, b)) pairs.emplace_back(nx + a, nx + b);
  for (std::size_t a = d.find_first(); a < d.size(); a = d.find_next(a + 1))
    for (std::size_t b = u.find_first(); b < u.size(); b = u.find_next(b + 1))
      pairs.emplace_back(a, nx + b);
  FinitePoset sum = FinitePoset::from_index_relation(nx + ny, pairs, std::move(names));

  IfpDualityResult out;
  out.iso_found = find_iso(product.lattice.base(), sum).has_value();

  // gamma(l,m) = alpha(l) u beta(m), as subsets of the sum carrier.
  auto gamma = [&](std::size_t a, std::size_t b) {
    DynBitset g(nx + ny);
    const DynBitset& alpha = l.upset_of(a);
    for (std::size_t k = alpha.find_first(); k < alpha.size(); k = alpha.find_next(k + 1))
      g.set(k);
    const DynBitset& beta = m.upset_of(b);
    for (std::size_t k = beta.find_first(); k < beta.size(); k = beta.find_next(k + 1))
      g.set(nx + k);
    return g;
  };

  out.gamma_ok = true;
  std::vector<DynBitset> images;
  for (const auto& [a, b] : product.members) {
    DynBitset g = gamma(a, b);
    if (!sum.is_upset(g)) out.gamma_ok = false;
    images.push_back(std::move(g));
  }
  for (std::size_t p = 0; p < images.size() && out.gamma_ok; ++p)
    for (std::size_t q = p + 1; q < images.size(); ++q)
      if (images[p] == images[q]) out.gamma_ok = false;
  // Surjectivity onto the clopen upsets of the sum.
  if (out.gamma_ok) out.gamma_ok = images.size() == sum.all_upsets().size();
  // gamma is a homomorphism: the product order is componentwise, so the
  // image of a join/meet is the union/intersection of images.
  if (out.gamma_ok) {
    for (std::size_t p = 0; p < product.members.size() && out.gamma_ok; ++p)
      for (std::size_t q = 0; q < product.members.size(); ++q) {
        auto [a1, b1] = product.members[p];
        auto [a2, b2] = product.members[q];
        if (gamma(l.join(a1, a2), m.join(b1, b2)) != (images[p] | images[q])) {
          out.gamma_ok = false;
          break;
        }
        if (gamma(l.meet(a1, a2), m.meet(b1, b2)) != (images[p] & images[q])) {
          out.gamma_ok = false;
          break;
        }
      }
  }
  out.holds = out.iso_found && out.gamma_ok;
  return out;
}

// ---------------------------------------------------------------------------
// Dual maps along Z embeddings

SetDescriptor preimage_on_z(const SpacePresentation& z_space, const EmbeddingSpec& e,
                            const SetDescriptor& target_set, const EngineOptions& opts) {
  const std::size_t main = z_space.part_index("main");
  const std::size_t ypart = z_space.part_index("y");
  const int b = z_space.default_window();
  const int w = std::max({b, static_cast<int>(target_set.max_constant()) + 3,
                          opts.window ? *opts.window : 0});

  std::vector<bool> mem(static_cast<std::size_t>(w) + 1);
  for (int n = 0; n <= w; ++n)
    mem[static_cast<std::size_t>(n)] = target_set.eval(e.z_family.at(static_cast<std::uint32_t>(n)));
  const bool mem_omega = target_set.eval(e.x_image);
  CoordSet cs = synthesize_coord_trace(mem, mem_omega, w);

  SetDescriptor out = SetDescriptor::none(z_space);
  out.part(main).cs = cs;
  if (target_set.eval(e.y_image))
    out = SetDescriptor::unite(out, SetDescriptor::in_part(z_space, ypart));
  return out;
}

SetDescriptor z_minus_xy(const SpacePresentation& z_space) {
  const std::size_t main = z_space.part_index("main");
  SetDescriptor out = SetDescriptor::none(z_space);
  out.part(main).cs = CoordSet::from_profile({}, true, false);
  return out;
}

bool non_heyting_certificate(const RepresentedLattice& r, const EmbeddingSpec& e,
                             const SetDescriptor& a, const SetDescriptor& b,
                             const EngineOptions& opts) {
  SpacePresentation z = atom(e.z_index == 1 ? "z1" : e.z_index == 2 ? "z2" : "z3");
  Diagnosis emb = verify_embedding(r.space, e, opts);
  if (!emb.ok) fail(ErrorKind::InvalidArgument, "embedding fails: " + emb.notes.front());
  SetDescriptor ideal = ideal_descriptor_Iab(r, a, b, opts);
  SetDescriptor pre = preimage_on_z(z, e, ideal, opts);
  return pre == z_minus_xy(z);
}

}  // namespace pkit
