#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pkit/bitset.hpp"
#include "pkit/descriptor.hpp"

namespace pkit {

struct EngineOptions {
  /// Overrides the decision window; must be at least the presentation's B.
  std::optional<int> window;
  /// Re-run every boolean decision at 2B+4 and fail loudly on disagreement.
  bool cross_check = true;
  /// Cap for catalog construction.
  std::size_t catalog_limit = 20000;
};

struct ValidationFailure {
  std::string axiom;  // "antisymmetry", "transitivity", "order-closedness", "priestley-separation"
  std::string detail;
};

struct ValidationReport {
  bool ok = false;
  int window = 0;
  std::size_t points = 0;
  bool cross_checked = false;
  std::vector<ValidationFailure> failures;
};

/// All points of a presentation with coordinates in {0..window, omega},
/// with the order relation materialized as bitset rows. Every windowed
/// decision procedure runs against one of these.
class WindowModel {
public:
  static WindowModel build(const SpacePresentation& s, int window);

  const SpacePresentation& pres() const { return *pres_; }
  int window() const { return window_; }
  std::size_t size() const { return points_.size(); }
  const PointName& point(std::size_t i) const { return points_[i]; }

  /// SIZE_MAX when the point's coordinates fall outside the window.
  std::size_t index_of(const PointName& p) const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  const DynBitset& up(std::size_t i) const { return up_[i]; }
  const DynBitset& down(std::size_t i) const { return down_[i]; }

  DynBitset bits_of(const SetDescriptor& d) const;
  DynBitset down_closure(const DynBitset& s) const;
  DynBitset up_closure(const DynBitset& s) const;
  bool is_upset_bits(const DynBitset& s) const;
  bool is_downset_bits(const DynBitset& s) const;

  /// Topology on the window: a set is open here when every member with
  /// omega coordinates keeps membership under replacing those coordinates
  /// by large finite representatives (window-1 and window). Sound for sets
  /// whose constants sit well below the window.
  bool is_open_bits(const DynBitset& s) const;
  bool is_closed_bits(const DynBitset& s) const { return is_open_bits(s.complement()); }
  bool is_clopen_bits(const DynBitset& s) const {
    return is_open_bits(s) && is_closed_bits(s);
  }

private:
  const SpacePresentation* pres_ = nullptr;
  int window_ = 0;
  std::vector<PointName> points_;
  std::vector<std::size_t> part_offset_;
  std::vector<DynBitset> up_, down_;

  std::size_t encode(NatOmega v) const;
};

/// Reads a descriptor back off its window trace. Requires membership to
/// stabilize strictly inside the window; throws NotExpressible otherwise.
SetDescriptor synthesize_from_bits(const WindowModel& m, const DynBitset& bits);

/// One-coordinate version of the same synthesis: membership[v] for
/// v in 0..window plus the omega bit.
CoordSet synthesize_coord_trace(const std::vector<bool>& membership, bool omega, int window);

/// Certifies partial order axioms, order-closedness and the Priestley
/// separation axiom by exhaustive check over the window (B by default),
/// with an optional 2B+4 cross-check. Disagreement between the two levels
/// raises ValidationInconclusive.
ValidationReport validate_presentation(const SpacePresentation& s, const EngineOptions& opts = {});

/// Throws AxiomFailure with the first failure when validation rejects.
void require_valid(const SpacePresentation& s, const EngineOptions& opts = {});

bool is_upset(const SpacePresentation& s, const SetDescriptor& d, const EngineOptions& opts = {});
bool is_downset(const SpacePresentation& s, const SetDescriptor& d, const EngineOptions& opts = {});

/// Clopen-ness of a definable set is structural (no window needed).
bool is_clopen(const SpacePresentation& s, const SetDescriptor& d);

/// Descriptor denoting the downward closure of d's denotation. Synthesized
/// from the window and, under cross_check, re-verified at the doubled
/// window; NotExpressible when the closure leaves the descriptor fragment.
SetDescriptor downset_of(const SpacePresentation& s, const SetDescriptor& d,
                         const EngineOptions& opts = {});
SetDescriptor upset_of(const SpacePresentation& s, const SetDescriptor& d,
                       const EngineOptions& opts = {});

/// All clopen upsets generated by upward hulls of clopen coordinate
/// cylinders with constants <= budget, closed under union and intersection.
/// Deduplicated semantically; deterministic order; SizeLimit past the cap.
std::vector<SetDescriptor> clopen_upsets_catalog(const SpacePresentation& s, int budget,
                                                 const EngineOptions& opts = {});

/// Closed downsets, same generation scheme through downward hulls of
/// closed cylinders. Includes non-clopen members such as singleton limits.
std::vector<SetDescriptor> closed_downsets_catalog(const SpacePresentation& s, int budget,
                                                   const EngineOptions& opts = {});

/// The clopen coordinate boxes at the given level: every clopen set is a
/// finite union of these, so they are the canonical test family for the
/// Esakia cylinder scan.
std::vector<SetDescriptor> profile_cylinders(const SpacePresentation& s, int level);

}  // namespace pkit
