#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bilist/certificate.hpp"
#include "bilist/set_family.hpp"

namespace bilist::construct {

struct SizeCaps {
  std::int64_t max_lists = 200000;   // per part
  int max_palette = 256;             // colours before normalization
};

/// Complete graph on delta^k A-vertices and k B-vertices: B gets k
/// disjoint delta-lists, A gets all transversal k-tuples. Verified.
NonChoosabilityCertificate construct_classic(int k, int delta, const SizeCaps& caps = {});

/// Complete graph with the two families as lists. Requires a split
/// k1+k2 = l-1 with fam_a lacking a k1-hitting-set and fam_b lacking a
/// k2-hitting-set; throws PROPERTY_A_HOLDS naming a witness otherwise.
NonChoosabilityCertificate construct_steiner(const SetFamily& fam_a, const SetFamily& fam_b,
                                             const SizeCaps& caps = {});

struct BoundaryParams {
  int b = 0;
  int delta = 0;
  int q = 0; // delta = q(b-1) + r
  int r = 0; // 0 <= r <= b-2
  static BoundaryParams derive(int b, int delta);
};

/// Extremal assignment for lists of size b-1 on the A side: the
/// intersection pattern minimizing the blocking count, with the A-side
/// computed mechanically as an exact cover of the minimal transversals.
/// Certificate a equals the closed-form threshold on the tested range;
/// disagreements between formula and search are flagged in the notes.
NonChoosabilityCertificate construct_boundary(const BoundaryParams& params,
                                              const SizeCaps& caps = {});

struct GadgetLevel {
  BipartiteGraph graph;
  ListAssignment assignment;
  int designated_b = 0; // the vertex whose colour range shrinks per level
  ColourSet allowed;    // colours it may still take in a proper colouring
};

/// The recursive low-B-degree construction: level i pins the designated
/// vertex to delta-i colours; level delta admits none.
std::vector<GadgetLevel> gadget_levels(int k, int delta, const SizeCaps& caps = {});
NonChoosabilityCertificate construct_gadget(int k, int delta, const SizeCaps& caps = {});

struct Cond3Report {
  int k = 0;
  double delta = 0;
  double c = 0;       // 1/(4k(k-1))
  double m_real = 0;  // c * (delta/ln delta)^(1/k) * ln delta
  int m = 0;          // rounded to even, at least 2k
  int segments = 0;
  int k1 = 0; // (k-1) * segments
  std::vector<int> segment_sizes;
  std::int64_t b_size = 0;          // sum of C(segment, k)
  std::int64_t a_size = -1;         // family size when built, -1 otherwise
  bool built = false;
  bool degree_bound_a_ok = false; // |B| <= delta
  bool degree_bound_b_ok = false; // |A| <= delta
  std::string note;
};

struct Cond3Result {
  Cond3Report report;
  std::optional<NonChoosabilityCertificate> certificate;
};

/// Segment-based B-lists (all k-subsets within each segment) against an
/// A-side family of (m/2)-subsets lacking a k1-hitting-set. Builds and
/// verifies the certificate at desk scale; beyond the caps only the
/// parameter report is produced.
Cond3Result construct_witness_cond3(int k, double delta,
                                    std::optional<int> m_override = std::nullopt,
                                    std::optional<int> segments_override = std::nullopt,
                                    std::uint64_t seed = 1, const SizeCaps& caps = {});

/// Deterministic deletion search on a complete-graph certificate: the
/// least covering subfamily of the A-lists, padded back to target_a,
/// still verifying. Throws SIZE when no subfamily of that size works.
NonChoosabilityCertificate trim_a_lists(const NonChoosabilityCertificate& cert, int target_a);

} // namespace bilist::construct
