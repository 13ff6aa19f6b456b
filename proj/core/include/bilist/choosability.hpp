#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "bilist/certificate.hpp"
#include "bilist/hypergraph.hpp"

namespace bilist::search {

/// Resource bounds for the exhaustive kernels. Results produced under a
/// hit cap are reported as brackets, never as exact answers.
struct SearchCaps {
  std::uint64_t max_nodes = 20'000'000; // enumeration tree nodes
  std::size_t transversal_cap = 1'000'000;
  double timeout_seconds = 0; // 0 = unlimited
  int jobs = 1;
  int canonical_test_depth = 3; // exact orbit-minimality test up to this prefix length
  // Witness-hunt budget (decision mode only; the hunt is a heuristic and
  // never affects exact results).
  std::uint64_t hunt_evals = 500000;
  double hunt_seconds = 10.0;
};

struct CoverResult {
  enum class Status { OK, INFEASIBLE };
  Status status = Status::OK;
  bool exceeds_limit = false; // true: minimum is > the caller's limit
  int count = 0;              // exact minimum when !exceeds_limit
  std::vector<std::uint64_t> family;
};

/// Minimum number of k_a-subsets of the palette such that every listed
/// transversal contains a chosen subset, plus one optimal family. Exact
/// branch-and-bound: greedy upper bound, packing lower bound. INFEASIBLE
/// when some transversal is smaller than k_a. If the minimum exceeds
/// `limit` the search stops early and flags it.
CoverResult transversal_cover_number(const Hypergraph& transversals, int k_a,
                                     int limit = std::numeric_limits<int>::max());

enum class ThresholdStatus { EXACT, UNBOUNDED, CAPPED };

/// a*(b, k_a, k_b): the least |A| for which some B-side family forces
/// non-colourability of the complete graph, over palettes up to the cap.
struct ThresholdResult {
  int b = 0, k_a = 0, k_b = 0;
  ThresholdStatus status = ThresholdStatus::EXACT;
  int a_star = -1;           // exact for EXACT; best upper bound for CAPPED (-1 if none)
  int witness_palette = 0;   // effective palette of the witness
  int exhausted_palette = 0; // every palette up to this was fully searched
  std::uint64_t families_examined = 0;
  std::uint64_t nodes = 0;
  std::optional<NonChoosabilityCertificate> witness;
  std::string proof_note;
};

/// Exhaustive threshold computation. Enumerates B-list families in
/// canonical order per effective palette size, dualizes, and covers.
/// `decision_target`, when set, relaxes the search to "find any family
/// of cover <= target" and stops at the first palette that yields one.
ThresholdResult threshold_a(int b, int k_a, int k_b, int palette_cap,
                            const SearchCaps& caps = {},
                            std::optional<int> decision_target = std::nullopt);

struct ChoosabilityAnswer {
  enum class Verdict { YES, NO, UNKNOWN };
  Verdict verdict = Verdict::UNKNOWN;
  std::optional<NonChoosabilityCertificate> witness; // NO: |A| trimmed to a
  ThresholdResult detail;
};

/// YES iff a < a*(b, k_a, k_b); NO carries a verified certificate with
/// exactly a A-lists. UNKNOWN only when a cap was hit first.
ChoosabilityAnswer is_choosable_complete(int a, int b, int k_a, int k_b,
                                         int palette_cap = 0, const SearchCaps& caps = {});

} // namespace bilist::search
