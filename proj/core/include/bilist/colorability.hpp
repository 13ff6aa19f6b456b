#pragma once

#include <optional>
#include <vector>

#include "bilist/certificate.hpp"
#include "bilist/colour_set.hpp"
#include "bilist/list_assignment.hpp"

namespace bilist {

/// Clause view of a complete-bipartite instance: a proper colouring
/// exists iff the palette splits into a set S meeting every A-list whose
/// complement meets every B-list.
struct SeparatorQuery {
  int palette = 0;
  std::vector<ColourSet> a_clauses; // S must intersect each
  std::vector<ColourSet> b_clauses; // complement of S must intersect each

  static SeparatorQuery from(const ListAssignment& assignment);
};

/// Colour set S with S hitting every A-list and palette-minus-S hitting
/// every B-list, or nothing when no such split exists. Deterministic:
/// clause-driven backtracking with unit propagation, branching on colours
/// in increasing index with inclusion first, so the first witness found
/// is the sequence-lexicographically least.
std::optional<ColourSet> separator_exists(const SeparatorQuery& query);

/// Decide a fixed instance. Complete graphs dispatch to the separator
/// search and rebuild a colouring from the split; general graphs run
/// backtracking over B-vertex colours in decreasing-degree order with
/// forward pruning of A-lists. Any returned colouring is re-checked
/// against the defining property before being handed out.
std::optional<ProperColouring> find_proper_colouring(const BipartiteGraph& graph,
                                                     const ListAssignment& assignment);

struct VerificationResult {
  bool verified = false;
  std::optional<ProperColouring> refutation; // present iff !verified
};

/// VERIFIED iff exhaustive search finds no proper colouring; otherwise
/// the found colouring refutes the certificate.
VerificationResult verify_certificate(const NonChoosabilityCertificate& cert);

} // namespace bilist
