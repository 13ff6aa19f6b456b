#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace bilist {

/// Small hypergraph on at most 64 vertices; edges are bit masks. The
/// exhaustive search kernels live on this representation.
struct Hypergraph {
  int vertex_count = 0;
  std::vector<std::uint64_t> edges;

  /// Drops supersets so no edge contains another; sorts ascending.
  Hypergraph minimalized() const;

  /// True when no edge contains another.
  bool is_antichain() const;

  bool operator==(const Hypergraph& o) const {
    return vertex_count == o.vertex_count && edges == o.edges;
  }
};

/// All inclusion-minimal vertex sets meeting every edge, by incremental
/// dualization edge by edge. The output is antichain-verified and sorted.
/// Returns nothing when the intermediate family exceeds `cap` sets.
std::optional<Hypergraph> minimal_transversals(const Hypergraph& h,
                                               std::size_t cap = 1000000);

} // namespace bilist
