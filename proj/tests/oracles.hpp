// Independent brute-force oracles. These stay deliberately naive and
// never share code with the search paths they check.
#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "bilist/bipartite_graph.hpp"
#include "bilist/combinatorics.hpp"
#include "bilist/colour_set.hpp"
#include "bilist/hypergraph.hpp"
#include "bilist/list_assignment.hpp"

namespace oracle {

using bilist::BipartiteGraph;
using bilist::ColourSet;
using bilist::Hypergraph;
using bilist::ListAssignment;
using bilist::ProperColouring;

/// Enumerates every B-colouring and greedily extends to A.
inline std::optional<ProperColouring> brute_force_colouring(const BipartiteGraph& g,
                                                            const ListAssignment& l) {
  std::vector<std::vector<int>> lists_b;
  for (int w = 0; w < g.b_size(); ++w) lists_b.push_back(l.list_b(w).to_vector());
  std::vector<int> pick(std::size_t(g.b_size()), 0);
  while (true) {
    ProperColouring col;
    for (int w = 0; w < g.b_size(); ++w)
      col.colours_b.push_back(lists_b[std::size_t(w)][std::size_t(pick[std::size_t(w)])]);
    bool ok = true;
    col.colours_a.resize(std::size_t(g.a_size()));
    for (int v = 0; v < g.a_size() && ok; ++v) {
      ColourSet free = l.list_a(v);
      for (int w = 0; w < g.b_size(); ++w)
        if (g.adjacent(v, w) && free.test(col.colours_b[std::size_t(w)]))
          free.reset(col.colours_b[std::size_t(w)]);
      if (free.empty())
        ok = false;
      else
        col.colours_a[std::size_t(v)] = free.lowest();
    }
    if (ok && col.valid_for(g, l)) return col;
    int w = g.b_size() - 1;
    while (w >= 0 && pick[std::size_t(w)] + 1 == int(lists_b[std::size_t(w)].size()))
      pick[std::size_t(w--)] = 0;
    if (w < 0) return std::nullopt;
    ++pick[std::size_t(w)];
  }
}

/// Sweeps all 2^palette colour subsets.
inline std::optional<std::uint64_t> brute_force_separator(const ListAssignment& l) {
  int m = l.palette();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    bool ok = true;
    for (const auto& list : l.lists_a())
      if ((list.low64() & s) == 0) ok = false;
    for (const auto& list : l.lists_b())
      if ((list.low64() & ~s) == 0) ok = false;
    if (ok) return s;
  }
  return std::nullopt;
}

/// All minimal transversals by checking every vertex subset.
inline std::vector<std::uint64_t> brute_force_minimal_transversals(const Hypergraph& h) {
  auto hits_all = [&](std::uint64_t t) {
    for (std::uint64_t e : h.edges)
      if ((e & t) == 0) return false;
    return true;
  };
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << h.vertex_count); ++t) {
    if (!hits_all(t)) continue;
    bool minimal = true;
    std::uint64_t bits = t;
    while (bits && minimal) {
      std::uint64_t low = bits & (~bits + 1);
      bits ^= low;
      if (hits_all(t ^ low)) minimal = false;
    }
    if (minimal) out.push_back(t);
  }
  return out;
}

/// Minimum number of k_a-subsets covering all transversals, by trying
/// every family of candidate subsets up to `max_size`.
inline int brute_force_cover(const std::vector<std::uint64_t>& transversals, int k_a,
                             int max_size) {
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t t : transversals)
    for (std::uint64_t sub : bilist::subsets_of_mask(t, k_a)) candidates.push_back(sub);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto covered = [&](const std::vector<std::uint64_t>& chosen) {
    for (std::uint64_t t : transversals) {
      bool ok = false;
      for (std::uint64_t x : chosen)
        if ((x & ~t) == 0) ok = true;
      if (!ok) return false;
    }
    return true;
  };
  std::vector<std::uint64_t> chosen;
  for (int size = 0; size <= max_size; ++size) {
    // All size-subsets of candidates.
    auto idx = std::vector<int>(std::size_t(size));
    for (int i = 0; i < size; ++i) idx[std::size_t(i)] = i;
    if (size > int(candidates.size())) break;
    while (true) {
      chosen.clear();
      for (int i : idx) chosen.push_back(candidates[std::size_t(i)]);
      if (covered(chosen)) return size;
      int i = size - 1;
      while (i >= 0 && idx[std::size_t(i)] == int(candidates.size()) - size + i) --i;
      if (i < 0) break;
      ++idx[std::size_t(i)];
      for (int j = i + 1; j < size; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
    }
  }
  return max_size + 1;
}

/// True iff some k1-subset of [l] meets every block; checks all subsets.
inline bool brute_force_property_a(const std::vector<std::uint64_t>& blocks, int l, int k1) {
  for (std::uint64_t s : bilist::subsets_of_ground(l, k1)) {
    bool hits = true;
    for (std::uint64_t b : blocks)
      if ((b & s) == 0) hits = false;
    if (hits) return true;
  }
  return false;
}

} // namespace oracle
