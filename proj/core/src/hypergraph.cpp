#include "bilist/hypergraph.hpp"

#include <algorithm>
#include <bit>

#include "bilist/error.hpp"

namespace bilist {

namespace {

// Keep only inclusion-minimal masks; output sorted ascending.
std::vector<std::uint64_t> minimalize(std::vector<std::uint64_t> sets) {
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint64_t> out;
  for (std::uint64_t s : sets) {
    bool dominated = false;
    for (std::uint64_t kept : out) {
      if ((kept & ~s) == 0) { // kept subset of s
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

Hypergraph Hypergraph::minimalized() const {
  Hypergraph out;
  out.vertex_count = vertex_count;
  out.edges = minimalize(edges);
  return out;
}

bool Hypergraph::is_antichain() const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (i != j && (edges[i] & ~edges[j]) == 0) return false;
  return true;
}

std::optional<Hypergraph> minimal_transversals(const Hypergraph& h, std::size_t cap) {
  if (h.edges.empty())
    throw Error(ErrorCode::INCONSISTENT, "transversals of an empty hypergraph");
  for (std::uint64_t e : h.edges)
    if (e == 0) throw Error(ErrorCode::INCONSISTENT, "hypergraph has an empty edge");

  std::vector<std::uint64_t> trans{0}; // transversals of zero edges
  for (std::uint64_t edge : h.edges) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t t : trans) {
      if (t & edge) {
        next.push_back(t);
      } else {
        std::uint64_t bits = edge;
        while (bits) {
          int v = std::countr_zero(bits);
          bits &= bits - 1;
          next.push_back(t | (std::uint64_t{1} << v));
        }
      }
      if (next.size() > cap * 8) return std::nullopt; // pre-minimalization guard
    }
    next = minimalize(std::move(next));
    if (next.size() > cap) return std::nullopt;
    trans = std::move(next);
  }

  Hypergraph out;
  out.vertex_count = h.vertex_count;
  out.edges = std::move(trans);
  return out;
}

} // namespace bilist
