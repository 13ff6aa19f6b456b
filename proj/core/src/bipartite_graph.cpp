#include "bilist/bipartite_graph.hpp"

#include <algorithm>

#include "bilist/error.hpp"

namespace bilist {

BipartiteGraph BipartiteGraph::complete(int a_size, int b_size) {
  if (a_size < 0 || b_size < 0)
    throw Error(ErrorCode::INCONSISTENT, "negative part size");
  BipartiteGraph g;
  g.a_size_ = a_size;
  g.b_size_ = b_size;
  g.complete_ = true;
  return g;
}

BipartiteGraph BipartiteGraph::from_edges(int a_size, int b_size,
                                          const std::vector<std::pair<int, int>>& edges) {
  if (a_size < 0 || b_size < 0)
    throw Error(ErrorCode::INCONSISTENT, "negative part size");
  BipartiteGraph g;
  g.a_size_ = a_size;
  g.b_size_ = b_size;
  g.complete_ = false;
  g.rows_.assign(std::size_t(a_size), ColourSet(b_size));
  for (auto [a, b] : edges) {
    if (a < 0 || a >= a_size || b < 0 || b >= b_size)
      throw Error(ErrorCode::INCONSISTENT, "edge endpoint out of range");
    g.rows_[std::size_t(a)].set(b);
  }
  return g;
}

BipartiteGraph BipartiteGraph::from_rows(int b_size, std::vector<ColourSet> rows) {
  BipartiteGraph g;
  g.a_size_ = int(rows.size());
  g.b_size_ = b_size;
  g.complete_ = false;
  for (const auto& r : rows)
    if (r.width() != b_size)
      throw Error(ErrorCode::INCONSISTENT, "adjacency row width mismatch");
  g.rows_ = std::move(rows);
  return g;
}

int BipartiteGraph::degree_b(int b_vertex) const {
  if (complete_) return a_size_;
  int d = 0;
  for (const auto& r : rows_)
    if (r.test(b_vertex)) ++d;
  return d;
}

int BipartiteGraph::max_degree_a() const {
  if (complete_) return a_size_ > 0 ? b_size_ : 0;
  int m = 0;
  for (const auto& r : rows_) m = std::max(m, r.count());
  return m;
}

int BipartiteGraph::max_degree_b() const {
  if (complete_) return b_size_ > 0 ? a_size_ : 0;
  int m = 0;
  for (int b = 0; b < b_size_; ++b) m = std::max(m, degree_b(b));
  return m;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < a_size_; ++a) {
    if (complete_) {
      for (int b = 0; b < b_size_; ++b) out.emplace_back(a, b);
    } else {
      rows_[std::size_t(a)].for_each([&](int b) { out.emplace_back(a, b); });
    }
  }
  return out;
}

std::vector<int> BipartiteGraph::neighbours_of_b(int b_vertex) const {
  std::vector<int> out;
  for (int a = 0; a < a_size_; ++a)
    if (adjacent(a, b_vertex)) out.push_back(a);
  return out;
}

} // namespace bilist
