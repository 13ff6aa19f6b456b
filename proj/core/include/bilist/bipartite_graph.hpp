#pragma once

#include <utility>
#include <vector>

#include "bilist/colour_set.hpp"

namespace bilist {

/// Two-part vertex set with adjacency stored as bit rows over part B.
/// Complete graphs carry only their part sizes; algorithms take the fast
/// path instead of touching rows.
class BipartiteGraph {
public:
  BipartiteGraph() = default;

  static BipartiteGraph complete(int a_size, int b_size);
  static BipartiteGraph from_edges(int a_size, int b_size,
                                   const std::vector<std::pair<int, int>>& edges);
  static BipartiteGraph from_rows(int b_size, std::vector<ColourSet> rows);

  int a_size() const { return a_size_; }
  int b_size() const { return b_size_; }
  bool complete_graph() const { return complete_; }

  bool adjacent(int a_vertex, int b_vertex) const {
    return complete_ ? true : rows_[std::size_t(a_vertex)].test(b_vertex);
  }

  /// Adjacency row of an A-vertex; only stored for non-complete graphs.
  const ColourSet& row(int a_vertex) const { return rows_[std::size_t(a_vertex)]; }

  int degree_a(int a_vertex) const {
    return complete_ ? b_size_ : rows_[std::size_t(a_vertex)].count();
  }
  int degree_b(int b_vertex) const;

  int max_degree_a() const;
  int max_degree_b() const;

  /// Sorted edge list (a index, b index); materializes complete graphs.
  std::vector<std::pair<int, int>> edges() const;

  std::vector<int> neighbours_of_b(int b_vertex) const;

  bool operator==(const BipartiteGraph& o) const {
    return a_size_ == o.a_size_ && b_size_ == o.b_size_ && complete_ == o.complete_ &&
           rows_ == o.rows_;
  }

private:
  int a_size_ = 0;
  int b_size_ = 0;
  bool complete_ = false;
  std::vector<ColourSet> rows_; // one row per A-vertex, width b_size
};

} // namespace bilist
