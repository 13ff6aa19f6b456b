#pragma once

#include <vector>

#include "bilist/bipartite_graph.hpp"
#include "bilist/colour_set.hpp"

namespace bilist {

/// Per-vertex colour lists over a dense integer palette 0..palette-1.
/// Lists are uniform per part: every A-list has k_a colours, every B-list
/// k_b. Palettes are normalized: every colour occurs in some list.
class ListAssignment {
public:
  ListAssignment() = default;

  /// Validates all invariants; throws Error(INCONSISTENT) on violation.
  static ListAssignment create(int palette, const std::vector<std::vector<int>>& lists_a,
                               const std::vector<std::vector<int>>& lists_b);

  /// Same, from prebuilt colour sets of matching width.
  static ListAssignment create_from_sets(int palette, std::vector<ColourSet> lists_a,
                                         std::vector<ColourSet> lists_b);

  /// Relabels colours to first-appearance order (B-lists scanned first,
  /// then A-lists) and drops unused palette slots.
  ListAssignment normalized() const;

  int palette() const { return palette_; }
  int k_a() const { return k_a_; }
  int k_b() const { return k_b_; }
  int a_size() const { return int(lists_a_.size()); }
  int b_size() const { return int(lists_b_.size()); }
  const std::vector<ColourSet>& lists_a() const { return lists_a_; }
  const std::vector<ColourSet>& lists_b() const { return lists_b_; }
  const ColourSet& list_a(int v) const { return lists_a_[std::size_t(v)]; }
  const ColourSet& list_b(int w) const { return lists_b_[std::size_t(w)]; }

  bool shape_matches(const BipartiteGraph& g) const {
    return a_size() == g.a_size() && b_size() == g.b_size();
  }

  bool operator==(const ListAssignment& o) const {
    return palette_ == o.palette_ && lists_a_ == o.lists_a_ && lists_b_ == o.lists_b_;
  }

private:
  int palette_ = 0;
  int k_a_ = 0;
  int k_b_ = 0;
  std::vector<ColourSet> lists_a_;
  std::vector<ColourSet> lists_b_;
};

/// A colour per vertex; valid when every colour is drawn from the
/// vertex's list and no edge joins equal colours.
struct ProperColouring {
  std::vector<int> colours_a;
  std::vector<int> colours_b;

  /// Full re-check against the defining property; never trusts search state.
  bool valid_for(const BipartiteGraph& g, const ListAssignment& l) const;
};

} // namespace bilist
