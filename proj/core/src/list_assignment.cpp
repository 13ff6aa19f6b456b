#include "bilist/list_assignment.hpp"

#include <algorithm>

#include "bilist/error.hpp"

namespace bilist {

namespace {

void check_uniform(const std::vector<ColourSet>& lists, int k, int palette, const char* part) {
  for (const auto& l : lists) {
    if (l.width() != palette)
      throw Error(ErrorCode::INCONSISTENT, std::string("list width mismatch in part ") + part);
    if (l.count() != k)
      throw Error(ErrorCode::INCONSISTENT,
                  std::string("non-uniform list size in part ") + part);
  }
}

} // namespace

ListAssignment ListAssignment::create(int palette, const std::vector<std::vector<int>>& lists_a,
                                      const std::vector<std::vector<int>>& lists_b) {
  auto build = [palette](const std::vector<std::vector<int>>& raw, const char* part) {
    std::vector<ColourSet> out;
    out.reserve(raw.size());
    for (const auto& colours : raw) {
      ColourSet s(palette);
      for (int c : colours) {
        if (c < 0 || c >= palette)
          throw Error(ErrorCode::INCONSISTENT,
                      std::string("colour out of palette range in part ") + part);
        if (s.test(c))
          throw Error(ErrorCode::INCONSISTENT,
                      std::string("repeated colour in a list of part ") + part);
        s.set(c);
      }
      out.push_back(std::move(s));
    }
    return out;
  };
  return create_from_sets(palette, build(lists_a, "A"), build(lists_b, "B"));
}

ListAssignment ListAssignment::create_from_sets(int palette, std::vector<ColourSet> lists_a,
                                                std::vector<ColourSet> lists_b) {
  if (palette < 0) throw Error(ErrorCode::INCONSISTENT, "negative palette");
  ListAssignment l;
  l.palette_ = palette;
  l.k_a_ = lists_a.empty() ? 0 : lists_a.front().count();
  l.k_b_ = lists_b.empty() ? 0 : lists_b.front().count();
  check_uniform(lists_a, l.k_a_, palette, "A");
  check_uniform(lists_b, l.k_b_, palette, "B");

  ColourSet used(palette);
  for (const auto& s : lists_a) used = used | s;
  for (const auto& s : lists_b) used = used | s;
  if (used.count() != palette)
    throw Error(ErrorCode::INCONSISTENT, "palette has colours unused by every list");

  l.lists_a_ = std::move(lists_a);
  l.lists_b_ = std::move(lists_b);
  return l;
}

ListAssignment ListAssignment::normalized() const {
  std::vector<int> relabel(std::size_t(palette_), -1);
  int next = 0;
  auto scan = [&](const std::vector<ColourSet>& lists) {
    for (const auto& l : lists)
      l.for_each([&](int c) {
        if (relabel[std::size_t(c)] < 0) relabel[std::size_t(c)] = next++;
      });
  };
  scan(lists_b_);
  scan(lists_a_);

  auto remap = [&](const std::vector<ColourSet>& lists) {
    std::vector<ColourSet> out;
    out.reserve(lists.size());
    for (const auto& l : lists) {
      ColourSet s(next);
      l.for_each([&](int c) { s.set(relabel[std::size_t(c)]); });
      out.push_back(std::move(s));
    }
    return out;
  };
  return create_from_sets(next, remap(lists_a_), remap(lists_b_));
}

bool ProperColouring::valid_for(const BipartiteGraph& g, const ListAssignment& l) const {
  if (!l.shape_matches(g)) return false;
  if (int(colours_a.size()) != g.a_size() || int(colours_b.size()) != g.b_size()) return false;
  for (int v = 0; v < g.a_size(); ++v) {
    int c = colours_a[std::size_t(v)];
    if (c < 0 || c >= l.palette() || !l.list_a(v).test(c)) return false;
  }
  for (int w = 0; w < g.b_size(); ++w) {
    int c = colours_b[std::size_t(w)];
    if (c < 0 || c >= l.palette() || !l.list_b(w).test(c)) return false;
  }
  for (int v = 0; v < g.a_size(); ++v)
    for (int w = 0; w < g.b_size(); ++w)
      if (g.adjacent(v, w) && colours_a[std::size_t(v)] == colours_b[std::size_t(w)])
        return false;
  return true;
}

} // namespace bilist
