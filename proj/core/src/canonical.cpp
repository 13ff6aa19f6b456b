#include "bilist/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <tuple>

#include "bilist/error.hpp"

namespace bilist {

namespace {

// ---------------------------------------------------------------------
// Assignment canonicalization.
//
// Sequence-lexicographic minimization is greedy position by position:
// pick the smallest achievable image list at each position, keeping every
// partial relabelling that achieves it (ties can diverge later). The
// B-side sequence is minimized first, then the A-side under the surviving
// relabellings.
// ---------------------------------------------------------------------

using IntList = std::vector<int>;

int compare_lists(const IntList& a, const IntList& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

struct State {
  std::vector<int> sigma;        // source colour -> target colour, -1 unset
  std::vector<bool> target_used; // target colours taken
  std::vector<bool> used_b;
  std::vector<bool> used_a;
};

class AssignmentMinimizer {
public:
  explicit AssignmentMinimizer(const ListAssignment& l)
      : palette_(l.palette()), lists_b_(l.lists_b()), lists_a_(l.lists_a()) {
    colour_signatures();
  }

  void run(std::vector<IntList>& out_b, std::vector<IntList>& out_a) {
    State root;
    root.sigma.assign(std::size_t(palette_), -1);
    root.target_used.assign(std::size_t(palette_), false);
    root.used_b.assign(lists_b_.size(), false);
    root.used_a.assign(lists_a_.size(), false);
    std::vector<State> frontier{root};
    for (std::size_t pos = 0; pos < lists_b_.size(); ++pos)
      out_b.push_back(advance(frontier, lists_b_, /*b_side=*/true));
    for (std::size_t pos = 0; pos < lists_a_.size(); ++pos)
      out_a.push_back(advance(frontier, lists_a_, /*b_side=*/false));
    if (frontier.empty())
      throw Error(ErrorCode::INCONSISTENT, "canonicalization frontier died");
  }

private:
  void colour_signatures() {
    signatures_.assign(std::size_t(palette_), {});
    auto absorb = [&](const std::vector<ColourSet>& lists, int tag) {
      for (std::size_t i = 0; i < lists.size(); ++i)
        lists[i].for_each([&](int c) {
          signatures_[std::size_t(c)].push_back(tag * 1000003 + int(i));
        });
    };
    absorb(lists_b_, 1);
    absorb(lists_a_, 2);
  }

  // One greedy step: the minimal image over all frontier states and
  // placements; the frontier becomes the deduplicated achievers.
  IntList advance(std::vector<State>& frontier, const std::vector<ColourSet>& lists,
                  bool b_side) {
    IntList best;
    std::vector<State> next;
    for (const State& st : frontier) {
      const std::vector<bool>& used = b_side ? st.used_b : st.used_a;
      for (std::size_t i = 0; i < lists.size(); ++i) {
        if (used[i]) continue;
        bool dup = false;
        for (std::size_t j = 0; j < i; ++j)
          if (!used[j] && lists[j] == lists[i]) {
            dup = true;
            break;
          }
        if (dup) continue;
        placements(st, lists[i], best, [&](const State& with_map, const IntList& image) {
          State succ = with_map;
          (b_side ? succ.used_b : succ.used_a)[i] = true;
          if (best.empty() || compare_lists(image, best) < 0) {
            best = image;
            next.clear();
            next.push_back(std::move(succ));
          } else if (compare_lists(image, best) == 0) {
            next.push_back(std::move(succ));
          }
        });
      }
    }
    dedup(next);
    if (next.size() > kFrontierCap)
      throw Error(ErrorCode::TOO_LARGE, "canonicalization tie frontier exceeds cap");
    frontier = std::move(next);
    return best;
  }

  static constexpr std::size_t kFrontierCap = 100000;

  // All completions of st.sigma on `block`, reported with their image.
  template <typename F>
  void placements(const State& st, const ColourSet& block, const IntList& best_hint, F&& emit) {
    IntList mapped;
    IntList unmapped;
    block.for_each([&](int c) {
      if (st.sigma[std::size_t(c)] >= 0)
        mapped.push_back(st.sigma[std::size_t(c)]);
      else
        unmapped.push_back(c);
    });
    std::sort(mapped.begin(), mapped.end());
    IntList free_targets;
    for (int t = 0; t < palette_; ++t)
      if (!st.target_used[std::size_t(t)]) free_targets.push_back(t);

    IntList chosen;
    choose(st, mapped, unmapped, free_targets, 0, chosen, best_hint, emit);
  }

  template <typename F>
  void choose(const State& st, const IntList& mapped, const IntList& unmapped,
              const IntList& free_targets, std::size_t from, IntList& chosen,
              const IntList& best_hint, F&& emit) {
    if (chosen.size() == unmapped.size()) {
      IntList image = mapped;
      image.insert(image.end(), chosen.begin(), chosen.end());
      std::sort(image.begin(), image.end());
      if (!best_hint.empty() && compare_lists(image, best_hint) > 0) return;
      emit_bijections(st, unmapped, chosen, image, emit);
      return;
    }
    for (std::size_t i = from; i < free_targets.size(); ++i) {
      chosen.push_back(free_targets[i]);
      choose(st, mapped, unmapped, free_targets, i + 1, chosen, best_hint, emit);
      chosen.pop_back();
    }
  }

  template <typename F>
  void emit_bijections(const State& st, const IntList& unmapped, const IntList& targets,
                       const IntList& image, F&& emit) {
    IntList perm = targets;
    std::sort(perm.begin(), perm.end());
    do {
      // Colours with equal signatures are interchangeable: keep only the
      // assignment giving them ascending targets.
      bool canonical = true;
      for (std::size_t i = 0; i + 1 < unmapped.size() && canonical; ++i)
        for (std::size_t j = i + 1; j < unmapped.size() && canonical; ++j)
          if (signatures_[std::size_t(unmapped[i])] == signatures_[std::size_t(unmapped[j])] &&
              perm[i] > perm[j])
            canonical = false;
      if (!canonical) continue;
      State succ = st;
      for (std::size_t i = 0; i < unmapped.size(); ++i) {
        succ.sigma[std::size_t(unmapped[i])] = perm[i];
        succ.target_used[std::size_t(perm[i])] = true;
      }
      emit(succ, image);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  static void dedup(std::vector<State>& states) {
    std::sort(states.begin(), states.end(),
              [](const State& x, const State& y) { return key(x) < key(y); });
    states.erase(std::unique(states.begin(), states.end(),
                             [](const State& x, const State& y) { return key(x) == key(y); }),
                 states.end());
  }

  static std::tuple<const std::vector<int>&, const std::vector<bool>&, const std::vector<bool>&>
  key(const State& s) {
    return {s.sigma, s.used_b, s.used_a};
  }

  int palette_;
  std::vector<ColourSet> lists_b_;
  std::vector<ColourSet> lists_a_;
  std::vector<std::vector<int>> signatures_;
};

} // namespace

ListAssignment canonicalize_assignment(const ListAssignment& assignment) {
  ListAssignment normal = assignment.normalized();
  AssignmentMinimizer search(normal);
  std::vector<IntList> lists_b, lists_a;
  search.run(lists_b, lists_a);
  return ListAssignment::create(normal.palette(), lists_a, lists_b);
}

namespace detail {

namespace {

// Search for a relabelling of [l] whose ascending image sequence is
// strictly smaller than the given one. Images are placed in ascending
// order; a strictly smaller prefix decides immediately, an equal prefix
// descends.
class SmallerImageSearch {
public:
  SmallerImageSearch(const std::vector<std::uint64_t>& blocks, int l)
      : blocks_(blocks), l_(l), sigma_(std::size_t(l), -1), sigma_used_(std::size_t(l), false),
        block_used_(blocks.size(), false) {}

  bool run() { return place(0, 0); }

private:
  bool place(std::size_t pos, std::uint64_t prev) {
    if (pos == blocks_.size()) return false; // image equals input everywhere
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (block_used_[i]) continue;
      if (try_block(i, pos, prev)) return true;
    }
    return false;
  }

  bool try_block(std::size_t i, std::size_t pos, std::uint64_t prev) {
    std::uint64_t mapped = 0;
    std::vector<int> unmapped;
    std::uint64_t bits = blocks_[i];
    while (bits) {
      int c = std::countr_zero(bits);
      bits &= bits - 1;
      if (sigma_[std::size_t(c)] >= 0)
        mapped |= std::uint64_t{1} << sigma_[std::size_t(c)];
      else
        unmapped.push_back(c);
    }
    std::vector<int> free_targets;
    for (int t = 0; t < l_; ++t)
      if (!sigma_used_[std::size_t(t)]) free_targets.push_back(t);

    std::vector<int> chosen;
    return choose(i, pos, prev, mapped, unmapped, free_targets, 0, chosen);
  }

  bool choose(std::size_t i, std::size_t pos, std::uint64_t prev, std::uint64_t mapped,
              const std::vector<int>& unmapped, const std::vector<int>& free_targets,
              std::size_t from, std::vector<int>& chosen) {
    if (chosen.size() == unmapped.size()) {
      std::uint64_t image = mapped;
      for (int t : chosen) image |= std::uint64_t{1} << t;
      if (pos > 0 && mask_seq_less(image, prev)) return false;
      int cmp = compare_mask_seq_lex(image, blocks_[pos]);
      if (cmp > 0) return false;
      if (cmp < 0) return true; // injective partial map always completes
      return descend(i, pos, image, unmapped, chosen);
    }
    for (std::size_t j = from; j < free_targets.size(); ++j) {
      chosen.push_back(free_targets[j]);
      if (choose(i, pos, prev, mapped, unmapped, free_targets, j + 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  bool descend(std::size_t i, std::size_t pos, std::uint64_t image,
               const std::vector<int>& unmapped, const std::vector<int>& targets) {
    std::vector<int> perm = targets;
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t j = 0; j < unmapped.size(); ++j) {
        sigma_[std::size_t(unmapped[j])] = perm[j];
        sigma_used_[std::size_t(perm[j])] = true;
      }
      block_used_[i] = true;
      bool smaller = place(pos + 1, image);
      block_used_[i] = false;
      for (std::size_t j = 0; j < unmapped.size(); ++j) {
        sigma_[std::size_t(unmapped[j])] = -1;
        sigma_used_[std::size_t(perm[j])] = false;
      }
      if (smaller) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  const std::vector<std::uint64_t>& blocks_;
  int l_;
  std::vector<int> sigma_;
  std::vector<bool> sigma_used_;
  std::vector<bool> block_used_;
};

} // namespace

bool mask_family_has_smaller_relabelling(const std::vector<std::uint64_t>& blocks, int l) {
  if (blocks.empty()) return false;
  SmallerImageSearch search(blocks, l);
  return search.run();
}

std::vector<std::uint64_t> next_canonical_blocks(int l, int k, std::uint64_t last,
                                                 int used_colours) {
  int universe = std::min(l, used_colours + k);
  std::vector<std::uint64_t> out;
  if (k > universe) return out;
  auto idx = std::vector<int>(std::size_t(k));
  for (int i = 0; i < k; ++i) idx[std::size_t(i)] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << i;
    std::uint64_t fresh = mask >> used_colours;
    bool contiguous = (fresh & (fresh + 1)) == 0; // fresh bits form a low run
    if (contiguous && (last == 0 || mask_seq_less(last, mask))) out.push_back(mask);
    int i = k - 1;
    while (i >= 0 && idx[std::size_t(i)] == universe - k + i) --i;
    if (i < 0) break;
    ++idx[std::size_t(i)];
    for (int j = i + 1; j < k; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end(), mask_seq_less);
  return out;
}

} // namespace detail

} // namespace bilist
