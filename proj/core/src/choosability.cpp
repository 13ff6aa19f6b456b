#include "bilist/choosability.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <thread>

#include "bilist/canonical.hpp"
#include "bilist/colorability.hpp"
#include "bilist/combinatorics.hpp"
#include "bilist/error.hpp"
#include "bilist/rng.hpp"

namespace bilist::search {

namespace {

using Clock = std::chrono::steady_clock;

int popcount(std::uint64_t x) { return std::popcount(x); }

// ---------------------------------------------------------------------
// Exact set cover over transversals: a chosen k_a-subset X covers exactly
// the transversals containing X.
// ---------------------------------------------------------------------

struct CoverSearch {
  const std::vector<std::uint64_t>& edges;
  int k_a;
  int limit;

  std::vector<bool> covered;
  std::vector<std::uint64_t> chosen;
  std::vector<std::uint64_t> best_family;
  int best = 0;

  CoverSearch(const std::vector<std::uint64_t>& e, int ka, int lim)
      : edges(e), k_a(ka), limit(lim), covered(e.size(), false) {}

  int packing_bound() const {
    std::vector<std::uint64_t> picked;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (covered[i]) continue;
      bool independent = true;
      for (std::uint64_t p : picked)
        if (popcount(p & edges[i]) >= k_a) {
          independent = false;
          break;
        }
      if (independent) picked.push_back(edges[i]);
    }
    return int(picked.size());
  }

  std::vector<std::size_t> cover_and_mark(std::uint64_t x) {
    std::vector<std::size_t> hit;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (!covered[i] && (x & ~edges[i]) == 0) {
        covered[i] = true;
        hit.push_back(i);
      }
    return hit;
  }

  std::size_t coverage(std::uint64_t x) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (!covered[i] && (x & ~edges[i]) == 0) ++n;
    return n;
  }

  void greedy_init() {
    auto saved_chosen = chosen;
    auto saved_cov = covered;
    while (true) {
      std::uint64_t pick = 0;
      std::size_t pick_score = 0;
      bool any = false;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (covered[i]) continue;
        any = true;
        for (std::uint64_t x : subsets_of_mask(edges[i], k_a)) {
          std::size_t score = coverage(x);
          if (score > pick_score || (score == pick_score && pick != 0 && x < pick)) {
            pick = x;
            pick_score = score;
          }
        }
      }
      if (!any) break;
      chosen.push_back(pick);
      cover_and_mark(pick);
    }
    if (int(chosen.size()) <= limit) {
      best = int(chosen.size());
      best_family = chosen;
    } else {
      best = limit + 1;
    }
    chosen = std::move(saved_chosen);
    covered = std::move(saved_cov);
  }

  void dfs() {
    std::size_t branch = edges.size();
    std::uint64_t branch_width = ~std::uint64_t{0};
    bool all_covered = true;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (covered[i]) continue;
      all_covered = false;
      std::uint64_t width = binomial(popcount(edges[i]), k_a);
      if (width < branch_width) {
        branch_width = width;
        branch = i;
      }
    }
    if (all_covered) {
      if (int(chosen.size()) < best) {
        best = int(chosen.size());
        best_family = chosen;
      }
      return;
    }
    if (int(chosen.size()) + packing_bound() >= best) return;
    for (std::uint64_t x : subsets_of_mask(edges[branch], k_a)) {
      auto hit = cover_and_mark(x);
      chosen.push_back(x);
      dfs();
      chosen.pop_back();
      for (std::size_t i : hit) covered[i] = false;
    }
  }
};

} // namespace

CoverResult transversal_cover_number(const Hypergraph& transversals, int k_a, int limit) {
  CoverResult r;
  if (transversals.edges.empty())
    throw Error(ErrorCode::INCONSISTENT, "cover of an empty transversal family");
  for (std::uint64_t t : transversals.edges)
    if (popcount(t) < k_a) {
      r.status = CoverResult::Status::INFEASIBLE;
      return r;
    }
  if (limit < 0) {
    r.exceeds_limit = true;
    r.count = 0;
    return r;
  }

  CoverSearch search(transversals.edges, k_a, limit);

  // Transversals of size exactly k_a force themselves as choices.
  for (std::uint64_t t : transversals.edges)
    if (popcount(t) == k_a) search.chosen.push_back(t);
  std::sort(search.chosen.begin(), search.chosen.end());
  search.chosen.erase(std::unique(search.chosen.begin(), search.chosen.end()),
                      search.chosen.end());
  for (std::uint64_t x : search.chosen) search.cover_and_mark(x);

  if (int(search.chosen.size()) > limit) {
    r.exceeds_limit = true;
    r.count = limit;
    return r;
  }

  search.greedy_init();
  search.dfs();

  if (search.best > limit) {
    r.exceeds_limit = true;
    r.count = limit;
    return r;
  }
  r.count = search.best;
  r.family = search.best_family;
  std::sort(r.family.begin(), r.family.end(), mask_seq_less);
  return r;
}

namespace {

// ---------------------------------------------------------------------
// Canonical enumeration of B-list families over one effective palette.
// Blocks ascend in sequence-lex order and introduce fresh colours as a
// contiguous run, so every relabelling orbit keeps its minimum member.
// ---------------------------------------------------------------------

struct PaletteConfig {
  int l = 0;
  int k_b = 0;
  int k_a = 0;
  int b_distinct = 0;
  int target = 0; // only covers <= target matter
  Clock::time_point deadline;
  bool has_deadline = false;
  int canonical_test_depth = 3;
  std::size_t transversal_cap = 1000000;
};

struct PaletteOutcome {
  bool capped = false;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  int best_cover = std::numeric_limits<int>::max();
  std::vector<std::uint64_t> best_blocks;
  std::vector<std::uint64_t> best_cover_family;
};

class PaletteSearch {
public:
  PaletteSearch(const PaletteConfig& cfg, std::uint64_t node_budget)
      : cfg_(cfg), node_budget_(node_budget) {
    small_sets_ =
        cfg.k_a >= 2 ? subsets_of_ground(cfg.l, cfg.k_a - 1) : std::vector<std::uint64_t>{};
    ka_sets_ = subsets_of_ground(cfg.l, cfg.k_a);
    small_cover_.assign(small_sets_.size(), 0);
    ka_cover_.assign(ka_sets_.size(), 0);
    uncovered_small_ = small_sets_.size();
    uncovered_ka_ = ka_sets_.size();
    small_per_block_ = binomial(cfg.l - cfg.k_b, cfg.k_a - 1);
    ka_per_block_ = binomial(cfg.l - cfg.k_b, cfg.k_a);
    full_ = cfg.l == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cfg.l) - 1;
  }

  /// Explores the subtree under `prefix`, accumulating into `out`.
  void run(const std::vector<std::uint64_t>& prefix, PaletteOutcome& out) {
    out_ = &out;
    for (std::uint64_t b : prefix) push_block(b);
    recurse();
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) pop_block(*it);
    out_ = nullptr;
  }

private:
  int effective_target() const { return std::min(cfg_.target, out_->best_cover - 1); }

  void push_block(std::uint64_t b) {
    blocks_.push_back(b);
    used_stack_.push_back(used_colours_);
    used_colours_ = std::max(used_colours_, 64 - std::countl_zero(b));
    std::uint64_t comp = full_ & ~b;
    if (!small_sets_.empty())
      for (std::uint64_t sub : subsets_of_mask(comp, cfg_.k_a - 1)) {
        std::size_t i = index_of(small_sets_, sub);
        if (small_cover_[i]++ == 0) --uncovered_small_;
      }
    if (!ka_sets_.empty())
      for (std::uint64_t sub : subsets_of_mask(comp, cfg_.k_a)) {
        std::size_t i = index_of(ka_sets_, sub);
        if (ka_cover_[i]++ == 0) --uncovered_ka_;
      }
  }

  void pop_block(std::uint64_t b) {
    blocks_.pop_back();
    used_colours_ = used_stack_.back();
    used_stack_.pop_back();
    std::uint64_t comp = full_ & ~b;
    if (!small_sets_.empty())
      for (std::uint64_t sub : subsets_of_mask(comp, cfg_.k_a - 1)) {
        std::size_t i = index_of(small_sets_, sub);
        if (--small_cover_[i] == 0) ++uncovered_small_;
      }
    if (!ka_sets_.empty())
      for (std::uint64_t sub : subsets_of_mask(comp, cfg_.k_a)) {
        std::size_t i = index_of(ka_sets_, sub);
        if (--ka_cover_[i] == 0) ++uncovered_ka_;
      }
  }

  static std::size_t index_of(const std::vector<std::uint64_t>& sorted, std::uint64_t v) {
    return std::size_t(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
  }

  bool budget_ok() {
    ++out_->nodes;
    if (++nodes_total_ > node_budget_) {
      out_->capped = true;
      return false;
    }
    if (cfg_.has_deadline && (nodes_total_ & 1023) == 0 && Clock::now() > cfg_.deadline) {
      out_->capped = true;
      return false;
    }
    return true;
  }

  void recurse() {
    if (out_->capped || !budget_ok()) return;

    int placed = int(blocks_.size());
    int rem = cfg_.b_distinct - placed;

    // Feasibility: sets smaller than k_a must all get a disjoint block,
    // else a too-small transversal survives to the leaf.
    if (cfg_.k_a >= 2 && uncovered_small_ > std::uint64_t(rem) * small_per_block_) return;
    // Uncovered k_a-sets are forced A-lists; later blocks cover at most
    // ka_per_block_ each.
    std::uint64_t coverable = std::uint64_t(rem) * ka_per_block_;
    std::uint64_t lower = uncovered_ka_ > coverable ? uncovered_ka_ - coverable : 0;
    if (effective_target() < 0 || lower > std::uint64_t(effective_target())) return;
    // The union must reach the full palette.
    if (cfg_.l - used_colours_ > rem * cfg_.k_b) return;

    if (rem == 0) {
      leaf();
      return;
    }

    if (placed > 0 && placed <= cfg_.canonical_test_depth &&
        detail::mask_family_has_smaller_relabelling(blocks_, cfg_.l))
      return;

    std::uint64_t last = blocks_.empty() ? 0 : blocks_.back();
    for (std::uint64_t cand :
         detail::next_canonical_blocks(cfg_.l, cfg_.k_b, last, used_colours_)) {
      push_block(cand);
      recurse();
      pop_block(cand);
      if (out_->capped) return;
    }
  }

  void leaf() {
    ++out_->leaves;
    Hypergraph h{cfg_.l, blocks_};
    auto trans = minimal_transversals(h, cfg_.transversal_cap);
    if (!trans) {
      out_->capped = true;
      return;
    }
    for (std::uint64_t t : trans->edges)
      if (popcount(t) < cfg_.k_a) return; // no A-side family can work here
    CoverResult cover = transversal_cover_number(*trans, cfg_.k_a, effective_target());
    if (cover.status != CoverResult::Status::OK || cover.exceeds_limit) return;
    if (cover.count < out_->best_cover) {
      out_->best_cover = cover.count;
      out_->best_blocks = blocks_;
      out_->best_cover_family = cover.family;
    }
  }

  PaletteConfig cfg_;
  std::uint64_t node_budget_;
  std::uint64_t nodes_total_ = 0;
  std::uint64_t full_ = 0;

  std::vector<std::uint64_t> small_sets_, ka_sets_;
  std::vector<std::uint32_t> small_cover_, ka_cover_;
  std::uint64_t uncovered_small_ = 0, uncovered_ka_ = 0;
  std::uint64_t small_per_block_ = 0, ka_per_block_ = 0;

  std::vector<std::uint64_t> blocks_;
  std::vector<int> used_stack_;
  int used_colours_ = 0;

  PaletteOutcome* out_ = nullptr;
};

// ---------------------------------------------------------------------
// Witness hunt: deterministic seeded hill climbing over B-list families,
// minimizing the cover number. Found families are self-certifying (the
// assembled certificate is re-verified), so the hunt may answer NO long
// before the exhaustive sweep could.
// ---------------------------------------------------------------------

struct HuntResult {
  int palette = 0;
  int cover = 0;
  std::vector<std::uint64_t> blocks;
  std::vector<std::uint64_t> cover_family;
};

class WitnessHunt {
public:
  WitnessHunt(int b, int k_a, int k_b, std::size_t transversal_cap)
      : b_(b), k_a_(k_a), k_b_(k_b),
        transversal_cap_(std::min<std::size_t>(transversal_cap, 2000)) {}

  std::optional<HuntResult> run(int palette_lo, int palette_hi, int target,
                                std::uint64_t eval_budget, Clock::time_point deadline) {
    deadline_ = deadline;
    std::optional<HuntResult> best;
    for (int pass = 0; pass < 3; ++pass) {
      int restarts = 8 << pass;
      for (int l = palette_lo; l <= palette_hi; ++l) {
        auto all_blocks = subsets_of_ground(l, k_b_);
        if (all_blocks.empty()) continue;
        Rng rng(0x9f0e3779u ^ (std::uint64_t(l) << 20) ^ std::uint64_t(pass));
        for (int r = 0; r < restarts; ++r) {
          std::vector<std::uint64_t> fam;
          for (int i = 0; i < b_; ++i)
            fam.push_back(all_blocks[rng.below(all_blocks.size())]);
          long cur = objective(fam, l, target);
          bool improved = true;
          while (improved && !exhausted(eval_budget)) {
            improved = false;
            for (int i = 0; i < b_ && !improved; ++i) {
              std::uint64_t old = fam[std::size_t(i)];
              for (std::uint64_t cand : all_blocks) {
                if (cand == old) continue;
                fam[std::size_t(i)] = cand;
                long v = objective(fam, l, target);
                if (v < cur) {
                  cur = v;
                  improved = true;
                  break;
                }
              }
              if (!improved) fam[std::size_t(i)] = old;
            }
          }
          if (cur <= target && cur < (best ? long(best->cover) : long(target) + 1)) {
            best = materialize(fam, l);
            if (best && best->cover <= target) return best;
            best.reset();
          }
          if (exhausted(eval_budget)) return best;
        }
      }
    }
    return best;
  }

private:
  bool exhausted(std::uint64_t eval_budget) {
    return evals_ >= eval_budget || ((evals_ & 63) == 0 && Clock::now() > deadline_);
  }

  long objective(const std::vector<std::uint64_t>& blocks, int l, int target) {
    ++evals_;
    Hypergraph h{l, blocks};
    auto trans = minimal_transversals(h, transversal_cap_);
    if (!trans) return 1000000;
    long undersized = 0;
    for (std::uint64_t t : trans->edges)
      if (popcount(t) < k_a_) ++undersized;
    if (undersized) return 100000 + undersized;
    CoverResult cover = transversal_cover_number(*trans, k_a_, std::max(target, 1) * 4);
    if (cover.status != CoverResult::Status::OK) return 90000;
    if (cover.exceeds_limit) return 80000;
    return cover.count;
  }

  std::optional<HuntResult> materialize(const std::vector<std::uint64_t>& blocks, int l) {
    Hypergraph h{l, blocks};
    auto trans = minimal_transversals(h, transversal_cap_);
    if (!trans) return std::nullopt;
    CoverResult cover = transversal_cover_number(*trans, k_a_);
    if (cover.status != CoverResult::Status::OK) return std::nullopt;
    HuntResult r;
    r.palette = l;
    r.cover = cover.count;
    r.blocks = blocks;
    std::sort(r.blocks.begin(), r.blocks.end(), mask_seq_less);
    r.blocks.erase(std::unique(r.blocks.begin(), r.blocks.end()), r.blocks.end());
    r.cover_family = cover.family;
    return r;
  }

  int b_, k_a_, k_b_;
  std::size_t transversal_cap_;
  std::uint64_t evals_ = 0;
  Clock::time_point deadline_;
};

NonChoosabilityCertificate assemble_witness(int l, int b,
                                            const std::vector<std::uint64_t>& blocks,
                                            const std::vector<std::uint64_t>& cover_family,
                                            int k_a, std::optional<int> pad_a_to,
                                            const std::string& note) {
  std::vector<ColourSet> lists_b;
  for (std::uint64_t m : blocks) lists_b.push_back(ColourSet::from_mask(l, m));
  while (int(lists_b.size()) < b) lists_b.push_back(lists_b.back());

  std::vector<std::uint64_t> a_masks = cover_family;
  if (pad_a_to) {
    for (std::uint64_t cand : subsets_of_ground(l, k_a)) {
      if (int(a_masks.size()) >= *pad_a_to) break;
      if (std::find(a_masks.begin(), a_masks.end(), cand) == a_masks.end())
        a_masks.push_back(cand);
    }
    while (int(a_masks.size()) < *pad_a_to) a_masks.push_back(a_masks.back());
    std::sort(a_masks.begin(), a_masks.end(), mask_seq_less);
  }
  std::vector<ColourSet> lists_a;
  for (std::uint64_t m : a_masks) lists_a.push_back(ColourSet::from_mask(l, m));

  NonChoosabilityCertificate cert;
  cert.graph = BipartiteGraph::complete(int(lists_a.size()), int(lists_b.size()));
  cert.assignment =
      ListAssignment::create_from_sets(l, std::move(lists_a), std::move(lists_b)).normalized();
  cert.provenance = Provenance::SEARCH;
  cert.notes = note;

  if (!verify_certificate(cert).verified)
    throw Error(ErrorCode::INCONSISTENT, "search witness failed verification");
  return cert;
}

} // namespace

ThresholdResult threshold_a(int b, int k_a, int k_b, int palette_cap, const SearchCaps& caps,
                            std::optional<int> decision_target) {
  if (b < 1 || k_a < 1 || k_b < 1)
    throw Error(ErrorCode::INCONSISTENT, "threshold parameters must be positive");
  ThresholdResult res;
  res.b = b;
  res.k_a = k_a;
  res.k_b = k_b;

  if (k_a > b) {
    res.status = ThresholdStatus::UNBOUNDED;
    res.proof_note = "A-lists exceed A-degrees; every instance is colourable";
    return res;
  }

  bool cap_explicit = palette_cap > 0;
  if (!cap_explicit) palette_cap = std::min(b * k_b, 64);
  if (palette_cap > 64)
    throw Error(ErrorCode::TOO_LARGE, "search kernel supports palettes up to 64 colours");

  auto deadline = Clock::now();
  bool has_deadline = caps.timeout_seconds > 0;
  if (has_deadline)
    deadline += std::chrono::milliseconds(std::int64_t(caps.timeout_seconds * 1000));

  int jobs = std::max(1, caps.jobs);
  int best_cover = std::numeric_limits<int>::max();
  std::vector<std::uint64_t> best_blocks, best_family;
  int best_palette = 0;
  bool capped = false;

  for (int l = std::max({k_b, k_a, 1}); l <= palette_cap && !capped; ++l) {
    std::uint64_t total_blocks = binomial(l, k_b);
    int b_eff = std::uint64_t(b) < total_blocks ? b : int(total_blocks);

    PaletteConfig cfg;
    cfg.l = l;
    cfg.k_b = k_b;
    cfg.k_a = k_a;
    cfg.b_distinct = b_eff;
    cfg.target = decision_target ? std::min(*decision_target, best_cover - 1) : best_cover - 1;
    cfg.deadline = deadline;
    cfg.has_deadline = has_deadline;
    cfg.canonical_test_depth = caps.canonical_test_depth;
    cfg.transversal_cap = caps.transversal_cap;

    // Work units: prefixes of length min(2, b_eff). Units are explored in
    // order and merged in order, so the outcome is worker-count-independent.
    std::vector<std::vector<std::uint64_t>> units;
    auto roots = detail::next_canonical_blocks(l, k_b, 0, 0);
    for (std::uint64_t r : roots) {
      if (b_eff == 1) {
        units.push_back({r});
      } else {
        int used = 64 - std::countl_zero(r);
        for (std::uint64_t second : detail::next_canonical_blocks(l, k_b, r, used))
          units.push_back({r, second});
      }
    }

    std::vector<PaletteOutcome> outcomes(units.size());
    std::uint64_t per_worker_budget =
        std::max<std::uint64_t>(1, caps.max_nodes / std::uint64_t(jobs));
    auto run_stripe = [&](int stripe) {
      PaletteSearch search(cfg, per_worker_budget);
      for (std::size_t i = std::size_t(stripe); i < units.size(); i += std::size_t(jobs))
        search.run(units[i], outcomes[i]);
    };
    if (jobs == 1) {
      run_stripe(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(std::size_t(jobs));
      for (int s = 0; s < jobs; ++s) pool.emplace_back(run_stripe, s);
      for (auto& t : pool) t.join();
    }

    for (const auto& out : outcomes) {
      res.nodes += out.nodes;
      res.families_examined += out.leaves;
      if (out.capped) capped = true;
      if (out.best_cover < best_cover) {
        best_cover = out.best_cover;
        best_blocks = out.best_blocks;
        best_family = out.best_cover_family;
        best_palette = l;
      }
    }
    if (!capped) {
      res.exhausted_palette = l;
      if (decision_target && best_cover <= *decision_target) break;
    }
  }

  if (best_cover < std::numeric_limits<int>::max()) {
    res.a_star = best_cover;
    res.witness_palette = best_palette;
    res.witness = assemble_witness(
        best_palette, b, best_blocks, best_family, k_a, std::nullopt,
        "threshold search: palette " + std::to_string(best_palette) + ", " +
            std::to_string(res.families_examined) + " families examined");
  }

  bool decided_early = decision_target && best_cover <= *decision_target;
  bool exhausted_all = res.exhausted_palette >= std::min(b * k_b, 64) && b * k_b <= 64;
  if (decided_early || (exhausted_all && !capped)) {
    res.status = ThresholdStatus::EXACT;
  } else {
    res.status = ThresholdStatus::CAPPED;
    res.proof_note = "bracket: a* <= " +
                     (res.a_star >= 0 ? std::to_string(res.a_star) : std::string("inf")) +
                     ", palettes exhausted through " + std::to_string(res.exhausted_palette);
  }
  return res;
}

ChoosabilityAnswer is_choosable_complete(int a, int b, int k_a, int k_b, int palette_cap,
                                         const SearchCaps& caps) {
  if (a < 1) throw Error(ErrorCode::INCONSISTENT, "a must be positive");
  ChoosabilityAnswer ans;
  if (k_a > b) {
    ans.verdict = ChoosabilityAnswer::Verdict::YES;
    ans.detail.status = ThresholdStatus::UNBOUNDED;
    ans.detail.b = b;
    ans.detail.k_a = k_a;
    ans.detail.k_b = k_b;
    return ans;
  }
  // Witness-first: a verified certificate decides NO without exhausting
  // the family space.
  {
    int hunt_cap = palette_cap > 0 ? palette_cap : std::min(b * k_b, 64);
    WitnessHunt hunt(b, k_a, k_b, caps.transversal_cap);
    double budget_s = caps.hunt_seconds;
    if (caps.timeout_seconds > 0) budget_s = std::min(budget_s, caps.timeout_seconds / 2);
    auto found = hunt.run(std::max({k_a, k_b, 1}), hunt_cap, a, caps.hunt_evals,
                          Clock::now() + std::chrono::milliseconds(std::int64_t(budget_s * 1000)));
    if (found && found->cover <= a) {
      ans.verdict = ChoosabilityAnswer::Verdict::NO;
      ans.witness = assemble_witness(found->palette, b, found->blocks, found->cover_family,
                                     k_a, a,
                                     "local-search witness: palette " +
                                         std::to_string(found->palette) + ", cover " +
                                         std::to_string(found->cover) + ", trimmed to |A|=" +
                                         std::to_string(a));
      ans.detail.b = b;
      ans.detail.k_a = k_a;
      ans.detail.k_b = k_b;
      ans.detail.status = ThresholdStatus::CAPPED;
      ans.detail.a_star = found->cover;
      ans.detail.witness_palette = found->palette;
      ans.detail.witness = ans.witness;
      ans.detail.proof_note = "upper bracket from local search";
      return ans;
    }
  }

  ans.detail = threshold_a(b, k_a, k_b, palette_cap, caps, a);
  if (ans.detail.a_star >= 0 && ans.detail.a_star <= a) {
    ans.verdict = ChoosabilityAnswer::Verdict::NO;
    const auto& w = *ans.detail.witness;
    std::vector<std::uint64_t> blocks, family;
    for (const auto& lst : w.assignment.lists_b()) blocks.push_back(lst.low64());
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    for (const auto& lst : w.assignment.lists_a()) family.push_back(lst.low64());
    ans.witness = assemble_witness(w.assignment.palette(), b, blocks, family, k_a, a,
                                   "trimmed to |A|=" + std::to_string(a));
  } else if (ans.detail.status == ThresholdStatus::EXACT) {
    ans.verdict = ChoosabilityAnswer::Verdict::YES;
  } else {
    ans.verdict = ChoosabilityAnswer::Verdict::UNKNOWN;
  }
  return ans;
}

} // namespace bilist::search
