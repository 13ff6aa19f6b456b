#include "bilist/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "bilist/bounds.hpp"
#include "bilist/choosability.hpp"
#include "bilist/colorability.hpp"
#include "bilist/combinatorics.hpp"
#include "bilist/error.hpp"
#include "bilist/hypergraph.hpp"
#include "bilist/steiner.hpp"

namespace bilist::construct {

namespace {

NonChoosabilityCertificate finish_complete(std::vector<ColourSet> lists_a,
                                           std::vector<ColourSet> lists_b, int palette,
                                           Provenance provenance, std::string notes) {
  NonChoosabilityCertificate cert;
  cert.graph = BipartiteGraph::complete(int(lists_a.size()), int(lists_b.size()));
  cert.assignment =
      ListAssignment::create_from_sets(palette, std::move(lists_a), std::move(lists_b)).normalized();
  cert.provenance = provenance;
  cert.notes = std::move(notes);
  if (!verify_certificate(cert).verified)
    throw Error(ErrorCode::INCONSISTENT, "constructed certificate failed verification");
  return cert;
}

std::vector<std::vector<int>> cartesian_tuples(const std::vector<std::vector<int>>& pools) {
  std::vector<std::vector<int>> out{{}};
  for (const auto& pool : pools) {
    std::vector<std::vector<int>> next;
    next.reserve(out.size() * pool.size());
    for (const auto& prefix : out)
      for (int c : pool) {
        auto t = prefix;
        t.push_back(c);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

} // namespace

NonChoosabilityCertificate construct_classic(int k, int delta, const SizeCaps& caps) {
  if (k < 2 || delta < 2)
    throw Error(ErrorCode::INCONSISTENT, "construction needs k, delta >= 2");
  double a_size = std::pow(double(delta), double(k));
  if (a_size > double(caps.max_lists))
    throw Error(ErrorCode::SIZE, "delta^k exceeds the list cap");
  int palette = k * delta;
  if (palette > caps.max_palette) throw Error(ErrorCode::SIZE, "palette exceeds cap");

  std::vector<ColourSet> lists_b;
  std::vector<std::vector<int>> pools;
  for (int j = 0; j < k; ++j) {
    ColourSet block(palette);
    std::vector<int> pool;
    for (int c = j * delta; c < (j + 1) * delta; ++c) {
      block.set(c);
      pool.push_back(c);
    }
    lists_b.push_back(block);
    pools.push_back(pool);
  }
  std::vector<ColourSet> lists_a;
  for (const auto& tuple : cartesian_tuples(pools)) lists_a.push_back(ColourSet::of(palette, tuple));

  return finish_complete(std::move(lists_a), std::move(lists_b), palette, Provenance::CLASSIC,
                         "k=" + std::to_string(k) + " delta=" + std::to_string(delta));
}

NonChoosabilityCertificate construct_steiner(const SetFamily& fam_a, const SetFamily& fam_b,
                                             const SizeCaps& caps) {
  if (fam_a.ground_size != fam_b.ground_size)
    throw Error(ErrorCode::INCONSISTENT, "families must share one ground set");
  int l = fam_a.ground_size;
  if (std::int64_t(fam_a.size()) > caps.max_lists || std::int64_t(fam_b.size()) > caps.max_lists)
    throw Error(ErrorCode::SIZE, "family exceeds the list cap");

  int tau_a = steiner::min_hitting_set_size(fam_a);
  int tau_b = steiner::min_hitting_set_size(fam_b);
  if (tau_a + tau_b < l + 1) {
    // No split k1+k2 = l-1 leaves both families without a hitting set.
    int k1 = tau_a;
    auto witness = steiner::has_property_a(fam_a, k1);
    std::string w = "{";
    if (witness)
      for (std::size_t i = 0; i < witness->size(); ++i)
        w += (i ? "," : "") + std::to_string((*witness)[i]);
    w += "}";
    throw Error(ErrorCode::PROPERTY_A_HOLDS,
                "A-side family admits the hitting set " + w + " of size " + std::to_string(k1) +
                    "; hitting numbers " + std::to_string(tau_a) + "+" + std::to_string(tau_b) +
                    " <= ground size " + std::to_string(l));
  }
  int k1 = std::max(1, l - tau_b);
  int k2 = l - 1 - k1;

  std::vector<ColourSet> lists_a, lists_b;
  for (std::uint64_t m : fam_a.blocks) lists_a.push_back(ColourSet::from_mask(l, m));
  for (std::uint64_t m : fam_b.blocks) lists_b.push_back(ColourSet::from_mask(l, m));
  return finish_complete(std::move(lists_a), std::move(lists_b), l, Provenance::STEINER,
                         "split k1=" + std::to_string(k1) + " k2=" + std::to_string(k2) +
                             " over ground " + std::to_string(l));
}

BoundaryParams BoundaryParams::derive(int b, int delta) {
  if (b < 3 || delta < 2)
    throw Error(ErrorCode::INCONSISTENT, "boundary construction needs b >= 3, delta >= 2");
  BoundaryParams p;
  p.b = b;
  p.delta = delta;
  p.q = delta / (b - 1);
  p.r = delta % (b - 1);
  return p;
}

namespace {

// Shared tail of the boundary construction: B-lists in, mechanical cover
// of the minimal transversals out.
NonChoosabilityCertificate boundary_from_lists(const std::vector<std::vector<int>>& raw_b,
                                               int palette, int b, int delta,
                                               const std::string& split_note) {
  Hypergraph h;
  h.vertex_count = palette;
  for (const auto& list : raw_b) {
    std::uint64_t m = 0;
    for (int c : list) m |= std::uint64_t{1} << c;
    h.edges.push_back(m);
  }
  auto trans = minimal_transversals(h);
  if (!trans) throw Error(ErrorCode::TOO_LARGE, "transversal family exceeds cap");
  auto cover = search::transversal_cover_number(*trans, b - 1);
  if (cover.status != search::CoverResult::Status::OK)
    throw Error(ErrorCode::INCONSISTENT, "boundary instance has no valid A-side");

  std::int64_t formula = bounds::boundary_threshold(b, delta);
  std::string note = split_note + "; cover=" + std::to_string(cover.count) +
                     " formula=" + std::to_string(formula);
  if (std::int64_t(cover.count) != formula)
    note += " [DISAGREEMENT: search differs from closed form]";

  std::vector<ColourSet> lists_a;
  for (std::uint64_t m : cover.family) lists_a.push_back(ColourSet::from_mask(palette, m));
  std::vector<ColourSet> lists_b;
  for (const auto& list : raw_b) lists_b.push_back(ColourSet::of(palette, list));
  return finish_complete(std::move(lists_a), std::move(lists_b), palette, Provenance::BOUNDARY,
                         note);
}

} // namespace

NonChoosabilityCertificate construct_boundary(const BoundaryParams& params,
                                              const SizeCaps& caps) {
  int b = params.b, delta = params.delta;
  if (b < 3 || delta < 2)
    throw Error(ErrorCode::INCONSISTENT, "boundary construction needs b >= 3, delta >= 2");
  if (b * delta > 64)
    throw Error(ErrorCode::SIZE, "boundary kernel needs palette b*delta <= 64");
  std::int64_t formula = bounds::boundary_threshold(b, delta);
  if (formula > caps.max_lists) throw Error(ErrorCode::SIZE, "threshold exceeds the list cap");

  auto raw_b = std::vector<std::vector<int>>(std::size_t(b));
  int next_colour = 0;
  std::string split_note;

  if (b >= 5) {
    // One vertex shares a block with each of v_2..v_{b-1}; shares and the
    // leftover of v_1's list are as equal as possible, larger parts first.
    std::vector<int> parts(std::size_t(b - 1), params.q);
    for (int i = 0; i < params.r; ++i) parts[std::size_t(i)]++;
    auto share = std::vector<int>(std::size_t(b), 0); // share[j] for j=2..b-1
    for (int j = 2; j <= b - 1; ++j) share[std::size_t(j - 1)] = parts[std::size_t(j - 2)];

    std::vector<int> v1;
    auto shared_block = std::vector<std::vector<int>>(std::size_t(b));
    for (int j = 2; j <= b - 1; ++j) {
      for (int t = 0; t < share[std::size_t(j - 1)]; ++t) {
        shared_block[std::size_t(j - 1)].push_back(next_colour);
        v1.push_back(next_colour++);
      }
    }
    while (int(v1.size()) < delta) v1.push_back(next_colour++); // leftover R
    raw_b[0] = v1;
    for (int j = 2; j <= b; ++j) {
      std::vector<int> list = shared_block[std::size_t(j - 1)];
      while (int(list.size()) < delta) list.push_back(next_colour++);
      raw_b[std::size_t(j - 1)] = list;
    }
    split_note = "one-vertex sharing, q=" + std::to_string(params.q) +
                 " r=" + std::to_string(params.r);
  } else {
    // b in {3,4}: pairwise shares among the first three vertices; pick
    // the split minimizing the blocking count.
    auto count_for = [&](int l12, int l13, int l23) -> std::int64_t {
      std::int64_t s1 = l12 + l13 + l23;
      std::int64_t s2 =
          std::int64_t(l12) * l13 + std::int64_t(l12) * l23 + std::int64_t(l13) * l23;
      std::int64_t f1 = delta - l12 - l13, f2 = delta - l12 - l23, f3 = delta - l13 - l23;
      if (b == 4) return s1 * delta * delta - s2 * delta + f1 * f2 * f3;
      // b == 3: a size-3 transversal is blocked by dropping the vertex
      // with the largest private part.
      std::int64_t fs[3] = {f1, f2, f3};
      std::sort(fs, fs + 3);
      return s1 * delta - s2 + fs[0] * fs[1];
    };
    std::int64_t best = -1;
    int b12 = 0, b13 = 0, b23 = 0;
    for (int l12 = 0; l12 <= delta; ++l12)
      for (int l13 = 0; l13 <= l12; ++l13)
        for (int l23 = 0; l23 <= l13 && l12 + l13 <= delta; ++l23) {
          std::int64_t c = count_for(l12, l13, l23);
          if (best < 0 || c < best) {
            best = c;
            b12 = l12;
            b13 = l13;
            b23 = l23;
          }
        }
    std::vector<int> s12, s13, s23;
    for (int t = 0; t < b12; ++t) s12.push_back(next_colour++);
    for (int t = 0; t < b13; ++t) s13.push_back(next_colour++);
    for (int t = 0; t < b23; ++t) s23.push_back(next_colour++);
    auto fill = [&](std::vector<int> base) {
      while (int(base.size()) < delta) base.push_back(next_colour++);
      std::sort(base.begin(), base.end());
      return base;
    };
    auto join = [](const std::vector<int>& x, const std::vector<int>& y) {
      std::vector<int> out = x;
      out.insert(out.end(), y.begin(), y.end());
      return out;
    };
    raw_b[0] = fill(join(s12, s13));
    raw_b[1] = fill(join(s12, s23));
    raw_b[2] = fill(join(s13, s23));
    if (b == 4) raw_b[3] = fill({});
    split_note = "pairwise sharing l12=" + std::to_string(b12) + " l13=" +
                 std::to_string(b13) + " l23=" + std::to_string(b23);
  }

  return boundary_from_lists(raw_b, next_colour, b, delta, split_note);
}

std::vector<GadgetLevel> gadget_levels(int k, int delta, const SizeCaps& caps) {
  if (k < 2 || delta < 2)
    throw Error(ErrorCode::INCONSISTENT, "gadget needs k, delta >= 2");

  // Size preflight.
  double a_count = std::pow(double(delta), double(k - 1));
  double b_count = k, palette = k * delta;
  for (int i = 1; i < delta; ++i) {
    a_count = a_count * k + std::pow(double(delta - i), double(k - 1));
    b_count *= k;
    palette *= k;
  }
  if (a_count > double(caps.max_lists) || palette > double(caps.max_palette))
    throw Error(ErrorCode::SIZE, "gadget exceeds size caps");

  std::vector<GadgetLevel> levels;

  // Level 1: complete graph, k disjoint delta-lists on B, A-lists formed
  // from the first colour of the first block and one colour from each
  // other block.
  {
    int pal = k * delta;
    std::vector<ColourSet> lists_b;
    std::vector<std::vector<int>> pools;
    for (int j = 0; j < k; ++j) {
      ColourSet block(pal);
      std::vector<int> pool;
      for (int c = j * delta; c < (j + 1) * delta; ++c) {
        block.set(c);
        pool.push_back(c);
      }
      lists_b.push_back(block);
      if (j >= 1) pools.push_back(pool);
    }
    std::vector<ColourSet> lists_a;
    std::vector<ColourSet> rows;
    ColourSet all_b(k);
    for (int j = 0; j < k; ++j) all_b.set(j);
    for (const auto& tuple : cartesian_tuples(pools)) {
      auto colours = tuple;
      colours.push_back(0);
      lists_a.push_back(ColourSet::of(pal, colours));
      rows.push_back(all_b);
    }
    GadgetLevel level;
    level.graph = BipartiteGraph::from_rows(k, rows);
    level.assignment = ListAssignment::create_from_sets(pal, lists_a, lists_b);
    level.designated_b = 0;
    level.allowed = ColourSet(pal);
    for (int c = 1; c < delta; ++c) level.allowed.set(c);
    levels.push_back(std::move(level));
  }

  for (int i = 1; i < delta; ++i) {
    const GadgetLevel& prev = levels.back();
    int pal_prev = prev.assignment.palette();
    int a_prev = prev.graph.a_size();
    int b_prev = prev.graph.b_size();
    int pal = k * pal_prev;

    auto shift = [&](const ColourSet& s, int offset) {
      ColourSet out(pal);
      s.for_each([&](int c) { out.set(c + offset); });
      return out;
    };

    std::vector<ColourSet> lists_a, lists_b, rows;
    for (int copy = 0; copy < k; ++copy) {
      int pal_off = copy * pal_prev;
      int b_off = copy * b_prev;
      for (int v = 0; v < a_prev; ++v) {
        lists_a.push_back(shift(prev.assignment.list_a(v), pal_off));
        ColourSet row(k * b_prev);
        prev.graph.row(v).for_each([&](int w) { row.set(w + b_off); });
        rows.push_back(row);
      }
    }
    for (int copy = 0; copy < k; ++copy) {
      int pal_off = copy * pal_prev;
      for (int w = 0; w < b_prev; ++w)
        lists_b.push_back(shift(prev.assignment.list_b(w), pal_off));
    }

    // New A-vertices adjacent to every copy of the designated vertex,
    // with lists over the restricted colour ranges.
    int pinned = prev.allowed.lowest(); // colour c* in copy 0
    std::vector<std::vector<int>> pools;
    for (int copy = 1; copy < k; ++copy) {
      std::vector<int> pool;
      prev.allowed.for_each([&](int c) { pool.push_back(c + copy * pal_prev); });
      pools.push_back(pool);
    }
    ColourSet designated_row(k * b_prev);
    for (int copy = 0; copy < k; ++copy)
      designated_row.set(prev.designated_b + copy * b_prev);
    for (const auto& tuple : cartesian_tuples(pools)) {
      auto colours = tuple;
      colours.push_back(pinned);
      lists_a.push_back(ColourSet::of(pal, colours));
      rows.push_back(designated_row);
    }

    GadgetLevel level;
    level.graph = BipartiteGraph::from_rows(k * b_prev, rows);
    level.assignment = ListAssignment::create_from_sets(pal, lists_a, lists_b);
    level.designated_b = prev.designated_b;
    level.allowed = shift(prev.allowed, 0);
    level.allowed.reset(pinned);
    levels.push_back(std::move(level));
  }
  return levels;
}

NonChoosabilityCertificate construct_gadget(int k, int delta, const SizeCaps& caps) {
  auto levels = gadget_levels(k, delta, caps);
  const GadgetLevel& last = levels.back();
  NonChoosabilityCertificate cert;
  cert.graph = last.graph;
  cert.assignment = last.assignment.normalized();
  cert.provenance = Provenance::GADGET;
  cert.notes = "k=" + std::to_string(k) + " delta=" + std::to_string(delta) +
               " max B-degree " + std::to_string(last.graph.max_degree_b());
  if (!verify_certificate(cert).verified)
    throw Error(ErrorCode::INCONSISTENT, "gadget certificate failed verification");
  return cert;
}

Cond3Result construct_witness_cond3(int k, double delta, std::optional<int> m_override,
                                    std::optional<int> segments_override, std::uint64_t seed,
                                    const SizeCaps& caps) {
  if (k < 2) throw Error(ErrorCode::INCONSISTENT, "needs k >= 2");
  if (delta < 2) throw Error(ErrorCode::INCONSISTENT, "needs delta >= 2");
  Cond3Result result;
  Cond3Report& rep = result.report;
  rep.k = k;
  rep.delta = delta;
  rep.c = 1.0 / (4.0 * k * (k - 1));
  rep.m_real = rep.c * std::pow(delta / std::log(delta), 1.0 / k) * std::log(delta);

  if (m_override) {
    rep.m = *m_override;
  } else {
    rep.m = int(std::llround(rep.m_real / 2.0) * 2); // round to even
  }
  if (rep.m < 2 * k) rep.m = 2 * k;
  if (rep.m % 2) ++rep.m;

  if (segments_override) {
    rep.segments = std::max(1, *segments_override);
  } else {
    rep.segments = std::max(1, int(std::llround(std::log(double(rep.m)) / (2.0 * (k - 1)))));
  }
  rep.k1 = (k - 1) * rep.segments;

  // Near-equal segment sizes, larger first.
  int base = rep.m / rep.segments, extra = rep.m % rep.segments;
  for (int s = 0; s < rep.segments; ++s)
    rep.segment_sizes.push_back(base + (s < extra ? 1 : 0));
  rep.b_size = 0;
  for (int sz : rep.segment_sizes) rep.b_size += std::int64_t(binomial(sz, k));

  if (rep.m > 64 || rep.b_size > caps.max_lists || rep.b_size == 0) {
    rep.note = "scale: m=" + std::to_string(rep.m) + " beyond build caps; report only";
    return result;
  }
  if (rep.k1 + rep.m / 2 > rep.m) {
    rep.note = "degenerate: k1 + m/2 exceeds m; no blocking family exists";
    return result;
  }

  // A-side family of (m/2)-subsets of [m] without a k1-hitting-set:
  // exact search at tiny sizes, sampled upper-bound family otherwise.
  SetFamily fam_a;
  std::string fam_note;
  steiner::MbarCaps mcaps;
  mcaps.max_nodes = 2'000'000;
  bool have_family = false;
  try {
    auto mb = steiner::mbar_exact(rep.k1, rep.m / 2, rep.m, mcaps);
    if (mb.status == steiner::MbarResult::Status::EXACT) {
      fam_a = *mb.extremal;
      fam_note = "extremal family (exact)";
      have_family = true;
    }
  } catch (const Error&) {
  }
  if (!have_family) {
    fam_a = steiner::random_family_upper(rep.k1, rep.m / 2, rep.m, seed);
    fam_note = "sampled family (upper bound)";
  }
  rep.a_size = std::int64_t(fam_a.size());
  rep.degree_bound_a_ok = double(rep.b_size) <= delta;
  rep.degree_bound_b_ok = double(rep.a_size) <= delta;

  std::vector<ColourSet> lists_a;
  for (std::uint64_t mmask : fam_a.blocks) lists_a.push_back(ColourSet::from_mask(rep.m, mmask));
  std::vector<ColourSet> lists_b;
  int offset = 0;
  for (int sz : rep.segment_sizes) {
    std::uint64_t seg = ((sz == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sz) - 1))
                        << offset;
    for (std::uint64_t sub : subsets_of_mask(seg, k))
      lists_b.push_back(ColourSet::from_mask(rep.m, sub));
    offset += sz;
  }

  result.certificate = finish_complete(std::move(lists_a), std::move(lists_b), rep.m,
                                       Provenance::WITNESS,
                                       "segments=" + std::to_string(rep.segments) +
                                           " k1=" + std::to_string(rep.k1) + "; " + fam_note);
  rep.built = true;
  rep.note = fam_note;
  return result;
}

NonChoosabilityCertificate trim_a_lists(const NonChoosabilityCertificate& cert, int target_a) {
  if (!cert.graph.complete_graph())
    throw Error(ErrorCode::SHAPE_MISMATCH, "trimming needs a complete-graph certificate");
  const ListAssignment& l = cert.assignment;
  if (l.palette() > 64) throw Error(ErrorCode::TOO_LARGE, "trim kernel needs palette <= 64");
  if (target_a > l.a_size())
    throw Error(ErrorCode::SIZE, "target exceeds the certificate's A side");

  Hypergraph h;
  h.vertex_count = l.palette();
  for (const auto& list : l.lists_b()) h.edges.push_back(list.low64());
  auto trans = minimal_transversals(h);
  if (!trans) throw Error(ErrorCode::TOO_LARGE, "transversal family exceeds cap");

  std::vector<std::uint64_t> candidates;
  for (const auto& list : l.lists_a()) candidates.push_back(list.low64());
  std::sort(candidates.begin(), candidates.end(), mask_seq_less);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Greedy-first exact cover restricted to the existing A-lists.
  std::vector<std::uint64_t> kept;
  std::vector<bool> covered(trans->edges.size(), false);
  auto coverage = [&](std::uint64_t x) {
    std::vector<std::size_t> hit;
    for (std::size_t i = 0; i < trans->edges.size(); ++i)
      if (!covered[i] && (x & ~trans->edges[i]) == 0) hit.push_back(i);
    return hit;
  };
  // Forced: transversals coverable by exactly one candidate.
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < trans->edges.size(); ++i) {
      if (covered[i]) continue;
      std::uint64_t only = 0;
      int count = 0;
      for (std::uint64_t x : candidates)
        if ((x & ~trans->edges[i]) == 0) {
          only = x;
          if (++count > 1) break;
        }
      if (count == 0)
        throw Error(ErrorCode::SIZE, "certificate cannot be trimmed: uncovered transversal");
      if (count == 1 && std::find(kept.begin(), kept.end(), only) == kept.end()) {
        kept.push_back(only);
        for (std::size_t j : coverage(only)) covered[j] = true;
        progress = true;
      }
    }
  }
  // Greedy for the remainder (candidates in order).
  for (std::size_t i = 0; i < trans->edges.size(); ++i) {
    if (covered[i]) continue;
    std::uint64_t pick = 0;
    std::size_t best = 0;
    for (std::uint64_t x : candidates)
      if ((x & ~trans->edges[i]) == 0) {
        std::size_t score = coverage(x).size();
        if (score > best) {
          best = score;
          pick = x;
        }
      }
    kept.push_back(pick);
    for (std::size_t j : coverage(pick)) covered[j] = true;
  }
  if (int(kept.size()) > target_a)
    throw Error(ErrorCode::SIZE, "no covering subfamily within the target size");
  // Pad deterministically with further original lists.
  for (std::uint64_t x : candidates) {
    if (int(kept.size()) >= target_a) break;
    if (std::find(kept.begin(), kept.end(), x) == kept.end()) kept.push_back(x);
  }
  std::sort(kept.begin(), kept.end(), mask_seq_less);

  std::vector<ColourSet> lists_a;
  for (std::uint64_t x : kept) lists_a.push_back(ColourSet::from_mask(l.palette(), x));
  return finish_complete(std::move(lists_a), l.lists_b(), l.palette(), cert.provenance,
                         cert.notes + "; trimmed to |A|=" + std::to_string(target_a));
}

} // namespace bilist::construct
