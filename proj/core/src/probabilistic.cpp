#include "bilist/probabilistic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bilist/error.hpp"
#include "bilist/rng.hpp"

namespace bilist::prob {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt bigint_pow(BigInt base, int exp) {
  BigInt r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

Rational rational_pow(const Rational& base, int exp) {
  Rational r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

} // namespace

void PartitionedHypergraph::validate() const {
  std::vector<int> seen(std::size_t(vertex_count), 0);
  std::size_t size = parts.empty() ? 0 : parts.front().size();
  for (const auto& part : parts) {
    if (part.size() != size)
      throw Error(ErrorCode::INCONSISTENT, "parts must have equal sizes");
    for (int v : part) {
      if (v < 0 || v >= vertex_count)
        throw Error(ErrorCode::INCONSISTENT, "part vertex out of range");
      if (seen[std::size_t(v)]++)
        throw Error(ErrorCode::INCONSISTENT, "parts must be disjoint");
    }
  }
  for (int v = 0; v < vertex_count; ++v)
    if (!seen[std::size_t(v)])
      throw Error(ErrorCode::INCONSISTENT, "parts must cover every vertex");
  for (const auto& e : edges) {
    if (e.empty()) throw Error(ErrorCode::INCONSISTENT, "empty edge");
    for (int v : e)
      if (v < 0 || v >= vertex_count)
        throw Error(ErrorCode::INCONSISTENT, "edge vertex out of range");
  }
}

int PartitionedHypergraph::max_part_degree_sum() const {
  std::vector<int> part_of(std::size_t(vertex_count), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v : parts[p]) part_of[std::size_t(v)] = int(p);
  std::vector<int> sum(parts.size(), 0);
  for (const auto& e : edges) {
    std::vector<int> touched;
    for (int v : e) touched.push_back(part_of[std::size_t(v)]);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int p : touched) ++sum[std::size_t(p)];
  }
  return sum.empty() ? 0 : *std::max_element(sum.begin(), sum.end());
}

SamplerOutcome sample_independent_transversal(const PartitionedHypergraph& h,
                                              std::uint64_t seed, std::uint64_t budget) {
  h.validate();
  SamplerOutcome out;
  out.seed = seed;
  out.budget = budget;
  out.algorithm = Rng::kAlgorithm;

  Rng rng(seed);
  std::vector<int> part_of(std::size_t(h.vertex_count), -1);
  for (std::size_t p = 0; p < h.parts.size(); ++p)
    for (int v : h.parts[p]) part_of[std::size_t(v)] = int(p);

  std::vector<int> choice(h.parts.size());
  std::vector<char> chosen(std::size_t(h.vertex_count), 0);
  auto draw_part = [&](std::size_t p) {
    chosen[std::size_t(h.parts[p][std::size_t(choice[p])])] = 0;
    choice[p] = rng.below_int(int(h.parts[p].size()));
    chosen[std::size_t(h.parts[p][std::size_t(choice[p])])] = 1;
  };
  for (std::size_t p = 0; p < h.parts.size(); ++p) {
    choice[p] = rng.below_int(int(h.parts[p].size()));
    chosen[std::size_t(h.parts[p][std::size_t(choice[p])])] = 1;
  }

  while (true) {
    int violated = -1;
    for (std::size_t ei = 0; ei < h.edges.size(); ++ei) {
      bool inside = true;
      for (int v : h.edges[ei])
        if (!chosen[std::size_t(v)]) {
          inside = false;
          break;
        }
      if (inside) {
        violated = int(ei);
        break;
      }
    }
    if (violated < 0) break;
    if (out.resample_count >= budget) {
      out.success = false;
      out.note = "budget exhausted";
      return out;
    }
    ++out.resample_count;
    std::vector<int> parts_to_redraw;
    for (int v : h.edges[std::size_t(violated)])
      parts_to_redraw.push_back(part_of[std::size_t(v)]);
    std::sort(parts_to_redraw.begin(), parts_to_redraw.end());
    parts_to_redraw.erase(std::unique(parts_to_redraw.begin(), parts_to_redraw.end()),
                          parts_to_redraw.end());
    for (int p : parts_to_redraw) draw_part(std::size_t(p));
  }

  // Re-verify independence before returning.
  for (const auto& e : h.edges) {
    bool inside = true;
    for (int v : e)
      if (!chosen[std::size_t(v)]) inside = false;
    if (inside) throw Error(ErrorCode::INCONSISTENT, "sampler returned a non-independent set");
  }
  out.success = true;
  out.transversal.reserve(h.parts.size());
  for (std::size_t p = 0; p < h.parts.size(); ++p)
    out.transversal.push_back(h.parts[p][std::size_t(choice[p])]);
  return out;
}

PartitionedHypergraph list_instance_hypergraph(const BipartiteGraph& graph,
                                               const ListAssignment& assignment,
                                               std::size_t edge_cap) {
  if (!assignment.shape_matches(graph))
    throw Error(ErrorCode::SHAPE_MISMATCH, "assignment does not fit the graph");
  PartitionedHypergraph h;
  int k_b = assignment.k_b();
  h.vertex_count = graph.b_size() * k_b;

  // Vertex (w, c) = w*k_b + index of c in L(w); parts follow B-lists.
  std::vector<std::vector<int>> colour_of(std::size_t(graph.b_size()));
  for (int w = 0; w < graph.b_size(); ++w) {
    std::vector<int> part;
    colour_of[std::size_t(w)] = assignment.list_b(w).to_vector();
    for (int i = 0; i < k_b; ++i) part.push_back(w * k_b + i);
    h.parts.push_back(std::move(part));
  }

  int k_a = assignment.k_a();
  for (int v = 0; v < graph.a_size(); ++v) {
    std::vector<int> nbrs;
    for (int w = 0; w < graph.b_size(); ++w)
      if (graph.adjacent(v, w)) nbrs.push_back(w);
    if (int(nbrs.size()) < k_a) continue; // the vertex can never be blocked
    std::vector<int> colours = assignment.list_a(v).to_vector();

    auto select = std::vector<int>(std::size_t(k_a));
    std::iota(select.begin(), select.end(), 0);
    while (true) {
      // All bijections of the list onto this neighbour subset.
      std::vector<int> perm = colours;
      std::sort(perm.begin(), perm.end());
      do {
        std::vector<int> edge;
        bool feasible = true;
        for (int i = 0; i < k_a && feasible; ++i) {
          int w = nbrs[std::size_t(select[std::size_t(i)])];
          int c = perm[std::size_t(i)];
          const auto& wc = colour_of[std::size_t(w)];
          auto it = std::find(wc.begin(), wc.end(), c);
          if (it == wc.end())
            feasible = false; // the neighbour cannot take this colour
          else
            edge.push_back(w * k_b + int(it - wc.begin()));
        }
        if (feasible) {
          std::sort(edge.begin(), edge.end());
          h.edges.push_back(std::move(edge));
          if (h.edges.size() > edge_cap)
            throw Error(ErrorCode::TOO_LARGE, "reduction exceeds the edge cap");
        }
      } while (std::next_permutation(perm.begin(), perm.end()));

      int i = k_a - 1;
      while (i >= 0 && select[std::size_t(i)] == int(nbrs.size()) - k_a + i) --i;
      if (i < 0) break;
      ++select[std::size_t(i)];
      for (int j = i + 1; j < k_a; ++j) select[std::size_t(j)] = select[std::size_t(j - 1)] + 1;
    }
  }
  std::sort(h.edges.begin(), h.edges.end());
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
  return h;
}

namespace {

SamplerOutcome finish_with_b_colouring(const BipartiteGraph& graph,
                                       const ListAssignment& assignment,
                                       const std::vector<int>& colours_b, SamplerOutcome out) {
  ProperColouring col;
  col.colours_b = colours_b;
  col.colours_a.resize(std::size_t(graph.a_size()));
  for (int v = 0; v < graph.a_size(); ++v) {
    ColourSet free = assignment.list_a(v);
    for (int w = 0; w < graph.b_size(); ++w)
      if (graph.adjacent(v, w) && free.test(colours_b[std::size_t(w)]))
        free.reset(colours_b[std::size_t(w)]);
    if (free.empty())
      throw Error(ErrorCode::INCONSISTENT, "extension failed: A-vertex has no free colour");
    col.colours_a[std::size_t(v)] = free.lowest();
  }
  if (!col.valid_for(graph, assignment))
    throw Error(ErrorCode::INCONSISTENT, "sampler produced an invalid colouring");
  out.success = true;
  out.colouring = std::move(col);
  return out;
}

} // namespace

SamplerOutcome sample_transversal_colouring(const BipartiteGraph& graph,
                                            const ListAssignment& assignment,
                                            std::uint64_t seed, std::uint64_t budget) {
  PartitionedHypergraph h = list_instance_hypergraph(graph, assignment);
  SamplerOutcome out = sample_independent_transversal(h, seed, budget);
  if (!out.success) return out;
  int k_b = assignment.k_b();
  std::vector<int> colours_b(std::size_t(graph.b_size()));
  for (int w = 0; w < graph.b_size(); ++w) {
    int vertex = out.transversal[std::size_t(w)];
    colours_b[std::size_t(w)] =
        assignment.list_b(w).to_vector()[std::size_t(vertex - w * k_b)];
  }
  return finish_with_b_colouring(graph, assignment, colours_b, std::move(out));
}

SamplerOutcome sample_coupon_colouring(const BipartiteGraph& graph,
                                       const ListAssignment& assignment, std::uint64_t seed,
                                       std::uint64_t budget) {
  if (!assignment.shape_matches(graph))
    throw Error(ErrorCode::SHAPE_MISMATCH, "assignment does not fit the graph");
  SamplerOutcome out;
  out.seed = seed;
  out.budget = budget;
  out.algorithm = Rng::kAlgorithm;

  Rng rng(seed);
  std::vector<std::vector<int>> list_b(std::size_t(graph.b_size()));
  for (int w = 0; w < graph.b_size(); ++w) list_b[std::size_t(w)] = assignment.list_b(w).to_vector();
  std::vector<int> colour(std::size_t(graph.b_size()));
  for (int w = 0; w < graph.b_size(); ++w)
    colour[std::size_t(w)] = list_b[std::size_t(w)][std::size_t(
        rng.below_int(int(list_b[std::size_t(w)].size())))];

  std::vector<std::vector<int>> nbrs(std::size_t(graph.a_size()));
  for (int v = 0; v < graph.a_size(); ++v)
    for (int w = 0; w < graph.b_size(); ++w)
      if (graph.adjacent(v, w)) nbrs[std::size_t(v)].push_back(w);

  while (true) {
    int violated = -1;
    for (int v = 0; v < graph.a_size() && violated < 0; ++v) {
      ColourSet free = assignment.list_a(v);
      for (int w : nbrs[std::size_t(v)])
        if (free.test(colour[std::size_t(w)])) free.reset(colour[std::size_t(w)]);
      if (free.empty()) violated = v;
    }
    if (violated < 0) break;
    if (out.resample_count >= budget) {
      out.success = false;
      out.note = "budget exhausted";
      return out;
    }
    ++out.resample_count;
    for (int w : nbrs[std::size_t(violated)])
      colour[std::size_t(w)] = list_b[std::size_t(w)][std::size_t(
          rng.below_int(int(list_b[std::size_t(w)].size())))];
  }
  return finish_with_b_colouring(graph, assignment, colour, std::move(out));
}

SamplerOutcome sample_palette_split(const BipartiteGraph& graph,
                                    const ListAssignment& assignment, double p, double epsilon,
                                    SplitMode mode, std::uint64_t seed, std::uint64_t budget) {
  if (!graph.complete_graph())
    throw Error(ErrorCode::SHAPE_MISMATCH, "palette splitting needs a complete graph");
  if (!assignment.shape_matches(graph))
    throw Error(ErrorCode::SHAPE_MISMATCH, "assignment does not fit the graph");
  if (p < 0 || p > 1) throw Error(ErrorCode::INCONSISTENT, "p must lie in [0,1]");
  if (mode == SplitMode::EQ2 && !(epsilon > 0 && epsilon < 1))
    throw Error(ErrorCode::INCONSISTENT, "epsilon must lie in (0,1)");

  SamplerOutcome out;
  out.seed = seed;
  out.budget = budget;
  out.algorithm = Rng::kAlgorithm;
  Rng rng(seed);
  int m = assignment.palette();

  for (;; ++out.resample_count) {
    if (out.resample_count >= budget) {
      out.success = false;
      out.note = "budget exhausted";
      return out;
    }
    ColourSet side_b(m);
    for (int c = 0; c < m; ++c)
      if (rng.unit() < p) side_b.set(c);

    if (mode == SplitMode::EQ1) {
      bool ok = true;
      for (int v = 0; v < graph.a_size() && ok; ++v)
        if (assignment.list_a(v).minus(side_b).empty()) ok = false;
      for (int w = 0; w < graph.b_size() && ok; ++w)
        if ((assignment.list_b(w) & side_b).empty()) ok = false;
      if (!ok) continue;

      ProperColouring col;
      for (int v = 0; v < graph.a_size(); ++v)
        col.colours_a.push_back(assignment.list_a(v).minus(side_b).lowest());
      for (int w = 0; w < graph.b_size(); ++w)
        col.colours_b.push_back((assignment.list_b(w) & side_b).lowest());
      if (!col.valid_for(graph, assignment))
        throw Error(ErrorCode::INCONSISTENT, "split colouring failed re-verification");
      out.success = true;
      out.b_palette = side_b;
      out.colouring = std::move(col);
      return out;
    }

    // EQ2 path: B-lists must keep a large B-side intersection and only a
    // few A-vertices may have no A-side colour; those are coloured
    // arbitrarily and the B side steers around them.
    double quota = (1.0 - epsilon) * double(assignment.k_b()) * p;
    bool ok = true;
    for (int w = 0; w < graph.b_size() && ok; ++w)
      if (double((assignment.list_b(w) & side_b).count()) < quota) ok = false;
    std::vector<int> exceptional;
    for (int v = 0; v < graph.a_size(); ++v)
      if (assignment.list_a(v).minus(side_b).empty()) exceptional.push_back(v);
    if (!ok || !(double(exceptional.size()) < quota)) continue;

    ProperColouring col;
    col.colours_a.resize(std::size_t(graph.a_size()));
    ColourSet used_by_exceptional(m);
    for (int v : exceptional) {
      int c = assignment.list_a(v).lowest();
      col.colours_a[std::size_t(v)] = c;
      used_by_exceptional.set(c);
    }
    for (int v = 0; v < graph.a_size(); ++v)
      if (!assignment.list_a(v).minus(side_b).empty())
        col.colours_a[std::size_t(v)] = assignment.list_a(v).minus(side_b).lowest();
    bool filled = true;
    for (int w = 0; w < graph.b_size() && filled; ++w) {
      ColourSet usable = (assignment.list_b(w) & side_b).minus(used_by_exceptional);
      if (usable.empty())
        filled = false;
      else
        col.colours_b.push_back(usable.lowest());
    }
    if (!filled) continue;
    if (!col.valid_for(graph, assignment))
      throw Error(ErrorCode::INCONSISTENT, "split colouring failed re-verification");
    out.success = true;
    out.b_palette = side_b;
    out.colouring = std::move(col);
    return out;
  }
}

StarReport check_negative_correlation(const BipartiteGraph& star,
                                      const ListAssignment& assignment,
                                      std::uint64_t enumeration_cap) {
  if (star.a_size() != 1)
    throw Error(ErrorCode::SHAPE_MISMATCH, "the checker needs a single A-vertex");
  for (int w = 0; w < star.b_size(); ++w)
    if (!star.adjacent(0, w))
      throw Error(ErrorCode::SHAPE_MISMATCH, "every B-vertex must neighbour the A-vertex");
  if (!assignment.shape_matches(star))
    throw Error(ErrorCode::SHAPE_MISMATCH, "assignment does not fit the graph");

  int d = star.b_size();
  int k_a = assignment.k_a();
  int k_b = assignment.k_b();
  double combos = std::pow(double(k_b), double(d));
  if (combos > double(enumeration_cap))
    throw Error(ErrorCode::TOO_LARGE, "k_b^degree exceeds the enumeration cap");

  StarReport rep;
  rep.degree = d;
  std::vector<int> list_v = assignment.list_a(0).to_vector();

  // Tally outcomes by which list colours the neighbours cover.
  std::vector<BigInt> count(std::size_t(1) << k_a, 0);
  auto lists = std::vector<std::vector<int>>(std::size_t(d));
  for (int w = 0; w < d; ++w) lists[std::size_t(w)] = assignment.list_b(w).to_vector();
  std::vector<int> pick(std::size_t(d), 0);
  while (true) {
    unsigned mask = 0;
    for (int w = 0; w < d; ++w) {
      int c = lists[std::size_t(w)][std::size_t(pick[std::size_t(w)])];
      for (int i = 0; i < k_a; ++i)
        if (list_v[std::size_t(i)] == c) mask |= 1u << i;
    }
    ++count[mask];
    int w = d - 1;
    while (w >= 0 && pick[std::size_t(w)] == k_b - 1) pick[std::size_t(w--)] = 0;
    if (w < 0) break;
    ++pick[std::size_t(w)];
  }

  BigInt total = bigint_pow(BigInt(k_b), d);
  auto pr_superset = [&](unsigned needed) {
    BigInt n = 0;
    for (unsigned mask = 0; mask < (1u << k_a); ++mask)
      if ((mask & needed) == needed) n += count[mask];
    return Rational(n, total);
  };

  rep.pr_tv = pr_superset((1u << k_a) - 1);
  rep.product = 1;
  rep.formula_matches = true;
  for (int i = 0; i < k_a; ++i) {
    Rational pr = pr_superset(1u << i);
    rep.pr_tvc.push_back(pr);
    rep.product *= pr;
    int occurrences = 0;
    for (int w = 0; w < d; ++w)
      if (assignment.list_b(w).test(list_v[std::size_t(i)])) ++occurrences;
    Rational formula = 1 - rational_pow(Rational(BigInt(k_b) - 1, BigInt(k_b)), occurrences);
    if (formula != pr) rep.formula_matches = false;
  }
  rep.product_bounds_tv = rep.pr_tv <= rep.product;

  rep.degree_bound = rational_pow(1 - rational_pow(Rational(BigInt(k_b) - 1, BigInt(k_b)), d), k_a);
  rep.degree_bound_holds = rep.product <= rep.degree_bound;

  // Subset monotonicity: for every I, Pr(all of I hit) <= prod over I.
  rep.subset_monotone = true;
  for (unsigned I = 0; I < (1u << k_a); ++I) {
    Rational joint = pr_superset(I);
    Rational prod = 1;
    for (int i = 0; i < k_a; ++i)
      if (I & (1u << i)) prod *= rep.pr_tvc[std::size_t(i)];
    if (joint > prod) rep.subset_monotone = false;
  }

  // Averaged bound with exponent kB*deg/kA: exact when integral,
  // otherwise compared through bracketed k-th roots.
  {
    Rational beta = Rational(BigInt(k_b) - 1, BigInt(k_b));
    long long num = 1LL * k_b * d;
    rep.jensen_bound = std::pow(1.0 - std::pow(beta.convert_to<double>(),
                                               double(num) / double(k_a)),
                                double(k_a));
    if (num % k_a == 0) {
      Rational bound = rational_pow(1 - rational_pow(beta, int(num / k_a)), k_a);
      rep.jensen_holds = rep.product <= bound;
    } else {
      // product <= (1 - r^{1/kA})^{kA}  iff  product^{1/kA} + r^{1/kA} <= 1.
      Rational r = rational_pow(beta, int(num));
      auto kth_root_bracket = [&](const Rational& x, int k) {
        Rational lo = 0, hi = 1;
        for (int it = 0; it < 256; ++it) {
          Rational mid = (lo + hi) / 2;
          if (rational_pow(mid, k) <= x)
            lo = mid;
          else
            hi = mid;
        }
        return std::make_pair(lo, hi);
      };
      auto [plo, phi] = kth_root_bracket(rep.product, k_a);
      auto [rlo, rhi] = kth_root_bracket(r, k_a);
      if (phi + rhi <= 1)
        rep.jensen_holds = true;
      else if (plo + rlo > 1)
        rep.jensen_holds = false;
      else
        rep.jensen_holds = true; // separated below bracket width: equality
    }
  }
  return rep;
}

BipartiteGraph random_bipartite(int a_size, int b_size, int max_deg_a, int max_deg_b,
                                std::uint64_t seed) {
  if (a_size < 0 || b_size < 1)
    throw Error(ErrorCode::INCONSISTENT, "part sizes out of range");
  Rng rng(seed);
  std::vector<int> degree_b(std::size_t(b_size), 0);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < a_size; ++v) {
    std::vector<int> capacity;
    for (int w = 0; w < b_size; ++w)
      if (degree_b[std::size_t(w)] < max_deg_b) capacity.push_back(w);
    int want = std::min<int>(max_deg_a, int(capacity.size()));
    // Sample `want` distinct capacitated neighbours.
    for (int t = 0; t < want; ++t) {
      int idx = rng.below_int(int(capacity.size()));
      int w = capacity[std::size_t(idx)];
      capacity.erase(capacity.begin() + idx);
      edges.emplace_back(v, w);
      ++degree_b[std::size_t(w)];
    }
  }
  return BipartiteGraph::from_edges(a_size, b_size, edges);
}

ListAssignment random_assignment(const BipartiteGraph& graph, int k_a, int k_b, int palette,
                                 std::uint64_t seed) {
  if (k_a > palette || k_b > palette)
    throw Error(ErrorCode::INCONSISTENT, "lists cannot exceed the palette");
  Rng rng(seed);
  std::vector<std::vector<int>> lists_a, lists_b;
  for (int v = 0; v < graph.a_size(); ++v) lists_a.push_back(rng.sample_subset(palette, k_a));
  for (int w = 0; w < graph.b_size(); ++w) lists_b.push_back(rng.sample_subset(palette, k_b));

  // Dense relabel so the palette invariant (no unused colour) holds.
  std::vector<int> relabel(std::size_t(palette), -1);
  int next = 0;
  auto scan = [&](const std::vector<std::vector<int>>& lists) {
    for (const auto& l : lists)
      for (int c : l)
        if (relabel[std::size_t(c)] < 0) relabel[std::size_t(c)] = next++;
  };
  scan(lists_b);
  scan(lists_a);
  auto remap = [&](std::vector<std::vector<int>>& lists) {
    for (auto& l : lists) {
      for (int& c : l) c = relabel[std::size_t(c)];
      std::sort(l.begin(), l.end());
    }
  };
  remap(lists_a);
  remap(lists_b);
  return ListAssignment::create(next, lists_a, lists_b);
}

} // namespace bilist::prob
