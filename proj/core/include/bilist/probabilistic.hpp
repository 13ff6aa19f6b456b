#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bilist/bipartite_graph.hpp"
#include "bilist/colour_set.hpp"
#include "bilist/list_assignment.hpp"

namespace bilist::prob {

using Rational = boost::multiprecision::cpp_rational;

/// Vertex-partitioned hypergraph with equal part sizes; parts cover all
/// vertices disjointly.
struct PartitionedHypergraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> edges; // sorted vertex ids
  std::vector<std::vector<int>> parts; // disjoint, equal sizes, cover

  void validate() const; // throws INCONSISTENT
  int part_size() const { return parts.empty() ? 0 : int(parts.front().size()); }
  int max_part_degree_sum() const;
};

struct SamplerOutcome {
  bool success = false;
  std::uint64_t resample_count = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::string algorithm; // RNG identifier for reproducibility

  std::vector<int> transversal;           // chosen vertex per part
  std::optional<ProperColouring> colouring;
  std::optional<ColourSet> b_palette;     // colours handed to the B side
  std::string note;
};

/// Redraws the uniformly random transversal until no edge is fully
/// chosen: the lowest-indexed violated edge has all its parts redrawn.
SamplerOutcome sample_independent_transversal(const PartitionedHypergraph& h,
                                              std::uint64_t seed, std::uint64_t budget);

/// The hypergraph whose independent transversals are exactly the B-side
/// colourings leaving every A-list a free colour: vertices are (B-vertex,
/// list colour) pairs, parts are the B-lists, and each A-vertex
/// contributes an edge per way of spending its whole list on distinct
/// neighbours.
PartitionedHypergraph list_instance_hypergraph(const BipartiteGraph& graph,
                                               const ListAssignment& assignment,
                                               std::size_t edge_cap = 1000000);

/// Full pipeline: reduction, transversal sampling, greedy extension of
/// the A side, and re-verification of the colouring.
SamplerOutcome sample_transversal_colouring(const BipartiteGraph& graph,
                                            const ListAssignment& assignment,
                                            std::uint64_t seed, std::uint64_t budget);

/// Each B-vertex draws uniformly from its list; an A-vertex whose whole
/// list is used by neighbours has those neighbours redrawn (lowest index
/// first). On success the A side extends greedily and the colouring is
/// re-verified.
SamplerOutcome sample_coupon_colouring(const BipartiteGraph& graph,
                                       const ListAssignment& assignment, std::uint64_t seed,
                                       std::uint64_t budget);

enum class SplitMode { EQ1, EQ2 };

/// Random palette bipartition: each colour joins the B side with
/// probability p. EQ1 accepts splits leaving every list an own-side
/// colour; EQ2 accepts when B-list intersections are large and few
/// A-vertices are exceptional, colouring exceptional vertices arbitrarily
/// and steering B around them.
SamplerOutcome sample_palette_split(const BipartiteGraph& graph,
                                    const ListAssignment& assignment, double p, double epsilon,
                                    SplitMode mode, std::uint64_t seed, std::uint64_t budget);

/// Exact enumeration report for a single A-vertex star: the probability
/// that every list colour is used by a neighbour, per-colour hit
/// probabilities, their product, and the two closed-form bounds.
struct StarReport {
  int degree = 0;
  Rational pr_tv;
  std::vector<Rational> pr_tvc;
  Rational product;
  Rational degree_bound; // (1-(1-1/kB)^deg)^kA, exact
  double jensen_bound;   // (1-(1-1/kB)^{kB*deg/kA})^kA
  bool product_bounds_tv = false;   // pr_tv <= product
  bool degree_bound_holds = false;  // product <= degree_bound
  bool jensen_holds = false;        // product <= jensen bound (exact)
  bool subset_monotone = false;     // all subsets I of L(v)
  bool formula_matches = false;     // enumeration equals 1-(1-1/kB)^{x_c}
};

/// Requires a one-vertex A side adjacent to every B vertex and
/// k_B^degree within the enumeration cap.
StarReport check_negative_correlation(const BipartiteGraph& star,
                                      const ListAssignment& assignment,
                                      std::uint64_t enumeration_cap = 1000000);

/// Seeded instance generators used by the sampling harnesses.
BipartiteGraph random_bipartite(int a_size, int b_size, int max_deg_a, int max_deg_b,
                                std::uint64_t seed);
ListAssignment random_assignment(const BipartiteGraph& graph, int k_a, int k_b, int palette,
                                 std::uint64_t seed);

} // namespace bilist::prob
