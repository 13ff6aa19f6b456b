#include <doctest.h>

#include "bilist/bounds.hpp"
#include "bilist/colorability.hpp"
#include "bilist/constructions.hpp"
#include "bilist/error.hpp"
#include "bilist/probabilistic.hpp"

using namespace bilist;
using namespace bilist::prob;

TEST_CASE("an edgeless hypergraph needs no resampling") {
  PartitionedHypergraph h;
  h.vertex_count = 4;
  h.parts = {{0, 1}, {2, 3}};
  auto out = sample_independent_transversal(h, 9, 100);
  CHECK(out.success);
  CHECK(out.resample_count == 0);
  CHECK(out.algorithm == std::string("splitmix64"));
}

TEST_CASE("single-edge failure rate matches the exact probability") {
  // One edge taking one fixed vertex from each of two 2-parts: exactly
  // 1 of the 4 transversals violates it.
  PartitionedHypergraph h;
  h.vertex_count = 4;
  h.parts = {{0, 1}, {2, 3}};
  h.edges = {{0, 2}};
  int first_draw_failures = 0;
  const int runs = 10000;
  for (int seed = 1; seed <= runs; ++seed) {
    auto out = sample_independent_transversal(h, std::uint64_t(seed), 1000);
    CHECK(out.success);
    if (out.resample_count > 0) ++first_draw_failures;
  }
  double rate = double(first_draw_failures) / runs;
  CHECK(rate > 0.25 - 0.02);
  CHECK(rate < 0.25 + 0.02);
}

TEST_CASE("sampler outcomes are reproducible") {
  PartitionedHypergraph h;
  h.vertex_count = 6;
  h.parts = {{0, 1}, {2, 3}, {4, 5}};
  h.edges = {{0, 2, 4}, {1, 3, 5}, {0, 3, 4}};
  auto a = sample_independent_transversal(h, 77, 1000);
  auto b = sample_independent_transversal(h, 77, 1000);
  CHECK(a.success == b.success);
  CHECK(a.resample_count == b.resample_count);
  CHECK(a.transversal == b.transversal);
}

TEST_CASE("the list-instance reduction yields proper colourings") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = random_bipartite(50, 10, 2, 10, seed * 31);
    auto l = random_assignment(g, 2, 15, 30, seed * 97);
    auto out = sample_transversal_colouring(g, l, seed, 100000);
    CHECK(out.success);
    REQUIRE(out.colouring);
    CHECK(out.colouring->valid_for(g, l));
  }
}

TEST_CASE("reduction hypergraph shape") {
  auto g = BipartiteGraph::complete(1, 2);
  auto l = ListAssignment::create(4, {{0, 2}}, {{0, 1}, {2, 3}});
  auto h = list_instance_hypergraph(g, l);
  CHECK(h.vertex_count == 4); // 2 B-vertices x 2 list colours
  CHECK(h.parts.size() == 2);
  // Only the pairing (w0 -> 0, w1 -> 2) is feasible.
  CHECK(h.edges.size() == 1);
  CHECK(h.max_part_degree_sum() == 1);
}

TEST_CASE("coupon sampler succeeds instantly when no blocking is possible") {
  // Every A-list has a colour no B-list contains.
  auto g = BipartiteGraph::complete(2, 2);
  auto l = ListAssignment::create(3, {{0, 2}, {1, 2}}, {{0, 1}, {0, 1}});
  auto out = sample_coupon_colouring(g, l, 5, 10);
  CHECK(out.success);
  CHECK(out.resample_count == 0);
}

TEST_CASE("coupon sampler exhausts its budget on a blocked instance") {
  auto cert = construct::construct_classic(2, 2);
  auto out = sample_coupon_colouring(cert.graph, cert.assignment, 1, 500);
  CHECK_FALSE(out.success);
  CHECK(out.resample_count == 500);
}

TEST_CASE("coupon sampler at the smoke point") {
  int successes = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = random_bipartite(128, 128, 64, 64, seed * 131);
    auto l = random_assignment(g, 24, 2, 256, seed * 313);
    auto out = sample_coupon_colouring(g, l, seed, 100000);
    if (out.success) {
      REQUIRE(out.colouring);
      CHECK(out.colouring->valid_for(g, l));
      ++successes;
    }
  }
  CHECK(successes == 20);
}

TEST_CASE("palette split: disjoint lists succeed on the first draw") {
  auto g = BipartiteGraph::complete(1, 1);
  auto l = ListAssignment::create(4, {{0, 1}}, {{2, 3}});
  auto out = sample_palette_split(g, l, 0.5, 0.5, SplitMode::EQ1, 3, 100);
  CHECK(out.success);
  CHECK(out.resample_count == 0);
}

TEST_CASE("palette split: p = 0 starves the B side") {
  auto g = BipartiteGraph::complete(1, 1);
  auto l = ListAssignment::create(4, {{0, 1}}, {{2, 3}});
  auto out = sample_palette_split(g, l, 0.0, 0.5, SplitMode::EQ1, 3, 50);
  CHECK_FALSE(out.success);
  CHECK(out.resample_count == 50);
}

TEST_CASE("palette split beats the expected-failure bound empirically") {
  // Random (1,2)-instances with 2- and 5-lists over 12 colours at
  // p = 0.3: the first-inequality value 1*0.3^2 + 2*0.7^5 ~ 0.426 bounds
  // the per-draw failure, so success in one draw is at least 57 percent.
  int first_try = 0;
  const int runs = 10000;
  for (int seed = 1; seed <= runs; ++seed) {
    auto g = BipartiteGraph::complete(1, 2);
    auto l = random_assignment(g, 2, 5, 12, std::uint64_t(seed) * 7919);
    auto out = sample_palette_split(g, l, 0.3, 0.5, SplitMode::EQ1, std::uint64_t(seed), 200);
    CHECK(out.success);
    if (out.resample_count == 0) ++first_try;
  }
  CHECK(double(first_try) / runs >= 0.57);
}

TEST_CASE("palette split eq2 path returns verified colourings") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto g = BipartiteGraph::complete(4, 3);
    auto l = random_assignment(g, 2, 8, 20, seed * 101);
    auto out = sample_palette_split(g, l, 0.45, 0.5, SplitMode::EQ2, seed, 5000);
    if (out.success) {
      REQUIRE(out.colouring);
      CHECK(out.colouring->valid_for(g, l));
    }
  }
}

TEST_CASE("exact star probabilities on the pinned instance") {
  // v with list {0,1}; two neighbours, both with list {0,1}, k_B = 2.
  auto g = BipartiteGraph::complete(1, 2);
  auto l = ListAssignment::create(2, {{0, 1}}, {{0, 1}, {0, 1}});
  auto rep = check_negative_correlation(g, l);
  CHECK(rep.pr_tv == Rational(1, 2));
  CHECK(rep.pr_tvc[0] == Rational(3, 4));
  CHECK(rep.pr_tvc[1] == Rational(3, 4));
  CHECK(rep.product == Rational(9, 16));
  CHECK(rep.product_bounds_tv);
  CHECK(rep.degree_bound_holds);
  CHECK(rep.jensen_holds);
  CHECK(rep.subset_monotone);
  CHECK(rep.formula_matches);
}

TEST_CASE("one neighbour cannot hit two colours") {
  auto g = BipartiteGraph::complete(1, 1);
  auto l = ListAssignment::create(2, {{0, 1}}, {{0, 1}});
  auto rep = check_negative_correlation(g, l);
  CHECK(rep.pr_tv == Rational(0));
  CHECK(rep.product == Rational(1, 4));
  CHECK(rep.product_bounds_tv);
}

TEST_CASE("negative correlation across an exhaustive pattern grid") {
  // All stars with degree <= 3, k_A <= 3, k_B <= 3, neighbour lists taken
  // as subset patterns of L(v) padded with fresh colours; patterns are
  // canonical up to relabelling by construction of the enumeration.
  for (int k_a = 1; k_a <= 3; ++k_a)
    for (int k_b = 1; k_b <= 3; ++k_b)
      for (int d = 1; d <= 3; ++d) {
        // Each neighbour's intersection with L(v): a subset of size <= k_b.
        std::vector<std::vector<int>> patterns;
        for (int mask = 0; mask < (1 << k_a); ++mask) {
          if (std::popcount(unsigned(mask)) > k_b) continue;
          std::vector<int> s;
          for (int i = 0; i < k_a; ++i)
            if (mask & (1 << i)) s.push_back(i);
          patterns.push_back(s);
        }
        std::vector<int> choice(std::size_t(d), 0);
        while (true) {
          bool nondecreasing = true;
          for (int i = 1; i < d; ++i)
            if (choice[std::size_t(i)] < choice[std::size_t(i - 1)]) nondecreasing = false;
          if (nondecreasing) {
            int fresh = k_a;
            std::vector<std::vector<int>> lists_b;
            for (int i = 0; i < d; ++i) {
              auto list = patterns[std::size_t(choice[std::size_t(i)])];
              while (int(list.size()) < k_b) list.push_back(fresh++);
              lists_b.push_back(list);
            }
            std::vector<int> list_a;
            for (int i = 0; i < k_a; ++i) list_a.push_back(i);
            auto g = BipartiteGraph::complete(1, d);
            auto l = ListAssignment::create(fresh, {list_a}, lists_b);
            auto rep = check_negative_correlation(g, l);
            CHECK(rep.product_bounds_tv);
            CHECK(rep.degree_bound_holds);
            CHECK(rep.jensen_holds);
            CHECK(rep.subset_monotone);
            CHECK(rep.formula_matches);
          }
          int i = d - 1;
          while (i >= 0 && choice[std::size_t(i)] + 1 == int(patterns.size()))
            choice[std::size_t(i--)] = 0;
          if (i < 0) break;
          ++choice[std::size_t(i)];
        }
      }
}

TEST_CASE("instance generators respect the degree caps") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = random_bipartite(30, 8, 3, 12, seed);
    CHECK(g.max_degree_a() <= 3);
    CHECK(g.max_degree_b() <= 12);
    auto l = random_assignment(g, 2, 3, 9, seed);
    CHECK(l.k_a() == 2);
    CHECK(l.k_b() == 3);
  }
}
