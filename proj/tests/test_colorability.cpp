#include <doctest.h>

#include "bilist/colorability.hpp"
#include "bilist/constructions.hpp"
#include "bilist/error.hpp"
#include "bilist/probabilistic.hpp"
#include "bilist/rng.hpp"

#include "oracles.hpp"

using namespace bilist;

namespace {

ListAssignment classic_2_2() {
  return ListAssignment::create(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {{0, 1}, {2, 3}});
}

} // namespace

TEST_CASE("the disjoint-list instance on K_{4,2} has no colouring") {
  auto g = BipartiteGraph::complete(4, 2);
  CHECK_FALSE(find_proper_colouring(g, classic_2_2()));
}

TEST_CASE("a B-colour outside every A-list yields a colouring") {
  // B can take colour 2, which no A-list contains.
  auto g = BipartiteGraph::complete(2, 1);
  auto l = ListAssignment::create(3, {{0, 1}, {0, 1}}, {{1, 2}});
  auto col = find_proper_colouring(g, l);
  REQUIRE(col);
  CHECK(col->valid_for(g, l));

  // Single-vertex instance: the vertex takes its first colour.
  auto g1 = BipartiteGraph::complete(0, 1);
  auto l1 = ListAssignment::create(2, {}, {{0, 1}});
  auto col1 = find_proper_colouring(g1, l1);
  REQUIRE(col1);
  CHECK(col1->colours_b[0] == 0);
}

TEST_CASE("K_{3,2} with three of the four pairs is colourable") {
  auto g = BipartiteGraph::complete(3, 2);
  // Any 3 of the four transversal pairs leave one free.
  std::vector<std::vector<int>> all{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  for (int drop = 0; drop < 4; ++drop) {
    std::vector<std::vector<int>> lists_a;
    for (int i = 0; i < 4; ++i)
      if (i != drop) lists_a.push_back(all[std::size_t(i)]);
    auto l = ListAssignment::create(4, lists_a, {{0, 1}, {2, 3}});
    auto brute = oracle::brute_force_colouring(g, l);
    REQUIRE(brute); // brute force confirms a colouring exists
    auto col = find_proper_colouring(g, l);
    REQUIRE(col);
    CHECK(col->valid_for(g, l));
  }
}

TEST_CASE("separator examples") {
  // Two colours, one list each side: S = {0}.
  auto q = SeparatorQuery::from(ListAssignment::create(2, {{0, 1}}, {{0, 1}}));
  auto s = separator_exists(q);
  REQUIRE(s);
  CHECK(s->to_vector() == std::vector<int>{0});

  // The disjoint-list instance has no separator.
  CHECK_FALSE(separator_exists(SeparatorQuery::from(classic_2_2())));
}

TEST_CASE("the blocking-family instance on 7 colours has no separator") {
  auto cert = load_certificate_file(std::string(BILIST_FIXTURE_DIR) + "/steiner-k35-7.cert");
  auto query = SeparatorQuery::from(cert.assignment);
  CHECK_FALSE(separator_exists(query));
  // Full subset sweep agrees.
  CHECK_FALSE(oracle::brute_force_separator(cert.assignment));
}

TEST_CASE("verify_certificate on the classic instance and a weakening") {
  NonChoosabilityCertificate cert;
  cert.graph = BipartiteGraph::complete(4, 2);
  cert.assignment = classic_2_2();
  CHECK(verify_certificate(cert).verified);

  NonChoosabilityCertificate weak;
  weak.graph = BipartiteGraph::complete(3, 2);
  weak.assignment = ListAssignment::create(4, {{0, 2}, {0, 3}, {1, 2}}, {{0, 1}, {2, 3}});
  auto result = verify_certificate(weak);
  CHECK_FALSE(result.verified);
  REQUIRE(result.refutation);
  CHECK(result.refutation->valid_for(weak.graph, weak.assignment));
}

TEST_CASE("gadget certificate verifies") {
  auto cert = construct::construct_gadget(2, 2);
  CHECK(verify_certificate(cert).verified);
}

TEST_CASE("shape mismatch is rejected") {
  auto g = BipartiteGraph::complete(1, 1);
  CHECK_THROWS_AS(find_proper_colouring(g, classic_2_2()), Error);
}

TEST_CASE("oracle equivalence on random small instances") {
  Rng rng(424242);
  int separator_checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int b = 1 + rng.below_int(4);
    int a = 1 + rng.below_int(5);
    int palette = 2 + rng.below_int(7); // <= 8
    int k_a = 1 + rng.below_int(std::min(3, palette));
    int k_b = 1 + rng.below_int(std::min(3, palette));
    bool complete = rng.below_int(2) == 0;
    BipartiteGraph g = complete ? BipartiteGraph::complete(a, b)
                                : prob::random_bipartite(a, b, 1 + rng.below_int(b), a,
                                                         rng.next());
    ListAssignment l = prob::random_assignment(g, k_a, k_b, palette, rng.next());

    auto mine = find_proper_colouring(g, l);
    auto brute = oracle::brute_force_colouring(g, l);
    CHECK(bool(mine) == bool(brute));
    if (mine) CHECK(mine->valid_for(g, l));

    if (complete) {
      auto sep = separator_exists(SeparatorQuery::from(l));
      auto sep_brute = oracle::brute_force_separator(l);
      CHECK(bool(sep) == bool(sep_brute));
      ++separator_checked;
    }
  }
  CHECK(separator_checked > 100);
}
