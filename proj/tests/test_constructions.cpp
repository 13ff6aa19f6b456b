#include <doctest.h>

#include "bilist/bounds.hpp"
#include "bilist/choosability.hpp"
#include "bilist/colorability.hpp"
#include "bilist/constructions.hpp"
#include "bilist/error.hpp"
#include "bilist/steiner.hpp"

#include "oracles.hpp"

using namespace bilist;
using namespace bilist::construct;

namespace {

SetFamily fano_complements() {
  std::vector<std::uint64_t> comps;
  for (int s = 0; s < 7; ++s) {
    std::uint64_t line = (1ULL << (s % 7)) | (1ULL << ((s + 1) % 7)) | (1ULL << ((s + 3) % 7));
    comps.push_back(~line & 0x7f);
  }
  return SetFamily::from_masks(7, 4, comps).normalized();
}

SetFamily all_triples_7() {
  std::vector<std::vector<int>> blocks;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) blocks.push_back({a, b, c});
  return SetFamily::create(7, 3, blocks);
}

} // namespace

TEST_CASE("disjoint-list construction shapes and palettes") {
  auto c22 = construct_classic(2, 2);
  CHECK(c22.graph.a_size() == 4);
  CHECK(c22.graph.b_size() == 2);
  CHECK(c22.assignment.palette() == 4);
  // The A-lists are the four transversal pairs.
  std::vector<std::vector<int>> expect{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  for (const auto& want : expect) {
    bool found = false;
    for (const auto& list : c22.assignment.lists_a())
      if (list.to_vector() == want) found = true;
    CHECK(found);
  }

  auto c23 = construct_classic(2, 3);
  CHECK(c23.graph.a_size() == 9);
  CHECK(c23.assignment.palette() == 6);
}

TEST_CASE("removing any vertex from the classic instance makes it colourable") {
  for (auto [k, d] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    auto cert = construct_classic(k, d);
    int a = cert.graph.a_size(), b = cert.graph.b_size();
    // Drop each A-vertex in turn.
    for (int drop = 0; drop < a; ++drop) {
      std::vector<ColourSet> lists_a;
      for (int v = 0; v < a; ++v)
        if (v != drop) lists_a.push_back(cert.assignment.list_a(v));
      auto l = ListAssignment::create_from_sets(cert.assignment.palette(), lists_a,
                                                cert.assignment.lists_b());
      CHECK(find_proper_colouring(BipartiteGraph::complete(a - 1, b), l));
    }
    // Drop each B-vertex in turn; unused colours require renormalizing.
    for (int drop = 0; drop < b; ++drop) {
      std::vector<ColourSet> lists_b;
      for (int w = 0; w < b; ++w)
        if (w != drop) lists_b.push_back(cert.assignment.list_b(w));
      auto l = ListAssignment::create_from_sets(cert.assignment.palette(),
                                                cert.assignment.lists_a(), lists_b)
                   .normalized();
      CHECK(find_proper_colouring(BipartiteGraph::complete(a, b - 1), l));
    }
  }
}

TEST_CASE("blocking-family construction covers the pinned instances") {
  auto k35 = construct_steiner(all_triples_7(), fano_complements());
  CHECK(k35.graph.a_size() == 35);
  CHECK(k35.graph.b_size() == 7);
  CHECK(verify_certificate(k35).verified);

  // Minimal smoke instance on 3 colours.
  auto smoke = construct_steiner(SetFamily::create(3, 1, {{0}, {1}}),
                                 SetFamily::create(3, 1, {{2}, {0}}));
  CHECK(smoke.graph.a_size() == 2);
  CHECK(smoke.graph.b_size() == 2);
  CHECK(verify_certificate(smoke).verified);

  // Trimming to 28 A-lists drops exactly the 7 complement-of-block
  // triples and still verifies.
  auto k28 = trim_a_lists(k35, 28);
  CHECK(k28.graph.a_size() == 28);
  CHECK(verify_certificate(k28).verified);
}

TEST_CASE("families with small hitting sets are rejected with a witness") {
  // Both families are stars, so 1-element hitting sets exist.
  auto star = SetFamily::create(5, 2, {{0, 1}, {0, 2}, {0, 3}});
  try {
    construct_steiner(star, star);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PROPERTY_A_HOLDS);
    CHECK(std::string(e.what()).find("{0") != std::string::npos);
  }
}

TEST_CASE("boundary construction matches the exhaustive threshold") {
  auto p42 = BoundaryParams::derive(4, 2);
  CHECK(p42.q == 0);
  CHECK(p42.r == 2);
  auto c42 = construct_boundary(p42);
  CHECK(c42.graph.a_size() == 6);
  CHECK(c42.graph.b_size() == 4);
  CHECK(c42.assignment.k_a() == 3);
  CHECK(verify_certificate(c42).verified);
  CHECK(c42.notes.find("DISAGREEMENT") == std::string::npos);

  auto c32 = construct_boundary(BoundaryParams::derive(3, 2));
  CHECK(c32.graph.a_size() == 3);
  CHECK(verify_certificate(c32).verified);

  auto c43 = construct_boundary(BoundaryParams::derive(4, 3));
  CHECK(c43.graph.a_size() == 19);
  CHECK(verify_certificate(c43).verified);
}

TEST_CASE("boundary construction for the one-vertex sharing regime") {
  auto c52 = construct_boundary(BoundaryParams::derive(5, 2));
  CHECK(c52.graph.a_size() == bounds::boundary_threshold(5, 2));
  CHECK(verify_certificate(c52).verified);
  CHECK(c52.notes.find("DISAGREEMENT") == std::string::npos);
}

TEST_CASE("gadget levels pin the designated vertex's colours exactly") {
  for (auto [k, d] : {std::pair{2, 2}, {2, 3}}) {
    auto levels = gadget_levels(k, d);
    REQUIRE(int(levels.size()) == d);
    for (int i = 0; i < d; ++i) {
      const auto& level = levels[std::size_t(i)];
      CHECK(level.allowed.count() == d - (i + 1));
      // Enumerate all proper colourings; collect the designated vertex's
      // admissible colours.
      ColourSet seen(level.assignment.palette());
      std::vector<std::vector<int>> lists_b;
      for (int w = 0; w < level.graph.b_size(); ++w)
        lists_b.push_back(level.assignment.list_b(w).to_vector());
      std::vector<int> pick(std::size_t(level.graph.b_size()), 0);
      while (true) {
        ProperColouring col;
        for (int w = 0; w < level.graph.b_size(); ++w)
          col.colours_b.push_back(lists_b[std::size_t(w)][std::size_t(pick[std::size_t(w)])]);
        bool ok = true;
        col.colours_a.resize(std::size_t(level.graph.a_size()));
        for (int v = 0; v < level.graph.a_size() && ok; ++v) {
          ColourSet free = level.assignment.list_a(v);
          for (int w = 0; w < level.graph.b_size(); ++w)
            if (level.graph.adjacent(v, w) && free.test(col.colours_b[std::size_t(w)]))
              free.reset(col.colours_b[std::size_t(w)]);
          if (free.empty())
            ok = false;
          else
            col.colours_a[std::size_t(v)] = free.lowest();
        }
        if (ok) seen.set(col.colours_b[std::size_t(level.designated_b)]);
        int w = level.graph.b_size() - 1;
        while (w >= 0 && pick[std::size_t(w)] + 1 == int(lists_b[std::size_t(w)].size()))
          pick[std::size_t(w--)] = 0;
        if (w < 0) break;
        ++pick[std::size_t(w)];
      }
      CHECK(seen == level.allowed);
    }
  }
}

TEST_CASE("gadget degrees and verification") {
  auto c22 = construct_gadget(2, 2);
  CHECK(c22.graph.max_degree_a() == 2);
  CHECK(c22.graph.max_degree_b() == 3); // 1 + 2
  CHECK(verify_certificate(c22).verified);

  auto c23 = construct_gadget(2, 3);
  CHECK(c23.graph.max_degree_b() == 6); // 1 + 2 + 3
  CHECK(c23.graph.max_degree_b() < 9);

  auto c32 = construct_gadget(3, 2);
  CHECK(c32.graph.max_degree_b() == 1 + 4); // i^2 summed
}

TEST_CASE("segment witness report and smoke construction") {
  // Hand-sized build: 8 colours in 2 segments of 4.
  auto result = construct_witness_cond3(2, 64, 8, 2, 5);
  CHECK(result.report.m == 8);
  CHECK(result.report.segments == 2);
  CHECK(result.report.k1 == 2);
  CHECK(result.report.b_size == 12); // 2 * C(4,2)
  REQUIRE(result.certificate);
  CHECK(verify_certificate(*result.certificate).verified);
  CHECK(result.certificate->graph.b_size() == 12);

  // Segment property: any B-side choice misses at most (k-1)*segments
  // colours of the palette.
  const auto& assignment = result.certificate->assignment;
  int b = result.certificate->graph.b_size();
  std::vector<std::vector<int>> lists;
  for (int w = 0; w < b; ++w) lists.push_back(assignment.list_b(w).to_vector());
  std::vector<int> pick(std::size_t(b), 0);
  int worst_missing = 0;
  while (true) {
    ColourSet used(assignment.palette());
    for (int w = 0; w < b; ++w) used.set(lists[std::size_t(w)][std::size_t(pick[std::size_t(w)])]);
    worst_missing = std::max(worst_missing, assignment.palette() - used.count());
    int w = b - 1;
    while (w >= 0 && pick[std::size_t(w)] + 1 == int(lists[std::size_t(w)].size()))
      pick[std::size_t(w--)] = 0;
    if (w < 0) break;
    ++pick[std::size_t(w)];
  }
  CHECK(worst_missing <= 2);
}

TEST_CASE("degenerate one-segment witness uses nearly every colour") {
  // m = 2k with one segment: the B side is every k-subset, so any choice
  // uses at least m-k+1 colours.
  auto result = construct_witness_cond3(2, 64, 4, 1, 5);
  REQUIRE(result.certificate);
  const auto& assignment = result.certificate->assignment;
  int b = result.certificate->graph.b_size();
  CHECK(b == 6);
  std::vector<std::vector<int>> lists;
  for (int w = 0; w < b; ++w) lists.push_back(assignment.list_b(w).to_vector());
  std::vector<int> pick(std::size_t(b), 0);
  while (true) {
    ColourSet used(assignment.palette());
    for (int w = 0; w < b; ++w) used.set(lists[std::size_t(w)][std::size_t(pick[std::size_t(w)])]);
    CHECK(used.count() >= 4 - 2 + 1);
    int w = b - 1;
    while (w >= 0 && pick[std::size_t(w)] + 1 == int(lists[std::size_t(w)].size()))
      pick[std::size_t(w--)] = 0;
    if (w < 0) break;
    ++pick[std::size_t(w)];
  }
}

TEST_CASE("parameter report for the asymptotic regime") {
  auto result = construct_witness_cond3(2, 1e6);
  const auto& rep = result.report;
  CHECK(rep.c == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(rep.m_real == doctest::Approx(464.6152736062).epsilon(1e-9));
  CHECK_FALSE(result.certificate); // far beyond desk scale
  CHECK(rep.note.find("scale") != std::string::npos);
}

TEST_CASE("generator certificates all verify") {
  CHECK(verify_certificate(construct_classic(2, 2)).verified);
  CHECK(verify_certificate(construct_classic(3, 2)).verified);
  CHECK(verify_certificate(construct_boundary(BoundaryParams::derive(3, 3))).verified);
  CHECK(verify_certificate(construct_gadget(2, 2)).verified);
}
