#include <doctest.h>

#include <cmath>

#include "bilist/combinatorics.hpp"
#include "bilist/error.hpp"
#include "bilist/steiner.hpp"

#include "oracles.hpp"

using namespace bilist;
using namespace bilist::steiner;

namespace {

SetFamily fano_complements() {
  std::vector<std::uint64_t> comps;
  for (int s = 0; s < 7; ++s) {
    std::uint64_t line = (1ULL << (s % 7)) | (1ULL << ((s + 1) % 7)) | (1ULL << ((s + 3) % 7));
    comps.push_back(~line & 0x7f);
  }
  return SetFamily::from_masks(7, 4, comps).normalized();
}

} // namespace

TEST_CASE("hitting-set search basics") {
  // All blocks share element 0.
  auto f = SetFamily::create(4, 2, {{0, 1}, {0, 2}, {0, 3}});
  auto w = has_property_a(f, 1);
  REQUIRE(w);
  CHECK(*w == std::vector<int>{0});

  // Two disjoint blocks cannot be hit by one element.
  auto g = SetFamily::create(4, 2, {{0, 1}, {2, 3}});
  CHECK_FALSE(has_property_a(g, 1));
  CHECK(min_hitting_set_size(g) == 2);
}

TEST_CASE("the line-complement family has no 2-element hitting set") {
  CHECK_FALSE(has_property_a(fano_complements(), 2));
  CHECK(min_hitting_set_size(fano_complements()) == 3);
}

TEST_CASE("witnesses are padded to the requested size") {
  auto f = SetFamily::create(5, 2, {{0, 1}, {0, 2}});
  auto w = has_property_a(f, 3);
  REQUIRE(w);
  CHECK(w->size() == 3);
}

TEST_CASE("closed-form sandwich values") {
  auto b = mbar_bounds(2, 4, 7);
  CHECK(b.lower == Rational(7)); // 7! 1! / (3! 5!)
  CHECK(b.lower_ceil == 7);
  CHECK(b.upper > 7 * std::log(21.0));
  CHECK(b.upper < 7 * std::log(21.0) + 1e-9);

  // l = k1 + k2 forces the complete family.
  auto c = mbar_bounds(2, 3, 5);
  CHECK(c.lower == Rational(10));
  CHECK(c.lower_ceil == binomial(5, 2));
}

TEST_CASE("exact extremal sizes for the pinned cases") {
  auto r1 = mbar_exact(1, 2, 4);
  CHECK(r1.status == MbarResult::Status::EXACT);
  CHECK(r1.value == 2); // two disjoint pairs
  REQUIRE(r1.extremal);
  CHECK_FALSE(has_property_a(*r1.extremal, 1));

  auto r2 = mbar_exact(2, 3, 5);
  CHECK(r2.value == 10); // all triples of [5]

  auto r3 = mbar_exact(2, 4, 7);
  CHECK(r3.value == 7);
  REQUIRE(r3.extremal);
  CHECK_FALSE(has_property_a(*r3.extremal, 2));
  // The extremal family's complements form 7 triples covering all 21
  // pairs, i.e. a point-line structure on 7 points.
  std::vector<std::uint64_t> comp_triples;
  for (std::uint64_t b : r3.extremal->blocks) comp_triples.push_back(~b & 0x7f);
  int covered_pairs = 0;
  for (std::uint64_t pair : subsets_of_ground(7, 2)) {
    for (std::uint64_t t : comp_triples)
      if ((pair & ~t) == 0) {
        ++covered_pairs;
        break;
      }
  }
  CHECK(covered_pairs == 21);
}

TEST_CASE("exact values agree with a naive oracle on tiny grounds") {
  for (auto [k1, k2, l] : {std::tuple{1, 2, 4}, {2, 2, 4}, {2, 2, 5}, {1, 2, 5}}) {
    auto mine = mbar_exact(k1, k2, l);
    REQUIRE(mine.status == MbarResult::Status::EXACT);
    // Oracle: grow m until some family of m distinct blocks lacks the
    // property; enumerate all block subsets of that size.
    auto blocks = subsets_of_ground(l, k2);
    std::uint64_t expect = 0;
    for (std::uint64_t m = 1; m <= blocks.size() && !expect; ++m) {
      auto idx = std::vector<int>(std::size_t(m));
      for (std::uint64_t i = 0; i < m; ++i) idx[std::size_t(i)] = int(i);
      while (true) {
        std::vector<std::uint64_t> fam;
        for (int i : idx) fam.push_back(blocks[std::size_t(i)]);
        if (!oracle::brute_force_property_a(fam, l, k1)) {
          expect = m;
          break;
        }
        int i = int(m) - 1;
        while (i >= 0 && idx[std::size_t(i)] == int(blocks.size() - m) + i) --i;
        if (i < 0) break;
        ++idx[std::size_t(i)];
        for (std::uint64_t j = std::uint64_t(i) + 1; j < m; ++j)
          idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
      }
    }
    CHECK(mine.value == expect);
  }
}

TEST_CASE("sandwich and duality on a small grid") {
  for (int l = 4; l <= 6; ++l)
    for (int k1 = 2; k1 <= l - 2; ++k1)
      for (int k2 = 2; k2 + k1 <= l; ++k2) {
        auto bounds = mbar_bounds(k1, k2, l);
        auto exact = mbar_exact(k1, k2, l);
        REQUIRE(exact.status == MbarResult::Status::EXACT);
        CHECK(Rational(exact.value) >= bounds.lower);
        CHECK(double(exact.value) < bounds.upper);
        // Complement duality at k1 = l - k2.
        if (k1 == l - k2) CHECK(exact.value == binomial(l, k2));
      }
}

TEST_CASE("one block fewer always leaves a hitting set") {
  auto r = mbar_exact(2, 2, 5);
  REQUIRE(r.status == MbarResult::Status::EXACT);
  // Exhaustively check families one smaller (the level was exhausted by
  // the search; this re-checks it naively).
  auto blocks = subsets_of_ground(5, 2);
  std::uint64_t m = r.value - 1;
  auto idx = std::vector<int>(std::size_t(m));
  for (std::uint64_t i = 0; i < m; ++i) idx[std::size_t(i)] = int(i);
  while (true) {
    std::vector<std::uint64_t> fam;
    for (int i : idx) fam.push_back(blocks[std::size_t(i)]);
    CHECK(oracle::brute_force_property_a(fam, 5, 2));
    int i = int(m) - 1;
    while (i >= 0 && idx[std::size_t(i)] == int(blocks.size() - m) + i) --i;
    if (i < 0) break;
    ++idx[std::size_t(i)];
    for (std::uint64_t j = std::uint64_t(i) + 1; j < m; ++j)
      idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
  }
}

TEST_CASE("sampled upper-bound families verify and are reproducible") {
  auto f1 = random_family_upper(2, 3, 6, 42);
  auto f2 = random_family_upper(2, 3, 6, 42);
  CHECK(f1 == f2);
  CHECK_FALSE(has_property_a(f1, 2));

  auto g = random_family_upper(1, 2, 6, 7);
  CHECK_FALSE(has_property_a(g, 1));

  auto h = random_family_upper(2, 4, 7, 3);
  CHECK(h.size() <= 22); // ceil(7 ln 21) = 22 draws, fewer after dedup
  CHECK_FALSE(has_property_a(h, 2));
}

TEST_CASE("family text format round trips and rejects junk") {
  auto f = fano_complements();
  CHECK(SetFamily::from_text(f.to_text()) == f);
  CHECK_THROWS_AS(SetFamily::from_text("3 2"), Error);
  CHECK_THROWS_AS(SetFamily::from_text("3 2 1\n1 0\n"), Error); // unsorted
}

TEST_CASE("degenerate parameters are rejected") {
  CHECK_THROWS_AS(mbar_exact(3, 3, 5), Error);  // l < k1 + k2
  CHECK_THROWS_AS(mbar_bounds(2, 2, 3), Error);
}
