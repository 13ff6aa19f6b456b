#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bilist/set_family.hpp"

namespace bilist::steiner {

using Rational = boost::multiprecision::cpp_rational;

/// A k1-subset of [l] intersecting every block, or nothing after
/// exhaustive search (branch on an unhit block's elements, depth <= k1).
/// Witnesses are padded to exactly k1 elements.
std::optional<std::vector<int>> has_property_a(const SetFamily& family, int k1);

/// Least hitting-set size of the family (the least k1 with a witness).
int min_hitting_set_size(const SetFamily& family);

/// Probabilistic sandwich for the extremal family size: exact rational
/// lower bound, real upper bound rounded outward (upward).
struct MbarBounds {
  int k1 = 0, k2 = 0, l = 0;
  Rational lower;                 // exact
  std::uint64_t lower_ceil = 0;   // integer form of the lower bound
  double upper = 0;               // lower * ln C(l,k1), rounded up
  bool upper_outward_rounded = true;
  std::optional<std::uint64_t> exact; // filled by callers that computed it
};
MbarBounds mbar_bounds(int k1, int k2, int l);

struct MbarCaps {
  std::uint64_t max_nodes = 50'000'000;
  double timeout_seconds = 0;
  int canonical_test_depth = 4;
};

struct MbarResult {
  enum class Status { EXACT, CAPPED };
  Status status = Status::EXACT;
  int k1 = 0, k2 = 0, l = 0;
  std::uint64_t value = 0;  // exact; for CAPPED the proven lower bracket
  double upper_bracket = 0; // formula upper bound
  std::optional<SetFamily> extremal;
  std::uint64_t nodes = 0;
};

/// Least m such that some family of m blocks lacks the k1-hitting-set
/// property, by canonical enumeration with iterative deepening on m from
/// the formula lower bound. Every family of size value-1 provably has the
/// property (those levels are exhausted first).
MbarResult mbar_exact(int k1, int k2, int l, const MbarCaps& caps = {});

/// Random family of ceil(upper-bound) uniform blocks, redrawn (derived
/// seeds) until it lacks the property; verified before return.
SetFamily random_family_upper(int k1, int k2, int l, std::uint64_t seed,
                              int retry_budget = 64);

} // namespace bilist::steiner
