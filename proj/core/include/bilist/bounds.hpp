#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bilist::bounds {

enum class PointMode { DEGREE, COMPLETE };

/// Evaluation point: either a degree pair or a complete-graph shape. In
/// COMPLETE mode the part sizes double as the opposite part's maximum
/// degree (delta_a = b, delta_b = a).
struct ParamPoint {
  PointMode mode = PointMode::DEGREE;
  std::int64_t delta_a = 0, delta_b = 0;
  std::int64_t a = 0, b = 0; // COMPLETE mode only
  int k_a = 0, k_b = 0;

  static ParamPoint degrees(std::int64_t delta_a, std::int64_t delta_b, int k_a, int k_b);
  static ParamPoint complete(std::int64_t a, std::int64_t b, int k_a, int k_b);
};

/// One evaluated condition: whether it holds, a signed margin (positive
/// iff it holds), and every intermediate quantity needed to recompute it.
struct ConditionEntry {
  std::string id;
  bool holds = false;
  bool applicable = true;
  double margin = 0;
  std::vector<std::pair<std::string, double>> inputs;
};

struct ConditionReport {
  ParamPoint point;
  std::vector<ConditionEntry> entries;
};

/// Sufficient condition via independent transversals, in both
/// orientations; decided in exact integer arithmetic with an upper
/// rational bound on e (outward rounding noted in the inputs echo).
ConditionEntry check_transversal_condition(const ParamPoint& point);

/// Sufficient condition via colour collection, both orientations.
/// Log-space evaluation; an exact rational path decides near-unit values
/// when the inner exponent is integral.
ConditionEntry check_coupon_condition(const ParamPoint& point);

/// The two palette-bipartition inequalities at explicit (p, epsilon).
struct CompleteUpperResult {
  ConditionEntry eq1, eq2;
};
CompleteUpperResult check_completeupper(const ParamPoint& point, double p, double epsilon);

/// Best margins over a parameter grid refined by golden-section search.
/// The first inequality's verdict is re-validated in exact rational
/// arithmetic at the winning p (a dyadic double), so a strict < 1 claim
/// is never a rounding artifact.
struct CompleteUpperOptimum {
  double p1 = 0, lhs1 = 0;             // best for the first inequality
  bool holds1_exact = false;
  double p2 = 0, eps2 = 0, lhs2 = 0;   // best for the second
};
CompleteUpperOptimum optimize_completeupper(const ParamPoint& point);

/// The three complete-case sufficiency regimes; each satisfied entry is
/// re-confirmed through the bipartition inequality at the prescribed
/// parameters (echoed in inputs).
std::vector<ConditionEntry> check_3cases(const ParamPoint& point, double epsilon, double t);

/// Exact integer threshold for lists one short of the A-degree:
/// choosable iff a < boundary_threshold(b, delta).
std::int64_t boundary_threshold(int b, int delta);

/// Minimum-degree threshold above which complete-case non-choosability
/// transfers: 4ab ln(4a) ln(k_A).
double degrees_threshold(std::int64_t a, std::int64_t b, int k_a);

/// Necessary-side compound inequalities (both printed branches) for the
/// crossed regime; log bases follow the literal text (natural unless
/// subscripted), with the base-2 reading of the middle expression
/// reported alongside.
ConditionEntry check_necessary_crossed(const ParamPoint& point, int t);

struct SweepRange {
  std::int64_t lo = 1, hi = 1, step = 1;
};

struct SweepRegion {
  PointMode mode = PointMode::COMPLETE;
  SweepRange first;  // delta_a or a
  SweepRange second; // delta_b or b
  SweepRange k_a, k_b;
};

/// Deterministic row-major grid evaluation of the selected condition ids
/// (transversal, coupon, cu1, cu2, c3c1, c3c2, c3c3, boundary, degrees).
/// Throws REGION_TOO_LARGE beyond max_rows.
std::vector<ConditionReport> sweep(const SweepRegion& region,
                                   const std::vector<std::string>& condition_ids,
                                   std::size_t max_rows = 100000);

} // namespace bilist::bounds
