#include "bilist/bounds.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "bilist/error.hpp"

namespace bilist::bounds {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Upper rational bound on e, used wherever an exact comparison must not
// spuriously declare a sufficient condition satisfied.
const BigInt kENum("27182818284590455");
const BigInt kEDen("10000000000000000");

BigInt ipow(BigInt base, int exp) {
  BigInt r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

Rational rational_from_double(double x) {
  // Exact: doubles are dyadic rationals.
  if (x == 0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp); // x = mant * 2^exp, |mant| in [0.5,1)
  BigInt num = BigInt(std::int64_t(std::ldexp(mant, 53)));
  BigInt den = 1;
  int shift = exp - 53;
  if (shift >= 0)
    num <<= shift;
  else
    den <<= -shift;
  return Rational(num, den);
}

} // namespace

ParamPoint ParamPoint::degrees(std::int64_t delta_a, std::int64_t delta_b, int k_a, int k_b) {
  ParamPoint p;
  p.mode = PointMode::DEGREE;
  p.delta_a = delta_a;
  p.delta_b = delta_b;
  p.k_a = k_a;
  p.k_b = k_b;
  return p;
}

ParamPoint ParamPoint::complete(std::int64_t a, std::int64_t b, int k_a, int k_b) {
  ParamPoint p;
  p.mode = PointMode::COMPLETE;
  p.a = a;
  p.b = b;
  p.delta_a = b; // A-vertices see all of B
  p.delta_b = a;
  p.k_a = k_a;
  p.k_b = k_b;
  return p;
}

ConditionEntry check_transversal_condition(const ParamPoint& point) {
  ConditionEntry e;
  e.id = "transversal";
  auto orientation = [](std::int64_t da, std::int64_t db, int ka, int kb) {
    // kb >= (e ka db)^(1/ka) * da, decided as kb^ka >= e ka db da^ka.
    BigInt lhs = ipow(BigInt(kb), ka) * kEDen;
    BigInt rhs = kENum * ka * db * ipow(BigInt(da), ka);
    bool holds = lhs >= rhs;
    double rhs_real =
        std::pow(2.718281828459045 * double(ka) * double(db), 1.0 / double(ka)) * double(da);
    return std::pair<bool, double>(holds, double(kb) - rhs_real);
  };
  auto [h1, m1] = orientation(point.delta_a, point.delta_b, point.k_a, point.k_b);
  auto [h2, m2] = orientation(point.delta_b, point.delta_a, point.k_b, point.k_a);
  e.holds = h1 || h2;
  e.margin = std::max(m1, m2);
  e.inputs = {{"margin_as_stated", m1},
              {"margin_exchanged", m2},
              {"holds_as_stated", h1 ? 1.0 : 0.0},
              {"holds_exchanged", h2 ? 1.0 : 0.0},
              {"e_upper_bound", 2.7182818284590455}};
  return e;
}

ConditionEntry check_coupon_condition(const ParamPoint& point) {
  ConditionEntry e;
  e.id = "coupon";
  auto orientation = [](std::int64_t da, std::int64_t db, int ka, int kb) {
    // e (da(db-1)+1) (1-(1-1/kb)^{da min(1,kb/ka)})^{ka} <= 1, log space.
    double x = double(da) * std::min(1.0, double(kb) / double(ka));
    double inner = kb >= 2 ? -std::expm1(x * std::log1p(-1.0 / kb)) : 1.0;
    double ln_lhs = 1.0 + std::log(double(da) * double(db - 1) + 1.0) +
                    double(ka) * std::log(inner);
    double lhs = ln_lhs > 700 ? std::numeric_limits<double>::infinity() : std::exp(ln_lhs);
    bool holds = ln_lhs <= 0;
    // Exact rational fallback near the unit boundary when the exponent
    // is integral: decide with the outward-rounded e.
    if (std::abs(lhs - 1.0) < 1e-9) {
      double x_int = 0;
      if (std::modf(x, &x_int) == 0.0 && kb >= 2) {
        Rational base = Rational(BigInt(kb) - 1, BigInt(kb));
        Rational q = 1;
        for (int i = 0; i < int(x_int); ++i) q *= base;
        Rational factor = 1 - q;
        Rational pow_f = 1;
        for (int i = 0; i < ka; ++i) pow_f *= factor;
        Rational lhs_exact = Rational(kENum, kEDen) *
                             Rational(BigInt(da) * BigInt(db - 1) + 1) * pow_f;
        holds = lhs_exact <= 1;
      }
    }
    return std::tuple<bool, double, double>(holds, lhs, x);
  };
  auto [h1, lhs1, x1] = orientation(point.delta_a, point.delta_b, point.k_a, point.k_b);
  auto [h2, lhs2, x2] = orientation(point.delta_b, point.delta_a, point.k_b, point.k_a);
  e.holds = h1 || h2;
  e.margin = 1.0 - std::min(lhs1, lhs2);
  // The capped exponent differs from the averaged-exponent display of
  // the same bound exactly when k_B exceeds k_A; flag those regions.
  e.inputs = {{"lhs_as_stated", lhs1},
              {"lhs_exchanged", lhs2},
              {"exponent_as_stated", x1},
              {"exponent_exchanged", x2},
              {"exponent_capped_as_stated", point.k_b > point.k_a ? 1.0 : 0.0},
              {"exponent_capped_exchanged", point.k_a > point.k_b ? 1.0 : 0.0}};
  return e;
}

CompleteUpperResult check_completeupper(const ParamPoint& point, double p, double epsilon) {
  if (point.mode != PointMode::COMPLETE)
    throw Error(ErrorCode::INCONSISTENT, "bipartition inequalities need a complete-mode point");
  if (!(p > 0 && p < 1) || !(epsilon > 0 && epsilon < 1))
    throw Error(ErrorCode::INCONSISTENT, "p and epsilon must lie strictly in (0,1)");
  CompleteUpperResult r;

  // First inequality, exact: a p^kA + b (1-p)^kB < 1.
  {
    Rational pr = rational_from_double(p);
    Rational term1 = Rational(BigInt(point.a));
    for (int i = 0; i < point.k_a; ++i) term1 *= pr;
    Rational term2 = Rational(BigInt(point.b));
    Rational q = 1 - pr;
    for (int i = 0; i < point.k_b; ++i) term2 *= q;
    Rational lhs = term1 + term2;
    r.eq1.id = "cu1";
    r.eq1.holds = lhs < 1;
    r.eq1.margin = 1.0 - lhs.convert_to<double>();
    r.eq1.inputs = {{"p", p},
                    {"term_a", term1.convert_to<double>()},
                    {"term_b", term2.convert_to<double>()},
                    {"lhs", lhs.convert_to<double>()}};
  }

  // Second inequality: a p^{kA-1} / ((1-eps) kB) + b exp(-eps^2 kB p / 2) < 1.
  {
    double term1 = double(point.a) * std::pow(p, point.k_a - 1) /
                   ((1.0 - epsilon) * double(point.k_b));
    double term2 = double(point.b) * std::exp(-epsilon * epsilon * point.k_b * p / 2.0);
    double lhs = term1 + term2;
    r.eq2.id = "cu2";
    r.eq2.holds = lhs < 1;
    r.eq2.margin = 1.0 - lhs;
    r.eq2.inputs = {{"p", p}, {"epsilon", epsilon}, {"term_a", term1}, {"term_b", term2},
                    {"lhs", lhs}};
  }
  return r;
}

namespace {

template <typename F>
double golden_min(F&& f, double lo, double hi, int iters = 60) {
  const double phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

} // namespace

CompleteUpperOptimum optimize_completeupper(const ParamPoint& point) {
  if (point.mode != PointMode::COMPLETE)
    throw Error(ErrorCode::INCONSISTENT, "bipartition inequalities need a complete-mode point");
  CompleteUpperOptimum best;

  auto lhs1 = [&](double p) {
    return double(point.a) * std::pow(p, point.k_a) +
           double(point.b) * std::pow(1.0 - p, point.k_b);
  };
  double coarse_p = 0.5, coarse_v = lhs1(0.5);
  for (int i = 1; i < 100; ++i) {
    double p = i / 100.0;
    if (lhs1(p) < coarse_v) {
      coarse_v = lhs1(p);
      coarse_p = p;
    }
  }
  best.p1 = golden_min(lhs1, std::max(1e-9, coarse_p - 0.01), std::min(1.0 - 1e-9, coarse_p + 0.01));
  if (lhs1(coarse_p) < lhs1(best.p1)) best.p1 = coarse_p;
  best.lhs1 = lhs1(best.p1);
  {
    Rational pr = rational_from_double(best.p1);
    Rational term1 = Rational(BigInt(point.a));
    for (int i = 0; i < point.k_a; ++i) term1 *= pr;
    Rational term2 = Rational(BigInt(point.b));
    Rational q = 1 - pr;
    for (int i = 0; i < point.k_b; ++i) term2 *= q;
    best.holds1_exact = term1 + term2 < 1;
  }

  auto lhs2 = [&](double p, double eps) {
    return double(point.a) * std::pow(p, point.k_a - 1) / ((1.0 - eps) * double(point.k_b)) +
           double(point.b) * std::exp(-eps * eps * point.k_b * p / 2.0);
  };
  best.lhs2 = std::numeric_limits<double>::infinity();
  for (int ei = 1; ei < 20; ++ei) {
    double eps = ei / 20.0;
    double coarse2_p = 0.5, coarse2_v = lhs2(0.5, eps);
    for (int i = 1; i < 100; ++i) {
      double p = i / 100.0;
      if (lhs2(p, eps) < coarse2_v) {
        coarse2_v = lhs2(p, eps);
        coarse2_p = p;
      }
    }
    double p_ref = golden_min([&](double p) { return lhs2(p, eps); },
                              std::max(1e-9, coarse2_p - 0.01),
                              std::min(1.0 - 1e-9, coarse2_p + 0.01));
    if (lhs2(coarse2_p, eps) < lhs2(p_ref, eps)) p_ref = coarse2_p;
    if (lhs2(p_ref, eps) < best.lhs2) {
      best.lhs2 = lhs2(p_ref, eps);
      best.p2 = p_ref;
      best.eps2 = eps;
    }
  }
  return best;
}

std::vector<ConditionEntry> check_3cases(const ParamPoint& point, double epsilon, double t) {
  if (point.mode != PointMode::COMPLETE)
    throw Error(ErrorCode::INCONSISTENT, "the three regimes need a complete-mode point");
  std::vector<ConditionEntry> out;
  double a = double(point.a), b = double(point.b);
  double ka = point.k_a, kb = point.k_b;

  // Regime 1: both list sizes at least the opposite part size to the
  // eps; confirmed mechanically through the first bipartition inequality
  // at the prescribed p (with the larger part playing a).
  {
    ConditionEntry e;
    e.id = "c3c1";
    double a1 = std::max(a, b), b1 = std::min(a, b);
    double ka1 = a >= b ? ka : kb, kb1 = a >= b ? kb : ka;
    bool size_ok = ka1 >= std::pow(b1, epsilon) && kb1 >= std::pow(a1, epsilon);
    double p = std::pow(2.0 * a1, -1.0 / std::pow(b1, epsilon));
    double lhs = 1e300;
    bool eq1_ok = false;
    if (size_ok && p > 0 && p < 1) {
      lhs = a1 * std::pow(p, ka1) + b1 * std::pow(1.0 - p, kb1);
      eq1_ok = lhs < 1;
    }
    e.holds = size_ok && eq1_ok;
    e.margin = 1.0 - lhs;
    e.inputs = {{"epsilon", epsilon},
                {"size_check", size_ok ? 1.0 : 0.0},
                {"p", p},
                {"eq1_lhs", lhs},
                {"threshold_check_eps_delta", epsilon * std::pow(std::min(a, b), epsilon)}};
    out.push_back(e);
  }

  // Regime 2: k_A >= log2(2a)/t and k_B > 2^t ln(2b), either orientation.
  {
    ConditionEntry e;
    e.id = "c3c2";
    auto orient = [&](double aa, double bb, double kka, double kkb) {
      bool ok = t > 0 && kka >= std::log2(2.0 * aa) / t && kkb > std::pow(2.0, t) * std::log(2.0 * bb);
      double p = std::pow(2.0, -t);
      double lhs = aa * std::pow(p, kka) + bb * std::pow(1.0 - p, kkb);
      return std::pair<bool, double>(ok, lhs);
    };
    auto [ok1, lhs1] = orient(a, b, ka, kb);
    auto [ok2, lhs2] = orient(b, a, kb, ka);
    e.holds = ok1 || ok2;
    e.margin = 1.0 - std::min(lhs1, lhs2);
    e.inputs = {{"t", t},
                {"need_ka", std::log2(2.0 * a) / t},
                {"need_kb", std::pow(2.0, t) * std::log(2.0 * b)},
                {"eq1_lhs_as_stated", lhs1},
                {"eq1_lhs_exchanged", lhs2}};
    out.push_back(e);
  }

  // Regime 3: a = b = Delta and one list size clears
  // 8 (Delta/(2 ln 2Delta))^{1/k} ln(2Delta) for the other's exponent.
  {
    ConditionEntry e;
    e.id = "c3c3";
    bool applicable = point.a == point.b;
    e.applicable = applicable;
    double need_kb = 0, need_ka = 0, lhs = 1e300;
    if (applicable) {
      double d = a;
      double L = std::log(2.0 * d);
      need_kb = 8.0 * std::pow(d / (2.0 * L), 1.0 / ka) * L;
      need_ka = 8.0 * std::pow(d / (2.0 * L), 1.0 / kb) * L;
      bool fire_b = kb > need_kb, fire_a = ka > need_ka;
      if (fire_b || fire_a) {
        double kk_small = fire_b ? ka : kb; // exponent side
        double kk_big = fire_b ? kb : ka;   // cleared side
        double p = 8.0 * L / kk_big;
        double eps = 0.5;
        lhs = d * std::pow(p, kk_small - 1) / ((1.0 - eps) * kk_big) +
              d * std::exp(-eps * eps * kk_big * p / 2.0);
        e.holds = true;
      }
    }
    e.margin = e.holds ? 1.0 - lhs : -1.0;
    e.inputs = {{"need_kb", need_kb}, {"need_ka", need_ka}, {"eq2_lhs", lhs}};
    out.push_back(e);
  }
  return out;
}

std::int64_t boundary_threshold(int b, int delta) {
  if (b < 3 || delta < 2)
    throw Error(ErrorCode::INCONSISTENT, "boundary threshold needs b >= 3, delta >= 2");
  if (b == 3) {
    // Nearest integer to 3 delta^2 / 4; the numerator is 0 or 3 mod 4.
    std::int64_t n = 3LL * delta * delta;
    return (n + 2) / 4;
  }
  if (b == 4) {
    std::int64_t d = delta;
    std::int64_t n = 11 * d * d * d;
    switch (delta % 4) {
      case 0: return n / 16;
      case 1: return (n + 3 * d + 2) / 16;
      case 2: return (n + 4 * d) / 16;
      default: return (n + 3 * d - 2) / 16;
    }
  }
  int q = delta / (b - 1), r = delta % (b - 1);
  BigInt base1 = BigInt(b - 2) * q + r;
  BigInt base2 = base1 - 1;
  BigInt value = ipow(BigInt(delta), b - 1) - ipow(base1, b - 1 - r) * ipow(base2, r);
  if (value > BigInt(std::numeric_limits<std::int64_t>::max()))
    throw Error(ErrorCode::TOO_LARGE, "threshold exceeds 64-bit range");
  return value.convert_to<std::int64_t>();
}

double degrees_threshold(std::int64_t a, std::int64_t b, int k_a) {
  if (a < 1 || b < 1 || k_a < 2)
    throw Error(ErrorCode::INCONSISTENT, "degrees threshold needs a,b >= 1 and k_A >= 2");
  return 4.0 * double(a) * double(b) * std::log(4.0 * double(a)) * std::log(double(k_a));
}

ConditionEntry check_necessary_crossed(const ParamPoint& point, int t) {
  if (point.mode != PointMode::COMPLETE)
    throw Error(ErrorCode::INCONSISTENT, "crossed necessary check needs a complete-mode point");
  if (t < 4) throw Error(ErrorCode::INCONSISTENT, "the crossed regime needs t >= 4");
  ConditionEntry e;
  e.id = "necessary_crossed";
  double a = double(point.a), b = double(point.b);
  e.applicable = b >= 4 && b <= a;
  double ka = point.k_a, kb = point.k_b;

  double pow2t = std::pow(2.0, t);
  // Former branch: kA <= log2(a)/t and kB <= (2^{t-1}/e)(ln b - ln ln a)
  // with the middle expression at most log2(a)/t. "ln" is literal; the
  // base-2 reading of the middle expression is echoed for comparison.
  double mid_ln = (pow2t / 2.0 / 2.718281828459045) * (std::log(b) - std::log(std::log(a)));
  double mid_log2 = (pow2t / 2.0 / 2.718281828459045) * (std::log2(b) - std::log2(std::log(a)));
  bool former = ka <= std::log2(a) / t && kb <= mid_ln && mid_ln <= std::log2(a) / t;
  // Latter branch.
  double latter_kb = (std::log2(b) - std::log2(std::log(a))) / (t + std::log2(double(t)) + 3.0);
  bool latter = ka <= pow2t * std::log2(a) && kb <= latter_kb;
  e.holds = e.applicable && (former || latter);
  e.margin = e.holds ? 1.0 : -1.0;
  e.inputs = {{"t", double(t)},
              {"former_mid_natural", mid_ln},
              {"former_mid_base2_alternative", mid_log2},
              {"latter_kb_bound", latter_kb},
              {"former_holds", former ? 1.0 : 0.0},
              {"latter_holds", latter ? 1.0 : 0.0}};
  return e;
}

std::vector<ConditionReport> sweep(const SweepRegion& region,
                                   const std::vector<std::string>& condition_ids,
                                   std::size_t max_rows) {
  std::vector<ConditionReport> out;
  std::size_t rows = 0;
  auto count_range = [](const SweepRange& r) {
    return r.step <= 0 ? std::size_t(0) : std::size_t((r.hi - r.lo) / r.step + 1);
  };
  std::size_t total = count_range(region.first) * count_range(region.second) *
                      count_range(region.k_a) * count_range(region.k_b) *
                      std::max<std::size_t>(1, condition_ids.size());
  if (total > max_rows)
    throw Error(ErrorCode::REGION_TOO_LARGE,
                "sweep region yields " + std::to_string(total) + " rows, cap " +
                    std::to_string(max_rows));

  for (std::int64_t f = region.first.lo; f <= region.first.hi; f += region.first.step)
    for (std::int64_t s = region.second.lo; s <= region.second.hi; s += region.second.step)
      for (std::int64_t ka = region.k_a.lo; ka <= region.k_a.hi; ka += region.k_a.step)
        for (std::int64_t kb = region.k_b.lo; kb <= region.k_b.hi; kb += region.k_b.step) {
          ParamPoint point = region.mode == PointMode::COMPLETE
                                 ? ParamPoint::complete(f, s, int(ka), int(kb))
                                 : ParamPoint::degrees(f, s, int(ka), int(kb));
          ConditionReport report;
          report.point = point;
          for (const auto& id : condition_ids) {
            if (id == "transversal") {
              report.entries.push_back(check_transversal_condition(point));
            } else if (id == "coupon") {
              report.entries.push_back(check_coupon_condition(point));
            } else if (id == "cu1" || id == "cu2") {
              if (point.mode != PointMode::COMPLETE) {
                ConditionEntry e;
                e.id = id;
                e.applicable = false;
                report.entries.push_back(e);
              } else {
                auto opt = optimize_completeupper(point);
                ConditionEntry e;
                e.id = id;
                if (id == "cu1") {
                  e.holds = opt.holds1_exact;
                  e.margin = 1.0 - opt.lhs1;
                  e.inputs = {{"best_p", opt.p1}, {"lhs", opt.lhs1}};
                } else {
                  e.holds = opt.lhs2 < 1;
                  e.margin = 1.0 - opt.lhs2;
                  e.inputs = {{"best_p", opt.p2}, {"best_eps", opt.eps2}, {"lhs", opt.lhs2}};
                }
                report.entries.push_back(e);
              }
            } else if (id == "c3c1" || id == "c3c2" || id == "c3c3") {
              if (point.mode != PointMode::COMPLETE) {
                ConditionEntry e;
                e.id = id;
                e.applicable = false;
                report.entries.push_back(e);
              } else {
                // Default parameters: epsilon 1/2; t over a small grid.
                ConditionEntry merged;
                merged.id = id;
                merged.holds = false;
                merged.margin = -1e300;
                for (double t : {0.5, 1.0, 2.0, 3.0, 4.0}) {
                  auto entries = check_3cases(point, 0.5, t);
                  const ConditionEntry& e = id == "c3c1"   ? entries[0]
                                            : id == "c3c2" ? entries[1]
                                                           : entries[2];
                  if (e.holds || e.margin > merged.margin) {
                    merged.holds = merged.holds || e.holds;
                    merged.margin = std::max(merged.margin, e.margin);
                    merged.inputs = e.inputs;
                    merged.applicable = e.applicable;
                  }
                  if (id != "c3c2") break; // only c3c2 scans t
                }
                report.entries.push_back(merged);
              }
            } else if (id == "boundary") {
              ConditionEntry e;
              e.id = id;
              if (point.mode == PointMode::COMPLETE && point.b >= 3 && point.k_a == point.b - 1 &&
                  point.k_b >= 2) {
                std::int64_t th = boundary_threshold(int(point.b), point.k_b);
                e.holds = point.a < th;
                e.margin = double(th - point.a);
                e.inputs = {{"threshold", double(th)}};
              } else {
                e.applicable = false;
              }
              report.entries.push_back(e);
            } else if (id == "degrees") {
              ConditionEntry e;
              e.id = id;
              if (point.mode == PointMode::COMPLETE && point.k_a >= 2) {
                double th = degrees_threshold(point.a, point.b, point.k_a);
                e.holds = true; // informational value
                e.margin = th;
                e.inputs = {{"threshold", th}};
              } else {
                e.applicable = false;
              }
              report.entries.push_back(e);
            } else {
              throw Error(ErrorCode::USAGE, "unknown condition id '" + id + "'");
            }
            ++rows;
          }
          out.push_back(std::move(report));
        }
  return out;
}

} // namespace bilist::bounds
