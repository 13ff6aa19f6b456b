#include "bilist/steiner.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>

#include "bilist/canonical.hpp"
#include "bilist/combinatorics.hpp"
#include "bilist/error.hpp"
#include "bilist/rng.hpp"

namespace bilist::steiner {

namespace {

using Clock = std::chrono::steady_clock;
using BigInt = boost::multiprecision::cpp_int;

bool hitting_set_search(const std::vector<std::uint64_t>& blocks, int depth_left,
                        std::uint64_t chosen, std::uint64_t* out) {
  std::uint64_t unhit = 0;
  bool found_unhit = false;
  for (std::uint64_t b : blocks)
    if ((b & chosen) == 0) {
      unhit = b;
      found_unhit = true;
      break;
    }
  if (!found_unhit) {
    *out = chosen;
    return true;
  }
  if (depth_left == 0) return false;
  std::uint64_t bits = unhit;
  while (bits) {
    int e = std::countr_zero(bits);
    bits &= bits - 1;
    if (hitting_set_search(blocks, depth_left - 1, chosen | (std::uint64_t{1} << e), out))
      return true;
  }
  return false;
}

} // namespace

std::optional<std::vector<int>> has_property_a(const SetFamily& family, int k1) {
  if (k1 < 0 || k1 > family.ground_size)
    throw Error(ErrorCode::INCONSISTENT, "hitting-set size out of range");
  for (std::uint64_t b : family.blocks)
    if (b == 0) throw Error(ErrorCode::INCONSISTENT, "empty block");

  std::uint64_t witness = 0;
  if (!hitting_set_search(family.blocks, k1, 0, &witness)) return std::nullopt;

  std::vector<int> out;
  std::uint64_t bits = witness;
  while (bits) {
    out.push_back(std::countr_zero(bits));
    bits &= bits - 1;
  }
  // Pad to exactly k1 elements with the smallest unused ground elements.
  for (int e = 0; int(out.size()) < k1 && e < family.ground_size; ++e)
    if (!(witness & (std::uint64_t{1} << e))) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

int min_hitting_set_size(const SetFamily& family) {
  for (int k = 0; k <= family.ground_size; ++k) {
    std::uint64_t witness = 0;
    if (hitting_set_search(family.blocks, k, 0, &witness)) return k;
  }
  return family.ground_size + 1; // unreachable for nonempty blocks
}

MbarBounds mbar_bounds(int k1, int k2, int l) {
  if (k1 < 1 || k2 < 1 || l < k1 + k2)
    throw Error(ErrorCode::INCONSISTENT, "bounds need l >= k1+k2 and positive sizes");
  auto factorial = [](int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  MbarBounds b;
  b.k1 = k1;
  b.k2 = k2;
  b.l = l;
  b.lower = Rational(factorial(l) * factorial(l - k1 - k2),
                     factorial(l - k2) * factorial(l - k1));
  BigInt num = boost::multiprecision::numerator(b.lower);
  BigInt den = boost::multiprecision::denominator(b.lower);
  BigInt ceil = num / den + (num % den == 0 ? 0 : 1);
  b.lower_ceil = ceil.convert_to<std::uint64_t>();

  double lower_real = b.lower.convert_to<double>();
  double log_term = std::log(double(binomial(l, k1)));
  b.upper = std::nextafter(std::nextafter(lower_real, 1e300) * log_term, 1e300);
  b.upper_outward_rounded = true;
  return b;
}

namespace {

// Canonical enumeration of m-block families with the dead-witness
// counting prune: a k1-set stays alive while it hits every block; a block
// kills exactly the alive sets disjoint from it.
class MbarSearch {
public:
  MbarSearch(int l, int k2, int k1, const MbarCaps& caps)
      : l_(l), k2_(k2), k1_(k1), caps_(caps) {
    witness_sets_ = subsets_of_ground(l, k1);
    kill_count_.assign(witness_sets_.size(), 0);
    alive_ = witness_sets_.size();
    kills_per_block_ = binomial(l - k2, k1);
    full_ = l == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << l) - 1;
    deadline_ = Clock::now() +
                std::chrono::milliseconds(std::int64_t(caps.timeout_seconds * 1000));
  }

  /// Exhausts family size m; returns the first (lex-least canonical)
  /// family lacking the property, if any. Sets capped on budget.
  std::optional<std::vector<std::uint64_t>> run_level(int m) {
    m_ = m;
    found_.reset();
    recurse();
    return found_;
  }

  bool capped() const { return capped_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  void recurse() {
    if (capped_ || found_) return;
    ++nodes_;
    if (nodes_ > caps_.max_nodes ||
        (caps_.timeout_seconds > 0 && (nodes_ & 1023) == 0 && Clock::now() > deadline_)) {
      capped_ = true;
      return;
    }
    int rem = m_ - int(blocks_.size());
    if (alive_ > std::uint64_t(rem) * kills_per_block_) return;
    if (rem == 0) {
      if (alive_ == 0) found_ = blocks_;
      return;
    }
    if (!blocks_.empty() && int(blocks_.size()) <= caps_.canonical_test_depth &&
        detail::mask_family_has_smaller_relabelling(blocks_, l_))
      return;
    std::uint64_t last = blocks_.empty() ? 0 : blocks_.back();
    for (std::uint64_t cand : detail::next_canonical_blocks(l_, k2_, last, used_colours_)) {
      push(cand);
      recurse();
      pop(cand);
      if (capped_ || found_) return;
    }
  }

  void push(std::uint64_t b) {
    blocks_.push_back(b);
    used_stack_.push_back(used_colours_);
    used_colours_ = std::max(used_colours_, 64 - std::countl_zero(b));
    for (std::uint64_t sub : subsets_of_mask(full_ & ~b, k1_)) {
      std::size_t i = index_of(sub);
      if (kill_count_[i]++ == 0) --alive_;
    }
  }

  void pop(std::uint64_t b) {
    blocks_.pop_back();
    used_colours_ = used_stack_.back();
    used_stack_.pop_back();
    for (std::uint64_t sub : subsets_of_mask(full_ & ~b, k1_)) {
      std::size_t i = index_of(sub);
      if (--kill_count_[i] == 0) ++alive_;
    }
  }

  std::size_t index_of(std::uint64_t v) const {
    return std::size_t(std::lower_bound(witness_sets_.begin(), witness_sets_.end(), v) -
                       witness_sets_.begin());
  }

  int l_, k2_, k1_;
  MbarCaps caps_;
  int m_ = 0;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> witness_sets_;
  std::vector<std::uint32_t> kill_count_;
  std::uint64_t alive_ = 0, kills_per_block_ = 0;
  std::vector<std::uint64_t> blocks_;
  std::vector<int> used_stack_;
  int used_colours_ = 0;
  std::uint64_t nodes_ = 0;
  bool capped_ = false;
  Clock::time_point deadline_;
  std::optional<std::vector<std::uint64_t>> found_;
};

} // namespace

MbarResult mbar_exact(int k1, int k2, int l, const MbarCaps& caps) {
  if (k1 < 1 || k2 < 1 || l < 1 || l > 64)
    throw Error(ErrorCode::INCONSISTENT, "parameters out of range");
  if (l < k1 + k2)
    throw Error(ErrorCode::INCONSISTENT,
                "every family has a hitting set when l < k1+k2; no finite answer");

  MbarResult res;
  res.k1 = k1;
  res.k2 = k2;
  res.l = l;

  MbarBounds bounds = mbar_bounds(k1, k2, l);
  res.upper_bracket = bounds.upper;
  std::uint64_t start = std::max<std::uint64_t>(1, bounds.lower_ceil);

  MbarSearch search(l, k2, k1, caps);
  std::uint64_t cap_blocks = binomial(l, k2);
  for (std::uint64_t m = start; m <= cap_blocks; ++m) {
    auto family = search.run_level(int(m));
    res.nodes = search.nodes();
    if (search.capped()) {
      res.status = MbarResult::Status::CAPPED;
      res.value = m; // levels below m are exhausted
      return res;
    }
    if (family) {
      res.status = MbarResult::Status::EXACT;
      res.value = m;
      res.extremal = SetFamily::from_masks(l, k2, *family);
      return res;
    }
  }
  // The complete family always lacks the property when l >= k1+k2, so
  // the loop cannot fall through.
  throw Error(ErrorCode::INCONSISTENT, "exhaustive search failed to terminate");
}

SetFamily random_family_upper(int k1, int k2, int l, std::uint64_t seed, int retry_budget) {
  MbarBounds bounds = mbar_bounds(k1, k2, l);
  std::uint64_t m = std::uint64_t(std::ceil(bounds.upper));
  Rng rng(seed);
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    Rng draw = rng.split();
    std::vector<std::uint64_t> masks;
    masks.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
      std::uint64_t mask = 0;
      for (int e : draw.sample_subset(l, k2)) mask |= std::uint64_t{1} << e;
      masks.push_back(mask);
    }
    SetFamily family = SetFamily::from_masks(l, k2, std::move(masks)).normalized();
    if (!has_property_a(family, k1)) return family;
  }
  throw Error(ErrorCode::RETRY_EXHAUSTED,
              "no property-free family after " + std::to_string(retry_budget) + " draws");
}

} // namespace bilist::steiner
