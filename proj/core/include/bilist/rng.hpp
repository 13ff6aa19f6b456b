#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace bilist {

/// Seedable, splittable generator used by every randomized routine.
/// The algorithm is splitmix64; its identifier is recorded in sampler
/// outcomes so runs can be reproduced bit for bit across platforms.
class Rng {
public:
  static constexpr const char* kAlgorithm = "splitmix64";

  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, n), n > 0. Rejection keeps the draw unbiased
  /// and platform-independent.
  std::uint64_t below(std::uint64_t n) {
    assert(n > 0);
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  int below_int(int n) { return int(below(std::uint64_t(n))); }

  double unit() { return double(next() >> 11) * 0x1.0p-53; }

  /// Child generator with an independent stream.
  Rng split() { return Rng(next() ^ 0x5851f42d4c957f2dULL); }

  /// k distinct values from 0..n-1, ascending.
  std::vector<int> sample_subset(int n, int k) {
    assert(0 <= k && k <= n);
    // Floyd's method; then sort.
    std::vector<int> chosen;
    chosen.reserve(std::size_t(k));
    std::vector<bool> in(std::size_t(n), false);
    for (int j = n - k; j < n; ++j) {
      int t = below_int(j + 1);
      if (in[std::size_t(t)]) t = j;
      in[std::size_t(t)] = true;
      chosen.push_back(t);
    }
    std::vector<int> out;
    out.reserve(std::size_t(k));
    for (int i = 0; i < n; ++i)
      if (in[std::size_t(i)]) out.push_back(i);
    return out;
  }

private:
  std::uint64_t state_;
};

} // namespace bilist
