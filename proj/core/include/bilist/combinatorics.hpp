#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bilist {

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
  return r;
}

/// All s-subsets of [n] as masks, ascending numeric order.
inline std::vector<std::uint64_t> subsets_of_ground(int n, int s) {
  std::vector<std::uint64_t> out;
  if (s < 0 || s > n) return out;
  if (s == 0) return {0};
  std::uint64_t mask = (std::uint64_t{1} << s) - 1;
  std::uint64_t end = mask << (n - s);
  while (true) {
    out.push_back(mask);
    if (mask == end) break;
    std::uint64_t c = mask & (~mask + 1);
    std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return out;
}

/// All s-subsets of the set bits of `mask`, ascending numeric order.
inline std::vector<std::uint64_t> subsets_of_mask(std::uint64_t mask, int s) {
  std::vector<int> bits;
  std::uint64_t m = mask;
  while (m) {
    bits.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  std::vector<std::uint64_t> out;
  int n = int(bits.size());
  if (s < 0 || s > n) return out;
  auto idx = std::vector<int>(std::size_t(s));
  for (int i = 0; i < s; ++i) idx[std::size_t(i)] = i;
  while (true) {
    std::uint64_t sub = 0;
    for (int i : idx) sub |= std::uint64_t{1} << bits[std::size_t(i)];
    out.push_back(sub);
    int i = s - 1;
    while (i >= 0 && idx[std::size_t(i)] == n - s + i) --i;
    if (i < 0) break;
    ++idx[std::size_t(i)];
    for (int j = i + 1; j < s; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
  }
  return out;
}

} // namespace bilist
