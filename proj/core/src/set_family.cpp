#include "bilist/set_family.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "bilist/error.hpp"

namespace bilist {

SetFamily SetFamily::create(int ground_size, int block_size,
                            const std::vector<std::vector<int>>& blocks) {
  std::vector<std::uint64_t> masks;
  masks.reserve(blocks.size());
  for (const auto& block : blocks) {
    std::uint64_t m = 0;
    for (int e : block) {
      if (e < 0 || e >= ground_size)
        throw Error(ErrorCode::INCONSISTENT, "block element out of ground set");
      if (m & (std::uint64_t{1} << e))
        throw Error(ErrorCode::INCONSISTENT, "repeated element in a block");
      m |= std::uint64_t{1} << e;
    }
    masks.push_back(m);
  }
  return from_masks(ground_size, block_size, std::move(masks));
}

SetFamily SetFamily::from_masks(int ground_size, int block_size,
                                std::vector<std::uint64_t> masks) {
  if (ground_size < 0 || ground_size > 64)
    throw Error(ErrorCode::INCONSISTENT, "ground set size must be within 0..64");
  for (std::uint64_t m : masks) {
    if (std::popcount(m) != block_size)
      throw Error(ErrorCode::INCONSISTENT, "non-uniform block size");
    if (ground_size < 64 && (m >> ground_size) != 0)
      throw Error(ErrorCode::INCONSISTENT, "block element out of ground set");
  }
  SetFamily f;
  f.ground_size = ground_size;
  f.block_size = block_size;
  f.blocks = std::move(masks);
  return f;
}

SetFamily SetFamily::normalized() const {
  SetFamily f = *this;
  std::sort(f.blocks.begin(), f.blocks.end());
  f.blocks.erase(std::unique(f.blocks.begin(), f.blocks.end()), f.blocks.end());
  return f;
}

std::vector<std::vector<int>> SetFamily::block_vectors() const {
  std::vector<std::vector<int>> out;
  out.reserve(blocks.size());
  for (std::uint64_t m : blocks) {
    std::vector<int> v;
    std::uint64_t bits = m;
    while (bits) {
      v.push_back(std::countr_zero(bits));
      bits &= bits - 1;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::string SetFamily::to_text() const {
  std::ostringstream out;
  out << ground_size << ' ' << block_size << ' ' << blocks.size() << '\n';
  for (const auto& block : block_vectors()) {
    for (std::size_t i = 0; i < block.size(); ++i)
      out << (i ? " " : "") << block[std::size_t(i)];
    out << '\n';
  }
  return out.str();
}

SetFamily SetFamily::from_text(const std::string& text) {
  std::istringstream in(text);
  int l = 0, k2 = 0;
  std::size_t m = 0;
  if (!(in >> l >> k2 >> m))
    throw Error(ErrorCode::MALFORMED, "set family header must be 'l k2 m'");
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < m; ++i) {
    auto block = std::vector<int>(std::size_t(k2));
    for (int j = 0; j < k2; ++j)
      if (!(in >> block[std::size_t(j)]))
        throw Error(ErrorCode::MALFORMED,
                    "set family block " + std::to_string(i) + " is truncated");
    if (!std::is_sorted(block.begin(), block.end()))
      throw Error(ErrorCode::INCONSISTENT, "block elements must be sorted ascending");
    blocks.push_back(std::move(block));
  }
  return create(l, k2, blocks);
}

} // namespace bilist
