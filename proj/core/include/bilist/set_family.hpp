#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bilist {

/// A k2-uniform family of subsets of [l], l <= 64, blocks as masks.
struct SetFamily {
  int ground_size = 0;
  int block_size = 0;
  std::vector<std::uint64_t> blocks;

  static SetFamily create(int ground_size, int block_size,
                          const std::vector<std::vector<int>>& blocks);
  static SetFamily from_masks(int ground_size, int block_size,
                              std::vector<std::uint64_t> masks);

  /// Sorted ascending with duplicates removed.
  SetFamily normalized() const;

  std::size_t size() const { return blocks.size(); }
  std::vector<std::vector<int>> block_vectors() const;

  /// Text format: header "l k2 m", then m lines of sorted element indices.
  std::string to_text() const;
  static SetFamily from_text(const std::string& text);

  bool operator==(const SetFamily& o) const {
    return ground_size == o.ground_size && block_size == o.block_size && blocks == o.blocks;
  }
};

} // namespace bilist
