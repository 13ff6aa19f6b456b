#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bilist {

/// A set of colours drawn from a dense palette 0..width-1, stored as bit
/// rows. Widths above 64 spill into further words transparently.
class ColourSet {
public:
  ColourSet() = default;

  explicit ColourSet(int width) : width_(width), words_((width + 63) / 64, 0) {}

  static ColourSet of(int width, std::initializer_list<int> colours) {
    ColourSet s(width);
    for (int c : colours) s.set(c);
    return s;
  }

  static ColourSet of(int width, const std::vector<int>& colours) {
    ColourSet s(width);
    for (int c : colours) s.set(c);
    return s;
  }

  static ColourSet from_mask(int width, std::uint64_t mask) {
    assert(width <= 64);
    ColourSet s(width);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  int width() const { return width_; }

  bool test(int c) const {
    assert(c >= 0 && c < width_);
    return (words_[c >> 6] >> (c & 63)) & 1u;
  }

  void set(int c) {
    assert(c >= 0 && c < width_);
    words_[c >> 6] |= std::uint64_t{1} << (c & 63);
  }

  void reset(int c) {
    assert(c >= 0 && c < width_);
    words_[c >> 6] &= ~(std::uint64_t{1} << (c & 63));
  }

  int count() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool intersects(const ColourSet& o) const {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool subset_of(const ColourSet& o) const {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  ColourSet operator&(const ColourSet& o) const {
    ColourSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }

  ColourSet operator|(const ColourSet& o) const {
    ColourSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }

  ColourSet minus(const ColourSet& o) const {
    ColourSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

  ColourSet complement() const {
    ColourSet r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  /// Smallest colour in the set, or -1 when empty.
  int lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i) * 64 + std::countr_zero(words_[i]);
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(int(i) * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(std::size_t(count()));
    for_each([&](int c) { v.push_back(c); });
    return v;
  }

  std::uint64_t low64() const { return words_.empty() ? 0 : words_[0]; }

  bool operator==(const ColourSet& o) const {
    return width_ == o.width_ && words_ == o.words_;
  }
  bool operator!=(const ColourSet& o) const { return !(*this == o); }

  /// Order matching comparison of the sorted element sequences; callers
  /// compare equal-size sets (lists of one uniform length).
  static int compare_seq_lex(const ColourSet& a, const ColourSet& b) {
    assert(a.width_ == b.width_);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff) {
        std::uint64_t lowest_bit = diff & (~diff + 1);
        return (a.words_[i] & lowest_bit) ? -1 : 1;
      }
    }
    return 0;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](int c) {
      if (!first) s += ",";
      s += std::to_string(c);
      first = false;
    });
    return s + "}";
  }

private:
  void trim() {
    int extra = width_ & 63;
    if (extra && !words_.empty()) words_.back() &= (std::uint64_t{1} << extra) - 1;
  }

  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Sequence-lexicographic order on equal-size subsets encoded as 64-bit
/// masks: the set owning the smallest element outside the intersection
/// comes first.
inline int compare_mask_seq_lex(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  if (!diff) return 0;
  std::uint64_t lowest_bit = diff & (~diff + 1);
  return (a & lowest_bit) ? -1 : 1;
}

inline bool mask_seq_less(std::uint64_t a, std::uint64_t b) {
  return compare_mask_seq_lex(a, b) < 0;
}

} // namespace bilist
