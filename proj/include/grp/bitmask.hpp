#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

namespace grp {

// Runtime-sized bitset used for element sets over a fixed group.
// Word-based so that subset/join/popcount stay cheap in search loops.
class Bitmask {
public:
  Bitmask() = default;
  explicit Bitmask(int n) : size_(n), words_((n + 63) / 64, 0) {}

  int size() const { return size_; }

  bool test(int i) const {
    assert(i >= 0 && i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < size_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < size_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(int i) {
    assert(i >= 0 && i < size_);
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }

  bool operator==(const Bitmask& o) const { return size_ == o.size_ && words_ == o.words_; }
  bool operator!=(const Bitmask& o) const { return !(*this == o); }

  bool subset_of(const Bitmask& o) const {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  bool intersects(const Bitmask& o) const {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  Bitmask& operator|=(const Bitmask& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitmask& operator&=(const Bitmask& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  friend Bitmask operator|(Bitmask a, const Bitmask& b) { return a |= b; }
  friend Bitmask operator&(Bitmask a, const Bitmask& b) { return a &= b; }

  // Least set bit, or -1 when empty.
  int first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return int(k * 64) + std::countr_zero(words_[k]);
    return -1;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        out.push_back(int(k * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 0x100000001b3ULL;
    }
    return h ^ std::size_t(size_);
  }

private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace grp

template <>
struct std::hash<grp::Bitmask> {
  std::size_t operator()(const grp::Bitmask& m) const { return m.hash(); }
};
