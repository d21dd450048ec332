#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace chaincount {

// Fixed-size bitset over the element indices of one ambient group.
// Subgroups are identified by their Bitmask; all lattice algebra
// (intersection, inclusion, covering) reduces to word-parallel bit ops.
class Bitmask {
 public:
  Bitmask() = default;
  explicit Bitmask(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool subset_of(const Bitmask& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  friend Bitmask operator&(const Bitmask& a, const Bitmask& b) {
    Bitmask r(a.nbits_);
    for (std::size_t i = 0; i < r.words_.size(); ++i)
      r.words_[i] = a.words_[i] & b.words_[i];
    return r;
  }

  friend Bitmask operator|(const Bitmask& a, const Bitmask& b) {
    Bitmask r(a.nbits_);
    for (std::size_t i = 0; i < r.words_.size(); ++i)
      r.words_[i] = a.words_[i] | b.words_[i];
    return r;
  }

  bool operator==(const Bitmask& other) const {
    return nbits_ == other.nbits_ && words_ == other.words_;
  }

  // Numeric order (highest word first); gives the deterministic node order
  // used everywhere masks are sorted.
  std::strong_ordering operator<=>(const Bitmask& other) const {
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != other.words_[i])
        return words_[i] <=> other.words_[i];
    }
    return std::strong_ordering::equal;
  }

  std::vector<int> bits() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int b = std::countr_zero(w);
        out.push_back(static_cast<int>(wi * 64 + b));
        w &= w - 1;
      }
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitmaskHash {
  std::size_t operator()(const Bitmask& m) const { return m.hash(); }
};

}  // namespace chaincount
