#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccmo/errors.hpp"
#include "ccmo/rng.hpp"

namespace ccmo {

// Bit string of fixed length n with a cached popcount. Bit i lives in word
// i/64 at position i%64.
//
// Hex encoding (archive dumps): nibble j holds bits 4j..4j+3, bit 4j being
// the nibble's least significant bit; ceil(n/4) characters total.
class Solution {
 public:
  Solution() = default;

  explicit Solution(int n) : words_(static_cast<std::size_t>((n + 63) / 64), 0), n_(n) {}

  // Each bit an independent fair coin, drawn in ascending bit order.
  static Solution random(int n, Rng& rng) {
    Solution s(n);
    for (int i = 0; i < n; ++i)
      if (rng.bernoulli(0.5)) s.set(i, true);
    return s;
  }

  static Solution from_indices(int n, std::span<const int> indices) {
    Solution s(n);
    for (int i : indices) s.set(i, true);
    return s;
  }

  // Low n bits of mask; n <= 64.
  static Solution from_mask(int n, std::uint64_t mask) {
    Solution s(n);
    if (n > 0) {
      s.words_[0] = n < 64 ? (mask & ((std::uint64_t{1} << n) - 1)) : mask;
      s.popcount_ = std::popcount(s.words_[0]);
    }
    return s;
  }

  int size() const { return n_; }
  int popcount() const { return popcount_; }

  bool test(int i) const { return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1; }

  void set(int i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    std::uint64_t& w = words_[static_cast<std::size_t>(i) / 64];
    if (value && !(w & bit)) {
      w |= bit;
      ++popcount_;
    } else if (!value && (w & bit)) {
      w &= ~bit;
      --popcount_;
    }
  }

  void flip(int i) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    std::uint64_t& w = words_[static_cast<std::size_t>(i) / 64];
    w ^= bit;
    popcount_ += (w & bit) ? 1 : -1;
  }

  // Re-assign from another solution, reusing capacity.
  void assign(const Solution& other) {
    words_ = other.words_;
    n_ = other.n_;
    popcount_ = other.popcount_;
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(static_cast<int>(w * 64) + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  std::string to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    const int nibbles = (n_ + 3) / 4;
    std::string out(static_cast<std::size_t>(nibbles), '0');
    for (int j = 0; j < nibbles; ++j)
      out[static_cast<std::size_t>(j)] =
          digits[(words_[static_cast<std::size_t>(j) / 16] >> ((j % 16) * 4)) & 0xf];
    return out;
  }

  static Solution from_hex(int n, std::string_view hex) {
    const int nibbles = (n + 3) / 4;
    if (static_cast<int>(hex.size()) != nibbles)
      throw ParseError("bit string: expected " + std::to_string(nibbles) + " hex digits, got " +
                       std::to_string(hex.size()));
    Solution s(n);
    for (int j = 0; j < nibbles; ++j) {
      const char ch = hex[static_cast<std::size_t>(j)];
      std::uint64_t nib = 0;
      if (ch >= '0' && ch <= '9') nib = static_cast<std::uint64_t>(ch - '0');
      else if (ch >= 'a' && ch <= 'f') nib = static_cast<std::uint64_t>(ch - 'a' + 10);
      else if (ch >= 'A' && ch <= 'F') nib = static_cast<std::uint64_t>(ch - 'A' + 10);
      else
        throw ParseError(std::string("bit string: invalid hex digit '") + ch + "'");
      s.words_[static_cast<std::size_t>(j) / 16] |= nib << ((j % 16) * 4);
    }
    int total = 0;
    for (std::uint64_t w : s.words_) total += std::popcount(w);
    s.popcount_ = total;
    if (n % 64 != 0 && !s.words_.empty()) {
      const std::uint64_t tail_mask = (std::uint64_t{1} << (n % 64)) - 1;
      if (s.words_.back() & ~tail_mask) throw ParseError("bit string: bits set beyond length");
    }
    return s;
  }

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  // Lexicographic order on the bit sequence x_0, x_1, ..., with 0 < 1.
  friend bool lex_less(const Solution& a, const Solution& b) {
    for (std::size_t w = 0; w < a.words_.size() && w < b.words_.size(); ++w) {
      if (a.words_[w] != b.words_[w]) {
        const int bit = std::countr_zero(a.words_[w] ^ b.words_[w]);
        return !((a.words_[w] >> bit) & 1);
      }
    }
    return a.n_ < b.n_;
  }

 private:
  std::vector<std::uint64_t> words_;
  int n_ = 0;
  int popcount_ = 0;
};

}  // namespace ccmo
