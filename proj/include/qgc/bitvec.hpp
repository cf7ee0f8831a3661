#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgc {

// Dynamic bit-vector packed into 64-bit words. Bits past size() are always zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static BitVec from_indices(std::size_t n, const std::vector<std::size_t>& idx) {
    BitVec b(n);
    for (auto i : idx) b.set(i);
    return b;
  }

  std::size_t size() const { return n_; }
  std::size_t word_count() const { return w_.size(); }
  const std::uint64_t* data() const { return w_.data(); }
  std::uint64_t* data() { return w_.data(); }
  std::uint64_t word(std::size_t i) const { return w_[i]; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool v = true) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void reset(std::size_t i) { set(i, false); }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  BitVec& operator^=(const BitVec& o) {
    check(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    check(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    check(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // this &= ~o
  BitVec& andnot(const BitVec& o) {
    check(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : w_) if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Index of the lowest set bit, or size() if none.
  std::size_t first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return n_;
  }
  // Lowest set bit with index >= from, or size().
  std::size_t next(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t wi = from >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= w_.size()) return n_;
      w = w_[wi];
    }
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }
  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> r;
    for_each([&](std::size_t i) { r.push_back(i); });
    return r;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
  friend bool operator<(const BitVec& a, const BitVec& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t i = a.w_.size(); i-- > 0;)
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    return false;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for_each([&](std::size_t i) { s[i] = '1'; });
    return s;
  }

 private:
  void check(const BitVec& o) const {
    if (o.n_ != n_) throw std::invalid_argument("BitVec: length mismatch");
  }
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Parity of |a & b|.
inline bool dot(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("BitVec: length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.word_count(); ++i) acc ^= a.word(i) & b.word(i);
  return std::popcount(acc) & 1;
}

inline std::size_t and_count(const BitVec& a, const BitVec& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.word_count(); ++i) c += static_cast<std::size_t>(std::popcount(a.word(i) & b.word(i)));
  return c;
}

}  // namespace qgc
