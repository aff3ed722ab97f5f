#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace srgsw::bits {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const Word> w, std::size_t i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1U;
}
inline void set(std::span<Word> w, std::size_t i) { w[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void reset(std::span<Word> w, std::size_t i) {
  w[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}
inline void flip(std::span<Word> w, std::size_t i) { w[i / kWordBits] ^= Word{1} << (i % kWordBits); }

inline std::size_t count(std::span<const Word> w) {
  std::size_t c = 0;
  for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline std::size_t count_xor(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  return c;
}

// Calls f(i) for every set bit, ascending.
template <class F>
void for_each(std::span<const Word> w, F&& f) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word x = w[k];
    while (x) {
      f(k * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
}

// Dense set of vertices in [0, n).
class Set {
 public:
  Set() = default;
  explicit Set(std::size_t n) : n_(n), w_(words_for(n), 0) {}

  std::size_t universe() const { return n_; }
  bool contains(std::size_t i) const { return test(w_, i); }
  void insert(std::size_t i) { set(w_, i); }
  void erase(std::size_t i) { reset(w_, i); }
  std::size_t size() const { return count(w_); }
  bool empty() const {
    for (Word x : w_)
      if (x) return false;
    return true;
  }
  std::span<const Word> words() const { return w_; }
  std::span<Word> words() { return w_; }

  friend bool operator==(const Set&, const Set&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Word> w_;
};

}  // namespace srgsw::bits
