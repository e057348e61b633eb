#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sds {

/// Runtime-sized bitset over 64-bit words, used for adjacency rows and
/// candidate sets. Bits past size() are always zero.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t bits_per_word = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + bits_per_word - 1) / bits_per_word, 0) {}

  std::size_t size() const noexcept { return size_; }

  void set(std::size_t i) noexcept { words_[i / bits_per_word] |= Word{1} << (i % bits_per_word); }
  void reset(std::size_t i) noexcept { words_[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word)); }
  bool test(std::size_t i) const noexcept { return (words_[i / bits_per_word] >> (i % bits_per_word)) & 1U; }

  void set_all() noexcept {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const noexcept {
    for (Word w : words_)
      if (w != 0) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] != 0) return k * bits_per_word + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return size_;
  }

  Bitset& operator&=(const Bitset& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }

  /// this &= ~other
  Bitset& subtract(const Bitset& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }

  /// Overwrites this with a & b without reallocating.
  void assign_intersection(const Bitset& a, const Bitset& b) {
    size_ = a.size_;
    words_.resize(a.words_.size());
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] = a.words_[k] & b.words_[k];
  }

  std::size_t intersection_count(const Bitset& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) c += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
    return c;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w != 0) {
        fn(k * bits_per_word + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  void trim() noexcept {
    if (size_ % bits_per_word != 0 && !words_.empty()) {
      words_.back() &= (Word{1} << (size_ % bits_per_word)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace sds
