#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sds/bit_vector.hpp"

namespace sds {

/// A binary code: distinct words of one common length, stored as canonical
/// encodings in ascending order.
class Code {
 public:
  Code() = default;
  /// Throws InvalidInput on duplicate words or length mismatch.
  explicit Code(std::span<const BitVector> words);
  Code(std::size_t length, std::vector<std::uint64_t> codes);

  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return codes_.size(); }
  bool empty() const noexcept { return codes_.empty(); }
  const std::vector<std::uint64_t>& codes() const noexcept { return codes_; }
  BitVector word(std::size_t k) const { return BitVector(length_, codes_.at(k)); }
  std::vector<BitVector> words() const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> codes_;
};

/// A non-negative count or infinity (single-word codes).
class DistanceValue {
 public:
  static DistanceValue infinity() { return DistanceValue(); }
  static DistanceValue finite(std::size_t value) { return DistanceValue(value); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Throws InvalidInput when infinite.
  std::size_t value() const;
  bool at_least(std::size_t bound) const noexcept { return is_infinite() || *value_ >= bound; }
  /// "inf" or the decimal value.
  std::string to_string() const;

  friend bool operator==(const DistanceValue&, const DistanceValue&) = default;

 private:
  DistanceValue() = default;
  explicit DistanceValue(std::size_t v) : value_(v) {}
  std::optional<std::size_t> value_;
};

std::size_t hamming_distance(const BitVector& x, const BitVector& y);

/// Throws InvalidInput for the empty code.
DistanceValue min_distance(const Code& c);

/// Kernel of the r x (2^r - 1) parity-check matrix whose j-th column is the
/// binary expansion of j. Requires 2 <= r <= 5.
Code hamming_code(std::size_t r);

/// J(length) vertex labels of the words.
std::vector<std::uint64_t> code_to_clique(const Code& c);
Code clique_to_code(std::size_t length, std::span<const std::uint64_t> labels);

struct AReference {
  std::uint64_t count = 0;
  /// "formula" (n+1 a power of two) or "degenerate" (n <= 2).
  std::string tag;
};

/// Known values of A(n,3); empty when it has to be computed.
std::optional<AReference> a_n3_reference(std::size_t n);

/// One 0/1 word per line; blank lines and '#' comments ignored. The length
/// comes from the first word.
Code parse_code_file(std::string_view text);
Code load_code_file(const std::string& path);
std::string to_code_file(const Code& c);

}  // namespace sds
