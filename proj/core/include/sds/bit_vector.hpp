#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace sds {

/// A vector (x_1, ..., x_n) over F_2 with n <= 63.
///
/// The canonical integer encoding is sum x_i * 2^(n-i): x_1 is the most
/// significant bit. Coordinates are addressed 1-based, matching vertex labels.
class BitVector {
 public:
  static constexpr std::size_t max_length = 63;

  BitVector() = default;
  BitVector(std::size_t length, std::uint64_t code);

  /// Parses "0101"-style strings; x_1 is the first character.
  static BitVector parse(std::string_view text);
  static BitVector zeros(std::size_t length) { return BitVector(length, 0); }
  static BitVector ones(std::size_t length);

  std::size_t size() const noexcept { return length_; }
  std::uint64_t code() const noexcept { return code_; }

  /// Coordinate x_i, 1 <= i <= size().
  bool at(std::size_t i) const;
  BitVector with(std::size_t i, bool value) const;

  BitVector complement() const noexcept { return BitVector(length_, code_ ^ mask()); }
  std::size_t weight() const noexcept;
  std::uint64_t mask() const noexcept {
    return length_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - length_));
  }

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

 private:
  std::uint32_t length_ = 0;
  std::uint64_t code_ = 0;
};

/// Coordinate-wise sum over F_2. Throws InvalidInput on length mismatch.
BitVector operator+(const BitVector& x, const BitVector& y);

/// Formats `code` as a bitstring of `length` characters, most significant first.
std::string format_bits(std::uint64_t code, std::size_t length);

using SystemState = BitVector;

}  // namespace sds
