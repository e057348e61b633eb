#include "sds/bit_vector.hpp"

#include <bit>

#include "sds/error.hpp"

namespace sds {

BitVector::BitVector(std::size_t length, std::uint64_t code)
    : length_(static_cast<std::uint32_t>(length)), code_(code) {
  if (length > max_length) {
    throw InvalidInput("vector length " + std::to_string(length) + " exceeds " +
                       std::to_string(max_length));
  }
  if ((code & ~mask()) != 0) {
    throw InvalidInput("code " + std::to_string(code) + " does not fit in " +
                       std::to_string(length) + " bits");
  }
}

BitVector BitVector::ones(std::size_t length) {
  BitVector v(length, 0);
  v.code_ = v.mask();
  return v;
}

BitVector BitVector::parse(std::string_view text) {
  if (text.size() > max_length) {
    throw InvalidInput("bitstring longer than " + std::to_string(max_length));
  }
  std::uint64_t code = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidInput("invalid bitstring '" + std::string(text) + "'");
    }
    code = (code << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return BitVector(text.size(), code);
}

bool BitVector::at(std::size_t i) const {
  if (i < 1 || i > length_) {
    throw InvalidInput("coordinate " + std::to_string(i) + " out of range 1.." +
                       std::to_string(length_));
  }
  return (code_ >> (length_ - i)) & 1U;
}

BitVector BitVector::with(std::size_t i, bool value) const {
  (void)at(i);
  const std::uint64_t bit = std::uint64_t{1} << (length_ - i);
  return BitVector(length_, value ? (code_ | bit) : (code_ & ~bit));
}

std::size_t BitVector::weight() const noexcept {
  return static_cast<std::size_t>(std::popcount(code_));
}

std::string BitVector::to_string() const { return format_bits(code_, length_); }

BitVector operator+(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size()) {
    throw InvalidInput("length mismatch: " + std::to_string(x.size()) + " vs " +
                       std::to_string(y.size()));
  }
  return BitVector(x.size(), x.code() ^ y.code());
}

std::string format_bits(std::uint64_t code, std::size_t length) {
  std::string out(length, '0');
  for (std::size_t k = 0; k < length; ++k) {
    if ((code >> (length - 1 - k)) & 1U) out[k] = '1';
  }
  return out;
}

}  // namespace sds
