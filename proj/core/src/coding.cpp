#include "sds/coding.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <sstream>

#include "sds/error.hpp"

namespace sds {

Code::Code(std::span<const BitVector> words) {
  if (!words.empty()) length_ = words.front().size();
  codes_.reserve(words.size());
  for (const auto& w : words) {
    if (w.size() != length_) throw InvalidInput("code words must share one length");
    codes_.push_back(w.code());
  }
  std::sort(codes_.begin(), codes_.end());
  if (std::adjacent_find(codes_.begin(), codes_.end()) != codes_.end()) {
    throw InvalidInput("code contains a repeated word");
  }
}

Code::Code(std::size_t length, std::vector<std::uint64_t> codes) : length_(length), codes_(std::move(codes)) {
  if (length > BitVector::max_length) throw InvalidInput("code length too large");
  std::sort(codes_.begin(), codes_.end());
  if (std::adjacent_find(codes_.begin(), codes_.end()) != codes_.end()) {
    throw InvalidInput("code contains a repeated word");
  }
  for (auto c : codes_) (void)BitVector(length, c);
}

std::vector<BitVector> Code::words() const {
  std::vector<BitVector> out;
  out.reserve(codes_.size());
  for (auto c : codes_) out.emplace_back(length_, c);
  return out;
}

std::size_t DistanceValue::value() const {
  if (!value_) throw InvalidInput("distance is infinite");
  return *value_;
}

std::string DistanceValue::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

std::size_t hamming_distance(const BitVector& x, const BitVector& y) { return (x + y).weight(); }

DistanceValue min_distance(const Code& c) {
  if (c.empty()) throw InvalidInput("minimum distance of the empty code is undefined");
  if (c.size() == 1) return DistanceValue::infinity();
  const auto& codes = c.codes();
  int best = 64;
  for (std::size_t a = 0; a < codes.size() && best > 1; ++a)
    for (std::size_t b = a + 1; b < codes.size(); ++b) best = std::min(best, std::popcount(codes[a] ^ codes[b]));
  return DistanceValue::finite(static_cast<std::size_t>(best));
}

Code hamming_code(std::size_t r) {
  if (r < 2 || r > 5) throw InvalidInput("hamming_code supports 2 <= r <= 5");
  const std::size_t n = (std::size_t{1} << r) - 1;
  // Positions j that are not powers of two carry data; parity position 2^t
  // makes the xor of all j with x_j = 1 vanish.
  std::vector<std::size_t> data_positions;
  for (std::size_t j = 1; j <= n; ++j)
    if (!std::has_single_bit(j)) data_positions.push_back(j);

  auto bit_of = [n](std::size_t j) { return std::uint64_t{1} << (n - j); };
  std::vector<std::uint64_t> codes;
  codes.reserve(std::size_t{1} << data_positions.size());
  for (std::uint64_t data = 0; data < (std::uint64_t{1} << data_positions.size()); ++data) {
    std::uint64_t word = 0;
    std::size_t syndrome = 0;
    for (std::size_t k = 0; k < data_positions.size(); ++k) {
      if ((data >> k) & 1U) {
        word |= bit_of(data_positions[k]);
        syndrome ^= data_positions[k];
      }
    }
    for (std::size_t t = 0; t < r; ++t)
      if ((syndrome >> t) & 1U) word |= bit_of(std::size_t{1} << t);
    codes.push_back(word);
  }
  return Code(n, std::move(codes));
}

std::vector<std::uint64_t> code_to_clique(const Code& c) { return c.codes(); }

Code clique_to_code(std::size_t length, std::span<const std::uint64_t> labels) {
  return Code(length, std::vector<std::uint64_t>(labels.begin(), labels.end()));
}

std::optional<AReference> a_n3_reference(std::size_t n) {
  if (n == 0) throw InvalidInput("A(n,3) needs n >= 1");
  if (std::has_single_bit(n + 1)) {
    const auto log = static_cast<std::size_t>(std::countr_zero(n + 1));
    if (n - log >= 64) return std::nullopt;
    return AReference{std::uint64_t{1} << (n - log), "formula"};
  }
  if (n <= 2) return AReference{1, "degenerate"};
  return std::nullopt;
}

Code parse_code_file(std::string_view text) {
  std::vector<BitVector> words;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); }), line.end());
    if (line.empty()) continue;
    BitVector w = BitVector::parse(line);
    if (!words.empty() && w.size() != words.front().size()) {
      throw InvalidInput("line " + std::to_string(line_no) + ": word length " + std::to_string(w.size()) +
                         " differs from " + std::to_string(words.front().size()));
    }
    words.push_back(w);
  }
  return Code(words);
}

Code load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open code file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_code_file(buffer.str());
}

std::string to_code_file(const Code& c) {
  std::string out;
  for (auto code : c.codes()) {
    out += format_bits(code, c.length());
    out += '\n';
  }
  return out;
}

}  // namespace sds
