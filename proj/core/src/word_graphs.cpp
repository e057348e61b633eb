#include "sds/word_graphs.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "sds/error.hpp"

namespace sds {

// ------------------------------------------------------------ subsequences

PatternWord::PatternWord(std::string_view letters) {
  if (letters.empty()) throw InvalidInput("pattern word must be nonempty");
  for (char c : letters) {
    if (c != '0' && c != '1') throw InvalidInput("pattern word must be over {0,1}");
    letters_.push_back(c == '1');
  }
}

std::string PatternWord::to_string() const {
  std::string out;
  for (bool b : letters_) out.push_back(b ? '1' : '0');
  return out;
}

bool contains_subsequence(const BitVector& x, const PatternWord& w) {
  std::size_t matched = 0;
  for (std::size_t i = 1; i <= x.size() && matched < w.size(); ++i)
    if (x.at(i) == w[matched]) ++matched;
  return matched == w.size();
}

bool in_D(std::size_t n, const PatternWord& w, const BitVector& x) {
  if (x.size() != n) {
    throw InvalidInput("vector of length " + std::to_string(x.size()) + " tested against D_" + std::to_string(n));
  }
  return contains_subsequence(x, w);
}

bool contains_101(std::uint64_t code) noexcept {
  // 101 occurs iff the set bits do not form one contiguous run.
  if (code == 0) return false;
  const std::uint64_t run = code >> std::countr_zero(code);
  return (run & (run + 1)) != 0;
}

bool contains_111(std::uint64_t code) noexcept { return std::popcount(code) >= 3; }

// -------------------------------------------------------------------- maps

BitVector inv(const BitVector& x) { return x.complement(); }

BitVector theta(const BitVector& x) {
  if (x.size() < 2) throw InvalidInput("theta needs length >= 2");
  if (x.at(1)) throw InvalidInput("theta is defined only for x_1 = 0, got " + x.to_string());
  return BitVector(x.size() - 1, x.code());
}

BitVector theta_inverse(const BitVector& y) { return BitVector(y.size() + 1, y.code()); }

BitVector prefix_sum_T(const BitVector& x) {
  // Coordinate k is the parity of x_1..x_k: a running xor from the top bit down.
  std::uint64_t out = 0;
  bool parity = false;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    parity ^= x.at(i);
    out = (out << 1) | static_cast<std::uint64_t>(parity);
  }
  return BitVector(x.size(), out);
}

BitVector prefix_sum_T_inverse(const BitVector& y) {
  // y_k + y_{k-1} with y_0 = 0.
  return BitVector(y.size(), y.code() ^ (y.code() >> 1));
}

// ------------------------------------------------------------ graph specs

ImplicitGraphSpec ImplicitGraphSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidInput("graph spec must look like J:7, H:6 or HatH:8");
  const auto name = text.substr(0, colon);
  const auto number = text.substr(colon + 1);
  ImplicitGraphSpec spec;
  if (name == "HatH" || name == "hatH" || name == "hath") {
    spec.kind = GraphKind::hat_h;
  } else if (name == "H" || name == "h") {
    spec.kind = GraphKind::h;
  } else if (name == "J" || name == "j") {
    spec.kind = GraphKind::j;
  } else {
    throw InvalidInput("unknown graph family '" + std::string(name) + "'");
  }
  auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), spec.dimension);
  if (ec != std::errc{} || ptr != number.data() + number.size() || spec.dimension < 1) {
    throw InvalidInput("invalid graph dimension in '" + std::string(text) + "'");
  }
  if (spec.kind == GraphKind::hat_h && spec.dimension < 2) throw InvalidInput("HatH needs dimension >= 2");
  if (spec.dimension > BitVector::max_length) throw InvalidInput("graph dimension too large");
  return spec;
}

std::string ImplicitGraphSpec::to_string() const {
  const char* name = kind == GraphKind::hat_h ? "HatH" : kind == GraphKind::h ? "H" : "J";
  return std::string(name) + ":" + std::to_string(dimension);
}

bool ImplicitGraphSpec::contains(const BitVector& x) const noexcept {
  if (x.size() != dimension) return false;
  return kind != GraphKind::hat_h || (x.code() >> (dimension - 1)) == 0;
}

std::uint64_t ImplicitGraphSpec::vertex_count() const noexcept {
  return std::uint64_t{1} << (kind == GraphKind::hat_h ? dimension - 1 : dimension);
}

std::vector<std::uint64_t> ImplicitGraphSpec::vertices() const {
  std::vector<std::uint64_t> out(vertex_count());
  for (std::uint64_t k = 0; k < out.size(); ++k) out[k] = k;
  return out;
}

bool adjacent(const ImplicitGraphSpec& spec, const BitVector& x, const BitVector& y) {
  if (!spec.contains(x) || !spec.contains(y)) {
    throw InvalidInput("vector is not a vertex of " + spec.to_string());
  }
  const std::uint64_t sum = x.code() ^ y.code();
  return spec.kind == GraphKind::j ? contains_111(sum) : contains_101(sum);
}

// --------------------------------------------------------- explicit graphs

ExplicitGraph::ExplicitGraph(std::size_t label_length, std::vector<std::uint64_t> labels)
    : label_length_(label_length), labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw InvalidInput("duplicate vertex label");
  }
  const std::uint64_t limit = label_length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << label_length);
  index_.reserve(labels_.size());
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k] >= limit) throw InvalidInput("vertex label does not fit label length");
    index_.emplace(labels_[k], k);
  }
  rows_.assign(labels_.size(), Bitset(labels_.size()));
}

void ExplicitGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count() || v >= vertex_count()) throw InvalidInput("edge endpoint out of range");
  if (u == v) throw InvalidInput("self-loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

std::size_t ExplicitGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

std::size_t ExplicitGraph::index_of(std::uint64_t label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw InvalidInput("unknown vertex " + format_bits(label, label_length_));
  return it->second;
}

ExplicitGraph materialize(const ImplicitGraphSpec& spec, const MaterializeOptions& options) {
  if (spec.dimension > options.max_dimension) {
    throw BudgetExceeded("materializing " + spec.to_string() + " exceeds dimension cap " +
                         std::to_string(options.max_dimension));
  }
  ExplicitGraph g(spec.dimension, spec.vertices());
  const bool pattern_111 = spec.kind == GraphKind::j;
  const std::size_t count = g.vertex_count();
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = u + 1; v < count; ++v) {
      const std::uint64_t sum = g.label(u) ^ g.label(v);
      if (pattern_111 ? contains_111(sum) : contains_101(sum)) g.add_edge(u, v);
    }
  }
  return g;
}

std::string to_edge_list(const ExplicitGraph& g) {
  std::ostringstream out;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) == 0) out << format_bits(g.label(u), g.label_length()) << '\n';
    g.neighbors(u).for_each([&](std::size_t v) {
      if (u < v) {
        out << format_bits(g.label(u), g.label_length()) << ' ' << format_bits(g.label(v), g.label_length()) << '\n';
      }
    });
  }
  return out.str();
}

std::string to_dot(const ExplicitGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (std::size_t u = 0; u < g.vertex_count(); ++u) out << "  \"" << format_bits(g.label(u), g.label_length()) << "\";\n";
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    g.neighbors(u).for_each([&](std::size_t v) {
      if (u < v) {
        out << "  \"" << format_bits(g.label(u), g.label_length()) << "\" -- \""
            << format_bits(g.label(v), g.label_length()) << "\";\n";
      }
    });
  }
  out << "}\n";
  return out.str();
}

ExplicitGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<BitVector, BitVector>> edges;
  std::vector<std::uint64_t> labels;
  std::size_t length = 0;
  bool have_length = false;
  auto note = [&](const BitVector& v) {
    if (!have_length) {
      length = v.size();
      have_length = true;
    } else if (v.size() != length) {
      throw InvalidInput("edge list mixes label lengths");
    }
    labels.push_back(v.code());
  };

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() > 2) throw InvalidInput("edge list line has more than two labels: '" + line + "'");
    const BitVector u = BitVector::parse(tokens[0]);
    note(u);
    if (tokens.size() == 2) {
      const BitVector v = BitVector::parse(tokens[1]);
      note(v);
      edges.emplace_back(u, v);
    }
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  ExplicitGraph g(length, std::move(labels));
  for (const auto& [u, v] : edges) g.add_edge(g.index_of(u.code()), g.index_of(v.code()));
  return g;
}

}  // namespace sds
