#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sds/bit_vector.hpp"
#include "sds/bitset.hpp"

namespace sds {

/// A nonempty word over {0,1}.
class PatternWord {
 public:
  explicit PatternWord(std::string_view letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool operator[](std::size_t k) const noexcept { return letters_[k]; }
  std::string to_string() const;

 private:
  std::vector<bool> letters_;
};

/// True iff x contains w as a (scattered) subsequence. Greedy earliest match.
bool contains_subsequence(const BitVector& x, const PatternWord& w);

/// Membership in D_n(w). Throws InvalidInput if |x| != n.
bool in_D(std::size_t n, const PatternWord& w, const BitVector& x);

// Bit-level forms of the two patterns the graphs use, on the low `length` bits.
bool contains_101(std::uint64_t code) noexcept;
bool contains_111(std::uint64_t code) noexcept;

BitVector inv(const BitVector& x);

/// Drops x_1. Throws InvalidInput when x_1 != 0 or |x| < 2.
BitVector theta(const BitVector& x);
/// Prepends a zero coordinate.
BitVector theta_inverse(const BitVector& y);

/// (x_1, x_1+x_2, ..., x_1+...+x_n) over F_2.
BitVector prefix_sum_T(const BitVector& x);
/// (y_1, y_1+y_2, y_2+y_3, ..., y_{n-1}+y_n).
BitVector prefix_sum_T_inverse(const BitVector& y);

enum class GraphKind { hat_h, h, j };

/// HatH(n): F_2^n with x_1 = 0, edges where x+y contains 101.
/// H(m): F_2^m, edges where x+y contains 101.
/// J(m): F_2^m, edges where x+y contains 111.
struct ImplicitGraphSpec {
  GraphKind kind = GraphKind::j;
  std::size_t dimension = 0;

  /// Accepts "HatH:8", "H:6", "J:7".
  static ImplicitGraphSpec parse(std::string_view text);
  std::string to_string() const;

  bool contains(const BitVector& x) const noexcept;
  /// Vertex codes in ascending order.
  std::vector<std::uint64_t> vertices() const;
  std::uint64_t vertex_count() const noexcept;

  friend bool operator==(const ImplicitGraphSpec&, const ImplicitGraphSpec&) = default;
};

/// Throws InvalidInput when x or y is not a vertex of `spec`.
bool adjacent(const ImplicitGraphSpec& spec, const BitVector& x, const BitVector& y);

/// Graph with bitstring-labelled vertices and bitset adjacency rows.
/// Vertex indices follow ascending label order.
class ExplicitGraph {
 public:
  ExplicitGraph() = default;
  /// `labels` must be distinct; they are sorted on construction.
  ExplicitGraph(std::size_t label_length, std::vector<std::uint64_t> labels);

  void add_edge(std::size_t u, std::size_t v);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept;
  std::size_t label_length() const noexcept { return label_length_; }

  std::uint64_t label(std::size_t index) const { return labels_.at(index); }
  const std::vector<std::uint64_t>& labels() const noexcept { return labels_; }
  /// Throws InvalidInput for unknown labels.
  std::size_t index_of(std::uint64_t label) const;
  bool has_label(std::uint64_t label) const noexcept { return index_.contains(label); }

  bool adjacent(std::size_t u, std::size_t v) const noexcept { return rows_[u].test(v); }
  const Bitset& neighbors(std::size_t u) const noexcept { return rows_[u]; }
  std::size_t degree(std::size_t u) const noexcept { return rows_[u].count(); }

 private:
  std::size_t label_length_ = 0;
  std::vector<std::uint64_t> labels_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<Bitset> rows_;
};

struct MaterializeOptions {
  static constexpr std::size_t default_max_dimension = 16;
  std::size_t max_dimension = default_max_dimension;
};

/// Throws BudgetExceeded when the dimension exceeds the cap.
ExplicitGraph materialize(const ImplicitGraphSpec& spec, const MaterializeOptions& options = {});

/// Edge list: one "u v" line per edge (bitstring labels, u < v); isolated
/// vertices appear as a single label on their own line.
std::string to_edge_list(const ExplicitGraph& g);
std::string to_dot(const ExplicitGraph& g);
/// Parses the edge-list format; '#' comments and blank lines are ignored.
ExplicitGraph parse_edge_list(std::string_view text);

}  // namespace sds
