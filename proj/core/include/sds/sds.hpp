#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sds/bit_vector.hpp"

namespace sds {

/// Undirected simple graph on vertices 1..n.
class BaseGraph {
 public:
  explicit BaseGraph(std::size_t n = 0);
  BaseGraph(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);

  static BaseGraph complete(std::size_t n);

  /// Throws InvalidInput on self-loops, duplicates, or out-of-range endpoints.
  void add_edge(std::size_t i, std::size_t j);

  std::size_t order() const noexcept { return neighbors_.size(); }
  std::size_t degree(std::size_t v) const;
  bool adjacent(std::size_t i, std::size_t j) const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const;

  /// Edges as (i, j) with i < j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  bool is_complete() const noexcept;

 private:
  void check_vertex(std::size_t v) const;
  std::vector<std::vector<std::size_t>> neighbors_;
};

/// Total map F_2^arity -> F_2. Entry k is the value on the tuple whose
/// canonical encoding (first argument most significant) is k.
class VertexFunction {
 public:
  static constexpr std::size_t max_arity = 30;

  VertexFunction() = default;
  explicit VertexFunction(std::size_t arity);

  /// `table[k]` must be '0' or '1'; length must be a power of two.
  static VertexFunction from_table(std::string_view table);
  /// Bit k of `table` is f(k); requires arity <= 6.
  static VertexFunction from_integer(std::size_t arity, std::uint64_t table);
  static VertexFunction from_callable(std::size_t arity, const std::function<bool(const BitVector&)>& fn);
  static VertexFunction constant(std::size_t arity, bool value);
  /// Projection onto argument `position` (1-based).
  static VertexFunction projection(std::size_t arity, std::size_t position);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t table_size() const noexcept { return std::size_t{1} << arity_; }

  bool operator()(std::uint64_t index) const noexcept { return (words_[index >> 6] >> (index & 63)) & 1U; }
  bool eval(const BitVector& args) const;
  void set(std::uint64_t index, bool value);

  std::string to_string() const;
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

 private:
  std::size_t arity_ = 0;
  std::vector<std::uint64_t> words_{0};
};

/// A permutation of 1..n in one-line notation.
class UpdateOrder {
 public:
  UpdateOrder() = default;
  /// Throws InvalidInput unless `sequence` is a bijection on 1..n.
  explicit UpdateOrder(std::vector<std::size_t> sequence);

  static UpdateOrder identity(std::size_t n);
  /// Accepts "2413" (n <= 9) or "2,4,1,3".
  static UpdateOrder parse(std::string_view text);

  std::size_t size() const noexcept { return sequence_.size(); }
  /// pi(k), 1 <= k <= n.
  std::size_t operator()(std::size_t k) const;
  const std::vector<std::size_t>& sequence() const noexcept { return sequence_; }
  bool is_identity() const noexcept;

  friend bool operator==(const UpdateOrder&, const UpdateOrder&) = default;

 private:
  std::vector<std::size_t> sequence_;
};

/// Base graph, one vertex function per vertex, and an update order.
class SdsDefinition {
 public:
  SdsDefinition(BaseGraph graph, std::vector<VertexFunction> functions, UpdateOrder order);

  /// [K_n, f, pi]: every vertex of the complete graph uses `f`.
  static SdsDefinition complete(std::size_t n, const VertexFunction& f, UpdateOrder order);
  static SdsDefinition complete(std::size_t n, const VertexFunction& f);

  std::size_t size() const noexcept { return graph_.order(); }
  const BaseGraph& graph() const noexcept { return graph_; }
  const UpdateOrder& order() const noexcept { return order_; }
  const VertexFunction& function(std::size_t vertex) const;
  const std::vector<VertexFunction>& functions() const noexcept { return functions_; }

  /// True for [K_n, f, pi] with a single shared function.
  bool is_uniform_complete() const noexcept { return uniform_complete_; }

  // Encoded fast paths used by enumeration. `code` is a canonical state encoding.
  std::uint64_t profile_index(std::uint64_t code, std::size_t vertex) const noexcept;
  std::uint64_t update_vertex(std::uint64_t code, std::size_t vertex) const noexcept;
  std::uint64_t apply(std::uint64_t code) const noexcept;

 private:
  BaseGraph graph_;
  std::vector<VertexFunction> functions_;
  UpdateOrder order_;
  // closed_[v-1]: v and its neighbours, ascending.
  std::vector<std::vector<std::size_t>> closed_;
  std::vector<bool> full_;
  bool uniform_complete_ = false;
};

/// X(v_i): states of v_i and its neighbours in ascending vertex order.
BitVector neighbor_profile(const SdsDefinition& sds, const SystemState& state, std::size_t i);

/// L_{v_i}: rewrites coordinate i to f_{v_i}(X(v_i)).
SystemState local_update(const SdsDefinition& sds, const SystemState& state, std::size_t i);

/// G_k: the first k local updates in update order; G_0 is the identity.
SystemState intermediate_map(const SdsDefinition& sds, const SystemState& state, std::size_t k);

/// F = G_n.
SystemState sds_map(const SdsDefinition& sds, const SystemState& state);

/// G_0(x), G_1(x), ..., G_n(x).
std::vector<SystemState> update_trace(const SdsDefinition& sds, const SystemState& state);

}  // namespace sds
