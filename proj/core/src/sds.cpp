#include "sds/sds.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "sds/error.hpp"

namespace sds {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

void check_dimension(const SdsDefinition& sds, const SystemState& state) {
  if (state.size() != sds.size()) {
    throw InvalidInput("state length " + str(state.size()) + " does not match graph order " + str(sds.size()));
  }
}

}  // namespace

// ---------------------------------------------------------------- BaseGraph

BaseGraph::BaseGraph(std::size_t n) : neighbors_(n) {
  if (n > BitVector::max_length) throw InvalidInput("graph order " + str(n) + " exceeds " + str(BitVector::max_length));
}

BaseGraph::BaseGraph(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) : BaseGraph(n) {
  for (auto [i, j] : edges) add_edge(i, j);
}

BaseGraph BaseGraph::complete(std::size_t n) {
  BaseGraph g(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

void BaseGraph::check_vertex(std::size_t v) const {
  if (v < 1 || v > order()) throw InvalidInput("vertex " + str(v) + " out of range 1.." + str(order()));
}

void BaseGraph::add_edge(std::size_t i, std::size_t j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw InvalidInput("self-loop at vertex " + str(i));
  if (adjacent(i, j)) throw InvalidInput("duplicate edge {" + str(i) + "," + str(j) + "}");
  auto insert_sorted = [](std::vector<std::size_t>& list, std::size_t v) {
    list.insert(std::lower_bound(list.begin(), list.end(), v), v);
  };
  insert_sorted(neighbors_[i - 1], j);
  insert_sorted(neighbors_[j - 1], i);
}

std::size_t BaseGraph::degree(std::size_t v) const { return neighbors(v).size(); }

bool BaseGraph::adjacent(std::size_t i, std::size_t j) const {
  const auto& list = neighbors(i);
  check_vertex(j);
  return std::binary_search(list.begin(), list.end(), j);
}

const std::vector<std::size_t>& BaseGraph::neighbors(std::size_t v) const {
  check_vertex(v);
  return neighbors_[v - 1];
}

std::vector<std::pair<std::size_t, std::size_t>> BaseGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 1; i <= order(); ++i)
    for (std::size_t j : neighbors_[i - 1])
      if (i < j) out.emplace_back(i, j);
  return out;
}

bool BaseGraph::is_complete() const noexcept {
  return std::all_of(neighbors_.begin(), neighbors_.end(),
                     [n = order()](const auto& list) { return list.size() + 1 == n; });
}

// ----------------------------------------------------------- VertexFunction

VertexFunction::VertexFunction(std::size_t arity)
    : arity_(arity), words_(arity >= 6 ? (std::size_t{1} << (arity - 6)) : 1, 0) {
  if (arity > max_arity) throw InvalidInput("arity " + str(arity) + " exceeds " + str(max_arity));
}

VertexFunction VertexFunction::from_table(std::string_view table) {
  if (table.empty() || !std::has_single_bit(table.size())) {
    throw InvalidInput("truth table length " + str(table.size()) + " is not a power of two");
  }
  VertexFunction f(static_cast<std::size_t>(std::countr_zero(table.size())));
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k] != '0' && table[k] != '1') throw InvalidInput("truth table must contain only 0 and 1");
    f.set(k, table[k] == '1');
  }
  return f;
}

VertexFunction VertexFunction::from_integer(std::size_t arity, std::uint64_t table) {
  if (arity > 6) throw InvalidInput("integer truth tables need arity <= 6");
  VertexFunction f(arity);
  const std::size_t size = f.table_size();
  f.words_[0] = size == 64 ? table : (table & ((std::uint64_t{1} << size) - 1));
  return f;
}

VertexFunction VertexFunction::from_callable(std::size_t arity, const std::function<bool(const BitVector&)>& fn) {
  VertexFunction f(arity);
  for (std::uint64_t k = 0; k < f.table_size(); ++k) f.set(k, fn(BitVector(arity, k)));
  return f;
}

VertexFunction VertexFunction::constant(std::size_t arity, bool value) {
  VertexFunction f(arity);
  for (std::uint64_t k = 0; k < f.table_size(); ++k) f.set(k, value);
  return f;
}

VertexFunction VertexFunction::projection(std::size_t arity, std::size_t position) {
  if (position < 1 || position > arity) throw InvalidInput("projection position out of range");
  return from_callable(arity, [position](const BitVector& x) { return x.at(position); });
}

bool VertexFunction::eval(const BitVector& args) const {
  if (args.size() != arity_) {
    throw InvalidInput("function of arity " + str(arity_) + " applied to " + str(args.size()) + " arguments");
  }
  return (*this)(args.code());
}

void VertexFunction::set(std::uint64_t index, bool value) {
  if (index >= table_size()) throw InvalidInput("table index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (index & 63);
  if (value)
    words_[index >> 6] |= bit;
  else
    words_[index >> 6] &= ~bit;
}

std::string VertexFunction::to_string() const {
  std::string out(table_size(), '0');
  for (std::uint64_t k = 0; k < table_size(); ++k)
    if ((*this)(k)) out[k] = '1';
  return out;
}

// -------------------------------------------------------------- UpdateOrder

UpdateOrder::UpdateOrder(std::vector<std::size_t> sequence) : sequence_(std::move(sequence)) {
  std::vector<bool> seen(sequence_.size() + 1, false);
  for (std::size_t v : sequence_) {
    if (v < 1 || v > sequence_.size() || seen[v]) {
      throw InvalidInput("update order is not a permutation of 1.." + str(sequence_.size()));
    }
    seen[v] = true;
  }
}

UpdateOrder UpdateOrder::identity(std::size_t n) {
  std::vector<std::size_t> seq(n);
  for (std::size_t k = 0; k < n; ++k) seq[k] = k + 1;
  return UpdateOrder(std::move(seq));
}

UpdateOrder UpdateOrder::parse(std::string_view text) {
  std::vector<std::size_t> seq;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw InvalidInput("invalid update order '" + std::string(text) + "'");
      seq.push_back(static_cast<std::size_t>(c - '0'));
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find(',', pos), text.size());
      const auto token = text.substr(pos, end - pos);
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw InvalidInput("invalid update order '" + std::string(text) + "'");
      }
      seq.push_back(value);
      pos = end + 1;
    }
  }
  return UpdateOrder(std::move(seq));
}

std::size_t UpdateOrder::operator()(std::size_t k) const {
  if (k < 1 || k > size()) throw InvalidInput("update step " + str(k) + " out of range 1.." + str(size()));
  return sequence_[k - 1];
}

bool UpdateOrder::is_identity() const noexcept {
  for (std::size_t k = 0; k < sequence_.size(); ++k)
    if (sequence_[k] != k + 1) return false;
  return true;
}

// ------------------------------------------------------------ SdsDefinition

SdsDefinition::SdsDefinition(BaseGraph graph, std::vector<VertexFunction> functions, UpdateOrder order)
    : graph_(std::move(graph)), functions_(std::move(functions)), order_(std::move(order)) {
  const std::size_t n = graph_.order();
  if (functions_.size() != n) throw InvalidInput("expected " + str(n) + " vertex functions, got " + str(functions_.size()));
  if (order_.size() != n) throw InvalidInput("update order has length " + str(order_.size()) + ", expected " + str(n));
  closed_.resize(n);
  full_.resize(n);
  for (std::size_t v = 1; v <= n; ++v) {
    auto& closed = closed_[v - 1];
    closed = graph_.neighbors(v);
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    if (functions_[v - 1].arity() != closed.size()) {
      throw InvalidInput("vertex " + str(v) + " has degree " + str(closed.size() - 1) + " but its function has arity " +
                         str(functions_[v - 1].arity()));
    }
    full_[v - 1] = closed.size() == n;
  }
  uniform_complete_ = graph_.is_complete() &&
                      std::all_of(functions_.begin(), functions_.end(), [&](const auto& f) { return f == functions_.front(); });
}

SdsDefinition SdsDefinition::complete(std::size_t n, const VertexFunction& f, UpdateOrder order) {
  return SdsDefinition(BaseGraph::complete(n), std::vector<VertexFunction>(n, f), std::move(order));
}

SdsDefinition SdsDefinition::complete(std::size_t n, const VertexFunction& f) {
  return complete(n, f, UpdateOrder::identity(n));
}

const VertexFunction& SdsDefinition::function(std::size_t vertex) const {
  if (vertex < 1 || vertex > size()) throw InvalidInput("vertex " + str(vertex) + " out of range 1.." + str(size()));
  return functions_[vertex - 1];
}

std::uint64_t SdsDefinition::profile_index(std::uint64_t code, std::size_t vertex) const noexcept {
  if (full_[vertex - 1]) return code;
  const std::size_t n = size();
  std::uint64_t index = 0;
  for (std::size_t j : closed_[vertex - 1]) index = (index << 1) | ((code >> (n - j)) & 1U);
  return index;
}

std::uint64_t SdsDefinition::update_vertex(std::uint64_t code, std::size_t vertex) const noexcept {
  const std::uint64_t bit = std::uint64_t{1} << (size() - vertex);
  return functions_[vertex - 1](profile_index(code, vertex)) ? (code | bit) : (code & ~bit);
}

std::uint64_t SdsDefinition::apply(std::uint64_t code) const noexcept {
  for (std::size_t v : order_.sequence()) code = update_vertex(code, v);
  return code;
}

// --------------------------------------------------------------- operations

BitVector neighbor_profile(const SdsDefinition& sds, const SystemState& state, std::size_t i) {
  check_dimension(sds, state);
  const std::size_t arity = sds.function(i).arity();
  return BitVector(arity, sds.profile_index(state.code(), i));
}

SystemState local_update(const SdsDefinition& sds, const SystemState& state, std::size_t i) {
  const BitVector profile = neighbor_profile(sds, state, i);
  return state.with(i, sds.function(i).eval(profile));
}

SystemState intermediate_map(const SdsDefinition& sds, const SystemState& state, std::size_t k) {
  check_dimension(sds, state);
  if (k > sds.size()) throw InvalidInput("step count " + str(k) + " out of range 0.." + str(sds.size()));
  SystemState x = state;
  for (std::size_t step = 1; step <= k; ++step) x = local_update(sds, x, sds.order()(step));
  return x;
}

SystemState sds_map(const SdsDefinition& sds, const SystemState& state) {
  return intermediate_map(sds, state, sds.size());
}

std::vector<SystemState> update_trace(const SdsDefinition& sds, const SystemState& state) {
  check_dimension(sds, state);
  std::vector<SystemState> trace{state};
  for (std::size_t step = 1; step <= sds.size(); ++step) trace.push_back(local_update(sds, trace.back(), sds.order()(step)));
  return trace;
}

}  // namespace sds
