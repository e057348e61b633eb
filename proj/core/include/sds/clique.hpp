#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sds/word_graphs.hpp"

namespace sds {

struct CliqueResult {
  /// Vertex labels, ascending.
  std::vector<std::uint64_t> vertices;
  std::size_t size = 0;
  /// Set only when the search finished, so size is the clique number.
  bool optimal = false;
  /// A proven upper bound on the clique number.
  std::size_t upper_bound = 0;
  std::uint64_t nodes_explored = 0;
};

struct CliqueBudget {
  /// 0 means unlimited.
  std::uint64_t max_nodes = 0;
  /// 0 means unlimited.
  double max_seconds = 0;
};

struct CliqueOptions {
  CliqueBudget budget;
  /// Labels of a known clique used as the starting incumbent.
  std::vector<std::uint64_t> initial_clique;
};

/// Throws InvalidInput for labels that are not vertices of g.
bool is_clique(const ExplicitGraph& g, std::span<const std::uint64_t> labels);

/// Exact maximum clique by branch and bound. When the budget runs out the
/// result is the best clique found with optimal = false and the root
/// coloring bound as upper_bound.
CliqueResult max_clique(const ExplicitGraph& g, const CliqueOptions& options = {});

/// Greedy clique: repeatedly take the candidate with most neighbours among
/// the remaining candidates (ties to the smaller label).
CliqueResult greedy_lower_bound(const ExplicitGraph& g);

/// Number of colours used by greedy sequential colouring in descending
/// degree order; bounds the clique number from above.
std::size_t coloring_upper_bound(const ExplicitGraph& g);

}  // namespace sds
