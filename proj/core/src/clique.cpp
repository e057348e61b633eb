#include "sds/clique.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "sds/error.hpp"

namespace sds {

namespace {

/// Vertex indices sorted by descending degree, ties to ascending label.
std::vector<std::size_t> degree_order(const ExplicitGraph& g) {
  std::vector<std::size_t> order(g.vertex_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> degree(g.vertex_count());
  for (std::size_t v = 0; v < degree.size(); ++v) degree[v] = g.degree(v);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
  return order;
}

std::vector<std::uint64_t> sorted_labels(const ExplicitGraph& g, const std::vector<std::size_t>& indices) {
  std::vector<std::uint64_t> out;
  out.reserve(indices.size());
  for (std::size_t v : indices) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

/// Branch and bound over a relabelled copy of the graph where vertex k is
/// the k-th vertex of the degree ordering.
class Search {
 public:
  Search(const ExplicitGraph& g, const CliqueBudget& budget) : budget_(budget) {
    order_ = degree_order(g);
    const std::size_t n = order_.size();
    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < n; ++k) position[order_[k]] = k;
    adj_.assign(n, Bitset(n));
    for (std::size_t k = 0; k < n; ++k) {
      g.neighbors(order_[k]).for_each([&](std::size_t v) { adj_[k].set(position[v]); });
    }
    position_ = std::move(position);
    // Depth never exceeds the clique size, so frames are never reallocated.
    scratch_.resize(n + 1);
    if (budget_.max_seconds > 0) {
      deadline_ = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                         std::chrono::duration<double>(budget_.max_seconds));
    }
  }

  void seed(const std::vector<std::size_t>& clique) {
    best_.clear();
    for (std::size_t v : clique) best_.push_back(position_[v]);
  }

  /// Returns the number of colours at the root.
  std::size_t run() {
    Bitset all(adj_.size());
    all.set_all();
    root_bound_ = colour_count(all);
    if (best_.size() < root_bound_ && !adj_.empty()) expand(all, 0);
    return root_bound_;
  }

  bool aborted() const noexcept { return aborted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

  std::vector<std::size_t> best_original() const {
    std::vector<std::size_t> out;
    for (std::size_t k : best_) out.push_back(order_[k]);
    return out;
  }

 private:
  std::size_t colour_count(const Bitset& candidates) const {
    Bitset uncoloured = candidates;
    Bitset q(adj_.size());
    std::size_t colours = 0;
    while (uncoloured.any()) {
      ++colours;
      q = uncoloured;
      while (q.any()) {
        const std::size_t v = q.first();
        q.reset(v);
        uncoloured.reset(v);
        q.subtract(adj_[v]);
      }
    }
    return colours;
  }

  bool out_of_budget() {
    if (budget_.max_nodes != 0 && nodes_ >= budget_.max_nodes) return true;
    if (budget_.max_seconds > 0 && (nodes_ & 0x3FF) == 0 && std::chrono::steady_clock::now() >= deadline_) return true;
    return false;
  }

  void expand(Bitset& candidates, std::size_t depth) {
    if (aborted_) return;
    if (out_of_budget()) {
      aborted_ = true;
      return;
    }
    ++nodes_;

    auto& frame = scratch_[depth];
    frame.order.clear();
    frame.bound.clear();

    // Greedy colour classes; vertices whose colour cannot beat the incumbent
    // are never branched on.
    const std::size_t need = best_.size() >= current_.size() ? best_.size() - current_.size() : 0;
    frame.uncoloured = candidates;
    std::size_t colour = 0;
    while (frame.uncoloured.any()) {
      ++colour;
      frame.queue = frame.uncoloured;
      while (frame.queue.any()) {
        const std::size_t v = frame.queue.first();
        frame.queue.reset(v);
        frame.uncoloured.reset(v);
        frame.queue.subtract(adj_[v]);
        if (colour > need) {
          frame.order.push_back(v);
          frame.bound.push_back(colour);
        }
      }
    }

    for (std::size_t k = frame.order.size(); k-- > 0;) {
      if (current_.size() + frame.bound[k] <= best_.size()) return;
      const std::size_t v = frame.order[k];
      current_.push_back(v);
      Bitset next;
      next.assign_intersection(candidates, adj_[v]);
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next, depth + 1);
      }
      current_.pop_back();
      candidates.reset(v);
      if (aborted_) return;
    }
  }

  struct Frame {
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    Bitset uncoloured;
    Bitset queue;
  };

  CliqueBudget budget_;
  std::chrono::steady_clock::time_point deadline_{};
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  std::vector<Bitset> adj_;
  std::vector<Frame> scratch_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::size_t root_bound_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

bool is_clique(const ExplicitGraph& g, std::span<const std::uint64_t> labels) {
  std::vector<std::size_t> indices;
  indices.reserve(labels.size());
  for (std::uint64_t label : labels) indices.push_back(g.index_of(label));
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a + 1; b < indices.size(); ++b)
      if (!g.adjacent(indices[a], indices[b])) return false;
  return true;
}

CliqueResult max_clique(const ExplicitGraph& g, const CliqueOptions& options) {
  CliqueResult result;
  if (g.vertex_count() == 0) {
    result.optimal = true;
    return result;
  }

  std::vector<std::size_t> seed;
  if (!options.initial_clique.empty()) {
    if (!is_clique(g, options.initial_clique)) throw InvalidInput("initial clique is not a clique of the graph");
    for (std::uint64_t label : options.initial_clique) seed.push_back(g.index_of(label));
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  } else {
    seed.push_back(degree_order(g).front());
  }

  Search search(g, options.budget);
  search.seed(seed);
  const std::size_t root_bound = search.run();
  const auto best = search.best_original();

  result.vertices = sorted_labels(g, best);
  result.size = best.size();
  result.nodes_explored = search.nodes();
  result.optimal = !search.aborted();
  result.upper_bound = result.optimal ? result.size : root_bound;
  return result;
}

CliqueResult greedy_lower_bound(const ExplicitGraph& g) {
  CliqueResult result;
  if (g.vertex_count() == 0) return result;
  Bitset candidates(g.vertex_count());
  candidates.set_all();
  std::vector<std::size_t> chosen;
  while (candidates.any()) {
    std::size_t pick = g.vertex_count();
    std::size_t pick_degree = 0;
    candidates.for_each([&](std::size_t v) {
      const std::size_t d = g.neighbors(v).intersection_count(candidates);
      if (pick == g.vertex_count() || d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    });
    chosen.push_back(pick);
    candidates &= g.neighbors(pick);
  }
  result.vertices = sorted_labels(g, chosen);
  result.size = chosen.size();
  result.upper_bound = coloring_upper_bound(g);
  return result;
}

std::size_t coloring_upper_bound(const ExplicitGraph& g) {
  const auto order = degree_order(g);
  std::vector<std::size_t> colour(g.vertex_count(), 0);
  std::size_t used = 0;
  std::vector<bool> taken;
  for (std::size_t v : order) {
    taken.assign(used + 2, false);
    g.neighbors(v).for_each([&](std::size_t u) {
      if (colour[u] != 0) taken[colour[u]] = true;
    });
    std::size_t c = 1;
    while (taken[c]) ++c;
    colour[v] = c;
    used = std::max(used, c);
  }
  return used;
}

}  // namespace sds
