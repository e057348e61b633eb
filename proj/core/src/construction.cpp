#include "sds/construction.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "sds/error.hpp"
#include "sds/word_graphs.hpp"

namespace sds {

// ---------------------------------------------------------------- HatClique

HatClique::HatClique(std::size_t n, std::vector<BitVector> members) : n_(n), members_(std::move(members)) {
  if (n < 2) throw InvalidInput("HatH(n) needs n >= 2");
  const ImplicitGraphSpec spec{GraphKind::hat_h, n};
  for (const auto& x : members_) {
    if (x.size() != n) throw InvalidInput("member " + x.to_string() + " does not have length " + std::to_string(n));
    if (x.at(1)) throw InvalidInput("member " + x.to_string() + " has first coordinate 1");
  }
  for (std::size_t a = 0; a < members_.size(); ++a) {
    for (std::size_t b = a + 1; b < members_.size(); ++b) {
      if (members_[a] == members_[b]) throw InvalidInput("repeated member " + members_[a].to_string());
      if (!adjacent(spec, members_[a], members_[b])) {
        throw InvalidInput("not a clique of " + spec.to_string() + ": " + members_[a].to_string() + " + " +
                           members_[b].to_string() + " lacks the subsequence 101");
      }
    }
  }
}

// ------------------------------------------------------------- construction

std::size_t SymmetricUpdateFunction::prescribed_count() const {
  return static_cast<std::size_t>(std::count(prescribed.begin(), prescribed.end(), true));
}

SymmetricUpdateFunction prescribe(std::size_t n, std::span<const BitVector> members) {
  if (n < 1 || n > VertexFunction::max_arity) throw InvalidInput("construction needs 1 <= n <= 30");
  SymmetricUpdateFunction out{n, VertexFunction(n), std::vector<bool>(std::size_t{1} << n, false)};

  auto assign = [&](std::uint64_t input, bool value, const BitVector& member, std::size_t l) {
    if (out.prescribed[input]) {
      if (out.table(input) != value) {
        throw PrescriptionConflict("rules disagree on input " + format_bits(input, n) + " (member " +
                                   member.to_string() + ", l = " + std::to_string(l) + ")");
      }
      return;
    }
    out.prescribed[input] = true;
    out.table.set(input, value);
  };

  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (const auto& x : members) {
    if (x.size() != n) throw InvalidInput("member " + x.to_string() + " does not have length " + std::to_string(n));
    const std::uint64_t a = x.code();
    for (std::size_t l = 0; l < n; ++l) {
      // Mask of the first l coordinates (the l most significant bits).
      const std::uint64_t head = all & ~(all >> l);
      const bool next = x.at(l + 1);
      assign(a ^ head, !next, x, l);
      assign(a ^ (all & ~head), next, x, l);
    }
  }
  return out;
}

SymmetricUpdateFunction construct_f(const HatClique& clique) {
  return prescribe(clique.dimension(), clique.members());
}

bool is_two_periodic(const SdsDefinition& sds, const BitVector& x) {
  const SystemState y = sds_map(sds, x);
  return y != x && sds_map(sds, y) == x;
}

PairPeriodicityReport lemma3_check(const VertexFunction& f, const BitVector& x, const BitVector& y) {
  const std::size_t n = f.arity();
  const ImplicitGraphSpec spec{GraphKind::hat_h, n};
  if (n < 2) throw InvalidInput("lemma3_check needs n >= 2");
  if (!spec.contains(x) || !spec.contains(y)) {
    throw InvalidInput("both vectors must be vertices of " + spec.to_string());
  }
  if (x == y) throw InvalidInput("vectors must be distinct");
  if (adjacent(spec, x, y)) {
    throw InvalidInput(x.to_string() + " and " + y.to_string() + " are adjacent in " + spec.to_string());
  }
  const auto system = SdsDefinition::complete(n, f);
  return PairPeriodicityReport{is_two_periodic(system, x), is_two_periodic(system, y)};
}

// ------------------------------------------------------------- brute force

std::size_t two_cycle_count_table(std::uint64_t table, std::size_t n) noexcept {
  // F(x) = inv(x) exactly when every update flips its coordinate: the value
  // at step i, evaluated on x with its first i-1 coordinates flipped, must
  // be the complement of x_i.
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  auto flips_everything = [&](std::uint64_t s) {
    for (std::size_t i = 1; i <= n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << (n - i);
      const bool want = (s & bit) == 0;
      if ((((table >> s) & 1U) != 0) != want) return false;
      s ^= bit;
    }
    return true;
  };
  std::size_t count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << (n - 1)); ++x) {
    if (flips_everything(x) && flips_everything(x ^ all)) ++count;
  }
  return count;
}

namespace {

struct BlockBest {
  std::size_t eta = 0;
  std::uint64_t table = 0;
  bool any = false;
};

BlockBest scan(std::size_t n, std::uint64_t begin, std::uint64_t end) {
  BlockBest best;
  for (std::uint64_t t = begin; t < end; ++t) {
    const std::size_t c = two_cycle_count_table(t, n);
    if (!best.any || c > best.eta) best = {c, t, true};
  }
  return best;
}

// Larger count wins, then the smaller table; associative and commutative.
void merge(BlockBest& into, const BlockBest& other) {
  if (!other.any) return;
  if (!into.any || other.eta > into.eta || (other.eta == into.eta && other.table < into.table)) into = other;
}

}  // namespace

EtaResult brute_force_eta(std::size_t n, const EtaOptions& options) {
  if (n < 1) throw InvalidInput("eta needs n >= 1");
  if (n > 5) throw BudgetExceeded("exhaustive scan over 2^" + std::to_string(std::uint64_t{1} << n) + " functions is infeasible");
  if (n > options.max_n) {
    throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the brute-force cap " + std::to_string(options.max_n) +
                         " (override required)");
  }

  const std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
  EtaCheckpoint state{n, 0, 0, 0};
  BlockBest best;
  if (options.resume) {
    if (options.resume->n != n || options.resume->next_table > total) throw InvalidInput("checkpoint does not match n");
    state = *options.resume;
    if (state.next_table > 0) best = {state.best_eta, state.best_table, true};
  }

  const std::size_t threads =
      std::max<std::size_t>(1, options.threads != 0 ? options.threads : std::thread::hardware_concurrency());
  const std::uint64_t block = std::min<std::uint64_t>(total, std::uint64_t{1} << 24);
  const auto start = std::chrono::steady_clock::now();

  while (state.next_table < total) {
    if (options.max_seconds > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >= options.max_seconds) {
      throw BudgetExceeded("eta scan for n = " + std::to_string(n) + " stopped at table " +
                           std::to_string(state.next_table) + " of " + std::to_string(total));
    }
    const std::uint64_t begin = state.next_table;
    const std::uint64_t end = std::min(total, begin + block);
    const std::size_t workers = (end - begin) < (std::uint64_t{1} << 16) ? 1 : threads;
    if (workers == 1) {
      merge(best, scan(n, begin, end));
    } else {
      std::vector<BlockBest> partial(workers);
      {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = (end - begin + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
          const std::uint64_t lo = std::min(end, begin + w * chunk);
          const std::uint64_t hi = std::min(end, lo + chunk);
          pool.emplace_back([&partial, w, n, lo, hi] { partial[w] = scan(n, lo, hi); });
        }
      }
      for (const auto& p : partial) merge(best, p);
    }
    state.next_table = end;
    state.best_eta = best.eta;
    state.best_table = best.table;
    if (options.on_checkpoint) options.on_checkpoint(state);
  }

  EtaResult result;
  result.n = n;
  result.eta = best.eta;
  result.witness_index = best.table;
  result.witness = VertexFunction(n);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) result.witness.set(k, (best.table >> k) & 1U);
  result.tables_scanned = total - (options.resume ? options.resume->next_table : 0);
  return result;
}

}  // namespace sds
