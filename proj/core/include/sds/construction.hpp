#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sds/bit_vector.hpp"
#include "sds/sds.hpp"

namespace sds {

/// A clique of HatH(n): distinct vectors of length n with first coordinate 0
/// whose pairwise sums contain the subsequence 101.
class HatClique {
 public:
  /// Throws InvalidInput if any invariant fails.
  HatClique(std::size_t n, std::vector<BitVector> members);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<BitVector>& members() const noexcept { return members_; }

 private:
  std::size_t n_;
  std::vector<BitVector> members_;
};

/// A single update function F_2^n -> F_2 for [K_n, f, id], plus the mask of
/// table entries fixed by the construction rules (all others are 0).
struct SymmetricUpdateFunction {
  std::size_t n = 0;
  VertexFunction table;
  std::vector<bool> prescribed;

  std::size_t prescribed_count() const;
};

/// For each member x = (a_1..a_n) and each l in 0..n-1:
///   f(~a_1..~a_l, a_{l+1}..a_n) = ~a_{l+1}
///   f(a_1..a_l, ~a_{l+1}..~a_n) = a_{l+1}
/// and f = 0 elsewhere. Under [K_n, f, id] every member then satisfies
/// F(x) = inv(x) and F(inv(x)) = x.
SymmetricUpdateFunction construct_f(const HatClique& clique);

/// The same rules applied to arbitrary members of F_2^n without clique
/// validation. Repeated identical assignments are accepted; contradicting
/// ones throw PrescriptionConflict.
SymmetricUpdateFunction prescribe(std::size_t n, std::span<const BitVector> members);

/// x lies on a 2-cycle of F.
bool is_two_periodic(const SdsDefinition& sds, const BitVector& x);

struct PairPeriodicityReport {
  bool x_two_periodic = false;
  bool y_two_periodic = false;
  /// At most one of x, y is 2-periodic.
  bool holds() const noexcept { return !(x_two_periodic && y_two_periodic); }
};

/// Requires x != y, x_1 = y_1 = 0 and x, y nonadjacent in HatH(n); throws
/// InvalidInput otherwise. Reports which of them is 2-periodic under
/// [K_n, f, id].
PairPeriodicityReport lemma3_check(const VertexFunction& f, const BitVector& x, const BitVector& y);

struct EtaCheckpoint {
  std::size_t n = 0;
  /// Tables below this value have been scanned.
  std::uint64_t next_table = 0;
  std::size_t best_eta = 0;
  std::uint64_t best_table = 0;
};

struct EtaOptions {
  /// Largest n scanned without an explicit override; n = 5 needs max_n >= 5.
  std::size_t max_n = 4;
  /// 0 means unlimited.
  double max_seconds = 0;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
  std::optional<EtaCheckpoint> resume;
  /// Invoked after every completed block.
  std::function<void(const EtaCheckpoint&)> on_checkpoint;
};

struct EtaResult {
  std::size_t n = 0;
  std::size_t eta = 0;
  /// The smallest maximizing table, bit k = f(k).
  std::uint64_t witness_index = 0;
  VertexFunction witness;
  std::uint64_t tables_scanned = 0;
};

/// Number of 2-cycles of [K_n, f, id] for a table given as an integer
/// (bit k = f(k)), n <= 6.
std::size_t two_cycle_count_table(std::uint64_t table, std::size_t n) noexcept;

/// max over all f: F_2^n -> F_2 of the 2-cycle count of [K_n, f, id], scanning
/// tables 0 .. 2^(2^n) - 1. Throws BudgetExceeded above the cap or when the
/// time budget runs out (the last checkpoint has been reported by then).
EtaResult brute_force_eta(std::size_t n, const EtaOptions& options = {});

}  // namespace sds
