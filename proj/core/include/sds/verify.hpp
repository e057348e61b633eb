#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sds/clique.hpp"
#include "sds/construction.hpp"
#include "sds/phase_space.hpp"
#include "sds/word_graphs.hpp"

namespace sds {

/// One independently computed quantity of the verification report.
struct Leg {
  std::string name;
  /// Set only when the value was computed exactly.
  std::optional<std::uint64_t> value;
  /// Why the leg has no value: "policy" (outside the configured range),
  /// "budget" (search exhausted), or "unknown" (no reference exists).
  std::string skip_reason;
  std::string detail;
  /// Best proven lower bound for legs skipped on budget.
  std::optional<std::uint64_t> lower_bound;
};

struct VerifyOptions {
  EtaOptions eta;
  CliqueBudget clique_budget;
  MaterializeOptions materialize;
  PhaseSpaceOptions phase_space;
};

struct VerifyReport {
  std::size_t n = 0;
  /// brute_eta, omega_hatH, omega_H, omega_J, a_ref, lemma2_lower.
  std::vector<Leg> legs;
  /// The cliques found for H(n-1) and J(n-1) map onto cliques of HatH(n)
  /// under theta^-1 and T.
  bool isomorphism_certificates = true;
  /// Every computed leg has the same value and all checks passed.
  bool agree = false;
  /// Two computed legs differ, a certificate failed, or a lower bound
  /// exceeds a computed value.
  bool conflicting = false;
  std::vector<std::string> skipped;

  const Leg& leg(const std::string& name) const;
  bool budget_exhausted() const;
  bool disagreement() const noexcept { return conflicting; }
};

/// Computes eta_n = omega(HatH_n) = omega(H_{n-1}) = omega(J_{n-1}) = A(n-1,3)
/// along every leg the budgets allow and checks that all computed values
/// coincide. Requires n >= 2.
VerifyReport verify_theorems(std::size_t n, const VerifyOptions& options = {});

/// {n, legs:{...}, agree, skipped:[...], ...}. Timing is never included.
std::string to_json(const VerifyReport& report);

}  // namespace sds
