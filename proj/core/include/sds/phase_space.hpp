#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sds/sds.hpp"

namespace sds {

/// The functional digraph x -> F(x) on all 2^n states, with its cycles.
struct PhaseSpace {
  std::size_t n = 0;
  /// successor[x] = F(x), indexed by canonical encoding.
  std::vector<std::uint32_t> successor;
  /// cycle length -> number of cycles of that length.
  std::map<std::size_t, std::size_t> census;
  /// Each cycle starts at its smallest state and follows F; cycles are
  /// sorted by that smallest state.
  std::vector<std::vector<std::uint32_t>> cycles;

  std::size_t cycle_count(std::size_t length) const;
  std::size_t periodic_state_count() const;
};

struct PhaseSpaceOptions {
  static constexpr std::size_t default_max_n = 24;
  std::size_t max_n = default_max_n;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

/// Throws BudgetExceeded when n > options.max_n.
PhaseSpace phase_space(const SdsDefinition& sds, const PhaseSpaceOptions& options = {});

/// Number of 2-cycles in the phase space. For [K_n, g, id] this counts the
/// states x with x_1 = 0, F(x) = inv(x) and F(inv(x)) = x without building
/// the full phase space.
std::size_t two_cycle_count(const SdsDefinition& sds, const PhaseSpaceOptions& options = {});

/// All x with F(x) = x, ascending.
std::vector<SystemState> fixed_points(const SdsDefinition& sds, const PhaseSpaceOptions& options = {});

enum class ExportFormat { json, dot };

/// Node labels are bitstrings ("1011"). JSON: {n, edges, census}.
std::string export_phase_space(const PhaseSpace& ps, ExportFormat format);

}  // namespace sds
