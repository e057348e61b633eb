#include "sds/phase_space.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "sds/error.hpp"

namespace sds {

namespace {

void check_budget(const SdsDefinition& sds, const PhaseSpaceOptions& options) {
  if (sds.size() > options.max_n) {
    throw BudgetExceeded("phase space of 2^" + std::to_string(sds.size()) + " states exceeds cap n <= " +
                         std::to_string(options.max_n));
  }
  if (sds.size() > 31) throw BudgetExceeded("phase space enumeration supports n <= 31");
}

std::size_t worker_count(const PhaseSpaceOptions& options, std::uint64_t states) {
  std::size_t threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  if (states < (std::uint64_t{1} << 14)) threads = 1;
  return threads;
}

}  // namespace

std::size_t PhaseSpace::cycle_count(std::size_t length) const {
  auto it = census.find(length);
  return it == census.end() ? 0 : it->second;
}

std::size_t PhaseSpace::periodic_state_count() const {
  std::size_t total = 0;
  for (auto [length, count] : census) total += length * count;
  return total;
}

PhaseSpace phase_space(const SdsDefinition& sds, const PhaseSpaceOptions& options) {
  check_budget(sds, options);
  PhaseSpace ps;
  ps.n = sds.size();
  const std::uint64_t states = std::uint64_t{1} << ps.n;
  ps.successor.resize(states);

  // Each worker writes a disjoint slice, so the result does not depend on
  // the number of threads.
  const std::size_t threads = worker_count(options, states);
  auto fill = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t x = begin; x < end; ++x) ps.successor[x] = static_cast<std::uint32_t>(sds.apply(x));
  };
  if (threads == 1) {
    fill(0, states);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (states + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = std::min(states, begin + chunk);
      if (begin < end) pool.emplace_back(fill, begin, end);
    }
  }

  // Functional-graph cycle detection. mark: 0 unvisited, 1 on current walk, 2 done.
  std::vector<std::uint8_t> mark(states, 0);
  std::vector<std::uint32_t> walk;
  for (std::uint64_t start = 0; start < states; ++start) {
    if (mark[start] != 0) continue;
    walk.clear();
    std::uint32_t x = static_cast<std::uint32_t>(start);
    while (mark[x] == 0) {
      mark[x] = 1;
      walk.push_back(x);
      x = ps.successor[x];
    }
    if (mark[x] == 1) {
      std::vector<std::uint32_t> cycle;
      std::uint32_t y = x;
      do {
        cycle.push_back(y);
        y = ps.successor[y];
      } while (y != x);
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      ++ps.census[cycle.size()];
      ps.cycles.push_back(std::move(cycle));
    }
    for (std::uint32_t w : walk) mark[w] = 2;
  }
  std::sort(ps.cycles.begin(), ps.cycles.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return ps;
}

std::size_t two_cycle_count(const SdsDefinition& sds, const PhaseSpaceOptions& options) {
  check_budget(sds, options);
  if (!(sds.is_uniform_complete() && sds.order().is_identity()) || sds.size() < 1) {
    return phase_space(sds, options).cycle_count(2);
  }
  // Every 2-cycle of [K_n, g, id] is {x, inv(x)} with exactly one member
  // having x_1 = 0, i.e. code < 2^(n-1).
  const std::size_t n = sds.size();
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  std::size_t count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << (n - 1)); ++x) {
    const std::uint64_t z = x ^ mask;
    if (sds.apply(x) == z && sds.apply(z) == x) ++count;
  }
  return count;
}

std::vector<SystemState> fixed_points(const SdsDefinition& sds, const PhaseSpaceOptions& options) {
  check_budget(sds, options);
  std::vector<SystemState> out;
  const std::uint64_t states = std::uint64_t{1} << sds.size();
  for (std::uint64_t x = 0; x < states; ++x)
    if (sds.apply(x) == x) out.emplace_back(sds.size(), x);
  return out;
}

std::string export_phase_space(const PhaseSpace& ps, ExportFormat format) {
  const std::uint64_t states = ps.successor.size();
  if (format == ExportFormat::dot) {
    std::ostringstream out;
    out << "digraph phase_space {\n";
    for (std::uint64_t x = 0; x < states; ++x) out << "  \"" << format_bits(x, ps.n) << "\";\n";
    for (std::uint64_t x = 0; x < states; ++x) {
      out << "  \"" << format_bits(x, ps.n) << "\" -> \"" << format_bits(ps.successor[x], ps.n) << "\";\n";
    }
    out << "}\n";
    return out.str();
  }
  nlohmann::ordered_json doc;
  doc["n"] = ps.n;
  auto edges = nlohmann::ordered_json::array();
  for (std::uint64_t x = 0; x < states; ++x) {
    edges.push_back({format_bits(x, ps.n), format_bits(ps.successor[x], ps.n)});
  }
  doc["edges"] = std::move(edges);
  auto census = nlohmann::ordered_json::object();
  for (auto [length, count] : ps.census) census[std::to_string(length)] = count;
  doc["census"] = std::move(census);
  auto cycles = nlohmann::ordered_json::array();
  for (const auto& cycle : ps.cycles) {
    auto list = nlohmann::ordered_json::array();
    for (std::uint32_t x : cycle) list.push_back(format_bits(x, ps.n));
    cycles.push_back(std::move(list));
  }
  doc["cycles"] = std::move(cycles);
  return doc.dump(2) + "\n";
}

}  // namespace sds
