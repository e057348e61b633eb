#include "sds/verify.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "sds/coding.hpp"
#include "sds/error.hpp"

namespace sds {

namespace {

Leg skipped(std::string name, std::string reason, std::string detail) {
  Leg leg;
  leg.name = std::move(name);
  leg.skip_reason = std::move(reason);
  leg.detail = std::move(detail);
  return leg;
}

Leg computed(std::string name, std::uint64_t value, std::string detail = {}) {
  Leg leg;
  leg.name = std::move(name);
  leg.value = value;
  leg.detail = std::move(detail);
  return leg;
}

struct CliqueLeg {
  Leg leg;
  CliqueResult result;
  bool ran = false;
};

CliqueLeg clique_leg(const std::string& name, const ImplicitGraphSpec& spec, const VerifyOptions& options) {
  CliqueLeg out;
  ExplicitGraph g;
  try {
    g = materialize(spec, options.materialize);
  } catch (const BudgetExceeded& e) {
    out.leg = skipped(name, "budget", e.what());
    return out;
  }
  out.result = max_clique(g, CliqueOptions{options.clique_budget, {}});
  out.ran = true;
  const std::string detail = spec.to_string() + ", " + std::to_string(out.result.nodes_explored) + " nodes";
  if (out.result.optimal) {
    out.leg = computed(name, out.result.size, detail);
  } else {
    out.leg = skipped(name, "budget", detail + ", upper bound " + std::to_string(out.result.upper_bound));
    out.leg.lower_bound = out.result.size;
  }
  return out;
}

}  // namespace

const Leg& VerifyReport::leg(const std::string& name) const {
  auto it = std::find_if(legs.begin(), legs.end(), [&](const Leg& l) { return l.name == name; });
  if (it == legs.end()) throw InvalidInput("no leg named " + name);
  return *it;
}

bool VerifyReport::budget_exhausted() const {
  return std::any_of(legs.begin(), legs.end(), [](const Leg& l) { return l.skip_reason == "budget"; });
}

VerifyReport verify_theorems(std::size_t n, const VerifyOptions& options) {
  if (n < 2) throw InvalidInput("verify needs n >= 2");
  VerifyReport report;
  report.n = n;

  // (a) exhaustive scan of all update functions.
  if (n <= options.eta.max_n && n <= 5) {
    try {
      EtaOptions eta = options.eta;
      eta.on_checkpoint = nullptr;
      const auto r = brute_force_eta(n, eta);
      report.legs.push_back(computed("brute_eta", r.eta, "witness " + r.witness.to_string()));
    } catch (const BudgetExceeded& e) {
      report.legs.push_back(skipped("brute_eta", "budget", e.what()));
    }
  } else {
    report.legs.push_back(skipped("brute_eta", "policy", "n above the brute-force cap " + std::to_string(options.eta.max_n)));
  }

  // (b), (c) clique numbers on each graph, computed independently.
  auto hat = clique_leg("omega_hatH", {GraphKind::hat_h, n}, options);
  auto h = clique_leg("omega_H", {GraphKind::h, n - 1}, options);
  auto j = clique_leg("omega_J", {GraphKind::j, n - 1}, options);

  // Carry the H and J cliques into HatH(n) through theta^-1 and T; they must
  // stay cliques.
  if (h.ran && j.ran && n - 1 <= options.materialize.max_dimension && n <= options.materialize.max_dimension) {
    const auto hat_graph = materialize({GraphKind::hat_h, n}, options.materialize);
    const auto h_graph = materialize({GraphKind::h, n - 1}, options.materialize);
    std::vector<std::uint64_t> from_h;
    for (auto label : h.result.vertices) from_h.push_back(theta_inverse(BitVector(n - 1, label)).code());
    std::vector<std::uint64_t> via_t;
    for (auto label : j.result.vertices) via_t.push_back(prefix_sum_T(BitVector(n - 1, label)).code());
    std::vector<std::uint64_t> via_t_theta;
    for (auto label : via_t) via_t_theta.push_back(theta_inverse(BitVector(n - 1, label)).code());
    report.isomorphism_certificates =
        is_clique(hat_graph, from_h) && is_clique(h_graph, via_t) && is_clique(hat_graph, via_t_theta);
  }
  report.legs.push_back(hat.leg);
  report.legs.push_back(h.leg);
  report.legs.push_back(j.leg);

  // (d) tabulated value of A(n-1, 3).
  if (auto ref = a_n3_reference(n - 1)) {
    report.legs.push_back(computed("a_ref", ref->count, ref->tag));
  } else {
    report.legs.push_back(skipped("a_ref", "unknown", "no closed form for A(" + std::to_string(n - 1) + ",3)"));
  }

  // (e) build f from the HatH clique and count 2-cycles of [K_n, f, id].
  if (!hat.ran) {
    report.legs.push_back(skipped("lemma2_lower", "budget", "no clique available"));
  } else {
    std::vector<BitVector> members;
    for (auto label : hat.result.vertices) members.emplace_back(n, label);
    try {
      const auto f = construct_f(HatClique(n, members));
      const auto count = two_cycle_count(SdsDefinition::complete(n, f.table), options.phase_space);
      const std::string detail = "clique of size " + std::to_string(members.size()) + ", table " +
                                 (n <= 10 ? f.table.to_string() : std::string("(omitted)"));
      if (hat.result.optimal) {
        report.legs.push_back(computed("lemma2_lower", count, detail));
      } else {
        auto leg = skipped("lemma2_lower", "budget", detail);
        leg.lower_bound = count;
        report.legs.push_back(leg);
      }
    } catch (const BudgetExceeded& e) {
      report.legs.push_back(skipped("lemma2_lower", "budget", e.what()));
    }
  }

  std::set<std::uint64_t> values;
  for (const auto& leg : report.legs) {
    if (leg.value) {
      values.insert(*leg.value);
    } else {
      report.skipped.push_back(leg.name);
    }
  }
  // Lower bounds may never exceed an exactly computed value.
  bool bounds_consistent = true;
  if (!values.empty()) {
    for (const auto& leg : report.legs)
      if (leg.lower_bound && *leg.lower_bound > *values.begin()) bounds_consistent = false;
  }
  report.conflicting = values.size() > 1 || !report.isomorphism_certificates || !bounds_consistent;
  report.agree = values.size() == 1 && !report.conflicting;
  return report;
}

std::string to_json(const VerifyReport& report) {
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  auto legs = nlohmann::ordered_json::object();
  auto details = nlohmann::ordered_json::object();
  auto lower = nlohmann::ordered_json::object();
  for (const auto& leg : report.legs) {
    legs[leg.name] = leg.value ? nlohmann::ordered_json(*leg.value) : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json d;
    d["status"] = leg.value ? "computed" : "skipped";
    if (!leg.value) d["reason"] = leg.skip_reason;
    d["detail"] = leg.detail;
    details[leg.name] = d;
    if (leg.lower_bound) lower[leg.name] = *leg.lower_bound;
  }
  doc["legs"] = std::move(legs);
  doc["details"] = std::move(details);
  doc["lower_bounds"] = std::move(lower);
  doc["isomorphism_certificates"] = report.isomorphism_certificates;
  doc["agree"] = report.agree;
  doc["skipped"] = report.skipped;
  return doc.dump(2) + "\n";
}

}  // namespace sds
