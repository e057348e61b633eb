#include "sds_cli/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sds/clique.hpp"
#include "sds/coding.hpp"
#include "sds/construction.hpp"
#include "sds/error.hpp"
#include "sds/phase_space.hpp"
#include "sds/sds_io.hpp"
#include "sds/verify.hpp"
#include "sds/word_graphs.hpp"

namespace sds::cli {

namespace {

using Json = nlohmann::ordered_json;

// Caps that apply unless --force is given.
constexpr std::size_t phase_space_cap = PhaseSpaceOptions::default_max_n;
constexpr std::size_t phase_space_forced_cap = 30;
constexpr std::size_t dimension_cap = MaterializeOptions::default_max_dimension;
constexpr std::size_t dimension_forced_cap = 20;
constexpr std::size_t eta_cap = 4;
constexpr std::size_t eta_forced_cap = 5;
// Pairwise distance checks are quadratic in 2^(2^r - r - 1) words.
constexpr std::size_t hamming_r_cap = 4;

struct RunConfig {
  std::string format;
  std::string out_path;
  double budget_secs = 0;
  std::uint64_t budget_nodes = 0;
  bool force = false;
  bool deterministic = false;
  std::optional<std::uint64_t> seed;

  std::size_t n = 0;
  std::string spec;
  std::string sds_path = "example1";
  std::string state;
  std::string table;
  std::string order;
  bool random_table = false;
  std::string edges_path;
  std::string initial_path;
  std::string input_path;
  bool from_code = false;
  std::size_t r = 0;
  std::size_t require_distance = 0;
  std::string checkpoint_path;
  std::size_t threads = 0;
};

/// Thrown for problems with the command line itself.
class UsageError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "usage"; }
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void json(Json doc) {
    if (cfg_.seed) doc["seed"] = *cfg_.seed;
    if (!cfg_.deterministic) doc["timestamp"] = utc_timestamp();
    text(doc.dump(2) + "\n");
  }

  void text(const std::string& body) {
    if (cfg_.out_path.empty()) {
      out_ << body;
      return;
    }
    std::ofstream file(cfg_.out_path);
    if (!file) throw InvalidInput("cannot write '" + cfg_.out_path + "'");
    file << body;
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

std::string format_or(const RunConfig& cfg, const std::string& fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format '" + format + "' for this command");
}

SdsDefinition load_sds(const RunConfig& cfg) {
  if (cfg.sds_path == "example1") return example1();
  return load_sds_file(cfg.sds_path);
}

Json states_json(const std::vector<SystemState>& states) {
  Json list = Json::array();
  for (const auto& s : states) list.push_back(s.to_string());
  return list;
}

Json labels_json(const std::vector<std::uint64_t>& labels, std::size_t length) {
  Json list = Json::array();
  for (auto l : labels) list.push_back(format_bits(l, length));
  return list;
}

CliqueBudget clique_budget(const RunConfig& cfg) { return CliqueBudget{cfg.budget_nodes, cfg.budget_secs}; }

// ------------------------------------------------------------------ commands

int cmd_simulate(const RunConfig& cfg, Emitter& emit) {
  const auto system = load_sds(cfg);
  if (cfg.state.empty()) throw UsageError("simulate needs --state");
  const auto state = BitVector::parse(cfg.state);
  const auto trace = update_trace(system, state);
  const std::string format = format_or(cfg, "json");
  require_format(format, {"json", "text"});

  if (format == "text") {
    std::ostringstream out;
    for (std::size_t k = 0; k < trace.size(); ++k) {
      out << static_cast<char>('A' + k) << ' ' << trace[k].to_string();
      if (k > 0) out << "  (updated v" << system.order()(k) << ")";
      out << '\n';
    }
    emit.text(out.str());
    return ok;
  }
  Json doc;
  doc["command"] = "simulate";
  doc["n"] = system.size();
  doc["order"] = system.order().sequence();
  doc["initial"] = state.to_string();
  auto blocks = Json::array();
  for (std::size_t k = 0; k < trace.size(); ++k) {
    Json block;
    block["block"] = std::string(1, static_cast<char>('A' + k));
    block["step"] = k;
    block["vertex"] = k == 0 ? Json(nullptr) : Json(system.order()(k));
    block["state"] = trace[k].to_string();
    blocks.push_back(block);
  }
  doc["blocks"] = std::move(blocks);
  doc["result"] = trace.back().to_string();
  emit.json(doc);
  return ok;
}

SdsDefinition phase_space_system(const RunConfig& cfg) {
  if (!cfg.table.empty() || cfg.random_table) {
    VertexFunction f;
    if (cfg.random_table) {
      if (cfg.n == 0) throw UsageError("--random-table needs --n");
      if (cfg.n > VertexFunction::max_arity) throw UsageError("--n too large");
      std::mt19937_64 rng(cfg.seed.value_or(0));
      f = VertexFunction(cfg.n);
      for (std::uint64_t k = 0; k < f.table_size(); ++k) f.set(k, rng() & 1U);
    } else {
      f = VertexFunction::from_table(cfg.table);
    }
    const std::size_t n = f.arity();
    return SdsDefinition::complete(n, f, cfg.order.empty() ? UpdateOrder::identity(n) : UpdateOrder::parse(cfg.order));
  }
  return load_sds(cfg);
}

int cmd_phase_space(const RunConfig& cfg, Emitter& emit) {
  const auto system = phase_space_system(cfg);
  PhaseSpaceOptions options;
  options.max_n = cfg.force ? phase_space_forced_cap : phase_space_cap;
  const auto ps = phase_space(system, options);
  const std::string format = format_or(cfg, "json");
  require_format(format, {"json", "dot"});
  if (format == "dot") {
    emit.text(export_phase_space(ps, ExportFormat::dot));
    return ok;
  }
  Json doc;
  doc["command"] = "phase-space";
  const Json exported = Json::parse(export_phase_space(ps, ExportFormat::json));
  for (auto it = exported.begin(); it != exported.end(); ++it) doc[it.key()] = it.value();
  std::vector<SystemState> fixed;
  for (const auto& cycle : ps.cycles)
    if (cycle.size() == 1) fixed.emplace_back(ps.n, cycle.front());
  doc["fixed_points"] = states_json(fixed);
  doc["two_cycles"] = ps.cycle_count(2);
  emit.json(doc);
  return ok;
}

std::optional<EtaCheckpoint> read_checkpoint(const std::string& path) {
  if (path.empty() || !std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  return EtaCheckpoint{doc.at("n").get<std::size_t>(), doc.at("next_table").get<std::uint64_t>(),
                       doc.at("best_eta").get<std::size_t>(), doc.at("best_table").get<std::uint64_t>()};
}

void write_checkpoint(const std::string& path, const EtaCheckpoint& c) {
  Json doc;
  doc["n"] = c.n;
  doc["next_table"] = c.next_table;
  doc["best_eta"] = c.best_eta;
  doc["best_table"] = c.best_table;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << doc.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

int cmd_eta(const RunConfig& cfg, Emitter& emit) {
  if (cfg.n == 0) throw UsageError("eta needs --n");
  EtaOptions options;
  options.max_n = cfg.force ? eta_forced_cap : eta_cap;
  options.max_seconds = cfg.budget_secs;
  options.threads = cfg.threads;
  options.resume = read_checkpoint(cfg.checkpoint_path);
  if (options.resume && options.resume->n != cfg.n) throw UsageError("checkpoint was written for a different n");
  if (!cfg.checkpoint_path.empty()) {
    options.on_checkpoint = [&](const EtaCheckpoint& c) { write_checkpoint(cfg.checkpoint_path, c); };
  }
  const auto result = brute_force_eta(cfg.n, options);
  Json doc;
  doc["command"] = "eta";
  doc["n"] = result.n;
  doc["eta"] = result.eta;
  doc["witness"] = result.witness.to_string();
  doc["witness_index"] = result.witness_index;
  doc["tables_scanned"] = result.tables_scanned;
  emit.json(doc);
  return ok;
}

ExplicitGraph clique_graph(const RunConfig& cfg, std::string& name) {
  if (!cfg.edges_path.empty()) {
    std::ifstream in(cfg.edges_path);
    if (!in) throw InvalidInput("cannot open edge list '" + cfg.edges_path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    name = cfg.edges_path;
    return parse_edge_list(buffer.str());
  }
  if (cfg.spec.empty()) throw UsageError("need --spec (e.g. J:7) or --edges");
  const auto spec = ImplicitGraphSpec::parse(cfg.spec);
  name = spec.to_string();
  return materialize(spec, {cfg.force ? dimension_forced_cap : dimension_cap});
}

int cmd_clique(const RunConfig& cfg, Emitter& emit) {
  std::string name;
  const auto g = clique_graph(cfg, name);
  CliqueOptions options{clique_budget(cfg), {}};
  if (!cfg.initial_path.empty()) options.initial_clique = load_code_file(cfg.initial_path).codes();
  const auto result = max_clique(g, options);
  const std::string format = format_or(cfg, "json");
  require_format(format, {"json", "text"});
  if (format == "text") {
    Code code(g.label_length(), result.vertices);
    emit.text(to_code_file(code));
  } else {
    Json doc;
    doc["command"] = "clique";
    doc["graph"] = name;
    doc["vertex_count"] = g.vertex_count();
    doc["edge_count"] = g.edge_count();
    doc["size"] = result.size;
    doc["optimal"] = result.optimal;
    doc["upper_bound"] = result.upper_bound;
    doc["nodes_explored"] = result.nodes_explored;
    doc["vertices"] = labels_json(result.vertices, g.label_length());
    emit.json(doc);
  }
  return result.optimal ? ok : budget_exhausted;
}

int cmd_construct(const RunConfig& cfg, Emitter& emit) {
  if (cfg.input_path.empty()) throw UsageError("construct needs --in <clique or code file>");
  const Code input = load_code_file(cfg.input_path);
  if (input.empty()) throw InvalidInput("input file holds no words");

  // A code of length m in J(m) becomes a HatH(m+1) clique through T and theta^-1.
  std::vector<BitVector> members;
  for (const auto& w : input.words()) members.push_back(cfg.from_code ? theta_inverse(prefix_sum_T(w)) : w);
  const std::size_t n = members.front().size();
  if (n > (cfg.force ? phase_space_forced_cap : phase_space_cap)) {
    throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the phase-space cap");
  }
  const HatClique clique(n, members);
  const auto f = construct_f(clique);
  const auto system = SdsDefinition::complete(n, f.table);

  bool all_periodic = true;
  for (const auto& x : clique.members()) {
    all_periodic = all_periodic && sds_map(system, x) == inv(x) && sds_map(system, inv(x)) == x;
  }
  PhaseSpaceOptions options;
  options.max_n = cfg.force ? phase_space_forced_cap : phase_space_cap;
  const std::size_t cycles = two_cycle_count(system, options);

  Json doc;
  doc["command"] = "construct";
  doc["n"] = n;
  doc["members"] = states_json(clique.members());
  doc["table"] = f.table.to_string();
  doc["prescribed"] = f.prescribed_count();
  doc["two_cycles"] = cycles;
  doc["members_two_periodic"] = all_periodic;
  emit.json(doc);
  return all_periodic && cycles >= clique.size() ? ok : disagreement;
}

int cmd_codes(const RunConfig& cfg, Emitter& emit) {
  if ((cfg.r == 0) == cfg.input_path.empty()) throw UsageError("codes needs exactly one of --r or --in");
  if (cfg.r > hamming_r_cap) {
    throw BudgetExceeded("codes --r is limited to r <= " + std::to_string(hamming_r_cap));
  }
  const Code code = cfg.r != 0 ? hamming_code(cfg.r) : load_code_file(cfg.input_path);
  const std::string format = format_or(cfg, "json");
  require_format(format, {"json", "text"});
  if (format == "text") {
    emit.text(to_code_file(code));
    return ok;
  }
  const auto distance = min_distance(code);
  Json doc;
  doc["command"] = "codes";
  doc["source"] = cfg.r != 0 ? "hamming r=" + std::to_string(cfg.r) : cfg.input_path;
  doc["length"] = code.length();
  doc["size"] = code.size();
  doc["min_distance"] = distance.is_infinite() ? Json("inf") : Json(distance.value());
  doc["one_error_correcting"] = distance.at_least(3);
  if (auto ref = code.length() > 0 ? a_n3_reference(code.length()) : std::nullopt) {
    doc["a_ref"] = {{"value", ref->count}, {"tag", ref->tag}};
  } else {
    doc["a_ref"] = nullptr;
  }
  doc["words"] = labels_json(code.codes(), code.length());
  emit.json(doc);
  return distance.at_least(cfg.require_distance) ? ok : disagreement;
}

int cmd_verify(const RunConfig& cfg, Emitter& emit) {
  if (cfg.n < 2) throw UsageError("verify needs --n >= 2");
  VerifyOptions options;
  options.eta.max_n = cfg.force ? eta_forced_cap : eta_cap;
  options.eta.threads = cfg.threads;
  options.eta.max_seconds = cfg.budget_secs;
  options.clique_budget = clique_budget(cfg);
  options.materialize.max_dimension = cfg.force ? dimension_forced_cap : dimension_cap;
  options.phase_space.max_n = cfg.force ? phase_space_forced_cap : phase_space_cap;
  const auto report = verify_theorems(cfg.n, options);

  Json doc;
  doc["command"] = "verify";
  const Json body = Json::parse(to_json(report));
  for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
  emit.json(doc);
  if (report.disagreement()) return disagreement;
  if (report.budget_exhausted()) return budget_exhausted;
  return report.agree ? ok : disagreement;
}

int cmd_graph(const RunConfig& cfg, Emitter& emit) {
  std::string name;
  const auto g = clique_graph(cfg, name);
  const std::string format = format_or(cfg, "json");
  require_format(format, {"edges", "dot", "json"});
  if (format == "edges") {
    emit.text(to_edge_list(g));
  } else if (format == "dot") {
    emit.text(to_dot(g));
  } else {
    Json doc;
    doc["command"] = "graph";
    doc["graph"] = name;
    doc["vertex_count"] = g.vertex_count();
    doc["edge_count"] = g.edge_count();
    doc["vertices"] = labels_json(g.labels(), g.label_length());
    auto edges = Json::array();
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
      g.neighbors(u).for_each([&](std::size_t v) {
        if (u < v) edges.push_back({format_bits(g.label(u), g.label_length()), format_bits(g.label(v), g.label_length())});
      });
    }
    doc["edges"] = std::move(edges);
    emit.json(doc);
  }
  return ok;
}

void error_line(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Sequential dynamical systems over complete graphs, 2-cycles and one-error-correcting codes", "sds"};
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--format", cfg.format, "Output format: json (default), text, dot, edges");
  app.add_option("--out", cfg.out_path, "Write the primary output to this file");
  app.add_option("--budget-secs", cfg.budget_secs, "Wall-clock budget for searches")->check(CLI::PositiveNumber);
  app.add_option("--budget-nodes", cfg.budget_nodes, "Branch-and-bound node budget")->check(CLI::PositiveNumber);
  app.add_flag("--force", cfg.force, "Lift the default size caps");
  app.add_flag("--deterministic", cfg.deterministic, "Omit the timestamp field");
  app.add_option("--seed", cfg.seed, "Seed for randomized inputs");
  app.add_option("--threads", cfg.threads, "Worker threads (0 = hardware)");

  auto* simulate = app.add_subcommand("simulate", "One system update, printing every intermediate state");
  simulate->add_option("--sds", cfg.sds_path, "SDS definition JSON, or 'example1'");
  simulate->add_option("--state", cfg.state, "Initial state as a bitstring")->required();

  auto* phase = app.add_subcommand("phase-space", "Enumerate the phase space and its cycles");
  phase->add_option("--sds", cfg.sds_path, "SDS definition JSON, or 'example1'");
  phase->add_option("--table", cfg.table, "Use [K_n, f, pi] with this truth table for f");
  phase->add_flag("--random-table", cfg.random_table, "Use [K_n, f, pi] with a random f (needs --n, --seed)");
  phase->add_option("--n", cfg.n, "Vertex count for --random-table");
  phase->add_option("--order", cfg.order, "Update order for --table, e.g. 2413 or 2,4,1,3");

  auto* eta = app.add_subcommand("eta", "Exhaustive maximum number of 2-cycles over all update functions");
  eta->add_option("--n", cfg.n, "Vertex count")->required();
  eta->add_option("--checkpoint", cfg.checkpoint_path, "Resume from and write progress to this file");

  auto* clique = app.add_subcommand("clique", "Maximum clique of HatH/H/J or an edge list");
  auto* spec_opt = clique->add_option("--spec", cfg.spec, "Graph spec such as J:7, H:6, HatH:8");
  clique->add_option("--edges", cfg.edges_path, "Edge-list file")->excludes(spec_opt);
  clique->add_option("--initial", cfg.initial_path, "Code file holding a known clique to start from");

  auto* construct = app.add_subcommand("construct", "Build the update function realising a clique as 2-cycles");
  construct->add_option("--in", cfg.input_path, "File of HatH(n) clique members (or a code with --from-code)");
  construct->add_flag("--from-code", cfg.from_code, "Input is a code of length n-1 with minimum distance >= 3");

  auto* codes = app.add_subcommand("codes", "Generate Hamming codes or check a code's minimum distance");
  codes->add_option("--r", cfg.r, "Generate the Hamming code of length 2^r - 1");
  codes->add_option("--in", cfg.input_path, "Code file to check");
  codes->add_option("--require-distance", cfg.require_distance, "Exit 1 when the minimum distance is smaller");

  auto* verify = app.add_subcommand("verify", "Check that all routes to eta_n agree");
  verify->add_option("--n", cfg.n, "Vertex count")->required();

  auto* graph = app.add_subcommand("graph", "Export a materialized HatH/H/J graph");
  auto* graph_spec = graph->add_option("--spec", cfg.spec, "Graph spec such as J:3");
  graph->add_option("--edges", cfg.edges_path, "Edge-list file")->excludes(graph_spec);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    error_line(err, "usage", e.what());
    return usage_error;
  }

  Emitter emit(cfg, out);
  try {
    if (*simulate) return cmd_simulate(cfg, emit);
    if (*phase) return cmd_phase_space(cfg, emit);
    if (*eta) return cmd_eta(cfg, emit);
    if (*clique) return cmd_clique(cfg, emit);
    if (*construct) return cmd_construct(cfg, emit);
    if (*codes) return cmd_codes(cfg, emit);
    if (*verify) return cmd_verify(cfg, emit);
    if (*graph) return cmd_graph(cfg, emit);
  } catch (const UsageError& e) {
    error_line(err, e.kind(), e.what());
    return usage_error;
  } catch (const BudgetExceeded& e) {
    error_line(err, e.kind(), e.what());
    return budget_exhausted;
  } catch (const PrescriptionConflict& e) {
    error_line(err, e.kind(), e.what());
    return disagreement;
  } catch (const Error& e) {
    error_line(err, e.kind(), e.what());
    return usage_error;
  } catch (const nlohmann::json::exception& e) {
    error_line(err, "invalid_input", e.what());
    return usage_error;
  } catch (const std::filesystem::filesystem_error& e) {
    error_line(err, "io", e.what());
    return usage_error;
  }
  error_line(err, "usage", "no subcommand");
  return usage_error;
}

}  // namespace sds::cli
