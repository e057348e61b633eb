#include "sds/sds_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sds/error.hpp"

namespace sds {

using nlohmann::json;

SdsDefinition parse_sds_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed SDS JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("n").get<std::size_t>();
    BaseGraph graph(n);
    for (const auto& edge : doc.at("edges")) {
      if (!edge.is_array() || edge.size() != 2) throw InvalidInput("each edge must be a pair [i, j]");
      graph.add_edge(edge[0].get<std::size_t>(), edge[1].get<std::size_t>());
    }
    UpdateOrder order(doc.at("order").get<std::vector<std::size_t>>());

    std::vector<VertexFunction> functions(n);
    std::vector<bool> seen(n + 1, false);
    for (const auto& entry : doc.at("functions")) {
      const auto vertex = entry.at("vertex").get<std::size_t>();
      if (vertex < 1 || vertex > n || seen[vertex]) {
        throw InvalidInput("function entry has invalid or repeated vertex " + std::to_string(vertex));
      }
      seen[vertex] = true;
      functions[vertex - 1] = VertexFunction::from_table(entry.at("table").get<std::string>());
    }
    for (std::size_t v = 1; v <= n; ++v)
      if (!seen[v]) throw InvalidInput("missing function for vertex " + std::to_string(v));
    return SdsDefinition(std::move(graph), std::move(functions), std::move(order));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("invalid SDS definition: ") + e.what());
  }
}

SdsDefinition load_sds_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open SDS file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sds_json(buffer.str());
}

std::string to_json(const SdsDefinition& sds) {
  nlohmann::ordered_json doc;
  doc["n"] = sds.size();
  doc["edges"] = nlohmann::ordered_json::array();
  for (auto [i, j] : sds.graph().edges()) doc["edges"].push_back({i, j});
  doc["order"] = sds.order().sequence();
  doc["functions"] = nlohmann::ordered_json::array();
  for (std::size_t v = 1; v <= sds.size(); ++v) {
    doc["functions"].push_back({{"vertex", v}, {"table", sds.function(v).to_string()}});
  }
  return doc.dump(2) + "\n";
}

SdsDefinition example1() {
  const std::pair<std::size_t, std::size_t> edges[] = {{1, 2}, {1, 3}, {1, 4}, {3, 4}};
  std::vector<VertexFunction> functions{
      VertexFunction::from_callable(4, [](const BitVector& x) { return ((x.at(1) && x.at(3)) ^ x.at(2) ^ x.at(4)); }),
      VertexFunction::from_callable(2, [](const BitVector& x) { return !(x.at(1) && x.at(2)); }),
      VertexFunction::from_callable(3, [](const BitVector& x) { return x.at(1) ^ x.at(2) ^ x.at(3); }),
      VertexFunction::from_callable(3, [](const BitVector& x) { return (x.at(1) && x.at(2)) ^ x.at(3); }),
  };
  return SdsDefinition(BaseGraph(4, edges), std::move(functions), UpdateOrder({2, 4, 1, 3}));
}

}  // namespace sds
