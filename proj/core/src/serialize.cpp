#include "blab/serialize.hpp"

#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace blab {

namespace {
using json = nlohmann::ordered_json;
}

std::string serialize_result(const ParameterResult& r) {
  json j;
  j["kind"] = parameter_name(r.kind);
  j["value"] = r.value;
  j["optimal"] = r.optimal;
  j["witness"] = json{{"strengths", r.witness.strengths()}};
  j["nodes_explored"] = r.nodes_explored;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

ParameterResult parse_result(const std::string& text) {
  json j = json::parse(text);
  ParameterResult r;
  r.kind = parameter_from_name(j.at("kind").get<std::string>());
  r.value = j.at("value").get<int>();
  r.optimal = j.at("optimal").get<bool>();
  r.witness = Broadcast(j.at("witness").at("strengths").get<std::vector<int>>());
  r.nodes_explored = j.at("nodes_explored").get<std::int64_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

std::string serialize_graph(const Graph& g) {
  json j;
  j["n"] = g.n();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  j["labels"] = g.labels();
  return j.dump();
}

Graph parse_graph(const std::string& text) {
  json j = json::parse(text);
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("parse_graph: each edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return Graph(n, edges, labels);
}

std::string broadcast_by_label(const Broadcast& f, const Graph& g) {
  if (f.n() != g.n())
    throw std::invalid_argument("broadcast_by_label: order mismatch");
  json j = json::object();
  for (int v = 0; v < g.n(); ++v)
    if (f.strength(v) > 0) j[g.label(v)] = f.strength(v);
  return j.dump();
}

}  // namespace blab
