#pragma once

// Shared JSON plumbing for graph and ZXCF serialization (internal header).

#include <json.hpp>
#include <string>

#include "qgc/graph.hpp"

namespace qgc::detail {

using Json = nlohmann::ordered_json;

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

inline Json graph_json(const CodeGraph& g) {
  Json j;
  j["n"] = g.n();
  j["k"] = g.k();
  Json nodes = Json::array();
  for (std::size_t v = 0; v < g.node_count(); ++v) nodes.push_back(Json{{"id", v}, {"role", role_name(g.role(v))}});
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  j["edges"] = edges;
  Json match = Json::array();
  for (const auto& [u, p] : g.pivot_match()) match.push_back(Json::array({u, p}));
  j["pivot_match"] = match;
  if (!g.has_default_numbering()) j["numbering"] = g.numbering();
  return j;
}

inline std::size_t as_index(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(std::string(what) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

inline CodeGraph graph_from_json_value(const Json& j) {
  if (!j.is_object()) throw ParseError("graph JSON must be an object");
  for (const char* key : {"n", "k", "nodes", "edges", "pivot_match"})
    if (!j.contains(key)) throw ParseError(std::string("graph JSON missing key \"") + key + "\"");
  const auto& nodes = j["nodes"];
  if (!nodes.is_array()) throw ParseError("\"nodes\" must be an array");
  std::size_t N = nodes.size();
  CodeGraph g(N);
  std::vector<bool> seen(N, false);
  std::vector<Role> roles(N, Role::Output);
  for (const auto& nd : nodes) {
    std::size_t id = as_index(nd.at("id"), "node id");
    if (id >= N) throw ValidationError("node ids must be exactly 0..N-1; got " + std::to_string(id));
    if (seen[id]) throw ValidationError("duplicate node id " + std::to_string(id));
    seen[id] = true;
    std::string r = nd.at("role").get<std::string>();
    if (r == "input") roles[id] = Role::Input;
    else if (r == "pivot") roles[id] = Role::Pivot;
    else if (r == "output") roles[id] = Role::Output;
    else throw ParseError("unknown role \"" + r + "\"");
  }
  for (std::size_t v = 0; v < N; ++v)
    if (roles[v] != Role::Output) g.set_role(v, roles[v]);
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edges must be [id,id] pairs");
    std::size_t a = as_index(e[0], "edge endpoint"), b = as_index(e[1], "edge endpoint");
    if (a >= N || b >= N) throw ValidationError("edge references unknown node");
    if (a == b) throw ValidationError("self-edge at node " + std::to_string(a));
    if (g.has_edge(a, b)) throw ValidationError("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    g.add_edge(a, b);
  }
  std::vector<Edge> match;
  for (const auto& m : j["pivot_match"]) {
    if (!m.is_array() || m.size() != 2) throw ParseError("pivot_match entries must be [input,pivot] pairs");
    match.emplace_back(as_index(m[0], "pivot_match input"), as_index(m[1], "pivot_match pivot"));
  }
  g.set_pivot_match(match);
  if (j.contains("numbering")) {
    std::vector<std::size_t> num;
    for (const auto& v : j["numbering"]) num.push_back(as_index(v, "numbering entry"));
    g.set_numbering(num);
  }
  if (as_index(j["n"], "n") != g.n() || as_index(j["k"], "k") != g.k())
    throw ValidationError("declared n/k disagree with node roles");
  return g;
}

}  // namespace qgc::detail
