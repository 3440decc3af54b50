#pragma once

#include <json.hpp>
#include <string>

#include "whirl/cantor.hpp"
#include "whirl/farey.hpp"
#include "whirl/pathsys.hpp"
#include "whirl/ubiquity.hpp"
#include "whirl/whirl.hpp"

namespace whirl::io {

using nlohmann::json;
using nlohmann::ordered_json;

// {"vertices": [...], "edges": [[a, b], ...]}; vertices in value order, each
// edge with its smaller endpoint first, edges in lexicographic order.
template <VertexLabel V>
ordered_json graph_to_json(const Graph<V>& g) {
  ordered_json vertices = ordered_json::array();
  for (const auto& v : g.vertices()) vertices.push_back(to_label(v));
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({to_label(e.first), to_label(e.second)});
  ordered_json out;
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  return out;
}

// Throws ParseError on schema violations or malformed labels, GraphError on
// loops, duplicate edges, or unknown endpoints.
WhirlGraph whirl_graph_from_json(const json& j);
FareyGraph farey_graph_from_json(const json& j);

ordered_json colored_graph_to_json(const ColoredGraph& g);

template <VertexLabel V>
ordered_json path_system_to_json(const PathSystem<V>& s) {
  ordered_json paths = ordered_json::array();
  for (const auto& p : s.paths) {
    ordered_json seq = ordered_json::array();
    for (const auto& x : p.vertices()) seq.push_back(to_label(x));
    paths.push_back(std::move(seq));
  }
  ordered_json out;
  out["u"] = to_label(s.u);
  out["v"] = to_label(s.v);
  out["paths"] = std::move(paths);
  return out;
}

PathSystem<TriadicRational> whirl_path_system_from_json(const json& j);

// {"pair": [a, b], "orderInP": "...", "orderInQ": "..."}.
ordered_json refutation_to_json(const Refutation& r);

// {"level": n, "verified": bool, "branchSets": [[a, b], ...], "fareyOrder": n-2}.
ordered_json assembly_to_json(const Theorem2Assembly& a);

}  // namespace whirl::io
