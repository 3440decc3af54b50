#include "whirl/json_io.hpp"

namespace whirl::io {

namespace {

template <typename V, typename Parse>
Graph<V> graph_from_json(const json& j, Parse parse) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j["vertices"].is_array() ||
      !j["edges"].is_array()) {
    throw ParseError("graph JSON needs array fields \"vertices\" and \"edges\"");
  }
  std::vector<V> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex labels must be strings");
    vertices.push_back(parse(v.template get<std::string>()));
  }
  const std::size_t declared = vertices.size();
  std::vector<Edge<V>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw ParseError("edges must be pairs of strings");
    }
    edges.emplace_back(parse(e[0].template get<std::string>()), parse(e[1].template get<std::string>()));
  }
  Graph<V> g(std::move(vertices), edges);
  if (g.vertex_count() != declared) throw ParseError("duplicate vertex labels");
  return g;
}

}  // namespace

WhirlGraph whirl_graph_from_json(const json& j) {
  return graph_from_json<TriadicRational>(j, [](const std::string& s) { return parse_triadic(s); });
}

FareyGraph farey_graph_from_json(const json& j) {
  return graph_from_json<Fraction>(j, [](const std::string& s) { return parse_fraction(s); });
}

ordered_json colored_graph_to_json(const ColoredGraph& g) {
  ordered_json out = graph_to_json(g.graph);
  ordered_json blue = ordered_json::array();
  for (const auto& e : g.blue) blue.push_back({to_label(e.first), to_label(e.second)});
  out["blue"] = std::move(blue);
  return out;
}

PathSystem<TriadicRational> whirl_path_system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("u") || !j.contains("v") || !j.contains("paths") || !j["paths"].is_array()) {
    throw ParseError("path system JSON needs \"u\", \"v\" and \"paths\"");
  }
  if (!j["u"].is_string() || !j["v"].is_string()) throw ParseError("endpoints must be strings");
  PathSystem<TriadicRational> s{parse_triadic(j["u"].get<std::string>()), parse_triadic(j["v"].get<std::string>()), {}};
  for (const auto& p : j["paths"]) {
    if (!p.is_array() || p.empty()) throw ParseError("each path is a non-empty array of labels");
    std::vector<TriadicRational> seq;
    for (const auto& x : p) {
      if (!x.is_string()) throw ParseError("path vertices must be strings");
      seq.push_back(parse_triadic(x.get<std::string>()));
    }
    s.paths.emplace_back(std::move(seq));
  }
  return s;
}

ordered_json refutation_to_json(const Refutation& r) {
  const std::string a = to_label(r.first);
  const std::string b = to_label(r.second);
  const std::string ab = a + " before " + b;
  const std::string ba = b + " before " + a;
  ordered_json out;
  out["pair"] = {a, b};
  out["orderInP"] = r.first_before_second_in_p ? ab : ba;
  out["orderInQ"] = r.first_before_second_in_p ? ba : ab;
  return out;
}

ordered_json assembly_to_json(const Theorem2Assembly& a) {
  ordered_json branch = ordered_json::array();
  for (const auto& b : a.minor.graph.vertices()) {
    ordered_json members = ordered_json::array();
    for (const auto& m : b.members) members.push_back(to_label(m));
    branch.push_back(std::move(members));
  }
  ordered_json out;
  out["level"] = a.level;
  out["verified"] = a.verified();
  out["branchSets"] = std::move(branch);
  out["fareyOrder"] = a.level - 2;
  return out;
}

}  // namespace whirl::io
