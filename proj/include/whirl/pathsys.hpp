#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "whirl/graph.hpp"
#include "whirl/path.hpp"

namespace whirl {

namespace flow {

using Adjacency = std::vector<std::vector<int>>;
using IndexPath = std::vector<int>;

// Unit-capacity flow on an undirected simple graph given by sorted adjacency
// lists. Every undirected edge carries flow in at most one direction, so a
// flow of value k decomposes into k edge-disjoint s–t paths.
//
// Maximum number of edge-disjoint s–t paths (shortest augmenting paths),
// decomposed by following the smallest admissible out-neighbour.
std::vector<IndexPath> max_disjoint_paths(const Adjacency& adj, int s, int t);

// k edge-disjoint s–t paths of minimum total length: successive shortest
// paths with unit costs. Throws InfeasibleError if fewer than k exist.
std::vector<IndexPath> min_total_paths(const Adjacency& adj, int s, int t, int k);

// k edge-disjoint s–t paths found by depth-first augmentation in random
// neighbour order; typically far from edge-minimal. Throws InfeasibleError.
std::vector<IndexPath> random_disjoint_paths(const Adjacency& adj, int s, int t, int k, std::mt19937_64& rng);

// Size of a minimum s–t edge cut by enumerating every edge subset. Only for
// graphs with at most 20 edges; independent of the flow code.
int brute_force_min_cut(const Adjacency& adj, int s, int t);

// Shortest s–t path in `adj` by breadth-first search, exploring neighbours in
// ascending order. Empty if t is unreachable.
IndexPath bfs_shortest_path(const Adjacency& adj, int s, int t);

}  // namespace flow

namespace detail {

template <VertexLabel V>
PathSystem<V> to_system(const Graph<V>& g, const V& u, const V& v, const std::vector<flow::IndexPath>& paths) {
  PathSystem<V> out{u, v, {}};
  for (const auto& ip : paths) {
    std::vector<V> labels;
    labels.reserve(ip.size());
    for (int i : ip) labels.push_back(g.label(i));
    out.paths.emplace_back(std::move(labels));
  }
  return out;
}

template <VertexLabel V>
std::pair<int, int> endpoints(const Graph<V>& g, const V& u, const V& v) {
  const int s = g.require_index(u);
  const int t = g.require_index(v);
  if (s == t) throw VertexError("source and sink coincide at " + std::string(to_label(u)));
  return {s, t};
}

}  // namespace detail

struct SystemReport {
  bool paths_valid = true;
  bool shared_endpoints = true;
  bool edge_disjoint = true;
  bool order_compatible = true;
  std::vector<std::string> problems;

  bool ok() const { return paths_valid && shared_endpoints && edge_disjoint && order_compatible; }
};

namespace detail {

template <VertexLabel V>
SystemReport validate_system_impl(const PathSystem<V>& s, const Graph<V>* host) {
  SystemReport r;
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    const auto& p = s.paths[i];
    if (p.size() == 0) {
      r.paths_valid = false;
      r.problems.push_back("path " + std::to_string(i) + " is empty");
      continue;
    }
    std::set<V> seen(p.vertices().begin(), p.vertices().end());
    const bool simple = seen.size() == p.size();
    const bool in_host = host == nullptr || is_path_in(p, *host);
    if (!simple || !in_host) {
      r.paths_valid = false;
      r.problems.push_back("path " + std::to_string(i) + " is not a path" + (host ? " in the host graph" : ""));
    }
    if (!(p.front() == s.u) || !(p.back() == s.v)) {
      r.shared_endpoints = false;
      r.problems.push_back("path " + std::to_string(i) + " does not run from u to v");
    }
  }
  std::set<Edge<V>> used;
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    for (const auto& e : s.paths[i].edges()) {
      if (!used.insert(e).second) {
        r.edge_disjoint = false;
        r.problems.push_back("edge {" + std::string(to_label(e.first)) + ", " + std::string(to_label(e.second)) +
                             "} used twice");
      }
    }
  }
  if (!r.shared_endpoints) {
    r.order_compatible = false;
    return r;
  }
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    for (std::size_t j = i + 1; j < s.paths.size(); ++j) {
      if (auto c = find_order_conflict(s.paths[i], s.paths[j])) {
        r.order_compatible = false;
        r.problems.push_back("paths " + std::to_string(i) + " and " + std::to_string(j) + " disagree on " +
                             std::string(to_label(c->first)) + ", " + std::string(to_label(c->second)));
      }
    }
  }
  return r;
}

}  // namespace detail

// Checks path validity, shared endpoints, pairwise edge-disjointness and
// pairwise order-compatibility. Never throws; every verdict is reported.
template <VertexLabel V>
SystemReport validate_system(const PathSystem<V>& s) {
  return detail::validate_system_impl<V>(s, nullptr);
}

template <VertexLabel V>
SystemReport validate_system(const PathSystem<V>& s, const Graph<V>& host) {
  return detail::validate_system_impl<V>(s, &host);
}

// A maximum edge-disjoint u–v path system; its size is the local edge
// connectivity (Menger). Throws VertexError if u or v is missing or u == v.
template <VertexLabel V>
PathSystem<V> max_edge_disjoint(const Graph<V>& g, const V& u, const V& v) {
  const auto [s, t] = detail::endpoints(g, u, v);
  return detail::to_system(g, u, v, flow::max_disjoint_paths(g.adjacency(), s, t));
}

// k edge-disjoint u–v paths using as few edges as possible, computed as a
// unit-cost minimum-cost flow. Edge-minimal systems are pairwise
// order-compatible; this is re-checked and a StructureError raised if not.
template <VertexLabel V>
PathSystem<V> min_edge_system(const Graph<V>& g, const V& u, const V& v, int k) {
  const auto [s, t] = detail::endpoints(g, u, v);
  auto system = detail::to_system(g, u, v, flow::min_total_paths(g.adjacency(), s, t, k));
  const auto report = validate_system(system, g);
  if (!report.ok()) throw StructureError("edge-minimal system failed validation: " + report.problems.front());
  return system;
}

// A random valid system of k edge-disjoint u–v paths (for exercising uncross).
template <VertexLabel V>
PathSystem<V> random_edge_disjoint(const Graph<V>& g, const V& u, const V& v, int k, std::mt19937_64& rng) {
  const auto [s, t] = detail::endpoints(g, u, v);
  return detail::to_system(g, u, v, flow::random_disjoint_paths(g.adjacency(), s, t, k, rng));
}

template <VertexLabel V>
struct UncrossStep {
  std::size_t first_path;   // index of P in the system before the step
  std::size_t second_path;  // index of Q
  V x;                      // x before y on P, after y on Q
  V y;
  std::size_t edges_before;
  std::size_t edges_after;
};

template <VertexLabel V>
struct UncrossResult {
  PathSystem<V> system;
  std::vector<UncrossStep<V>> steps;
};

namespace detail {

// Shortest u–v path inside the graph formed by the given edges.
template <VertexLabel V>
Path<V> shortest_path_within(const std::vector<Edge<V>>& edges, const V& u, const V& v) {
  std::vector<V> vertices{u, v};
  for (const auto& e : edges) {
    vertices.push_back(e.first);
    vertices.push_back(e.second);
  }
  std::set<Edge<V>> unique(edges.begin(), edges.end());
  const Graph<V> h(std::move(vertices), {unique.begin(), unique.end()});
  const auto ip = flow::bfs_shortest_path(h.adjacency(), h.require_index(u), h.require_index(v));
  if (ip.empty()) throw StructureError("uncrossing produced a disconnected subgraph");
  std::vector<V> labels;
  for (int i : ip) labels.push_back(h.label(i));
  return Path<V>(std::move(labels));
}

template <VertexLabel V>
std::vector<Edge<V>> segment_edges(const Path<V>& p, std::size_t from, std::size_t to) {
  std::vector<Edge<V>> out;
  for (std::size_t i = from; i < to; ++i) out.emplace_back(p[i], p[i + 1]);
  return out;
}

}  // namespace detail

// Repeatedly replaces an order-incompatible pair P, Q (P visits x before y,
// Q visits y before x) by a shortest u–v path in uPx ∪ xQv and one in
// uQy ∪ yPv. Each step drops the edges of xPy and yQx, so the total edge
// count strictly decreases and the loop terminates. Pairs are scanned as
// (i, j) with i < j, conflicts in label order; the first one found is
// applied. Throws SystemError if S is not a valid edge-disjoint system.
template <VertexLabel V>
UncrossResult<V> uncross(PathSystem<V> s) {
  const auto report = validate_system(s);
  if (!report.paths_valid || !report.shared_endpoints || !report.edge_disjoint) {
    throw SystemError("cannot uncross an invalid path system: " + report.problems.front());
  }
  UncrossResult<V> result;
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < s.paths.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < s.paths.size() && !changed; ++j) {
        const auto conflict = find_order_conflict(s.paths[i], s.paths[j]);
        if (!conflict) continue;
        const Path<V>& p = s.paths[i];
        const Path<V>& q = s.paths[j];
        const V& x = conflict->first;
        const V& y = conflict->second;
        const std::size_t px = *p.position(x), py = *p.position(y);
        const std::size_t qx = *q.position(x), qy = *q.position(y);

        auto first = detail::segment_edges(p, 0, px);
        auto tail_q = detail::segment_edges(q, qx, q.size() - 1);
        first.insert(first.end(), tail_q.begin(), tail_q.end());
        auto second = detail::segment_edges(q, 0, qy);
        auto tail_p = detail::segment_edges(p, py, p.size() - 1);
        second.insert(second.end(), tail_p.begin(), tail_p.end());

        const std::size_t before = s.total_edges();
        Path<V> np = detail::shortest_path_within(first, s.u, s.v);
        Path<V> nq = detail::shortest_path_within(second, s.u, s.v);
        s.paths[i] = std::move(np);
        s.paths[j] = std::move(nq);
        const std::size_t after = s.total_edges();
        result.steps.push_back({i, j, x, y, before, after});
        if (after >= before) throw StructureError("uncrossing step did not reduce the edge count");
        changed = true;
      }
    }
    if (!changed) break;
  }
  result.system = std::move(s);
  return result;
}

}  // namespace whirl
