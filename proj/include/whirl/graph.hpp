#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "whirl/error.hpp"

namespace whirl {

// A vertex label: totally ordered, copyable, and printable through an
// ADL-visible to_label().
template <typename V>
concept VertexLabel = std::totally_ordered<V> && std::copyable<V> && requires(const V& v) {
  { to_label(v) } -> std::convertible_to<std::string>;
};

// Unordered vertex pair, stored with first < second.
template <typename V>
struct Edge {
  V first;
  V second;

  Edge() = default;
  Edge(V a, V b) : first(std::move(a)), second(std::move(b)) {
    if (second < first) std::swap(first, second);
  }

  bool contains(const V& v) const { return first == v || second == v; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge& a, const Edge& b) {
    if (auto c = a.first <=> b.first; c != 0) return c;
    return a.second <=> b.second;
  }
};

// Finite simple undirected graph. Vertices are kept sorted by label so that
// vertex indices agree with the label order; adjacency lists are sorted too.
template <VertexLabel V>
class Graph {
 public:
  using Label = V;

  Graph() = default;

  // Throws GraphError on loops, duplicate edges, or endpoints outside
  // `vertices`. Duplicate vertices are merged.
  Graph(std::vector<V> vertices, const std::vector<Edge<V>>& edges) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    adjacency_.assign(vertices_.size(), {});
    for (const auto& e : edges) {
      if (e.first == e.second) throw GraphError("loop at vertex " + std::string(to_label(e.first)));
      const auto a = index_of(e.first);
      const auto b = index_of(e.second);
      if (!a || !b) {
        throw GraphError("edge " + std::string(to_label(e.first)) + "-" + std::string(to_label(e.second)) +
                         " has an endpoint outside the vertex set");
      }
      adjacency_[*a].push_back(*b);
      adjacency_[*b].push_back(*a);
    }
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) throw GraphError("duplicate edge");
    }
    edge_count_ = edges.size();
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<V>& vertices() const { return vertices_; }
  const V& label(int i) const { return vertices_[static_cast<std::size_t>(i)]; }

  std::optional<int> index_of(const V& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || !(*it == v)) return std::nullopt;
    return static_cast<int>(it - vertices_.begin());
  }

  int require_index(const V& v) const {
    if (auto i = index_of(v)) return *i;
    throw VertexError("vertex " + std::string(to_label(v)) + " not in graph");
  }

  bool has_vertex(const V& v) const { return index_of(v).has_value(); }

  bool has_edge(const V& a, const V& b) const {
    const auto i = index_of(a);
    const auto j = index_of(b);
    return i && j && adjacent(*i, *j);
  }

  bool adjacent(int i, int j) const {
    const auto& nbrs = adjacency_[static_cast<std::size_t>(i)];
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
  }

  std::span<const int> neighbors(int i) const { return adjacency_[static_cast<std::size_t>(i)]; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }

  std::size_t degree(const V& v) const { return neighbors(require_index(v)).size(); }

  // All edges, sorted.
  std::vector<Edge<V>> edges() const {
    std::vector<Edge<V>> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      for (int j : adjacency_[i]) {
        if (static_cast<std::size_t>(j) > i) out.emplace_back(vertices_[i], vertices_[static_cast<std::size_t>(j)]);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<V> vertices_;
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Union of two graphs on the union of their vertex sets; shared edges once.
template <VertexLabel V>
Graph<V> graph_union(const Graph<V>& a, const Graph<V>& b) {
  std::vector<V> vertices = a.vertices();
  vertices.insert(vertices.end(), b.vertices().begin(), b.vertices().end());
  std::vector<Edge<V>> edges = a.edges();
  for (auto& e : b.edges()) {
    if (!a.has_edge(e.first, e.second)) edges.push_back(std::move(e));
  }
  return Graph<V>(std::move(vertices), edges);
}

// True iff every vertex and edge of `sub` is present in `host`.
template <VertexLabel V>
bool is_subgraph(const Graph<V>& sub, const Graph<V>& host) {
  for (const auto& v : sub.vertices()) {
    if (!host.has_vertex(v)) return false;
  }
  for (const auto& e : sub.edges()) {
    if (!host.has_edge(e.first, e.second)) return false;
  }
  return true;
}

template <VertexLabel V>
Graph<V> remove_edges(const Graph<V>& g, const std::vector<Edge<V>>& drop) {
  std::set<Edge<V>> removed(drop.begin(), drop.end());
  std::vector<Edge<V>> kept;
  for (auto& e : g.edges()) {
    if (!removed.contains(e)) kept.push_back(std::move(e));
  }
  return Graph<V>(g.vertices(), kept);
}

// Vertex sets of the components of g - excluded, each sorted; components are
// ordered by their least vertex.
template <VertexLabel V>
std::vector<std::vector<V>> components_without(const Graph<V>& g, const std::set<V>& excluded = {}) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& x : excluded) {
    if (auto i = g.index_of(x)) seen[static_cast<std::size_t>(*i)] = 1;
  }
  std::vector<std::vector<V>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> members{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int w : g.neighbors(members[head])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<V> labels;
    labels.reserve(members.size());
    for (int i : members) labels.push_back(g.label(i));
    out.push_back(std::move(labels));
  }
  return out;
}

// Independent edge set.
template <VertexLabel V>
class Matching {
 public:
  Matching() = default;

  // Throws MatchingError if two edges share an endpoint or an edge is a loop.
  explicit Matching(std::vector<Edge<V>> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    std::set<V> covered;
    for (const auto& e : edges_) {
      if (e.first == e.second) throw MatchingError("loop in matching at " + std::string(to_label(e.first)));
      for (const V& v : {e.first, e.second}) {
        if (!covered.insert(v).second) {
          throw MatchingError("matching edges share endpoint " + std::string(to_label(v)));
        }
      }
    }
  }

  const std::vector<Edge<V>>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  bool covers(const V& v) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge<V>& e) { return e.contains(v); });
  }

 private:
  std::vector<Edge<V>> edges_;
};

template <VertexLabel V>
Matching<V> matching_union(const Matching<V>& a, const Matching<V>& b) {
  std::vector<Edge<V>> edges = a.edges();
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  return Matching<V>(std::move(edges));
}

// The set of original vertices that became one vertex of a contraction minor:
// one vertex for an uncontracted vertex, the two endpoints for a contracted
// edge. Ordered lexicographically on the sorted members, so branch sets from
// disjoint matching edges compare by their least endpoint.
template <VertexLabel V>
struct BranchSet {
  std::vector<V> members;

  std::size_t size() const { return members.size(); }
  const V& least() const { return members.front(); }

  friend bool operator==(const BranchSet&, const BranchSet&) = default;
  friend auto operator<=>(const BranchSet& a, const BranchSet& b) {
    return std::lexicographical_compare_three_way(a.members.begin(), a.members.end(), b.members.begin(),
                                                  b.members.end());
  }
};

// "{a,b}" for a contracted pair, the plain label for a singleton.
template <VertexLabel V>
std::string to_label(const BranchSet<V>& b) {
  if (b.members.size() == 1) return std::string(to_label(b.members.front()));
  std::string out = "{";
  for (std::size_t i = 0; i < b.members.size(); ++i) {
    if (i) out += ",";
    out += to_label(b.members[i]);
  }
  return out + "}";
}

// Map between two vertex sets. Injectivity and totality are checked where the
// map is used (verify_iso, inverse), not on construction, so that broken maps
// can be represented and rejected.
template <VertexLabel A, VertexLabel B>
class VertexMap {
 public:
  VertexMap() = default;
  explicit VertexMap(std::map<A, B> pairs) : pairs_(std::move(pairs)) {}

  void set(const A& a, const B& b) { pairs_[a] = b; }

  const B& at(const A& a) const {
    auto it = pairs_.find(a);
    if (it == pairs_.end()) throw MapError("map undefined at " + std::string(to_label(a)));
    return it->second;
  }

  bool defined_at(const A& a) const { return pairs_.contains(a); }
  std::size_t size() const { return pairs_.size(); }
  const std::map<A, B>& pairs() const { return pairs_; }

  bool injective() const {
    std::set<B> image;
    for (const auto& [a, b] : pairs_) {
      if (!image.insert(b).second) return false;
    }
    return true;
  }

  // Throws MapError if the map is not injective.
  VertexMap<B, A> inverse() const {
    std::map<B, A> inv;
    for (const auto& [a, b] : pairs_) {
      if (!inv.emplace(b, a).second) throw MapError("map is not injective at " + std::string(to_label(b)));
    }
    return VertexMap<B, A>(std::move(inv));
  }

  // True iff this map agrees with `smaller` everywhere `smaller` is defined.
  bool extends(const VertexMap& smaller) const {
    return std::all_of(smaller.pairs_.begin(), smaller.pairs_.end(), [&](const auto& kv) {
      auto it = pairs_.find(kv.first);
      return it != pairs_.end() && it->second == kv.second;
    });
  }

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  std::map<A, B> pairs_;
};

template <VertexLabel V>
struct Contraction {
  Graph<BranchSet<V>> graph;
  VertexMap<V, BranchSet<V>> projection;
};

// G/D: contracts the edges of D that lie in G. Parallel edges collapse and the
// images of contracted edges (loops) disappear. D must already be a Matching.
template <VertexLabel V>
Contraction<V> contract(const Graph<V>& g, const Matching<V>& d) {
  VertexMap<V, BranchSet<V>> projection;
  std::set<V> merged;
  for (const auto& e : d.edges()) {
    if (!g.has_edge(e.first, e.second)) continue;
    BranchSet<V> branch{{e.first, e.second}};
    projection.set(e.first, branch);
    projection.set(e.second, branch);
    merged.insert(e.first);
    merged.insert(e.second);
  }
  for (const auto& v : g.vertices()) {
    if (!merged.contains(v)) projection.set(v, BranchSet<V>{{v}});
  }
  std::vector<BranchSet<V>> vertices;
  for (const auto& [v, b] : projection.pairs()) vertices.push_back(b);
  std::set<Edge<BranchSet<V>>> edges;
  for (const auto& e : g.edges()) {
    const auto& a = projection.at(e.first);
    const auto& b = projection.at(e.second);
    if (!(a == b)) edges.emplace(a, b);
  }
  return {Graph<BranchSet<V>>(std::move(vertices), {edges.begin(), edges.end()}), std::move(projection)};
}

// True iff f is a bijection V(G) -> V(H) preserving adjacency in both
// directions. Throws MapError when f is undefined on some vertex of G or maps
// outside V(H).
template <VertexLabel A, VertexLabel B>
bool verify_iso(const VertexMap<A, B>& f, const Graph<A>& g, const Graph<B>& h) {
  std::vector<int> image(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const auto target = h.index_of(f.at(g.label(static_cast<int>(i))));
    if (!target) throw MapError("map sends " + std::string(to_label(g.label(static_cast<int>(i)))) +
                                " outside the codomain");
    image[i] = *target;
  }
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<char> hit(h.vertex_count(), 0);
  for (int t : image) {
    if (hit[static_cast<std::size_t>(t)]) return false;
    hit[static_cast<std::size_t>(t)] = 1;
  }
  // Equal edge counts plus an injective edge map give the reverse direction.
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (int j : g.neighbors(static_cast<int>(i))) {
      if (!h.adjacent(image[i], image[static_cast<std::size_t>(j)])) return false;
    }
  }
  return true;
}

template <VertexLabel V>
struct SeparationCheck {
  bool is_separation = false;
  std::set<V> separator;
};

// Checks whether {A, B} separates H: A ∪ B = V(H) and no edge runs between
// A \ B and B \ A. Throws CoverageError if A ∪ B ≠ V(H).
template <VertexLabel V>
SeparationCheck<V> is_separation(const Graph<V>& h, const std::set<V>& a, const std::set<V>& b) {
  std::set<V> cover = a;
  cover.insert(b.begin(), b.end());
  if (cover.size() != h.vertex_count() ||
      !std::all_of(cover.begin(), cover.end(), [&](const V& v) { return h.has_vertex(v); })) {
    throw CoverageError("A and B do not cover exactly the vertex set");
  }
  SeparationCheck<V> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out.separator, out.separator.end()));
  out.is_separation = true;
  for (const auto& e : h.edges()) {
    const bool first_only_a = !b.contains(e.first);
    const bool first_only_b = !a.contains(e.first);
    const bool second_only_a = !b.contains(e.second);
    const bool second_only_b = !a.contains(e.second);
    if ((first_only_a && second_only_b) || (first_only_b && second_only_a)) {
      out.is_separation = false;
      break;
    }
  }
  return out;
}

}  // namespace whirl
