#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "whirl/graph.hpp"

namespace whirl {

// An oriented vertex sequence. Validity against a host graph is checked by
// is_path_in(); the sequence itself only promises to be non-empty.
template <VertexLabel V>
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<V> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw GraphError("a path has at least one vertex");
  }

  const std::vector<V>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t edge_count() const { return vertices_.empty() ? 0 : vertices_.size() - 1; }
  const V& front() const { return vertices_.front(); }
  const V& back() const { return vertices_.back(); }
  const V& operator[](std::size_t i) const { return vertices_[i]; }

  std::vector<Edge<V>> edges() const {
    std::vector<Edge<V>> out;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) out.emplace_back(vertices_[i], vertices_[i + 1]);
    return out;
  }

  Path reversed() const { return Path(std::vector<V>(vertices_.rbegin(), vertices_.rend())); }

  // Position of v along the path, if present.
  std::optional<std::size_t> position(const V& v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  bool contains(const V& v) const { return position(v).has_value(); }

  // True iff `sub` occurs as a contiguous run of this path, in its own order.
  bool contains_run(const std::vector<V>& sub) const {
    return std::search(vertices_.begin(), vertices_.end(), sub.begin(), sub.end()) != vertices_.end();
  }

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<V> vertices_;
};

template <VertexLabel V>
std::string to_label(const Path<V>& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += to_label(p[i]);
  }
  return out + ")";
}

// Consecutive vertices adjacent in `host`, and no vertex repeated.
template <VertexLabel V>
bool is_path_in(const Path<V>& p, const Graph<V>& host) {
  std::set<V> seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!host.has_vertex(p[i]) || !seen.insert(p[i]).second) return false;
    if (i > 0 && !host.has_edge(p[i - 1], p[i])) return false;
  }
  return p.size() > 0;
}

// A pair of common vertices traversed in opposite orders: `first` comes
// before `second` on P, and after it on Q.
template <VertexLabel V>
struct OrderConflict {
  V first;
  V second;
};

// First conflicting pair among common vertices, scanning pairs (x, y) with
// x < y in label order. Does not check endpoints.
template <VertexLabel V>
std::optional<OrderConflict<V>> find_order_conflict(const Path<V>& p, const Path<V>& q) {
  std::map<V, std::pair<std::size_t, std::size_t>> common;
  std::map<V, std::size_t> in_q;
  for (std::size_t i = 0; i < q.size(); ++i) in_q.emplace(q[i], i);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (auto it = in_q.find(p[i]); it != in_q.end()) common.emplace(p[i], std::make_pair(i, it->second));
  }
  for (auto a = common.begin(); a != common.end(); ++a) {
    for (auto b = std::next(a); b != common.end(); ++b) {
      const bool p_ab = a->second.first < b->second.first;
      const bool q_ab = a->second.second < b->second.second;
      if (p_ab != q_ab) {
        if (p_ab) return OrderConflict<V>{a->first, b->first};
        return OrderConflict<V>{b->first, a->first};
      }
    }
  }
  return std::nullopt;
}

// True iff P and Q traverse their common vertices in the same order. Both
// must run between the same endpoints with the same orientation; otherwise
// OrientationError.
template <VertexLabel V>
bool order_compatible(const Path<V>& p, const Path<V>& q) {
  if (!(p.front() == q.front()) || !(p.back() == q.back())) {
    throw OrientationError("paths " + to_label(p) + " and " + to_label(q) + " do not share oriented endpoints");
  }
  // Common vertices listed in P-order must appear in increasing Q-position.
  std::map<V, std::size_t> in_q;
  for (std::size_t i = 0; i < q.size(); ++i) in_q.emplace(q[i], i);
  std::optional<std::size_t> last;
  for (const auto& x : p.vertices()) {
    auto it = in_q.find(x);
    if (it == in_q.end()) continue;
    if (last && it->second < *last) return false;
    last = it->second;
  }
  return true;
}

// Paths sharing source u and sink v. Validity is a separate check
// (validate_system) so that invalid systems remain representable.
template <VertexLabel V>
struct PathSystem {
  V u;
  V v;
  std::vector<Path<V>> paths;

  std::size_t size() const { return paths.size(); }
  std::size_t total_edges() const {
    std::size_t n = 0;
    for (const auto& p : paths) n += p.edge_count();
    return n;
  }

  friend bool operator==(const PathSystem&, const PathSystem&) = default;
};

}  // namespace whirl
