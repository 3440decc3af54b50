#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>

#include "whirl/error.hpp"
#include "whirl/pathsys.hpp"

namespace whirl::flow {

namespace {

// Flow on an undirected edge {a, b}, a < b: +1 means a -> b, -1 means b -> a.
class UnitFlow {
 public:
  UnitFlow(const Adjacency& adj, int s, int t) : adj_(adj), s_(s), t_(t) {
    const int n = static_cast<int>(adj.size());
    if (s < 0 || t < 0 || s >= n || t >= n || s == t) throw VertexError("invalid flow endpoints");
    incident_.resize(adj.size());
    for (int a = 0; a < n; ++a) {
      for (int b : adj[static_cast<std::size_t>(a)]) {
        if (a < b) {
          const int id = static_cast<int>(flow_.size());
          flow_.push_back(0);
          incident_[static_cast<std::size_t>(a)].push_back({b, id});
          incident_[static_cast<std::size_t>(b)].push_back({a, id});
        }
      }
    }
  }

  struct Arc {
    int to;
    int edge;
  };

  int size() const { return static_cast<int>(adj_.size()); }
  const std::vector<Arc>& arcs(int v) const { return incident_[static_cast<std::size_t>(v)]; }

  // Flow currently sent from `from` along arc.
  int sent(int from, const Arc& arc) const {
    const int f = flow_[static_cast<std::size_t>(arc.edge)];
    return from < arc.to ? f : -f;
  }
  bool residual(int from, const Arc& arc) const { return sent(from, arc) < 1; }
  // +1 for occupying a free edge, -1 for cancelling reverse flow.
  int cost(int from, const Arc& arc) const { return sent(from, arc) == 0 ? 1 : -1; }
  void push(int from, const Arc& arc) { flow_[static_cast<std::size_t>(arc.edge)] += from < arc.to ? 1 : -1; }

  // Augment along a parent chain ending at t.
  void augment(const std::vector<int>& parent_vertex, const std::vector<int>& parent_arc) {
    for (int v = t_; v != s_;) {
      const int from = parent_vertex[static_cast<std::size_t>(v)];
      push(from, arcs(from)[static_cast<std::size_t>(parent_arc[static_cast<std::size_t>(v)])]);
      v = from;
    }
  }

  // Split the flow into `k` s–t paths, dropping circulations. `pick` chooses
  // among the admissible out-arcs of a vertex (indices into arcs(v)).
  template <typename Pick>
  std::vector<IndexPath> decompose(int k, Pick pick) {
    std::vector<IndexPath> paths;
    for (int round = 0; round < k; ++round) {
      IndexPath walk{s_};
      std::vector<int> on_walk(adj_.size(), -1);
      on_walk[static_cast<std::size_t>(s_)] = 0;
      while (walk.back() != t_) {
        const int v = walk.back();
        std::vector<int> admissible;
        const auto& out = arcs(v);
        for (std::size_t i = 0; i < out.size(); ++i) {
          if (sent(v, out[i]) == 1) admissible.push_back(static_cast<int>(i));
        }
        if (admissible.empty()) throw StructureError("flow decomposition stalled");
        const Arc arc = out[static_cast<std::size_t>(pick(admissible))];
        flow_[static_cast<std::size_t>(arc.edge)] = 0;
        const int w = arc.to;
        if (const int at = on_walk[static_cast<std::size_t>(w)]; at >= 0) {
          // Closed a circulation: discard it.
          for (std::size_t i = static_cast<std::size_t>(at) + 1; i < walk.size(); ++i) {
            on_walk[static_cast<std::size_t>(walk[i])] = -1;
          }
          walk.resize(static_cast<std::size_t>(at) + 1);
        } else {
          on_walk[static_cast<std::size_t>(w)] = static_cast<int>(walk.size());
          walk.push_back(w);
        }
      }
      paths.push_back(std::move(walk));
    }
    return paths;
  }

  int source() const { return s_; }
  int sink() const { return t_; }

 private:
  const Adjacency& adj_;
  int s_;
  int t_;
  std::vector<std::vector<Arc>> incident_;
  std::vector<int> flow_;
};

// Arcs are stored in ascending neighbour order, so the first admissible arc
// leads to the smallest label.
int smallest_target(const std::vector<int>& admissible) { return admissible.front(); }

bool bfs_augment(UnitFlow& f) {
  const auto n = static_cast<std::size_t>(f.size());
  std::vector<int> parent(n, -1), parent_arc(n, -1);
  std::vector<char> seen(n, 0);
  std::deque<int> queue{f.source()};
  seen[static_cast<std::size_t>(f.source())] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const auto& out = f.arcs(v);
    for (std::size_t i = 0; i < out.size(); ++i) {
      const int w = out[i].to;
      if (seen[static_cast<std::size_t>(w)] || !f.residual(v, out[i])) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      parent[static_cast<std::size_t>(w)] = v;
      parent_arc[static_cast<std::size_t>(w)] = static_cast<int>(i);
      if (w == f.sink()) {
        f.augment(parent, parent_arc);
        return true;
      }
      queue.push_back(w);
    }
  }
  return false;
}

}  // namespace

std::vector<IndexPath> max_disjoint_paths(const Adjacency& adj, int s, int t) {
  UnitFlow f(adj, s, t);
  int value = 0;
  while (bfs_augment(f)) ++value;
  return f.decompose(value, smallest_target);
}

std::vector<IndexPath> min_total_paths(const Adjacency& adj, int s, int t, int k) {
  if (k < 0) throw InfeasibleError("negative path count");
  UnitFlow f(adj, s, t);
  const auto n = static_cast<std::size_t>(f.size());
  constexpr int kInf = std::numeric_limits<int>::max();
  for (int round = 0; round < k; ++round) {
    // Bellman-Ford on the residual network; it has no negative cycles while
    // the current flow is cost-minimal for its value.
    std::vector<int> dist(n, kInf), parent(n, -1), parent_arc(n, -1);
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t pass = 0; pass < n; ++pass) {
      bool relaxed = false;
      for (int v = 0; v < f.size(); ++v) {
        if (dist[static_cast<std::size_t>(v)] == kInf) continue;
        const auto& out = f.arcs(v);
        for (std::size_t i = 0; i < out.size(); ++i) {
          if (!f.residual(v, out[i])) continue;
          const int w = out[i].to;
          const int d = dist[static_cast<std::size_t>(v)] + f.cost(v, out[i]);
          if (d < dist[static_cast<std::size_t>(w)]) {
            dist[static_cast<std::size_t>(w)] = d;
            parent[static_cast<std::size_t>(w)] = v;
            parent_arc[static_cast<std::size_t>(w)] = static_cast<int>(i);
            relaxed = true;
          }
        }
      }
      if (!relaxed) break;
    }
    if (dist[static_cast<std::size_t>(t)] == kInf) {
      throw InfeasibleError("only " + std::to_string(round) + " edge-disjoint paths exist, " + std::to_string(k) +
                            " requested");
    }
    f.augment(parent, parent_arc);
  }
  return f.decompose(k, smallest_target);
}

std::vector<IndexPath> random_disjoint_paths(const Adjacency& adj, int s, int t, int k, std::mt19937_64& rng) {
  if (k < 0) throw InfeasibleError("negative path count");
  UnitFlow f(adj, s, t);
  const auto n = static_cast<std::size_t>(f.size());
  auto draw = [&rng](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
  for (int round = 0; round < k; ++round) {
    std::vector<int> parent(n, -1), parent_arc(n, -1);
    std::vector<char> seen(n, 0);
    // Iterative DFS with a shuffled arc order per vertex.
    std::vector<std::vector<int>> order(n);
    std::vector<std::size_t> next(n, 0);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    auto prepare = [&](int v) {
      auto& o = order[static_cast<std::size_t>(v)];
      o.resize(f.arcs(v).size());
      std::iota(o.begin(), o.end(), 0);
      for (std::size_t i = o.size(); i > 1; --i) std::swap(o[i - 1], o[draw(i)]);
    };
    prepare(s);
    bool found = false;
    while (!stack.empty() && !found) {
      const int v = stack.back();
      auto& idx = next[static_cast<std::size_t>(v)];
      const auto& o = order[static_cast<std::size_t>(v)];
      if (idx == o.size()) {
        stack.pop_back();
        continue;
      }
      const int arc_index = o[idx++];
      const auto& arc = f.arcs(v)[static_cast<std::size_t>(arc_index)];
      const int w = arc.to;
      if (seen[static_cast<std::size_t>(w)] || !f.residual(v, arc)) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      parent[static_cast<std::size_t>(w)] = v;
      parent_arc[static_cast<std::size_t>(w)] = arc_index;
      if (w == t) {
        found = true;
        break;
      }
      prepare(w);
      stack.push_back(w);
    }
    if (!found) {
      throw InfeasibleError("only " + std::to_string(round) + " edge-disjoint paths exist, " + std::to_string(k) +
                            " requested");
    }
    f.augment(parent, parent_arc);
  }
  return f.decompose(k, [&](const std::vector<int>& a) { return a[draw(a.size())]; });
}

int brute_force_min_cut(const Adjacency& adj, int s, int t) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < static_cast<int>(adj.size()); ++a) {
    for (int b : adj[static_cast<std::size_t>(a)]) {
      if (a < b) edges.emplace_back(a, b);
    }
  }
  if (edges.size() > 20) throw RangeError("brute-force cut limited to 20 edges");
  const std::uint32_t subsets = 1u << edges.size();
  int best = static_cast<int>(edges.size());
  for (std::uint32_t cut = 0; cut < subsets; ++cut) {
    const int size = std::popcount(cut);
    if (size >= best) continue;
    // Union-find over the surviving edges.
    std::vector<int> root(adj.size());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&root](int x) {
      while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)];
      return x;
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (cut & (1u << i)) continue;
      root[static_cast<std::size_t>(find(edges[i].first))] = find(edges[i].second);
    }
    if (find(s) != find(t)) best = size;
  }
  return best;
}

IndexPath bfs_shortest_path(const Adjacency& adj, int s, int t) {
  std::vector<int> parent(adj.size(), -1);
  std::vector<char> seen(adj.size(), 0);
  std::deque<int> queue{s};
  seen[static_cast<std::size_t>(s)] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == t) break;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      parent[static_cast<std::size_t>(w)] = v;
      queue.push_back(w);
    }
  }
  if (!seen[static_cast<std::size_t>(t)]) return {};
  IndexPath path;
  for (int v = t; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace whirl::flow
