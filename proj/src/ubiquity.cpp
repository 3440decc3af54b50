#include "whirl/ubiquity.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace whirl {

int minimal_containment_level(const WhirlPath& p) {
  if (p.edge_count() == 0) throw PreconditionError("path has no edges");
  int level = 0;
  for (const auto& e : p.edges()) level = std::max(level, edge_level(e));
  return level;
}

std::optional<ZigzagWitness> zigzag_window(const WhirlPath& p) {
  const int m = minimal_containment_level(p);
  for (const auto& e : p.edges()) {
    if (edge_level(e) != m) continue;
    const std::int64_t block = e.first.scaled_to(m) / 3;
    std::vector<TriadicRational> zig{TriadicRational::make(3 * block, m), TriadicRational::make(3 * block + 2, m),
                                     TriadicRational::make(3 * block + 1, m), TriadicRational::make(3 * block + 3, m)};
    std::vector<TriadicRational> gaz(zig.rbegin(), zig.rend());
    const bool forward = p.contains_run(zig);
    if (forward || p.contains_run(gaz)) {
      ZigzagWitness w;
      w.level = m;
      w.block = block;
      w.x = zig.front();
      w.y = zig.back();
      w.subpath = WhirlPath(std::move(zig));
      w.reversed = !forward;
      return w;
    }
  }
  return std::nullopt;
}

int minimal_separating_level(const TriadicRational& u, const TriadicRational& v) {
  return std::max({u.exponent(), v.exponent(), 1}) + 1;
}

namespace {

void require_simple_whirl_path(const WhirlPath& p, const std::string& name, int min_level) {
  std::set<TriadicRational> seen;
  for (const auto& x : p.vertices()) {
    if (!seen.insert(x).second) throw PreconditionError(name + " repeats vertex " + to_label(x));
  }
  for (const auto& e : p.edges()) {
    if (!is_whirl_edge(e)) {
      throw PreconditionError(name + " uses non-whirl edge {" + to_label(e.first) + ", " + to_label(e.second) + "}");
    }
    if (edge_level(e) < min_level) {
      throw PreconditionError(name + " must lie in G_{>=" + std::to_string(min_level) + "}, but uses edge {" +
                              to_label(e.first) + ", " + to_label(e.second) + "}");
    }
  }
}

}  // namespace

std::optional<Refutation> refute_compatibility(const WhirlPath& p, const WhirlPath& q, std::optional<int> n) {
  const TriadicRational& u = p.front();
  const TriadicRational& v = p.back();
  if (!(q.front() == u) || !(q.back() == v)) throw PreconditionError("P and Q must share oriented endpoints u, v");
  if (!(u < v)) throw PreconditionError("u < v required");
  const int level_n = n.value_or(minimal_separating_level(u, v));
  if (level_n <= 1) throw PreconditionError("N > 1 required");
  if (u.exponent() > level_n - 1 || v.exponent() > level_n - 1) throw PreconditionError("u, v must lie in V_{N-1}");
  require_simple_whirl_path(p, "P", level_n);
  const int m = minimal_containment_level(p);
  require_simple_whirl_path(q, "Q", m + 1);

  const auto witness = zigzag_window(p);
  if (!witness) return std::nullopt;
  const auto& zig = witness->subpath.vertices();
  std::vector<TriadicRational> sorted = zig;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const auto pa = p.position(sorted[i]), pb = p.position(sorted[j]);
      const auto qa = q.position(sorted[i]), qb = q.position(sorted[j]);
      if (!qa || !qb) continue;
      if ((*pa < *pb) != (*qa < *qb)) return Refutation{sorted[i], sorted[j], *pa < *pb};
    }
  }
  return std::nullopt;
}

SearchOutcome enumerate_paths(const WhirlGraph& g, const TriadicRational& u, const TriadicRational& v,
                              std::optional<std::size_t> max_edges, std::uint64_t budget,
                              const std::function<bool(const WhirlPath&)>& visit) {
  SearchOutcome out;
  const auto s = g.index_of(u);
  const auto t = g.index_of(v);
  if (!s || !t) return out;
  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<int> path{*s};
  std::vector<std::size_t> cursor{0};
  on_path[static_cast<std::size_t>(*s)] = 1;
  out.expansions = 1;
  if (*s == *t) {
    if (!visit(WhirlPath({u}))) out.status = SearchStatus::kStopped;
    return out;
  }
  while (!path.empty()) {
    const int x = path.back();
    auto& next = cursor.back();
    const auto nbrs = g.neighbors(x);
    const bool may_extend = !max_edges || path.size() - 1 < *max_edges;
    if (!may_extend || next == nbrs.size()) {
      on_path[static_cast<std::size_t>(x)] = 0;
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    const int w = nbrs[next++];
    if (on_path[static_cast<std::size_t>(w)]) continue;
    if (++out.expansions > budget) {
      out.status = SearchStatus::kBudgetExceeded;
      return out;
    }
    if (w == *t) {
      std::vector<TriadicRational> labels;
      labels.reserve(path.size() + 1);
      for (int i : path) labels.push_back(g.label(i));
      labels.push_back(g.label(w));
      if (!visit(WhirlPath(std::move(labels)))) {
        out.status = SearchStatus::kStopped;
        return out;
      }
      continue;
    }
    on_path[static_cast<std::size_t>(w)] = 1;
    path.push_back(w);
    cursor.push_back(0);
  }
  return out;
}

bool exists_compatible_bruteforce(const WhirlPath& p, const LevelWindow& w, std::uint64_t budget) {
  const WhirlGraph g = whirl_graph(w);
  bool found = false;
  const auto outcome = enumerate_paths(g, p.front(), p.back(), std::nullopt, budget, [&](const WhirlPath& q) {
    found = order_compatible(p, q);
    return !found;
  });
  if (outcome.status == SearchStatus::kBudgetExceeded) {
    throw BudgetExceeded("path enumeration exceeded " + std::to_string(budget) + " node expansions");
  }
  return found;
}

std::optional<WhirlPath> random_path(const WhirlGraph& g, const TriadicRational& u, const TriadicRational& v,
                                     std::mt19937_64& rng) {
  const int s = g.require_index(u);
  const int t = g.require_index(v);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> path{s};
  std::vector<std::vector<int>> order;
  auto shuffled = [&](int x) {
    const auto nbrs = g.neighbors(x);
    std::vector<int> o(nbrs.begin(), nbrs.end());
    for (std::size_t i = o.size(); i > 1; --i) std::swap(o[i - 1], o[static_cast<std::size_t>(rng() % i)]);
    return o;
  };
  seen[static_cast<std::size_t>(s)] = 1;
  order.push_back(shuffled(s));
  while (!path.empty() && path.back() != t) {
    auto& o = order.back();
    if (o.empty()) {
      path.pop_back();
      order.pop_back();
      continue;
    }
    const int w = o.back();
    o.pop_back();
    if (seen[static_cast<std::size_t>(w)]) continue;
    seen[static_cast<std::size_t>(w)] = 1;
    path.push_back(w);
    order.push_back(shuffled(w));
  }
  if (path.empty()) return std::nullopt;
  std::vector<TriadicRational> labels;
  for (int i : path) labels.push_back(g.label(i));
  return WhirlPath(std::move(labels));
}

namespace {

void require_complete(const SearchOutcome& o, std::uint64_t budget) {
  if (o.status == SearchStatus::kBudgetExceeded) {
    throw BudgetExceeded("path enumeration exceeded " + std::to_string(budget) + " node expansions");
  }
}

}  // namespace

IncompatibilitySweep sweep_incompatibility(const TriadicRational& u, const TriadicRational& v,
                                           const LevelWindow& p_window, std::size_t max_edges, std::uint64_t budget) {
  IncompatibilitySweep sweep;
  const WhirlGraph host = whirl_graph(p_window);
  std::vector<WhirlPath> ps;
  require_complete(enumerate_paths(host, u, v, max_edges, budget, [&](const WhirlPath& p) {
                     ps.push_back(p);
                     return true;
                   }),
                   budget);
  for (const auto& p : ps) {
    ++sweep.paths;
    const int m = minimal_containment_level(p);
    if (zigzag_window(p)) {
      ++sweep.witnesses;
    } else {
      sweep.failures.push_back("no zigzag witness in " + to_label(p));
    }
    const auto q_window = LevelWindow::make(m + 1, m + 1);
    const WhirlGraph q_host = whirl_graph(q_window);
    require_complete(enumerate_paths(q_host, u, v, std::nullopt, budget,
                                     [&](const WhirlPath& q) {
                                       ++sweep.comparisons;
                                       const auto r = refute_compatibility(p, q, p_window.low);
                                       if (r && order_compatible(p, q) == false) {
                                         ++sweep.refutations;
                                       } else {
                                         sweep.failures.push_back("no refutation of " + to_label(p) + " against " +
                                                                  to_label(q));
                                       }
                                       return true;
                                     }),
                     budget);
    if (!exists_compatible_bruteforce(p, q_window, budget)) {
      ++sweep.oracle_negatives;
    } else {
      sweep.failures.push_back("brute force found a compatible path for " + to_label(p));
    }
  }
  return sweep;
}

ContainmentSweep sweep_lemma22(int n, const LevelWindow& window, std::size_t max_edges, std::uint64_t budget) {
  if (window.low < n) throw PreconditionError("window must lie in G_{>=n}");
  ContainmentSweep sweep;
  const WhirlGraph g = whirl_graph(window);
  const auto coarse = level_vertices(n - 1);
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    for (std::size_t j = i + 1; j < coarse.size(); ++j) {
      ++sweep.pairs;
      require_complete(enumerate_paths(g, coarse[i], coarse[j], max_edges, budget,
                                       [&](const WhirlPath& p) {
                                         ++sweep.paths;
                                         const auto report = check_lemma22(p, coarse[i], coarse[j], n);
                                         if (!report.all_hold()) sweep.failures.push_back(to_label(p));
                                         return true;
                                       }),
                       budget);
    }
  }
  return sweep;
}

}  // namespace whirl
