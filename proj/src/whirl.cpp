#include "whirl/whirl.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "whirl/checked.hpp"

namespace whirl {

LevelWindow LevelWindow::make(int low, int high) {
  if (low < 1 || high < low || high > kMaxWhirlLevel) {
    throw RangeError("invalid level window [" + std::to_string(low) + ", " + std::to_string(high) + "]");
  }
  return {low, high};
}

std::vector<TriadicRational> level_vertices(int n) {
  if (n < 0 || n > kMaxWhirlLevel) throw RangeError("level out of range: " + std::to_string(n));
  const std::int64_t denom = checked::pow3(n);
  std::vector<TriadicRational> out;
  out.reserve(static_cast<std::size_t>(denom + 1));
  for (std::int64_t k = 0; k <= denom; ++k) out.push_back(TriadicRational::make(k, n));
  return out;
}

std::vector<TriadicRational> level_vertices_between(int n, const TriadicRational& lo, const TriadicRational& hi) {
  std::vector<TriadicRational> out;
  for (auto& x : level_vertices(n)) {
    if (lo <= x && x <= hi) out.push_back(x);
  }
  return out;
}

std::vector<WhirlEdge> level_edges(int n) {
  if (n < 1 || n > kMaxWhirlLevel) throw RangeError("edge level out of range: " + std::to_string(n));
  const std::int64_t blocks = checked::pow3(n - 1);
  auto at = [n](std::int64_t k) { return TriadicRational::make(k, n); };
  std::vector<WhirlEdge> out;
  out.reserve(static_cast<std::size_t>(3 * blocks));
  for (std::int64_t k = 0; k < blocks; ++k) {
    out.emplace_back(at(3 * k), at(3 * k + 2));
    out.emplace_back(at(3 * k + 1), at(3 * k + 2));
    out.emplace_back(at(3 * k + 1), at(3 * k + 3));
  }
  return out;
}

WhirlGraph whirl_graph(const LevelWindow& w) {
  const auto window = LevelWindow::make(w.low, w.high);
  std::vector<WhirlEdge> edges;
  for (int n = window.low; n <= window.high; ++n) {
    auto level = level_edges(n);
    edges.insert(edges.end(), level.begin(), level.end());
  }
  return WhirlGraph(level_vertices(window.high), edges);
}

WhirlGraph level_graph(int n) { return whirl_graph(LevelWindow::make(n, n)); }

WhirlPath hamilton_path(int n) {
  const WhirlGraph g = level_graph(n);
  const int start = g.require_index(TriadicRational::zero());
  const int finish = g.require_index(TriadicRational::one());
  for (int i = 0; i < static_cast<int>(g.vertex_count()); ++i) {
    const std::size_t expected = (i == start || i == finish) ? 1 : 2;
    if (g.neighbors(i).size() != expected) {
      throw StructureError("level graph " + std::to_string(n) + " has unexpected degree at " + to_label(g.label(i)));
    }
  }
  std::vector<TriadicRational> walk{g.label(start)};
  int prev = -1;
  int cur = start;
  while (cur != finish) {
    const auto nbrs = g.neighbors(cur);
    const int next = nbrs[0] != prev ? nbrs[0] : nbrs[1];
    prev = cur;
    cur = next;
    walk.push_back(g.label(cur));
  }
  if (walk.size() != g.vertex_count()) throw StructureError("level graph is not connected");
  return WhirlPath(std::move(walk));
}

namespace {

// The level of e if it matches one of the three block templates.
std::optional<int> match_level(const WhirlEdge& e) {
  const int n = std::max(e.first.exponent(), e.second.exponent());
  if (n < 1) return std::nullopt;
  const std::int64_t a = e.first.scaled_to(n);
  const std::int64_t b = e.second.scaled_to(n);
  const std::int64_t base = a - a % 3;
  const std::int64_t ra = a - base;
  const std::int64_t rb = b - base;
  const bool ok = (ra == 0 && rb == 2) || (ra == 1 && rb == 2) || (ra == 1 && rb == 3);
  if (!ok) return std::nullopt;
  return n;
}

}  // namespace

int edge_level(const WhirlEdge& e) {
  if (auto n = match_level(e)) return *n;
  throw NotAnEdgeError("not a whirl edge: {" + to_label(e.first) + ", " + to_label(e.second) + "}");
}

bool is_whirl_edge(const WhirlEdge& e) { return match_level(e).has_value(); }

Lemma22Report check_lemma22(const WhirlPath& p, const TriadicRational& u, const TriadicRational& v, int n) {
  if (n <= 1) throw PreconditionError("n > 1 required");
  if (!(u < v)) throw PreconditionError("u < v required");
  if (u.exponent() > n - 1 || v.exponent() > n - 1) throw PreconditionError("u, v must lie in V_{n-1}");
  if (!(p.front() == u) || !(p.back() == v)) throw PreconditionError("P must run from u to v");
  std::set<TriadicRational> seen;
  for (const auto& x : p.vertices()) {
    if (!seen.insert(x).second) throw PreconditionError("P repeats vertex " + to_label(x));
  }
  for (const auto& e : p.edges()) {
    const auto level = match_level(e);
    if (!level) throw PreconditionError("P uses non-whirl edge {" + to_label(e.first) + ", " + to_label(e.second) + "}");
    if (*level < n) {
      throw PreconditionError("P uses edge {" + to_label(e.first) + ", " + to_label(e.second) + "} of level " +
                              std::to_string(*level) + " < n");
    }
  }

  Lemma22Report report;
  const auto coarse = level_vertices_between(n - 1, u, v);
  for (const auto& x : coarse) {
    if (!seen.contains(x)) {
      report.lower_containment = {false, {x}};
      break;
    }
  }
  for (const auto& x : p.vertices()) {
    if (x < u || v < x) {
      report.upper_containment = {false, {x}};
      break;
    }
  }
  const std::set<TriadicRational> coarse_set(coarse.begin(), coarse.end());
  std::optional<TriadicRational> last;
  for (const auto& x : p.vertices()) {
    if (!coarse_set.contains(x)) continue;
    if (last && x < *last) {
      report.natural_order = {false, {*last, x}};
      break;
    }
    last = x;
  }
  return report;
}

CutvertexSplit cutvertex_split(const TriadicRational& x, const LevelWindow& w) {
  const auto window = LevelWindow::make(w.low, w.high);
  if (window.low <= 1) throw DomainError("cut-vertex split needs window.low > 1");
  if (x.exponent() > window.low - 1 || x == TriadicRational::zero() || x == TriadicRational::one()) {
    throw DomainError("vertex " + to_label(x) + " is not in V_{low-1} \\ {0, 1}");
  }
  const WhirlGraph g = whirl_graph(window);
  auto comps = components_without(g, {x});
  if (comps.size() != 2) {
    throw StructureError("deleting " + to_label(x) + " leaves " + std::to_string(comps.size()) + " components");
  }
  return {std::move(comps[0]), std::move(comps[1])};
}

std::string to_dot(const WhirlGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [shape=point];\n";
  const auto width = static_cast<double>(std::max<std::size_t>(g.vertex_count(), 2) - 1);
  for (const auto& v : g.vertices()) {
    const double value = static_cast<double>(v.numerator()) / static_cast<double>(checked::pow3(v.exponent()));
    out << "  \"" << to_label(v) << "\" [pos=\"" << std::fixed << std::setprecision(3) << value * width << ","
        << -v.exponent() << "!\"];\n";
  }
  for (const auto& e : g.edges()) out << "  \"" << to_label(e.first) << "\" -- \"" << to_label(e.second) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace whirl
