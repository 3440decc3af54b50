#include "whirl/farey.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>

#include "whirl/checked.hpp"

namespace whirl {

Fraction Fraction::make(std::int64_t p, std::int64_t q) {
  if (q < 0) throw FractionError("negative denominator in " + std::to_string(p) + "/" + std::to_string(q));
  if (q == 0 && p != 1 && p != -1) throw FractionError("only ±1/0 denote infinity");
  if (std::gcd(p, q) != 1) throw FractionError(std::to_string(p) + "/" + std::to_string(q) + " is not in lowest terms");
  return {p, q};
}

bool operator==(const Fraction& a, const Fraction& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return a.p_ == b.p_ && a.q_ == b.q_;
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return checked::mul(a.p_, b.q_) <=> checked::mul(b.p_, a.q_);
}

Fraction mediant(const Fraction& a, const Fraction& b) {
  return Fraction::make(checked::add(a.p(), b.p()), checked::add(a.q(), b.q()));
}

bool farey_adjacent(const Fraction& a, const Fraction& b) {
  const std::int64_t det = checked::sub(checked::mul(a.p(), b.q()), checked::mul(a.q(), b.p()));
  return det == 1 || det == -1;
}

std::string to_label(const Fraction& f) {
  if (f.is_infinite()) return "1/0";
  return std::to_string(f.p()) + "/" + std::to_string(f.q());
}

Fraction parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ParseError("malformed fraction '" + std::string(text) + "'");
    }
    return v;
  };
  if (slash == std::string_view::npos) throw ParseError("expected p/q, got '" + std::string(text) + "'");
  try {
    return Fraction::make(number(text.substr(0, slash)), number(text.substr(slash + 1)));
  } catch (const FractionError& e) {
    throw ParseError(e.what());
  }
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << to_label(f); }

ColoredGraph halved_farey(int n, const FareySeeds& seeds) {
  if (n < 0 || n > kMaxFareyOrder) throw RangeError("halved Farey order out of range: " + std::to_string(n));
  if (seeds.x == seeds.y) throw RangeError("halved Farey seeds coincide");
  std::vector<Fraction> vertices{seeds.x, seeds.y};
  std::vector<Edge<Fraction>> black;
  // Blue edges as oriented pairs so that mediants use the seeds' raw signs.
  std::vector<std::pair<Fraction, Fraction>> blue{{seeds.x, seeds.y}};
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<Fraction, Fraction>> next;
    next.reserve(blue.size() * 2);
    for (const auto& [a, b] : blue) {
      const Fraction m = mediant(a, b);
      vertices.push_back(m);
      black.emplace_back(a, b);
      next.emplace_back(a, m);
      next.emplace_back(m, b);
    }
    blue = std::move(next);
  }
  std::vector<Edge<Fraction>> all = black;
  std::vector<Edge<Fraction>> blue_edges;
  for (const auto& [a, b] : blue) blue_edges.emplace_back(a, b);
  all.insert(all.end(), blue_edges.begin(), blue_edges.end());
  std::sort(blue_edges.begin(), blue_edges.end());
  return {FareyGraph(std::move(vertices), all), std::move(blue_edges), seeds.x, seeds.y};
}

Path<Fraction> blue_order(const ColoredGraph& f) {
  const FareyGraph blue(f.graph.vertices(), f.blue);
  const int start = blue.require_index(f.x);
  const int finish = blue.require_index(f.y);
  std::vector<Fraction> walk{blue.label(start)};
  int prev = -1;
  int cur = start;
  while (cur != finish) {
    const auto nbrs = blue.neighbors(cur);
    const std::size_t expected = cur == start ? 1 : 2;
    if (nbrs.size() != expected) throw StructureError("blue edges branch at " + to_label(blue.label(cur)));
    const int next = nbrs[0] != prev ? nbrs[0] : nbrs[1];
    prev = cur;
    cur = next;
    walk.push_back(blue.label(cur));
  }
  if (blue.neighbors(finish).size() != 1 || walk.size() != blue.vertex_count()) {
    throw StructureError("blue edges do not form a Hamilton path");
  }
  return Path<Fraction>(std::move(walk));
}

FareyGraph farey_graph(int n) {
  const auto upper = halved_farey(n, {Fraction::make(0, 1), Fraction::make(1, 0)});
  const auto lower = halved_farey(n, {Fraction::make(0, 1), Fraction::make(-1, 0)});
  std::set<Fraction> shared;
  for (const auto& v : upper.graph.vertices()) {
    if (lower.graph.has_vertex(v)) shared.insert(v);
  }
  if (shared != std::set<Fraction>{Fraction::make(0, 1), Fraction::infinity()}) {
    throw StructureError("halves of the Farey graph meet outside F̌_0");
  }
  return graph_union(upper.graph, lower.graph);
}

DeterminantComparison compare_with_determinant(const FareyGraph& g) {
  DeterminantComparison c;
  c.vertices = g.vertex_count();
  c.graph_edges = g.edge_count();
  const auto& vs = g.vertices();
  bool mismatch = false;
  for (const auto& v : vs) {
    if (std::gcd(v.p(), v.q()) != 1) c.labels_reduced = false;
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const bool det = farey_adjacent(vs[i], vs[j]);
      if (det) ++c.determinant_edges;
      if (det != g.adjacent(static_cast<int>(i), static_cast<int>(j))) mismatch = true;
    }
  }
  c.equal = !mismatch && c.graph_edges == c.determinant_edges;
  return c;
}

SternBrocotReport stern_brocot_check(int n) {
  SternBrocotReport r;
  r.order = n;
  r.halved = compare_with_determinant(halved_farey(n).graph);
  r.full = compare_with_determinant(farey_graph(n));
  return r;
}

}  // namespace whirl
