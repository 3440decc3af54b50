#include "whirl/cantor.hpp"

#include <numeric>
#include <set>

#include "whirl/checked.hpp"

namespace whirl {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw RangeError("zero denominator");
  if (den < 0) {
    num = checked::sub(0, num);
    den = checked::sub(0, den);
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Rational Rational::of(const TriadicRational& t) { return make(t.numerator(), checked::pow3(t.exponent())); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::make(checked::add(checked::mul(a.num, b.den), checked::mul(b.num, a.den)),
                        checked::mul(a.den, b.den));
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::make(checked::mul(a.num, b.num), checked::mul(a.den, b.den));
}

TriadicRational to_triadic(const Rational& r) {
  std::int64_t d = r.den;
  int e = 0;
  while (d % 3 == 0) {
    d /= 3;
    ++e;
  }
  if (d != 1) throw RangeError("denominator of " + std::to_string(r.num) + "/" + std::to_string(r.den) +
                               " is not a power of three");
  return TriadicRational::make(r.num, e);
}

std::vector<Interval> cantor_intervals(int n) {
  if (n < 0 || n > kMaxWhirlLevel) throw RangeError("Cantor stage out of range: " + std::to_string(n));
  // Left endpoints as numerators over 3^stage.
  std::vector<std::int64_t> starts{0};
  for (int stage = 1; stage <= n; ++stage) {
    std::vector<std::int64_t> next;
    next.reserve(starts.size() * 2);
    for (std::int64_t a : starts) {
      next.push_back(3 * a);
      next.push_back(3 * a + 2);
    }
    starts = std::move(next);
  }
  std::vector<Interval> out;
  out.reserve(starts.size());
  for (std::int64_t a : starts) out.push_back({TriadicRational::make(a, n), TriadicRational::make(a + 1, n)});
  return out;
}

bool in_cantor_set(const TriadicRational& x) {
  // Ternary digits of the numerator, most significant first; a final digit 1
  // may be rewritten as 0222...
  std::int64_t k = x.numerator();
  if (x == TriadicRational::one()) return true;
  std::vector<int> digits(static_cast<std::size_t>(x.exponent()), 0);
  for (int i = x.exponent() - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<int>(k % 3);
    k /= 3;
  }
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == 1 && i + 1 != digits.size()) return false;
  }
  return true;
}

GStar gstar(int n) {
  if (n < 1) throw RangeError("G* needs level >= 1");
  std::set<TriadicRational> vertices;
  for (const auto& iv : cantor_intervals(n)) {
    vertices.insert(iv.lo);
    vertices.insert(iv.hi);
  }
  std::vector<WhirlEdge> edges;
  std::vector<WhirlEdge> middle;
  for (int k = 1; k <= n; ++k) {
    for (const auto& iv : cantor_intervals(k - 1)) {
      const std::int64_t a = iv.lo.scaled_to(k);
      auto at = [k](std::int64_t num) { return TriadicRational::make(num, k); };
      edges.emplace_back(at(a), at(a + 2));
      edges.emplace_back(at(a + 1), at(a + 2));
      edges.emplace_back(at(a + 1), at(a + 3));
      middle.emplace_back(at(a + 1), at(a + 2));
    }
  }
  return {WhirlGraph({vertices.begin(), vertices.end()}, edges), Matching<TriadicRational>(std::move(middle))};
}

TriadicRational AffineMap::operator()(const TriadicRational& x) const {
  return to_triadic(scale * Rational::of(x) + shift);
}

AffineMap AffineMap::pi1() { return {Rational::make(1, 9), Rational::make(3, 9)}; }
AffineMap AffineMap::pi2() { return {Rational::make(1, 9), Rational::make(5, 9)}; }

std::vector<WhirlEdge> affine_image(const std::vector<WhirlEdge>& edges, const AffineMap& m) {
  std::vector<WhirlEdge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(m(e.first), m(e.second));
  return out;
}

WhirlGraph affine_image(const WhirlGraph& g, const AffineMap& m) {
  std::vector<TriadicRational> vertices;
  vertices.reserve(g.vertex_count());
  for (const auto& v : g.vertices()) vertices.push_back(m(v));
  return WhirlGraph(std::move(vertices), affine_image(g.edges(), m));
}

Matching<TriadicRational> affine_image(const Matching<TriadicRational>& d, const AffineMap& m) {
  return Matching<TriadicRational>(affine_image(d.edges(), m));
}

MinorMap phi(int n, const FareySeeds& seeds) {
  const GStar g = gstar(n);
  const auto minor = contract(g.graph, g.matching);
  const ColoredGraph halved = halved_farey(n, seeds);
  const auto order = blue_order(halved);
  // Graph vertices are already sorted in the minor's linear order.
  const auto& domain = minor.graph.vertices();
  if (domain.size() != order.size()) {
    throw StructureError("phi(" + std::to_string(n) + "): " + std::to_string(domain.size()) + " minor vertices vs " +
                         std::to_string(order.size()) + " halved Farey vertices");
  }
  MinorMap map;
  for (std::size_t i = 0; i < domain.size(); ++i) map.set(domain[i], order[i]);
  const FareyGraph target = remove_edges(halved.graph, {Edge<Fraction>(halved.x, halved.y)});
  if (!verify_iso(map, minor.graph, target)) {
    throw StructureError("phi(" + std::to_string(n) + ") is not a graph isomorphism");
  }
  return map;
}

namespace {

AffineMap inverse(const AffineMap& m) {
  const Rational inv_scale = Rational::make(m.scale.den, m.scale.num);
  return {inv_scale, Rational::make(-m.shift.num, m.shift.den) * inv_scale};
}

}  // namespace

Theorem2Assembly theorem2_assembly(int n) {
  if (n < 3) throw RangeError("Farey assembly needs whirl level >= 3");
  Theorem2Assembly out;
  out.level = n;
  const int order = n - 2;
  const GStar base = gstar(order);
  const AffineMap pis[2] = {AffineMap::pi1(), AffineMap::pi2()};
  const auto t = [](std::int64_t k) { return TriadicRational::make(k, 2); };

  auto joined = graph_union(affine_image(base.graph, pis[0]), affine_image(base.graph, pis[1]));
  auto edges = joined.edges();
  edges.emplace_back(t(3), t(5));
  edges.emplace_back(t(4), t(6));
  edges.emplace_back(t(3), t(6));
  out.assembly = WhirlGraph(joined.vertices(), edges);

  auto d = matching_union(affine_image(base.matching, pis[0]), affine_image(base.matching, pis[1]));
  auto d_edges = d.edges();
  d_edges.emplace_back(t(3), t(5));
  d_edges.emplace_back(t(4), t(6));
  out.branch_matching = Matching<TriadicRational>(std::move(d_edges));
  out.minor = contract(out.assembly, out.branch_matching);
  out.farey = farey_graph(order);

  out.inside_whirl = is_subgraph(out.assembly, whirl_graph(LevelWindow::make(1, n)));

  out.branch_sets_of_two = true;
  for (const auto& b : out.minor.graph.vertices()) {
    if (b.size() != 2) out.branch_sets_of_two = false;
  }

  // Each half maps through phi with the seeds of the matching Farey half;
  // the two joining branch sets carry the shared seeds 0 and ∞.
  const MinorMap halves[2] = {phi(order, {Fraction::make(0, 1), Fraction::make(1, 0)}),
                              phi(order, {Fraction::make(0, 1), Fraction::make(-1, 0)})};
  const MinorVertex zero{{t(3), t(5)}};
  const MinorVertex infinity{{t(4), t(6)}};
  for (const auto& b : out.minor.graph.vertices()) {
    if (b == zero) {
      out.iso.set(b, Fraction::make(0, 1));
    } else if (b == infinity) {
      out.iso.set(b, Fraction::infinity());
    } else {
      const int half = b.least() < t(5) ? 0 : 1;
      const AffineMap back = inverse(pis[half]);
      std::vector<TriadicRational> members;
      for (const auto& v : b.members) members.push_back(back(v));
      out.iso.set(b, halves[half].at(MinorVertex{members}));
    }
  }
  out.iso_verified = verify_iso(out.iso, out.minor.graph, out.farey);

  if (!out.verified()) {
    throw StructureError("Farey minor assembly failed at level " + std::to_string(n) +
                         (out.inside_whirl ? "" : ": not a whirl subgraph") +
                         (out.iso_verified ? "" : ": contraction is not the Farey graph") +
                         (out.branch_sets_of_two ? "" : ": branch set of size other than two"));
  }
  return out;
}

}  // namespace whirl
