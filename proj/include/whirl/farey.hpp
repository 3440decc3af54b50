#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "whirl/graph.hpp"
#include "whirl/path.hpp"

namespace whirl {

// A rational p/q in lowest terms with q >= 0. q = 0 only for p = ±1, and
// both represent the single point ∞. The sign of ∞ is kept because mediants
// are computed from the raw pair, but it is ignored by comparisons.
class Fraction {
 public:
  constexpr Fraction() = default;

  // Throws FractionError unless gcd(|p|, q) = 1, q >= 0, and q = 0 implies
  // p = ±1.
  static Fraction make(std::int64_t p, std::int64_t q);

  static Fraction infinity() { return make(1, 0); }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }

  friend bool operator==(const Fraction& a, const Fraction& b);
  // Value order on ℚ with ∞ above every rational.
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  constexpr Fraction(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}

  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

// (a.p + b.p) / (a.q + b.q); throws FractionError if that is not in lowest
// terms.
Fraction mediant(const Fraction& a, const Fraction& b);

// |a.p·b.q − a.q·b.p| = 1.
bool farey_adjacent(const Fraction& a, const Fraction& b);

// "p/q"; ∞ is always "1/0".
std::string to_label(const Fraction& f);
Fraction parse_fraction(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Fraction& f);

using FareyGraph = Graph<Fraction>;

// A graph with a distinguished set of blue edges; the rest are black. `x` and
// `y` are the two seed vertices of the halved Farey recursion.
struct ColoredGraph {
  FareyGraph graph;
  std::vector<Edge<Fraction>> blue;
  Fraction x;
  Fraction y;
};

struct FareySeeds {
  Fraction x = Fraction::make(0, 1);
  Fraction y = Fraction::make(1, 1);
};

// Largest order accepted by the generators (2^n + 1 vertices).
inline constexpr int kMaxFareyOrder = 22;

// F̌_n: start from one blue edge xy; each round adds a vertex for every blue
// edge, joined to both its ends by blue edges, and turns the old edges
// black. New vertices are named by the mediant of the edge they subdivide.
ColoredGraph halved_farey(int n, const FareySeeds& seeds = {});

// The x–y Hamilton path formed by the blue edges. Throws StructureError if the
// blue edges do not form one.
Path<Fraction> blue_order(const ColoredGraph& f);

// F_n: two halved Farey graphs of order n meeting exactly in F̌_0. The halves
// grow from seeds (0/1, 1/0) and (0/1, −1/0), so vertices carry their
// classical Farey labels.
FareyGraph farey_graph(int n);

struct DeterminantComparison {
  std::size_t vertices = 0;
  std::size_t graph_edges = 0;
  std::size_t determinant_edges = 0;
  bool labels_reduced = true;
  bool equal = false;
};

// Compares E(g) with the set of determinant-adjacent label pairs.
DeterminantComparison compare_with_determinant(const FareyGraph& g);

struct SternBrocotReport {
  int order = 0;
  DeterminantComparison halved;
  DeterminantComparison full;

  bool ok() const { return halved.equal && full.equal; }
};

// Cross-checks the recursive and the number-theoretic definitions on
// halved_farey(n) (seeds 0/1, 1/1) and on farey_graph(n).
SternBrocotReport stern_brocot_check(int n);

}  // namespace whirl

template <>
struct std::hash<whirl::Fraction> {
  std::size_t operator()(const whirl::Fraction& f) const noexcept {
    if (f.is_infinite()) return 0x9e3779b9u;
    return std::hash<std::int64_t>{}(f.p()) * 1000003u ^ std::hash<std::int64_t>{}(f.q());
  }
};
