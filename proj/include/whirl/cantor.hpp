#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "whirl/farey.hpp"
#include "whirl/graph.hpp"
#include "whirl/whirl.hpp"

namespace whirl {

// Exact rational num/den, reduced, den > 0. Only used for affine maps.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  static Rational of(const TriadicRational& t);

  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational operator+(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);

// Converts to a triadic rational; RangeError if the denominator is not a
// power of three or the value leaves [0, 1].
TriadicRational to_triadic(const Rational& r);

struct Interval {
  TriadicRational lo;
  TriadicRational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Middle-thirds intervals of stage n, ascending: 2^n intervals of length 3^-n.
std::vector<Interval> cantor_intervals(int n);

// Membership of a triadic rational in the Cantor set, read off its ternary
// digits.
bool in_cantor_set(const TriadicRational& x);

// The Cantor subgraph up to level n: vertex set C*_n (endpoints of stage-n
// intervals), edge sets E*_1..E*_n, and the matching M_{<=n} of middle edges.
struct GStar {
  WhirlGraph graph;
  Matching<TriadicRational> matching;
};

GStar gstar(int n);

// x ↦ scale·x + shift.
struct AffineMap {
  Rational scale;
  Rational shift;

  TriadicRational operator()(const TriadicRational& x) const;

  static AffineMap pi1();  // x/9 + 3/9
  static AffineMap pi2();  // x/9 + 5/9
};

WhirlGraph affine_image(const WhirlGraph& g, const AffineMap& m);
std::vector<WhirlEdge> affine_image(const std::vector<WhirlEdge>& edges, const AffineMap& m);
Matching<TriadicRational> affine_image(const Matching<TriadicRational>& d, const AffineMap& m);

using MinorVertex = BranchSet<TriadicRational>;
using MinorMap = VertexMap<MinorVertex, Fraction>;

// The order-isomorphism from G*_{<=n}/M (vertices 0 < matching edges by least
// endpoint < 1) onto blue_order(halved_farey(n, seeds)), certified as a graph
// isomorphism onto F̌_n − E(F̌_0). Throws StructureError if the certificate
// fails.
MinorMap phi(int n, const FareySeeds& seeds = {});

struct Theorem2Assembly {
  int level = 0;
  WhirlGraph assembly;                        // π1G* ∪ π2G* plus the three joining edges
  Matching<TriadicRational> branch_matching;  // π1M ∪ π2M plus the two joining edges
  Contraction<TriadicRational> minor;
  FareyGraph farey;                           // farey_graph(level - 2)
  MinorMap iso;
  bool inside_whirl = false;
  bool iso_verified = false;
  bool branch_sets_of_two = false;

  bool verified() const { return inside_whirl && iso_verified && branch_sets_of_two; }
};

// Assembles the Farey minor of the level-n whirl graph from two affine copies
// of G*_{<=n-2}, then checks that the assembly lies in G_{<=n}, contracts onto
// farey_graph(n-2) under the glued phi maps, and has only branch sets of size
// two. Throws RangeError for n < 3 and StructureError if any check fails.
Theorem2Assembly theorem2_assembly(int n);

}  // namespace whirl
