#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whirl/graph.hpp"
#include "whirl/path.hpp"
#include "whirl/triadic.hpp"

namespace whirl {

using WhirlGraph = Graph<TriadicRational>;
using WhirlPath = Path<TriadicRational>;
using WhirlEdge = Edge<TriadicRational>;

// Largest level the generators accept; level n has 3^n + 1 vertices.
inline constexpr int kMaxWhirlLevel = 16;

// Levels [low, high]: the graph on V_high with edge sets E_low, ..., E_high.
// A finite stand-in for G_{>=low} and, with low = 1, equal to G_{<=high}.
struct LevelWindow {
  int low = 1;
  int high = 1;

  // Throws RangeError unless 1 <= low <= high <= kMaxWhirlLevel.
  static LevelWindow make(int low, int high);

  friend bool operator==(const LevelWindow&, const LevelWindow&) = default;
};

// V_n = {0, 1/3^n, ..., 1}, ascending. n >= 0.
std::vector<TriadicRational> level_vertices(int n);

// V_n ∩ [lo, hi], ascending.
std::vector<TriadicRational> level_vertices_between(int n, const TriadicRational& lo, const TriadicRational& hi);

// The 3^n edges of E_n: for each block k the zigzag
// 3k–3k+2, 3k+1–3k+2, 3k+1–3k+3 over 3^n. Throws RangeError for n < 1.
std::vector<WhirlEdge> level_edges(int n);

WhirlGraph whirl_graph(const LevelWindow& w);

// (V_n, E_n) as a graph.
WhirlGraph level_graph(int n);

// The unique 0–1 Hamilton path of (V_n, E_n), found by walking the level
// graph from 0. Throws StructureError if the level graph is not a path.
WhirlPath hamilton_path(int n);

// The unique n with e ∈ E_n. Throws NotAnEdgeError if e matches no block
// template.
int edge_level(const WhirlEdge& e);

bool is_whirl_edge(const WhirlEdge& e);

// Outcome of one clause of the cut-vertex lemma. On failure `witness` holds the
// offending vertex (containment clauses) or the out-of-order pair.
struct ClauseVerdict {
  bool holds = true;
  std::vector<TriadicRational> witness;
};

struct Lemma22Report {
  ClauseVerdict lower_containment;  // V_{n-1} ∩ [u, v] ⊆ V(P)
  ClauseVerdict upper_containment;  // V(P) ⊆ [u, v]
  ClauseVerdict natural_order;      // P ascends on V_{n-1} ∩ [u, v]

  bool all_hold() const { return lower_containment.holds && upper_containment.holds && natural_order.holds; }
};

// Checks the three clauses for a u–v path P all of whose edges have level
// >= n. Throws PreconditionError naming the failed precondition.
Lemma22Report check_lemma22(const WhirlPath& p, const TriadicRational& u, const TriadicRational& v, int n);

struct CutvertexSplit {
  std::vector<TriadicRational> left;   // V_high ∩ [0, x)
  std::vector<TriadicRational> right;  // V_high ∩ (x, 1]
};

// Components of whirl_graph(w) - x. Requires w.low > 1 and
// x ∈ V_{low-1} \ {0, 1} (DomainError otherwise); throws StructureError if the
// deletion does not leave exactly two components.
CutvertexSplit cutvertex_split(const TriadicRational& x, const LevelWindow& w);

// Graphviz export: each vertex pinned at (value, -exponent).
std::string to_dot(const WhirlGraph& g, const std::string& name = "whirl");

}  // namespace whirl
