#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decmin/canonical.hpp"
#include "decmin/core.hpp"

namespace decmin {

struct Edge {
  int u = 0;
  int v = 0;
  Int ell = 1;      // capacity; only the capacitated solver reads it
  Int cost_uv = 0;  // cost of orienting u -> v
  Int cost_vu = 0;
};

struct Graph {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;

  int add_edge(int u, int v, Int ell = 1, Int cost_uv = 0, Int cost_vu = 0);
  int m() const { return static_cast<int>(edges.size()); }
  IntVec degrees() const;
  // Unit edges with the same endpoints, one per unit of capacity.
  Graph expanded() const;
};

struct Orientation {
  std::vector<char> forward;  // 1: u -> v (head v), 0: v -> u
  IntVec indeg;
  Int cost = 0;
};

IntVec indegrees(const Graph& g, const std::vector<char>& forward);
Orientation make_orientation(const Graph& g, std::vector<char> forward);
bool is_k_edge_connected(const Graph& g, const Orientation& d, int k);

// Bounds use kNegInf / kPosInf for absent entries.
struct NodeBounds {
  IntVec f, g;
  static NodeBounds none(int n);
};

// Orientation with in-degree vector m, or Infeasible with a node set X where
// m(X) < i_G(X) or m(X) > e_G(X).
Orientation orient_with_indegrees(const Graph& g, const IntVec& m);
// Any (f,g)-bounded orientation, or Infeasible with a violating node set.
Orientation bounded_orientation(const Graph& g, const NodeBounds& b);

Orientation decmin_orientation(const Graph& g);
Orientation decmin_orientation_bounded(const Graph& g, const NodeBounds& b);

// In-degree vectors of (f,g)-bounded orientations as a base-polyhedron.
// Membership is answered by orientation repair instead of subset scans.
BaseHandle orientation_base(const Graph& g,
                            const std::optional<NodeBounds>& b = std::nullopt);

// Canonical data of the in-degree set, with T_D(t) read off as the set of
// nodes that reach t in D.
CanonicalDecomposition orientation_canonical(
    const Graph& g, const Orientation& d,
    const std::optional<NodeBounds>& b = std::nullopt);

// Uses the per-direction edge costs of g.
Orientation cheapest_decmin_orientation_bounded(const Graph& g,
                                                const NodeBounds& b);

struct MinTResult {
  Orientation orientation;
  std::vector<int> x_t;
  NodeBounds tightened;
};
MinTResult decmin_orientation_minT_detail(const Graph& g, const NodeBounds& b,
                                          const std::vector<int>& t);
Orientation decmin_orientation_minT(const Graph& g, const NodeBounds& b,
                                    const std::vector<int>& t);

// Dec-min among k-edge-connected (f,g)-bounded orientations.
Orientation decmin_korient(const Graph& g, int k, const NodeBounds& b);

struct CapacitatedOrientation {
  std::vector<Int> z;  // units oriented u -> v on each edge
  IntVec indeg;
};
IntVec capacitated_indegrees(const Graph& g, const std::vector<Int>& z);
CapacitatedOrientation capacitated_decmin_orientation(const Graph& g);
// In-degree set of capacitated orientations, shifted net in-flow form.
BaseHandle capacitated_base(const Graph& g);

}  // namespace decmin
