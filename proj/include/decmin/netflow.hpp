#pragma once

#include <vector>

#include "decmin/core.hpp"

namespace decmin {

struct Arc {
  int from = 0;
  int to = 0;
  Int cap = 1;
  Int cost = 0;
};

struct Digraph {
  int n = 0;
  std::vector<Arc> arcs;
  int add_arc(int u, int v, Int cap = 1, Int cost = 0);
};

struct MaxFlowResult {
  Int value = 0;
  std::vector<Int> flow;          // per arc
  std::vector<char> source_side;  // min cut, per node
  Int cut_capacity = 0;
};

// Edmonds-Karp; stops early once `limit` units are routed.
MaxFlowResult max_flow(const Digraph& d, int s, int t, Int limit = kPosInf);

// Menger with every arc counted once, regardless of its capacity field.
bool arc_disjoint_paths_at_least(const Digraph& d, int s, int t, Int k);

struct FlowArc {
  int from = 0;
  int to = 0;
  Int lower = 0;
  Int upper = 0;
  Int cost = 0;
};

// Find z with lower <= z <= upper whose net in-flow (in minus out) at every
// node equals demand.
struct FlowProblem {
  int n = 0;
  std::vector<FlowArc> arcs;
  IntVec demand;
  int add_arc(int u, int v, Int lower, Int upper, Int cost = 0);
};

struct FlowOutcome {
  bool feasible = false;
  std::vector<Int> flow;
  Int cost = 0;
  // On failure: Z with in-lower(Z) - out-upper(Z) > demand(Z).
  std::vector<int> violating;
};

FlowOutcome feasible_m_flow(const FlowProblem& p);
// Successive shortest paths with potentials; negative-cost arcs are
// pre-saturated so every residual cost starts non-negative.
FlowOutcome min_cost_flow(const FlowProblem& p);

}  // namespace decmin
