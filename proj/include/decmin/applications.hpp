#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "decmin/core.hpp"
#include "decmin/netflow.hpp"

namespace decmin {

struct BipartiteEdge {
  int s = 0;  // index into S
  int t = 0;  // index into T
  Int cap = 1;
  Int cost = 0;
};

// Choose an edge multiset F (at most cap copies of each edge) so that the
// degrees on S are dec-min.  Degrees on T are m_t when given, else
// [f_t, g_t]; the total size |F| is then fixed by gamma.
struct SemiMatchingProblem {
  int ns = 0;
  int nt = 0;
  std::vector<BipartiteEdge> edges;
  std::optional<IntVec> m_t;  // default: all ones when no T bounds are given
  std::optional<IntVec> f_t, g_t;
  std::optional<IntVec> f_s, g_s;
  std::optional<Int> gamma;

  IntVec target_t() const;
  bool plain() const;  // unit capacities, exact T degrees, no S bounds, no gamma
};

struct SemiMatching {
  std::vector<Int> count;  // copies of each edge in F
  IntVec degree_s;
  Int cost = 0;
};

// Dec-min degrees on S; among those, the cheapest F for the edge costs.
SemiMatching decmin_semimatching(const SemiMatchingProblem& p);
// The degree vectors on S as a base-polyhedron with flow-backed membership.
BaseHandle semimatching_base(const SemiMatchingProblem& p);

struct MegiddoProblem {
  int n = 0;
  std::vector<Arc> arcs;  // cap is the upper bound
  std::vector<int> sources;
  std::vector<int> sinks;
  std::optional<Int> amount;  // default: the maximum flow amount
};

struct MegiddoFlow {
  std::vector<Int> flow;  // per arc
  IntVec out;             // net out-flow per source, in the order given
  Int amount = 0;
};

// Integral flow of the requested amount whose source out-flows are inc-max
// (equivalently dec-min).  Optional costs pick the cheapest such vector.
MegiddoFlow megiddo_discrete(const MegiddoProblem& p,
                             const std::optional<IntVec>& source_costs = std::nullopt);
BaseHandle megiddo_base(const MegiddoProblem& p, Int amount);

// Root vectors of packings of k arc-disjoint spanning arborescences.
bool is_root_vector(const Digraph& d, Int k, const IntVec& m);
BaseHandle root_vector_base(const Digraph& d, Int k);
IntVec decmin_root_vector(const Digraph& d, Int k,
                          const std::optional<IntVec>& costs = std::nullopt);

}  // namespace decmin
