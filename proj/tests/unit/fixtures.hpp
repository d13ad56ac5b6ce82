#pragma once

#include <random>

#include "../oracles/brute.hpp"
#include "decmin/core.hpp"
#include "decmin/orientation.hpp"

namespace fx {

using namespace decmin;

inline oracle::SetValue values_of(const SetFn& p) {
  return [p](oracle::Mask x) {
    const Int v = p->eval(x);
    return v == kNegInf ? oracle::kNone : v;
  };
}

// p(empty) = p({1}) = p({2}) = 0, p(S) = 1.
inline SetFn i1() { return make_table(2, {0, 0, 0, 1}); }

// Bases {1,2},{3,4},{1,3},{2,4}.
inline std::vector<Mask> m1_bases() { return {0b0011, 0b1100, 0b0101, 0b1010}; }
// Bases {1,2},{3,4},{1,4},{2,3}.
inline std::vector<Mask> m2_bases() { return {0b0011, 0b1100, 0b1001, 0b0110}; }

// Lower bounding function of the convex hull of the given bases, shifted.
inline SetFn matroid_table(const std::vector<Mask>& bases, const IntVec& shift) {
  std::vector<IntVec> pts;
  for (Mask b : bases) {
    IntVec v = shift;
    for (int s = 0; s < 4; ++s)
      if (has(b, s)) ++v[s];
    pts.push_back(v);
  }
  return table_from_points(4, pts);
}

// The four-point instance with dec-min element (2,3,3,1).
inline SetFn r62() { return matroid_table(m1_bases(), {2, 2, 3, 0}); }

inline Graph path3() {
  Graph g;
  g.n = 3;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

inline Graph cycle(int n, int mult = 1) {
  Graph g;
  g.n = n;
  for (int k = 0; k < mult; ++k)
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline std::vector<oracle::UEdge> uedges(const Graph& g) {
  std::vector<oracle::UEdge> out;
  for (const auto& e : g.edges) out.push_back({e.u, e.v});
  return out;
}

inline oracle::SetValue induced_values(const Graph& g) {
  const auto es = uedges(g);
  return [es](oracle::Mask x) { return oracle::induced(es, x); };
}

inline Int bound_or(Int v, Int fallback) { return is_finite(v) ? v : fallback; }

// All orientations inside the node bounds and k-arc-connected when k >= 1.
inline std::vector<oracle::BruteOrientation> feasible_orientations(const Graph& g,
                                                                   const NodeBounds& b,
                                                                   int k = 0) {
  const auto es = uedges(g);
  std::vector<oracle::BruteOrientation> out;
  for (auto& o : oracle::orientations(g.n, es)) {
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v)
      ok = o.indeg[v] >= bound_or(b.f[v], -1) && o.indeg[v] <= bound_or(b.g[v], g.m() + 1);
    if (ok && k > 0) ok = oracle::k_connected(g.n, es, o.forward, k);
    if (ok) out.push_back(std::move(o));
  }
  return out;
}

inline std::vector<oracle::Vec> indegree_vectors(
    const std::vector<oracle::BruteOrientation>& os) {
  std::vector<oracle::Vec> out;
  for (const auto& o : os) out.push_back(o.indeg);
  return out;
}

inline Mask forward_mask(const Orientation& d) {
  Mask x = 0;
  for (size_t e = 0; e < d.forward.size(); ++e)
    if (d.forward[e]) x |= bit(static_cast<int>(e));
  return x;
}

inline oracle::Vec finite_f(const NodeBounds& b) {
  oracle::Vec f;
  for (Int v : b.f) f.push_back(bound_or(v, -1));
  return f;
}
inline oracle::Vec finite_g(const NodeBounds& b, const Graph& g) {
  oracle::Vec out;
  for (Int v : b.g) out.push_back(bound_or(v, g.m() + 1));
  return out;
}

}  // namespace fx
