#include <doctest.h>

#include "decmin/orientation.hpp"
#include "decmin/random.hpp"
#include "fixtures.hpp"

using namespace decmin;

namespace {

Graph triangle() { return fx::cycle(3); }

Graph doubled_path() {
  Graph g;
  g.n = 3;
  for (int k = 0; k < 2; ++k) {
    g.add_edge(0, 1);
    g.add_edge(1, 2);
  }
  return g;
}

Graph single_edge(Int ell) {
  Graph g;
  g.n = 2;
  g.add_edge(0, 1, ell);
  return g;
}

NodeBounds bounds(IntVec f, IntVec g) { return {std::move(f), std::move(g)}; }

bool all_equal(const IntVec& v, Int x) {
  return std::all_of(v.begin(), v.end(), [x](Int y) { return y == x; });
}

// i_G(X) <= m(X) <= e_G(X) fails on X.
bool violates(const Graph& g, const IntVec& m, const std::vector<int>& x) {
  const Mask z = to_mask(x);
  Int inside = 0, touching = 0;
  for (const auto& e : g.edges) {
    inside += has(z, e.u) && has(z, e.v);
    touching += has(z, e.u) || has(z, e.v);
  }
  const Int mz = sum_over(m, z);
  return mz < inside || mz > touching;
}

Int brute_cost(const Graph& g, Mask fwd) {
  Int c = 0;
  for (int e = 0; e < g.m(); ++e) c += has(fwd, e) ? g.edges[e].cost_uv : g.edges[e].cost_vu;
  return c;
}

}  // namespace

TEST_CASE("orient_with_indegrees") {
  const Graph p = fx::path3();
  CHECK(orient_with_indegrees(p, {0, 1, 1}).indeg == IntVec{0, 1, 1});
  CHECK(orient_with_indegrees(p, {0, 2, 0}).indeg == IntVec{0, 2, 0});
  try {
    orient_with_indegrees(p, {2, 0, 0});
    FAIL("expected infeasibility");
  } catch (const Infeasible& e) {
    CHECK(violates(p, {2, 0, 0}, e.witness));
  }
  CHECK_THROWS_AS(orient_with_indegrees(p, {1, 1, 1}), Infeasible);
}

TEST_CASE("decmin_orientation") {
  CHECK(all_equal(decmin_orientation(fx::cycle(4)).indeg, 1));
  CHECK(all_equal(decmin_orientation(triangle()).indeg, 1));
  const IntVec d = decmin_orientation(fx::path3()).indeg;
  CHECK(oracle::same_values(d, {1, 1, 0}));
}

TEST_CASE("bounded dec-min orientation") {
  const Graph p = fx::path3();
  const IntVec a = decmin_orientation_bounded(p, bounds({0, 0, 0}, {1, 1, 1})).indeg;
  CHECK(*std::max_element(a.begin(), a.end()) == 1);
  CHECK(decmin_orientation_bounded(p, bounds({0, 2, 0}, {2, 2, 2})).indeg == IntVec{0, 2, 0});
  CHECK(all_equal(decmin_orientation_bounded(fx::cycle(4), bounds({0, 0, 0, 0}, {1, 1, 1, 1})).indeg, 1));
  try {
    bounded_orientation(p, bounds({1, 1, 1}, {2, 2, 2}));
    FAIL("expected infeasibility");
  } catch (const Infeasible& e) {
    CHECK_FALSE(e.witness.empty());
  }
}

TEST_CASE("orientation canonical data") {
  const Graph c4 = fx::cycle(4);
  const auto d4 = orientation_canonical(c4, decmin_orientation(c4));
  CHECK(d4.q() == 1);
  CHECK(d4.betas == std::vector<Int>{1});
  CHECK(d4.chain == std::vector<Mask>{0b1111});

  const Graph p = fx::path3();
  const auto dp = orientation_canonical(p, decmin_orientation(p));
  CHECK(dp.q() == 1);
  CHECK(dp.betas == std::vector<Int>{1});
  CHECK(dp.r == std::vector<Int>{2});

  Graph k3e;  // triangle on 0..2 plus the edge 3-4
  k3e.n = 5;
  k3e.add_edge(0, 1);
  k3e.add_edge(1, 2);
  k3e.add_edge(2, 0);
  k3e.add_edge(3, 4);
  const Orientation o = decmin_orientation(k3e);
  const auto dk = orientation_canonical(k3e, o);
  const auto ref = oracle::canonical_chain(fx::induced_values(k3e), 5, o.indeg);
  CHECK(dk.chain == ref.chain);
  CHECK(dk.betas == ref.betas);
  CHECK(dk == canonical_from_decmin(BaseHandle::of(gen::induced_of(k3e)), o.indeg));
}

TEST_CASE("cheapest bounded dec-min orientation") {
  Graph p;
  p.n = 3;
  p.add_edge(0, 1, 1, 1, 0);
  p.add_edge(1, 2);
  const Orientation o = cheapest_decmin_orientation_bounded(p, NodeBounds::none(3));
  CHECK(o.cost == 0);
  CHECK(oracle::same_values(o.indeg, {1, 1, 0}));

  Graph c4;
  c4.n = 4;
  for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4, 1, i == 0 ? 10 : 0, 0);
  const Orientation r = cheapest_decmin_orientation_bounded(c4, NodeBounds::none(4));
  CHECK(r.cost == 0);
  CHECK(all_equal(r.indeg, 1));
  for (char f : r.forward) CHECK(f == 0);
}

TEST_CASE("minimum in-degree of T") {
  const Graph p = fx::path3();
  const NodeBounds b = bounds({0, 0, 0}, {2, 2, 2});
  CHECK(decmin_orientation_minT(p, b, {1}).indeg == IntVec{1, 0, 1});
  CHECK(oracle::same_values(decmin_orientation_minT(p, b, {0, 1, 2}).indeg, {1, 1, 0}));

  const Graph c4 = fx::cycle(4);
  const auto r = decmin_orientation_minT_detail(c4, NodeBounds::none(4), {0});
  CHECK(r.orientation.indeg[0] == 0);
  CHECK(oracle::same_values(r.orientation.indeg, {0, 1, 1, 2}));
}

TEST_CASE("k-edge-connected dec-min orientation") {
  const Orientation a = decmin_korient(fx::cycle(4), 1, NodeBounds::none(4));
  CHECK(all_equal(a.indeg, 1));
  CHECK(is_k_edge_connected(fx::cycle(4), a, 1));
  const Graph c4x2 = fx::cycle(4, 2);
  const Orientation b = decmin_korient(c4x2, 2, NodeBounds::none(4));
  CHECK(all_equal(b.indeg, 2));
  CHECK(is_k_edge_connected(c4x2, b, 2));
  // The doubled path is 2-edge-connected, so a strong orientation exists;
  // the simple path has a bridge, and k = 2 fails at the end nodes.
  CHECK(is_k_edge_connected(doubled_path(), decmin_korient(doubled_path(), 1, NodeBounds::none(3)), 1));
  CHECK_THROWS_AS(decmin_korient(fx::path3(), 1, NodeBounds::none(3)), Infeasible);
  CHECK_THROWS_AS(decmin_korient(doubled_path(), 2, NodeBounds::none(3)), Infeasible);
}

TEST_CASE("capacitated orientation") {
  CHECK(oracle::same_values(capacitated_decmin_orientation(single_edge(5)).indeg, {2, 3}));
  CHECK(capacitated_decmin_orientation(single_edge(4)).indeg == IntVec{2, 2});
  Graph c4;
  c4.n = 4;
  for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4, 2);
  const CapacitatedOrientation r = capacitated_decmin_orientation(c4);
  CHECK(all_equal(r.indeg, 2));
  CHECK(capacitated_indegrees(c4, r.z) == r.indeg);
  CHECK_THROWS_AS(decmin_orientation(single_edge(3)), Error);
}

TEST_CASE("orientation solvers agree with exhaustive scans") {
  gen::Rng rng(8);
  for (int it = 0; it < 120; ++it) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int m = n - 1 + static_cast<int>(rng() % (10 - n));
    Graph g = gen::multigraph(rng, n, m, true);
    for (auto& e : g.edges) {
      e.cost_uv = static_cast<Int>(rng() % 5);
      e.cost_vu = static_cast<Int>(rng() % 5);
    }
    const auto es = fx::uedges(g);
    const NodeBounds none = NodeBounds::none(n);

    const Orientation plain = decmin_orientation(g);
    const auto all = fx::feasible_orientations(g, none);
    const auto ref = oracle::decmin_set(fx::indegree_vectors(all));
    CHECK(oracle::same_values(plain.indeg, ref.front()));
    CHECK(plain.indeg == indegrees(g, plain.forward));
    CHECK_FALSE(oracle::improving_path(n, es, fx::forward_mask(plain), fx::finite_f(none),
                                       fx::finite_g(none, g), 0));

    NodeBounds b = none;
    for (int v = 0; v < n; ++v) {
      b.f[v] = static_cast<Int>(rng() % 2);
      b.g[v] = b.f[v] + 1 + static_cast<Int>(rng() % 3);
    }
    const auto feas = fx::feasible_orientations(g, b);
    if (feas.empty()) {
      CHECK_THROWS_AS(decmin_orientation_bounded(g, b), Infeasible);
    } else {
      const auto bref = oracle::decmin_set(fx::indegree_vectors(feas));
      const Orientation o = decmin_orientation_bounded(g, b);
      CHECK(oracle::same_values(o.indeg, bref.front()));

      // Cheapest among the bounded dec-min orientations.
      Int best = kPosInf;
      for (const auto& f : feas)
        if (oracle::same_values(f.indeg, bref.front())) best = std::min(best, brute_cost(g, f.forward));
      const Orientation c = cheapest_decmin_orientation_bounded(g, b);
      CHECK(c.cost == best);
      CHECK(brute_cost(g, fx::forward_mask(c)) == best);
      CHECK(oracle::same_values(c.indeg, bref.front()));

      // Minimum in-degree of T, then dec-min.
      std::vector<int> t;
      for (int v = 0; v < n; ++v)
        if (rng() % 2) t.push_back(v);
      if (t.empty()) t.push_back(0);
      const Mask tm = to_mask(t);
      const auto tmin = oracle::argmin(fx::indegree_vectors(feas),
                                       [&](const oracle::Vec& d) { return oracle::total(d, tm); });
      const auto tref = oracle::decmin_set(tmin);
      const Orientation ot = decmin_orientation_minT(g, b, t);
      CHECK(oracle::total(ot.indeg, tm) == oracle::total(tref.front(), tm));
      CHECK(oracle::same_values(ot.indeg, tref.front()));
    }

    for (int k = 1; k <= 2; ++k) {
      const auto kf = fx::feasible_orientations(g, none, k);
      if (kf.empty()) {
        CHECK_THROWS_AS(decmin_korient(g, k, none), Infeasible);
        continue;
      }
      const auto kref = oracle::decmin_set(fx::indegree_vectors(kf));
      const Orientation ok = decmin_korient(g, k, none);
      CHECK(oracle::same_values(ok.indeg, kref.front()));
      CHECK(oracle::k_connected(n, es, fx::forward_mask(ok), k));
    }
  }
}

TEST_CASE("capacitated solver matches the expanded graph") {
  gen::Rng rng(12);
  for (int it = 0; it < 60; ++it) {
    const int n = 2 + static_cast<int>(rng() % 3);
    Graph g = gen::multigraph(rng, n, n - 1 + static_cast<int>(rng() % 3), true);
    for (auto& e : g.edges) e.ell = 1 + static_cast<Int>(rng() % 4);
    const CapacitatedOrientation c = capacitated_decmin_orientation(g);
    const Orientation x = decmin_orientation(g.expanded());
    CHECK(oracle::same_values(c.indeg, x.indeg));
    for (int e = 0; e < g.m(); ++e) {
      CHECK(c.z[e] >= 0);
      CHECK(c.z[e] <= g.edges[e].ell);
    }
  }
}
