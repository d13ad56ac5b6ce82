#include <doctest.h>

#include <numeric>

#include "decmin/matroid.hpp"
#include "decmin/random.hpp"
#include "fixtures.hpp"

using namespace decmin;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Pairs triangle_edges() { return {{0, 1}, {1, 2}, {2, 0}}; }

bool forest(int nodes, const Pairs& es, Mask x) {
  std::vector<int> root(nodes);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (size_t e = 0; e < es.size(); ++e) {
    if (!has(x, static_cast<int>(e))) continue;
    const int a = find(es[e].first), b = find(es[e].second);
    if (a == b) return false;
    root[a] = b;
  }
  return true;
}

oracle::IndepTest indep_of(const Matroid& m) {
  return [&m](Mask x) { return m.independent(elements(x)); };
}

Mask mask_of(const std::vector<int>& v) { return to_mask(v); }

}  // namespace

TEST_CASE("basic matroid oracles") {
  const auto u = uniform_matroid(3, 2);
  CHECK(u->rank() == 2);
  CHECK(u->independent({0, 2}));
  CHECK_FALSE(u->independent({0, 1, 2}));
  const auto g = graphic_matroid(3, triangle_edges());
  CHECK(g->rank() == 2);
  CHECK_FALSE(g->independent({0, 1, 2}));
  const auto p = partition_matroid({0, 1, 1}, {1, 1});
  CHECK(p->independent({0, 2}));
  CHECK_FALSE(p->independent({1, 2}));
  const auto e = explicit_bases(4, fx::m1_bases());
  CHECK(enumerate_bases(*e) == std::vector<Mask>{0b0011, 0b0101, 0b1010, 0b1100});
  CHECK(enumerate_bases(*dual_matroid(e)).size() == 4);
  CHECK(parallel_copies(u, 2)->size() == 6);
  CHECK(parallel_copies(u, 2)->rank() == 2);
  CHECK(direct_sum({u, g})->rank() == 4);
  CHECK(minor(g, {0}, {})->rank() == 1);
  CHECK(minor(g, {}, {0})->rank() == 2);
}

TEST_CASE("matroid intersection") {
  const auto m1 = explicit_bases(4, fx::m1_bases());
  const auto m2 = explicit_bases(4, fx::m2_bases());
  const auto b1 = enumerate_bases(*m1), b2 = enumerate_bases(*m2);
  std::vector<Mask> common;
  for (Mask b : b1)
    if (std::find(b2.begin(), b2.end(), b) != b2.end()) common.push_back(b);
  CHECK(common == std::vector<Mask>{0b0011, 0b1100});
  const Mask x = mask_of(matroid_intersection(*m1, *m2));
  CHECK((x == 0b0011 || x == 0b1100));

  const auto u = uniform_matroid(3, 2);
  CHECK(matroid_intersection(*u, *u).size() == 2);
  const auto g = graphic_matroid(3, triangle_edges());
  const auto p = partition_matroid({0, 1, 1}, {1, 1});
  const auto gp = matroid_intersection(*g, *p);
  CHECK(gp.size() == 2);
  CHECK(g->independent(gp));
  CHECK(p->independent(gp));
  CHECK_THROWS_AS(matroid_intersection(*u, *m1), Error);
}

TEST_CASE("min_cost_basis") {
  CHECK(min_cost_basis(*uniform_matroid(2, 1), {2, 1}) == std::vector<int>{1});
  CHECK(mask_of(min_cost_basis(*graphic_matroid(3, triangle_edges()), {1, 2, 3})) == 0b011);
  CHECK(mask_of(min_cost_basis(*explicit_bases(4, fx::m1_bases()), {0, 0, 1, 1})) == 0b0011);
  CHECK_THROWS_AS(min_cost_basis(*uniform_matroid(3, 1), {0, 0, 0}, 2), Infeasible);
}

TEST_CASE("dec-min basis sums") {
  const auto u = uniform_matroid(2, 1);
  CHECK(decmin_basis_sum({u, u}).sum == IntVec{1, 1});
  const auto s = decmin_basis_sum({explicit_bases(4, fx::m1_bases()), explicit_bases(4, fx::m2_bases())});
  CHECK(oracle::same_values(s.sum, {1, 1, 1, 1}));
  CHECK(s.bases.size() == 2);
  const auto g = graphic_matroid(3, triangle_edges());
  const auto t = decmin_basis_sum({g, g, g});
  CHECK(t.sum == IntVec{2, 2, 2});
  for (const auto& b : t.bases) CHECK(g->independent(b));
}

TEST_CASE("dec-min partition intersection") {
  const auto g = graphic_matroid(3, triangle_edges());
  CHECK(oracle::same_values(decmin_partition_intersection(g, {0, 1, 2}, 3).vector, {1, 1, 0}));
  const auto path = graphic_matroid(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(decmin_partition_intersection(path, {0, 0, 1}, 2).vector == IntVec{2, 1});
  CHECK(decmin_partition_intersection(uniform_matroid(4, 2), {0, 0, 1, 1}, 2).vector == IntVec{1, 1});
}

TEST_CASE("in/out dec-min orientations") {
  const auto c4 = inout_decmin_orientation(fx::cycle(4));
  REQUIRE(c4);
  CHECK(c4->indeg == IntVec{1, 1, 1, 1});
  const auto tri = inout_decmin_orientation(fx::cycle(3));
  REQUIRE(tri);
  CHECK(tri->indeg == IntVec{1, 1, 1});
  const Graph p = fx::path3();
  const auto pa = inout_decmin_orientation(p);
  REQUIRE(pa);
  CHECK(oracle::same_values(pa->indeg, {0, 1, 1}));
  IntVec out = p.degrees();
  for (int v = 0; v < 3; ++v) out[v] -= pa->indeg[v];
  CHECK(oracle::same_values(out, {0, 1, 1}));
}

TEST_CASE("intersection size matches enumeration") {
  gen::Rng rng(4);
  for (int it = 0; it < 150; ++it) {
    const int n = 2 + static_cast<int>(rng() % 6);
    auto random_matroid = [&]() -> MatroidPtr {
      switch (rng() % 3) {
        case 0: return uniform_matroid(n, static_cast<int>(rng() % (n + 1)));
        case 1: {
          const int blocks = 1 + static_cast<int>(rng() % 3);
          std::vector<int> of(n), caps(blocks);
          for (auto& b : of) b = static_cast<int>(rng() % blocks);
          for (auto& c : caps) c = static_cast<int>(rng() % 3);
          return partition_matroid(of, caps);
        }
        default: {
          const int nodes = 2 + static_cast<int>(rng() % 3);
          Pairs es;
          for (int e = 0; e < n; ++e) {
            const int a = static_cast<int>(rng() % nodes);
            int b = static_cast<int>(rng() % (nodes - 1));
            if (b >= a) ++b;
            es.push_back({a, b});
          }
          const auto g = graphic_matroid(nodes, es);
          for (Mask x = 0; x < bit(n); ++x) CHECK(g->independent(elements(x)) == forest(nodes, es, x));
          return g;
        }
      }
    };
    const MatroidPtr a = random_matroid(), b = random_matroid();
    const auto x = matroid_intersection(*a, *b);
    CHECK(a->independent(x));
    CHECK(b->independent(x));
    CHECK(static_cast<int>(x.size()) == oracle::max_common(n, indep_of(*a), indep_of(*b)));
    const auto bases = enumerate_bases(*a);
    CHECK(oracle::exchange_axiom(bases));
    IntVec c(n);
    for (auto& v : c) v = static_cast<Int>(rng() % 9) - 4;
    Int best = kPosInf;
    for (Mask m : bases) best = std::min(best, sum_over(c, m));
    CHECK(sum_over(c, mask_of(min_cost_basis(*a, c))) == best);
  }
}

TEST_CASE("basis sums and aggregates match enumeration") {
  gen::Rng rng(6);
  for (int it = 0; it < 60; ++it) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<MatroidPtr> ms;
    const int k = 2 + static_cast<int>(rng() % 2);
    for (int j = 0; j < k; ++j) {
      if (rng() % 2) {
        ms.push_back(uniform_matroid(n, 1 + static_cast<int>(rng() % n)));
      } else {
        std::vector<int> of(n);
        for (auto& b : of) b = static_cast<int>(rng() % 2);
        ms.push_back(partition_matroid(of, {1, 1}));
      }
    }
    std::vector<std::vector<Mask>> bs;
    for (const auto& m : ms) bs.push_back(enumerate_bases(*m));
    std::vector<oracle::Vec> sums;
    std::function<void(int, oracle::Vec)> rec = [&](int j, oracle::Vec acc) {
      if (j == k) {
        sums.push_back(acc);
        return;
      }
      for (Mask b : bs[j]) {
        oracle::Vec next = acc;
        for (int s = 0; s < n; ++s) next[s] += has(b, s);
        rec(j + 1, next);
      }
    };
    rec(0, oracle::Vec(n, 0));
    const auto ref = oracle::decmin_set(sums);
    const BasisSumResult got = decmin_basis_sum(ms);
    CHECK(oracle::same_values(got.sum, ref.front()));
    IntVec check(n, 0);
    for (int j = 0; j < k; ++j) {
      CHECK(static_cast<int>(got.bases[j].size()) == ms[j]->rank());
      CHECK(ms[j]->independent(got.bases[j]));
      for (int s : got.bases[j]) ++check[s];
    }
    CHECK(check == got.sum);

    // Per-element bounds on the sum.
    NodeBounds box{IntVec(n), IntVec(n)};
    for (int s = 0; s < n; ++s) {
      box.f[s] = static_cast<Int>(rng() % 2);
      box.g[s] = box.f[s] + static_cast<Int>(rng() % 2);
    }
    std::vector<oracle::Vec> inside;
    for (const auto& v : sums) {
      bool ok = true;
      for (int s = 0; s < n; ++s) ok = ok && v[s] >= box.f[s] && v[s] <= box.g[s];
      if (ok) inside.push_back(v);
    }
    if (inside.empty()) {
      CHECK_THROWS_AS(decmin_basis_sum(ms, box), Infeasible);
    } else {
      CHECK(oracle::same_values(decmin_basis_sum(ms, box).sum, oracle::decmin_set(inside).front()));
    }

    // Aggregate counts over a random partition of the ground set of ms[0].
    const int blocks = 1 + static_cast<int>(rng() % 2);
    std::vector<int> of(n);
    for (auto& b : of) b = static_cast<int>(rng() % blocks);
    std::vector<oracle::Vec> agg;
    for (Mask b : bs[0]) {
      oracle::Vec v(blocks, 0);
      for (int s = 0; s < n; ++s) v[of[s]] += has(b, s);
      agg.push_back(v);
    }
    const AggregateResult ar = decmin_partition_intersection(ms[0], of, blocks);
    CHECK(oracle::same_values(ar.vector, oracle::decmin_set(agg).front()));
    CHECK(static_cast<int>(ar.basis.size()) == ms[0]->rank());
  }
}

TEST_CASE("block matroids of canonical decompositions") {
  gen::Rng rng(10);
  for (int it = 0; it < 40; ++it) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const SetFn p = gen::supermodular_table(rng, n);
    const BaseHandle b = BaseHandle::of(p);
    const auto dm = oracle::decmin_set(oracle::points(fx::values_of(p), n));
    const auto d = canonical_from_decmin(b, dm.front());
    for (int i = 0; i < d.q(); ++i) {
      const auto mi = block_matroid(d, b, i);
      CHECK(mi->size() == card(d.partition[i]));
      CHECK(mi->rank() == d.r[i]);
      CHECK(oracle::exchange_axiom(enumerate_bases(*mi)));
    }
  }
}

TEST_CASE("in/out dec-min orientations match enumeration") {
  gen::Rng rng(15);
  for (int it = 0; it < 80; ++it) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Graph g = gen::multigraph(rng, n, n - 1 + static_cast<int>(rng() % (9 - n)), rng() % 2);
    const auto all = oracle::orientations(n, fx::uedges(g));
    const IntVec deg = g.degrees();
    std::vector<oracle::Vec> ins, outs;
    for (const auto& o : all) {
      ins.push_back(o.indeg);
      oracle::Vec out(n);
      for (int v = 0; v < n; ++v) out[v] = deg[v] - o.indeg[v];
      outs.push_back(out);
    }
    const auto in_min = oracle::decmin_set(ins).front();
    const auto out_min = oracle::decmin_set(outs).front();
    bool exists = false;
    for (size_t i = 0; i < all.size(); ++i)
      exists = exists || (oracle::same_values(ins[i], in_min) && oracle::same_values(outs[i], out_min));
    const auto got = inout_decmin_orientation(g);
    CHECK(got.has_value() == exists);
    if (got) {
      CHECK(oracle::same_values(got->indeg, in_min));
      IntVec out(n);
      for (int v = 0; v < n; ++v) out[v] = deg[v] - got->indeg[v];
      CHECK(oracle::same_values(out, out_min));
    }
  }
}
