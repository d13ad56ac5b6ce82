#include "decmin/random.hpp"

#include <algorithm>

namespace decmin::gen {

namespace {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

SetFn supermodular_table(Rng& rng, int n, Int lo, Int hi) {
  if (n < 1 || n > 16) throw Error("table size out of range");
  const std::size_t size = std::size_t{1} << n;
  while (true) {
    std::vector<Int> values(size, 0);
    IntVec shift(n);
    for (auto& a : shift) a = uniform_int(rng, -1, 1);
    const int terms = uniform_int(rng, 0, 3);
    std::vector<std::pair<Mask, int>> convex;
    for (int k = 0; k < terms; ++k) {
      const Mask a = static_cast<Mask>(uniform_int(rng, 1, static_cast<int>(size) - 1));
      convex.emplace_back(a, uniform_int(rng, 0, std::max(0, card(a) - 1)));
    }
    bool ok = true;
    for (Mask x = 0; x < size && ok; ++x) {
      Int v = sum_over(shift, x);
      for (auto [a, c] : convex) v += std::max(0, card(x & a) - c);
      values[x] = v;
      ok = v >= lo && v <= hi;
    }
    if (ok) return make_table(n, std::move(values));
  }
}

Graph multigraph(Rng& rng, int n, int m, bool connected) {
  if (n < 2 && m > 0) throw Error("edges need two nodes");
  if (connected && m < n - 1) throw Error("too few edges to connect");
  Graph g;
  g.n = n;
  if (connected) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) g.add_edge(order[uniform_int(rng, 0, i - 1)], order[i]);
  }
  while (g.m() < m) {
    const int u = uniform_int(rng, 0, n - 1), v = uniform_int(rng, 0, n - 1);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

SetFn induced_of(const Graph& g) {
  std::vector<WeightedEdge> we;
  for (const auto& e : g.edges) we.push_back({e.u, e.v, e.ell});
  return make_induced(g.n, std::move(we));
}

}  // namespace decmin::gen
