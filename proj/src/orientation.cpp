#include "decmin/orientation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "decmin/engine.hpp"
#include "decmin/netflow.hpp"

namespace decmin {

int Graph::add_edge(int u, int v, Int ell, Int cost_uv, Int cost_vu) {
  if (u == v) throw Error("loops are not allowed");
  if (u < 0 || v < 0 || u >= n || v >= n) throw Error("edge endpoint out of range");
  if (ell < 1) throw Error("edge capacity must be positive");
  edges.push_back({u, v, ell, cost_uv, cost_vu});
  return m() - 1;
}

IntVec Graph::degrees() const {
  IntVec d(n, 0);
  for (const auto& e : edges) d[e.u] += e.ell, d[e.v] += e.ell;
  return d;
}

Graph Graph::expanded() const {
  Graph out;
  out.n = n;
  out.labels = labels;
  for (const auto& e : edges)
    for (Int i = 0; i < e.ell; ++i) out.add_edge(e.u, e.v, 1, e.cost_uv, e.cost_vu);
  return out;
}

NodeBounds NodeBounds::none(int n) {
  return {IntVec(n, kNegInf), IntVec(n, kPosInf)};
}

IntVec indegrees(const Graph& g, const std::vector<char>& forward) {
  IntVec d(g.n, 0);
  for (int e = 0; e < g.m(); ++e)
    ++d[forward[e] ? g.edges[e].v : g.edges[e].u];
  return d;
}

Orientation make_orientation(const Graph& g, std::vector<char> forward) {
  Orientation o;
  o.indeg = indegrees(g, forward);
  for (int e = 0; e < g.m(); ++e)
    o.cost += forward[e] ? g.edges[e].cost_uv : g.edges[e].cost_vu;
  o.forward = std::move(forward);
  return o;
}

namespace {

void require_unit(const Graph& g) {
  for (const auto& e : g.edges)
    if (e.ell != 1) throw Error("edge capacities need the capacitated solver");
}

Digraph as_digraph(const Graph& g, const std::vector<char>& forward) {
  Digraph d;
  d.n = g.n;
  for (int e = 0; e < g.m(); ++e) {
    const auto& ed = g.edges[e];
    if (forward[e]) d.add_arc(ed.u, ed.v);
    else d.add_arc(ed.v, ed.u);
  }
  return d;
}

// An orientation under local modification.  Fixed edges are never reversed
// and are invisible to path searches.
class Walker {
 public:
  Walker(const Graph& g, std::vector<char> fwd, std::vector<char> fixed = {})
      : g_(&g), fwd_(std::move(fwd)), fixed_(std::move(fixed)), inc_(g.n) {
    if (fixed_.empty()) fixed_.assign(g.m(), 0);
    indeg_ = indegrees(g, fwd_);
    for (int e = 0; e < g.m(); ++e) {
      inc_[g.edges[e].u].push_back(e);
      inc_[g.edges[e].v].push_back(e);
    }
  }

  int head(int e) const { return fwd_[e] ? g_->edges[e].v : g_->edges[e].u; }
  int tail(int e) const { return fwd_[e] ? g_->edges[e].u : g_->edges[e].v; }
  const IntVec& indeg() const { return indeg_; }
  const std::vector<char>& forward() const { return fwd_; }
  int n() const { return g_->n; }

  void flip(int e) {
    --indeg_[head(e)];
    fwd_[e] ^= 1;
    ++indeg_[head(e)];
  }

  // via[x]: arc leaving x on a path toward t; -2 marks t, -1 unreached.
  std::vector<int> reach_to(int t) const {
    std::vector<int> via(g_->n, -1);
    via[t] = -2;
    std::queue<int> q;
    q.push(t);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int e : inc_[x]) {
        if (fixed_[e] || head(e) != x) continue;
        const int y = tail(e);
        if (via[y] == -1) via[y] = e, q.push(y);
      }
    }
    return via;
  }

  // via[y]: arc entering y on a path from s; -2 marks s, -1 unreached.
  std::vector<int> reach_from(int s) const {
    std::vector<int> via(g_->n, -1);
    via[s] = -2;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int e : inc_[x]) {
        if (fixed_[e] || tail(e) != x) continue;
        const int y = head(e);
        if (via[y] == -1) via[y] = e, q.push(y);
      }
    }
    return via;
  }

  void reverse_to(int s, const std::vector<int>& via) {
    for (int cur = s; via[cur] != -2;) {
      const int e = via[cur];
      const int next = head(e);
      flip(e);
      cur = next;
    }
  }

  void reverse_from(int t, const std::vector<int>& via) {
    for (int cur = t; via[cur] != -2;) {
      const int e = via[cur];
      const int prev = tail(e);
      flip(e);
      cur = prev;
    }
  }

  Orientation result() const { return make_orientation(*g_, fwd_); }

 private:
  const Graph* g_;
  std::vector<char> fwd_, fixed_;
  IntVec indeg_;
  std::vector<std::vector<int>> inc_;
};

std::vector<int> reached(const std::vector<int>& via) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(via.size()); ++v)
    if (via[v] != -1) out.push_back(v);
  return out;
}

// Path reversals until f <= indeg <= g, or a witness of infeasibility.
void make_bounded(Walker& w, const NodeBounds& b) {
  const int n = w.n();
  while (true) {
    int t = -1;
    for (int v = 0; v < n && t < 0; ++v)
      if (w.indeg()[v] > b.g[v]) t = v;
    if (t < 0) break;
    const auto via = w.reach_to(t);
    int s = -1;
    for (int v = 0; v < n && s < 0; ++v)
      if (via[v] != -1 && v != t && w.indeg()[v] < b.g[v]) s = v;
    if (s < 0)
      throw Infeasible("upper in-degree bounds cannot be met", reached(via));
    w.reverse_to(s, via);
  }
  while (true) {
    int s = -1;
    for (int v = 0; v < n && s < 0; ++v)
      if (w.indeg()[v] < b.f[v]) s = v;
    if (s < 0) break;
    const auto via = w.reach_from(s);
    int t = -1;
    for (int v = 0; v < n && t < 0; ++v)
      if (via[v] != -1 && v != s && w.indeg()[v] > b.f[v]) t = v;
    if (t < 0)
      throw Infeasible("lower in-degree bounds cannot be met", reached(via));
    w.reverse_from(t, via);
  }
}

std::vector<int> by_indeg_desc(const IntVec& d) {
  std::vector<int> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int c) { return d[a] > d[c]; });
  return order;
}

// Reverse improving dipaths, highest in-degree end-node first.
void improve(Walker& w, const NodeBounds& b) {
  const int n = w.n();
  while (true) {
    bool moved = false;
    for (int t : by_indeg_desc(w.indeg())) {
      const Int dt = w.indeg()[t];
      if (dt <= b.f[t]) continue;
      const auto via = w.reach_to(t);
      int s = -1;
      for (int v = 0; v < n; ++v) {
        if (via[v] == -1 || v == t) continue;
        const Int dv = w.indeg()[v];
        if (dv > dt - 2 || dv >= b.g[v]) continue;
        if (s < 0 || dv < w.indeg()[s]) s = v;
      }
      if (s >= 0) {
        w.reverse_to(s, via);
        moved = true;
        break;
      }
    }
    if (!moved) return;
  }
}

void check_bounds(const Graph& g, const NodeBounds& b) {
  if (static_cast<int>(b.f.size()) != g.n || static_cast<int>(b.g.size()) != g.n)
    throw Error("bounds length mismatch");
}

class OrientationMembership : public MembershipOracle {
 public:
  explicit OrientationMembership(const Graph& g) : g_(g) {}
  bool member(const IntVec& m) const override {
    Int total = 0;
    for (Int v : m) total += v;
    if (total != g_.m()) return false;
    Walker w(g_, std::vector<char>(g_.m(), 1));
    try {
      make_bounded(w, {m, m});
    } catch (const Infeasible&) {
      return false;
    }
    return true;
  }

 protected:
  Graph g_;
};

// Exchanges at the in-degree vector of a fixed orientation are answered by
// reachability; other vectors fall back to repair.
class FixedOrientationOracle final : public OrientationMembership {
 public:
  FixedOrientationOracle(const Graph& g, const Orientation& d)
      : OrientationMembership(g), indeg_(d.indeg), reach_(g.n) {
    Walker w(g_, d.forward);
    for (int t = 0; t < g.n; ++t) reach_[t] = w.reach_to(t);
  }
  bool exchange(const IntVec& m, int s, int t) const override {
    if (m == indeg_) return reach_[t][s] != -1;
    return MembershipOracle::exchange(m, s, t);
  }

 private:
  IntVec indeg_;
  std::vector<std::vector<int>> reach_;
};

BaseHandle base_with(const Graph& g, std::shared_ptr<const MembershipOracle> fast,
                     const std::optional<NodeBounds>& b) {
  std::vector<WeightedEdge> we;
  for (const auto& e : g.edges) we.push_back({e.u, e.v, e.ell});
  BaseHandle h = BaseHandle::of(make_induced(g.n, std::move(we)));
  h.fast = std::move(fast);
  if (b) h = h.with_box(b->f, b->g);
  return h;
}

}  // namespace

bool is_k_edge_connected(const Graph& g, const Orientation& d, int k) {
  if (k <= 0 || g.n <= 1) return true;
  const Digraph dg = as_digraph(g, d.forward);
  for (int v = 1; v < g.n; ++v) {
    if (!arc_disjoint_paths_at_least(dg, 0, v, k)) return false;
    if (!arc_disjoint_paths_at_least(dg, v, 0, k)) return false;
  }
  return true;
}

Orientation bounded_orientation(const Graph& g, const NodeBounds& b) {
  require_unit(g);
  check_bounds(g, b);
  Walker w(g, std::vector<char>(g.m(), 1));
  make_bounded(w, b);
  return w.result();
}

Orientation orient_with_indegrees(const Graph& g, const IntVec& m) {
  if (static_cast<int>(m.size()) != g.n) throw Error("vector length mismatch");
  Int total = 0;
  for (Int v : m) total += v;
  if (total != g.m()) {
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    throw Infeasible("in-degree sum differs from the number of edges", all);
  }
  return bounded_orientation(g, {m, m});
}

Orientation decmin_orientation(const Graph& g) {
  return decmin_orientation_bounded(g, NodeBounds::none(g.n));
}

Orientation decmin_orientation_bounded(const Graph& g, const NodeBounds& b) {
  require_unit(g);
  check_bounds(g, b);
  Walker w(g, std::vector<char>(g.m(), 1));
  make_bounded(w, b);
  improve(w, b);
  return w.result();
}

BaseHandle orientation_base(const Graph& g, const std::optional<NodeBounds>& b) {
  return base_with(g, std::make_shared<OrientationMembership>(g), b);
}

CanonicalDecomposition orientation_canonical(const Graph& g, const Orientation& d,
                                             const std::optional<NodeBounds>& b) {
  require_unit(g);
  const BaseHandle h =
      base_with(g, std::make_shared<FixedOrientationOracle>(g, d), b);
  return canonical_from_decmin(h, d.indeg);
}

Orientation cheapest_decmin_orientation_bounded(const Graph& g,
                                                const NodeBounds& b) {
  const Orientation d = decmin_orientation_bounded(g, b);
  const CanonicalDecomposition dc = orientation_canonical(g, d, b);
  Walker w(g, d.forward);

  // Z_i: nodes reachable from a node outside C_i that is below its bound.
  // V - Z_i attains the boxed value of C_i, so in every dec-min orientation
  // no arc enters it, C_i n Z_i sits at f and (V - Z_i) - C_i sits at g.
  std::vector<char> fixed(g.m(), 0);
  std::vector<char> pinned(g.n, 0);
  for (int i = 0; i < dc.q(); ++i) {
    std::vector<char> z(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
      if (has(dc.chain[i], s) || d.indeg[s] >= b.g[s]) continue;
      for (int v : reached(w.reach_from(s))) z[v] = 1;
    }
    for (int e = 0; e < g.m(); ++e)
      if (z[g.edges[e].u] != z[g.edges[e].v]) fixed[e] = 1;
    for (int v = 0; v < g.n; ++v)
      if (has(dc.chain[i], v) == static_cast<bool>(z[v])) pinned[v] = 1;
  }

  NodeBounds star = b;
  for (int v = 0; v < g.n; ++v)
    if (pinned[v]) star.f[v] = star.g[v] = d.indeg[v];
  for (int i = 0; i < dc.q(); ++i)
    for (int v : elements(dc.partition[i])) {
      star.f[v] = std::max(star.f[v], dc.betas[i] - 1);
      star.g[v] = std::min(star.g[v], dc.betas[i]);
    }

  std::vector<int> free;
  IntVec fixed_in(g.n, 0);
  for (int e = 0; e < g.m(); ++e) {
    if (fixed[e]) ++fixed_in[w.head(e)];
    else free.push_back(e);
  }
  const int nf = static_cast<int>(free.size());
  FlowProblem fp;
  fp.n = g.n + nf + 2;
  const int src = g.n + nf, snk = src + 1;
  std::vector<int> to_v(nf);
  for (int i = 0; i < nf; ++i) {
    const auto& ed = g.edges[free[i]];
    fp.add_arc(src, g.n + i, 1, 1);
    to_v[i] = fp.add_arc(g.n + i, ed.v, 0, 1, ed.cost_uv);
    fp.add_arc(g.n + i, ed.u, 0, 1, ed.cost_vu);
  }
  for (int v = 0; v < g.n; ++v) {
    const Int lo = std::max<Int>(0, sat_sub(star.f[v], fixed_in[v]));
    const Int hi = sat_sub(star.g[v], fixed_in[v]);
    if (hi < lo) throw Infeasible("empty in-degree window", {v});
    fp.add_arc(v, snk, lo, hi);
  }
  fp.add_arc(snk, src, nf, nf);
  fp.demand.assign(fp.n, 0);
  const FlowOutcome out = min_cost_flow(fp);
  if (!out.feasible) throw Infeasible("no cheapest orientation", out.violating);
  std::vector<char> fwd = d.forward;
  for (int i = 0; i < nf; ++i) fwd[free[i]] = out.flow[to_v[i]] == 1;
  return make_orientation(g, std::move(fwd));
}

MinTResult decmin_orientation_minT_detail(const Graph& g, const NodeBounds& b,
                                          const std::vector<int>& t) {
  require_unit(g);
  check_bounds(g, b);
  std::vector<char> in_t(g.n, 0);
  for (int v : t) in_t.at(v) = 1;
  Walker w(g, std::vector<char>(g.m(), 1));
  make_bounded(w, b);

  // Lower the in-degree of T while an admissible s -> t dipath exists.
  bool moved = true;
  while (moved) {
    moved = false;
    for (int x = 0; x < g.n && !moved; ++x) {
      if (!in_t[x] || w.indeg()[x] <= b.f[x]) continue;
      const auto via = w.reach_to(x);
      for (int s = 0; s < g.n; ++s) {
        if (via[s] == -1 || in_t[s] || w.indeg()[s] >= b.g[s]) continue;
        w.reverse_to(s, via);
        moved = true;
        break;
      }
    }
  }

  std::vector<char> xt(g.n, 0);
  for (int x = 0; x < g.n; ++x) {
    if (!in_t[x] || w.indeg()[x] <= b.f[x]) continue;
    for (int v : reached(w.reach_to(x))) xt[v] = 1;
  }
  NodeBounds tight = b;
  for (int v = 0; v < g.n; ++v) {
    if (xt[v] && !in_t[v]) tight.f[v] = b.g[v];
    if (in_t[v] && !xt[v]) tight.g[v] = b.f[v];
  }
  std::vector<char> fixed(g.m(), 0);
  for (int e = 0; e < g.m(); ++e)
    if (xt[g.edges[e].u] != xt[g.edges[e].v]) fixed[e] = 1;

  Walker rest(g, w.forward(), fixed);
  improve(rest, tight);
  MinTResult r;
  r.orientation = rest.result();
  for (int v = 0; v < g.n; ++v)
    if (xt[v]) r.x_t.push_back(v);
  r.tightened = tight;
  return r;
}

Orientation decmin_orientation_minT(const Graph& g, const NodeBounds& b,
                                    const std::vector<int>& t) {
  return decmin_orientation_minT_detail(g, b, t).orientation;
}

namespace {

Int connectivity_deficit(const Graph& g, const std::vector<char>& fwd, int k) {
  const Digraph d = as_digraph(g, fwd);
  Int deficit = 0;
  for (int v = 1; v < g.n; ++v) {
    deficit += std::max<Int>(0, k - max_flow(d, 0, v, k).value);
    deficit += std::max<Int>(0, k - max_flow(d, v, 0, k).value);
  }
  return deficit;
}

// Reverse single admissible dipaths while the connectivity deficit drops.
bool repair_connectivity(Walker& w, const Graph& g, int k, const NodeBounds& b) {
  Int deficit = connectivity_deficit(g, w.forward(), k);
  while (deficit > 0) {
    bool improved = false;
    for (int t = 0; t < g.n && !improved; ++t) {
      if (w.indeg()[t] <= b.f[t]) continue;
      const auto via = w.reach_to(t);
      for (int s = 0; s < g.n && !improved; ++s) {
        if (s == t || via[s] == -1 || w.indeg()[s] >= b.g[s]) continue;
        Walker trial = w;
        trial.reverse_to(s, via);
        const Int d = connectivity_deficit(g, trial.forward(), k);
        if (d < deficit) {
          w = trial;
          deficit = d;
          improved = true;
        }
      }
    }
    if (!improved) return false;
  }
  return true;
}

std::optional<std::vector<char>> search_korient(const Graph& g, int k,
                                                const NodeBounds& b) {
  const int m = g.m();
  if (m > 30) throw CeilingExceeded("orientation search beyond 30 edges");
  std::vector<char> fwd(m, 1);
  IntVec in(g.n, 0), out(g.n, 0), left = g.degrees();
  std::function<bool(int)> rec = [&](int idx) -> bool {
    if (idx == m) {
      return connectivity_deficit(g, fwd, k) == 0;
    }
    const auto& e = g.edges[idx];
    --left[e.u], --left[e.v];
    for (int dir = 1; dir >= 0; --dir) {
      const int h = dir ? e.v : e.u, tl = dir ? e.u : e.v;
      ++in[h], ++out[tl];
      fwd[idx] = static_cast<char>(dir);
      bool ok = in[h] <= b.g[h];
      for (int x : {e.u, e.v}) {
        ok = ok && in[x] + left[x] >= std::max<Int>(b.f[x], k) &&
             out[x] + left[x] >= k;
      }
      if (ok && rec(idx + 1)) return true;
      --in[h], --out[tl];
    }
    ++left[e.u], ++left[e.v];
    return false;
  };
  if (rec(0)) return fwd;
  return std::nullopt;
}

}  // namespace

Orientation decmin_korient(const Graph& g, int k, const NodeBounds& b) {
  if (k <= 0) return decmin_orientation_bounded(g, b);
  require_unit(g);
  check_bounds(g, b);
  Walker w(g, std::vector<char>(g.m(), 1));
  make_bounded(w, b);
  improve(w, b);
  if (!repair_connectivity(w, g, k, b)) {
    auto found = search_korient(g, k, b);
    if (!found) {
      std::vector<int> all(g.n);
      std::iota(all.begin(), all.end(), 0);
      throw Infeasible("no k-edge-connected bounded orientation", all);
    }
    w = Walker(g, *found);
  }

  while (true) {
    bool moved = false;
    const Digraph dg = as_digraph(g, w.forward());
    for (int t : by_indeg_desc(w.indeg())) {
      const Int dt = w.indeg()[t];
      if (dt <= b.f[t]) continue;
      std::vector<int> cand;
      for (int s = 0; s < g.n; ++s)
        if (s != t && w.indeg()[s] <= dt - 2 && w.indeg()[s] < b.g[s]) cand.push_back(s);
      std::stable_sort(cand.begin(), cand.end(),
                       [&](int a, int c) { return w.indeg()[a] < w.indeg()[c]; });
      for (int s : cand) {
        if (!arc_disjoint_paths_at_least(dg, s, t, k + 1)) continue;
        w.reverse_to(s, w.reach_to(t));
        moved = true;
        break;
      }
      if (moved) break;
    }
    if (!moved) break;
  }
  return w.result();
}

IntVec capacitated_indegrees(const Graph& g, const std::vector<Int>& z) {
  IntVec d(g.n, 0);
  for (int e = 0; e < g.m(); ++e) {
    d[g.edges[e].v] += z[e];
    d[g.edges[e].u] += g.edges[e].ell - z[e];
  }
  return d;
}

CapacitatedOrientation capacitated_decmin_orientation(const Graph& g) {
  const int n = g.n;
  std::vector<Int> z(g.m());
  for (int e = 0; e < g.m(); ++e) z[e] = g.edges[e].ell / 2;
  IntVec d = capacitated_indegrees(g, z);
  std::vector<std::vector<int>> inc(n);
  for (int e = 0; e < g.m(); ++e) {
    inc[g.edges[e].u].push_back(e);
    inc[g.edges[e].v].push_back(e);
  }
  // Units oriented from x across e toward the other end.
  auto units_from = [&](int e, int x) {
    return x == g.edges[e].u ? z[e] : g.edges[e].ell - z[e];
  };
  auto other = [&](int e, int x) {
    return x == g.edges[e].u ? g.edges[e].v : g.edges[e].u;
  };

  while (true) {
    bool moved = false;
    for (int t : by_indeg_desc(d)) {
      std::vector<int> via(n, -1);
      via[t] = -2;
      std::queue<int> q;
      q.push(t);
      while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (int e : inc[x]) {
          const int y = other(e, x);
          if (via[y] == -1 && units_from(e, y) > 0) via[y] = e, q.push(y);
        }
      }
      int s = -1;
      for (int v = 0; v < n; ++v)
        if (via[v] != -1 && v != t && d[v] <= d[t] - 2 && (s < 0 || d[v] < d[s])) s = v;
      if (s < 0) continue;
      Int delta = (d[t] - d[s]) / 2;
      for (int cur = s; via[cur] != -2; cur = other(via[cur], cur))
        delta = std::min(delta, units_from(via[cur], cur));
      for (int cur = s; via[cur] != -2;) {
        const int e = via[cur];
        if (cur == g.edges[e].u) z[e] -= delta;
        else z[e] += delta;
        cur = other(e, cur);
      }
      d[s] += delta;
      d[t] -= delta;
      moved = true;
      break;
    }
    if (!moved) break;
  }
  return {z, d};
}

namespace {

class CapacitatedMembership final : public MembershipOracle {
 public:
  explicit CapacitatedMembership(const Graph& g) : g_(g) {}
  bool member(const IntVec& m) const override {
    FlowProblem fp;
    fp.n = g_.n;
    fp.demand = m;
    Int total = 0;
    for (Int v : m) total += v;
    Int cap = 0;
    for (const auto& e : g_.edges) cap += e.ell;
    if (total != cap) return false;
    for (const auto& e : g_.edges) {
      fp.add_arc(e.u, e.v, 0, e.ell);
      fp.demand[e.u] -= e.ell;  // net in-flow target is m minus out-capacity
    }
    return feasible_m_flow(fp).feasible;
  }

 private:
  Graph g_;
};

}  // namespace

BaseHandle capacitated_base(const Graph& g) {
  std::vector<BoundedArc> arcs;
  IntVec out_cap(g.n, 0);
  for (const auto& e : g.edges) {
    arcs.push_back({e.u, e.v, 0, e.ell});
    out_cap[e.u] += e.ell;
  }
  BaseHandle h = BaseHandle::of(shifted(make_flow_induced(g.n, arcs), out_cap));
  h.fast = std::make_shared<CapacitatedMembership>(g);
  return h;
}

}  // namespace decmin
