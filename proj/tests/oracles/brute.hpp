#pragma once

// Exhaustive reference implementations.  They only read instance data
// (set-function values, edge lists) and never call the solvers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Mask = std::uint64_t;
using SetValue = std::function<Int(Mask)>;

inline constexpr Int kNone = INT64_MIN;

inline int popcount(Mask x) { return __builtin_popcountll(x); }
inline bool in(Mask x, int i) { return (x >> i) & 1U; }
inline Mask full(int n) { return (Mask{1} << n) - 1; }

inline Int total(const Vec& v, Mask x) {
  Int s = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (in(x, static_cast<int>(i))) s += v[i];
  return s;
}

inline Vec sorted_desc(Vec v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}
inline Vec sorted_asc(Vec v) {
  std::sort(v.begin(), v.end());
  return v;
}
inline bool dec_less(const Vec& a, const Vec& b) { return sorted_desc(a) < sorted_desc(b); }
inline bool inc_greater(const Vec& a, const Vec& b) { return sorted_asc(a) > sorted_asc(b); }
inline bool same_values(const Vec& a, const Vec& b) { return sorted_asc(a) == sorted_asc(b); }

inline Int square_sum(const Vec& v) {
  Int s = 0;
  for (Int x : v) s += x * x;
  return s;
}

inline Int diff_sum(const Vec& v) {
  Int s = 0;
  for (Int a : v)
    for (Int b : v) s += a > b ? a - b : b - a;
  return s;
}

inline Int k_largest(const Vec& v, int k) {
  const Vec d = sorted_desc(v);
  Int s = 0;
  for (int i = 0; i < k; ++i) s += d[i];
  return s;
}

// m(X) >= p(X) for all X and m(S) = p(S); p values of kNone are skipped.
inline bool member(const SetValue& p, int n, const Vec& m) {
  if (total(m, full(n)) != p(full(n))) return false;
  for (Mask x = 1; x < full(n); ++x) {
    const Int v = p(x);
    if (v != kNone && total(m, x) < v) return false;
  }
  return true;
}

// All integral members of B'(p), inside [lo, hi] when given.
inline std::vector<Vec> points(const SetValue& p, int n, std::optional<Vec> lo = {},
                               std::optional<Vec> hi = {}) {
  const Int ps = p(full(n));
  Vec a(n), b(n);
  for (int s = 0; s < n; ++s) {
    const Int single = p(Mask{1} << s);
    const Int rest = p(full(n) & ~(Mask{1} << s));
    a[s] = single == kNone ? -64 : single;
    b[s] = rest == kNone ? 64 : ps - rest;
    if (lo) a[s] = std::max(a[s], (*lo)[s]);
    if (hi) b[s] = std::min(b[s], (*hi)[s]);
  }
  std::vector<Vec> out;
  Vec m(n);
  std::function<void(int, Int)> rec = [&](int s, Int sum) {
    if (s == n - 1) {
      m[s] = ps - sum;
      if (m[s] >= a[s] && m[s] <= b[s] && member(p, n, m)) out.push_back(m);
      return;
    }
    for (Int v = a[s]; v <= b[s]; ++v) {
      m[s] = v;
      rec(s + 1, sum + v);
    }
  };
  rec(0, 0);
  return out;
}

inline std::vector<Vec> decmin_set(const std::vector<Vec>& pts) {
  std::vector<Vec> out;
  for (const auto& p : pts) {
    if (out.empty() || dec_less(p, out[0])) out = {p};
    else if (same_values(p, out[0])) out.push_back(p);
  }
  return out;
}

inline std::vector<Vec> incmax_set(const std::vector<Vec>& pts) {
  std::vector<Vec> out;
  for (const auto& p : pts) {
    if (out.empty() || inc_greater(p, out[0])) out = {p};
    else if (same_values(p, out[0])) out.push_back(p);
  }
  return out;
}

template <typename F>
std::vector<Vec> argmin(const std::vector<Vec>& pts, F&& f) {
  std::vector<Vec> out;
  Int best = 0;
  for (const auto& p : pts) {
    const Int v = f(p);
    if (out.empty() || v < best) out = {p}, best = v;
    else if (v == best) out.push_back(p);
  }
  return out;
}

// max over nonempty X with finite p of ceil(p(X) / |X|).
inline Int max_ratio(const SetValue& p, int n) {
  Int best = kNone;
  for (Mask x = 1; x <= full(n); ++x) {
    const Int v = p(x);
    if (v == kNone) continue;
    const Int c = popcount(x);
    const Int q = v >= 0 ? (v + c - 1) / c : -((-v) / c);
    best = std::max(best, q);
  }
  return best;
}

// Intersection of all m-tight sets containing t.
inline Mask smallest_tight(const SetValue& p, int n, const Vec& m, int t) {
  Mask out = full(n);
  for (Mask x = 1; x <= full(n); ++x)
    if (in(x, t) && p(x) != kNone && total(m, x) == p(x)) out &= x;
  return out;
}

struct Chain {
  std::vector<Mask> chain;
  std::vector<Int> betas;
  bool operator==(const Chain&) const = default;
};

// Canonical chain and values from a dec-min element, tight sets by scan.
inline Chain canonical_chain(const SetValue& p, int n, const Vec& m) {
  Chain c;
  Mask done = 0;
  while (done != full(n)) {
    Int beta = kNone;
    for (int s = 0; s < n; ++s)
      if (!in(done, s)) beta = std::max(beta, m[s]);
    Mask next = done;
    for (int u = 0; u < n; ++u)
      if (m[u] >= beta) next |= smallest_tight(p, n, m, u);
    c.chain.push_back(next);
    c.betas.push_back(beta);
    done = next;
  }
  return c;
}

// ---- graphs ------------------------------------------------------------------

struct UEdge {
  int u, v;
};

struct BruteOrientation {
  Mask forward;  // bit e: edge e points u -> v
  Vec indeg;
};

inline std::vector<BruteOrientation> orientations(int n, const std::vector<UEdge>& edges) {
  const int m = static_cast<int>(edges.size());
  if (m > 24) throw std::runtime_error("too many edges for enumeration");
  std::vector<BruteOrientation> out;
  for (Mask x = 0; x < (Mask{1} << m); ++x) {
    Vec d(n, 0);
    for (int e = 0; e < m; ++e) ++d[in(x, e) ? edges[e].v : edges[e].u];
    out.push_back({x, d});
  }
  return out;
}

// Every nonempty proper node set is entered by at least k arcs.
inline bool k_connected(int n, const std::vector<UEdge>& edges, Mask fwd, int k) {
  if (k <= 0 || n <= 1) return true;
  for (Mask z = 1; z < full(n); ++z) {
    int entering = 0;
    for (size_t e = 0; e < edges.size(); ++e) {
      const int tail = in(fwd, static_cast<int>(e)) ? edges[e].u : edges[e].v;
      const int head = in(fwd, static_cast<int>(e)) ? edges[e].v : edges[e].u;
      if (in(z, head) && !in(z, tail)) ++entering;
    }
    if (entering < k) return false;
  }
  return true;
}

// i_G(X).
inline Int induced(const std::vector<UEdge>& edges, Mask x) {
  Int c = 0;
  for (const auto& e : edges)
    if (in(x, e.u) && in(x, e.v)) ++c;
  return c;
}

// Number of arc-disjoint s-t dipaths (unit-capacity augmenting paths).
inline int disjoint_paths(int n, std::vector<std::pair<int, int>> arcs, int s, int t) {
  std::vector<char> used(arcs.size(), 0);
  int count = 0;
  for (;;) {
    // Residual: unused arc forward, used arc backward.
    std::vector<int> via(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<int> queue{s};
    seen[s] = 1;
    for (size_t h = 0; h < queue.size() && !seen[t]; ++h) {
      const int x = queue[h];
      for (size_t a = 0; a < arcs.size(); ++a) {
        int y = -1;
        if (!used[a] && arcs[a].first == x) y = arcs[a].second;
        if (used[a] && arcs[a].second == x) y = arcs[a].first;
        if (y < 0 || seen[y]) continue;
        seen[y] = 1;
        via[y] = static_cast<int>(a);
        queue.push_back(y);
      }
    }
    if (!seen[t]) return count;
    for (int y = t; y != s;) {
      const int a = via[y];
      used[a] ^= 1;
      y = used[a] ? arcs[a].first : arcs[a].second;
    }
    ++count;
  }
}

// An st-dipath (k+1 arc-disjoint ones when k >= 1) with
// indeg(t) >= indeg(s) + 2, indeg(s) < g(s) and indeg(t) > f(t).
inline bool improving_path(int n, const std::vector<UEdge>& edges, Mask fwd, const Vec& f,
                           const Vec& g, int k) {
  std::vector<std::pair<int, int>> arcs;
  Vec d(n, 0);
  for (size_t e = 0; e < edges.size(); ++e) {
    const bool dir = in(fwd, static_cast<int>(e));
    arcs.push_back(dir ? std::pair{edges[e].u, edges[e].v} : std::pair{edges[e].v, edges[e].u});
    ++d[arcs.back().second];
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t || d[t] < d[s] + 2 || d[s] >= g[s] || d[t] <= f[t]) continue;
      if (disjoint_paths(n, arcs, s, t) >= (k >= 1 ? k + 1 : 1)) return true;
    }
  return false;
}

inline std::vector<Vec> unique_vectors(std::vector<Vec> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// ---- matroids ----------------------------------------------------------------

using IndepTest = std::function<bool(Mask)>;

inline std::vector<Mask> bases(int n, const IndepTest& indep) {
  int r = 0;
  for (Mask x = 0; x <= full(n); ++x)
    if (indep(x)) r = std::max(r, popcount(x));
  std::vector<Mask> out;
  for (Mask x = 0; x <= full(n); ++x)
    if (popcount(x) == r && indep(x)) out.push_back(x);
  return out;
}

inline int max_common(int n, const IndepTest& a, const IndepTest& b) {
  int best = 0;
  for (Mask x = 0; x <= full(n); ++x)
    if (popcount(x) > best && a(x) && b(x)) best = popcount(x);
  return best;
}

// Symmetric basis exchange over a 0/1 family given as masks.
inline bool exchange_axiom(const std::vector<Mask>& family) {
  auto contains = [&](Mask x) {
    return std::find(family.begin(), family.end(), x) != family.end();
  };
  for (Mask a : family)
    for (Mask b : family)
      for (int x = 0; x < 64; ++x) {
        if (!in(a & ~b, x)) continue;
        bool ok = false;
        for (int y = 0; y < 64 && !ok; ++y)
          if (in(b & ~a, y)) ok = contains((a & ~(Mask{1} << x)) | (Mask{1} << y));
        if (!ok) return false;
      }
  return true;
}

// ---- flows -------------------------------------------------------------------

struct FArc {
  int from, to;
  Int lower, upper, cost;
};

// Cheapest integral flow meeting net in-flow demands; nullopt if none.
inline std::optional<Int> min_cost_flow(int n, const std::vector<FArc>& arcs, const Vec& demand) {
  std::optional<Int> best;
  std::vector<Int> z(arcs.size());
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == arcs.size()) {
      Vec net(n, 0);
      Int cost = 0;
      for (size_t a = 0; a < arcs.size(); ++a) {
        net[arcs[a].to] += z[a];
        net[arcs[a].from] -= z[a];
        cost += z[a] * arcs[a].cost;
      }
      if (net == demand && (!best || cost < *best)) best = cost;
      return;
    }
    for (Int v = arcs[i].lower; v <= arcs[i].upper; ++v) {
      z[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return best;
}

// Minimum s-t cut capacity by scanning node sets.
inline Int min_cut(int n, const std::vector<FArc>& arcs, int s, int t) {
  Int best = INT64_MAX;
  for (Mask z = 0; z <= full(n); ++z) {
    if (!in(z, s) || in(z, t)) continue;
    Int c = 0;
    for (const auto& a : arcs)
      if (in(z, a.from) && !in(z, a.to)) c += a.upper;
    best = std::min(best, c);
  }
  return best;
}

}  // namespace oracle
