#include "decmin/netflow.hpp"

#include <algorithm>
#include <queue>

namespace decmin {

int Digraph::add_arc(int u, int v, Int cap, Int cost) {
  if (u == v) throw Error("loops are not allowed");
  arcs.push_back({u, v, cap, cost});
  return static_cast<int>(arcs.size()) - 1;
}

int FlowProblem::add_arc(int u, int v, Int lower, Int upper, Int cost) {
  arcs.push_back({u, v, lower, upper, cost});
  return static_cast<int>(arcs.size()) - 1;
}

namespace {

// Paired residual edges: edge e and e ^ 1 are reverses of each other.
class Residual {
 public:
  explicit Residual(int n) : adj_(n) {}

  int add(int u, int v, Int cap, Int cost = 0) {
    const int e = static_cast<int>(to_.size());
    to_.push_back(v), cap_.push_back(cap), cost_.push_back(cost);
    to_.push_back(u), cap_.push_back(0), cost_.push_back(-cost);
    adj_[u].push_back(e);
    adj_[v].push_back(e + 1);
    return e;
  }

  Int pushed(int e) const { return cap_[e ^ 1]; }
  int nodes() const { return static_cast<int>(adj_.size()); }

  Int max_flow(int s, int t, Int limit) {
    Int total = 0;
    std::vector<int> via(nodes());
    while (total < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(s);
      via[s] = -2;
      while (!q.empty() && via[t] == -1) {
        const int u = q.front();
        q.pop();
        for (int e : adj_[u]) {
          if (cap_[e] > 0 && via[to_[e]] == -1) {
            via[to_[e]] = e;
            q.push(to_[e]);
          }
        }
      }
      if (via[t] == -1) break;
      Int push = limit - total;
      for (int v = t; v != s; v = to_[via[v] ^ 1]) push = std::min(push, cap_[via[v]]);
      for (int v = t; v != s; v = to_[via[v] ^ 1]) augment(via[v], push);
      total += push;
    }
    return total;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(nodes(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int e : adj_[u])
        if (cap_[e] > 0 && !seen[to_[e]]) seen[to_[e]] = 1, stack.push_back(to_[e]);
    }
    return seen;
  }

  // Ships up to `need` units of cheapest flow; costs must start non-negative.
  Int min_cost(int s, int t, Int need, Int& cost) {
    const int n = nodes();
    std::vector<Int> pot(n, 0), dist(n);
    std::vector<int> via(n);
    Int sent = 0;
    while (sent < need) {
      std::fill(dist.begin(), dist.end(), kPosInf);
      std::fill(via.begin(), via.end(), -1);
      using Item = std::pair<Int, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
      dist[s] = 0;
      pq.push({0, s});
      while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du != dist[u]) continue;
        for (int e : adj_[u]) {
          if (cap_[e] <= 0) continue;
          const int v = to_[e];
          const Int nd = du + cost_[e] + pot[u] - pot[v];
          if (nd < dist[v]) {
            dist[v] = nd;
            via[v] = e;
            pq.push({nd, v});
          }
        }
      }
      if (dist[t] == kPosInf) break;
      for (int v = 0; v < n; ++v)
        if (dist[v] != kPosInf) pot[v] += dist[v];
      Int push = need - sent;
      for (int v = t; v != s; v = to_[via[v] ^ 1]) push = std::min(push, cap_[via[v]]);
      for (int v = t; v != s; v = to_[via[v] ^ 1]) {
        augment(via[v], push);
        cost += push * cost_[via[v]];
      }
      sent += push;
    }
    return sent;
  }

 private:
  void augment(int e, Int amount) {
    if (cap_[e] != kPosInf) cap_[e] -= amount;
    if (cap_[e ^ 1] != kPosInf) cap_[e ^ 1] += amount;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<Int> cap_, cost_;
};

}  // namespace

MaxFlowResult max_flow(const Digraph& d, int s, int t, Int limit) {
  if (s == t) throw Error("source equals sink");
  Residual r(d.n);
  std::vector<int> ids;
  for (const auto& a : d.arcs) ids.push_back(r.add(a.from, a.to, a.cap));
  MaxFlowResult out;
  out.value = r.max_flow(s, t, limit);
  for (int e : ids) out.flow.push_back(r.pushed(e));
  out.source_side = r.reachable(s);
  for (const auto& a : d.arcs)
    if (out.source_side[a.from] && !out.source_side[a.to])
      out.cut_capacity = sat_add(out.cut_capacity, a.cap);
  return out;
}

bool arc_disjoint_paths_at_least(const Digraph& d, int s, int t, Int k) {
  if (s == t) throw Error("source equals sink");
  Residual r(d.n);
  for (const auto& a : d.arcs) r.add(a.from, a.to, 1);
  return r.max_flow(s, t, k) >= k;
}

namespace {

void check_problem(const FlowProblem& p) {
  if (static_cast<int>(p.demand.size()) != p.n) throw Error("demand length mismatch");
  Int total = 0;
  for (Int v : p.demand) total += v;
  if (total != 0) throw Error("demands do not sum to zero");
  for (const auto& a : p.arcs)
    if (a.lower > a.upper) throw Error("arc with lower bound above upper bound");
}

}  // namespace

FlowOutcome feasible_m_flow(const FlowProblem& p) {
  check_problem(p);
  const int src = p.n, snk = p.n + 1;
  Residual r(p.n + 2);
  IntVec need = p.demand;
  std::vector<int> ids;
  for (const auto& a : p.arcs) {
    need[a.to] -= a.lower;
    need[a.from] += a.lower;
    ids.push_back(r.add(a.from, a.to, sat_sub(a.upper, a.lower)));
  }
  Int required = 0;
  for (int v = 0; v < p.n; ++v) {
    if (need[v] > 0) r.add(v, snk, need[v]), required += need[v];
    if (need[v] < 0) r.add(src, v, -need[v]);
  }
  FlowOutcome out;
  const Int got = r.max_flow(src, snk, required);
  if (got < required) {
    const auto side = r.reachable(src);
    for (int v = 0; v < p.n; ++v)
      if (side[v]) out.violating.push_back(v);
    return out;
  }
  out.feasible = true;
  for (size_t i = 0; i < ids.size(); ++i) {
    out.flow.push_back(p.arcs[i].lower + r.pushed(ids[i]));
    out.cost += out.flow.back() * p.arcs[i].cost;
  }
  return out;
}

FlowOutcome min_cost_flow(const FlowProblem& p) {
  check_problem(p);
  const int src = p.n, snk = p.n + 1;
  Residual r(p.n + 2);
  IntVec need = p.demand;
  std::vector<int> ids;
  std::vector<Int> base;
  for (const auto& a : p.arcs) {
    const bool saturate = a.cost < 0;
    if (saturate && a.upper == kPosInf)
      throw Error("negative cost on an uncapacitated arc");
    const Int z0 = saturate ? a.upper : a.lower;
    base.push_back(z0);
    need[a.to] -= z0;
    need[a.from] += z0;
    const int e = r.add(a.from, a.to, sat_sub(a.upper, z0), a.cost);
    ids.push_back(e);
    if (saturate) {
      // Reverse residual capacity for units that may be returned.
      const int back = r.add(a.to, a.from, z0 - a.lower, -a.cost);
      ids.push_back(~back);
    }
  }
  Int required = 0;
  for (int v = 0; v < p.n; ++v) {
    if (need[v] > 0) r.add(v, snk, need[v]), required += need[v];
    if (need[v] < 0) r.add(src, v, -need[v]);
  }
  Int cost = 0;
  const Int got = r.min_cost(src, snk, required, cost);
  if (got < required) {
    FlowOutcome bad = feasible_m_flow(p);
    bad.feasible = false;
    bad.flow.clear();
    return bad;
  }
  FlowOutcome out;
  out.feasible = true;
  size_t k = 0;
  for (size_t i = 0; i < p.arcs.size(); ++i) {
    Int z = base[i] + r.pushed(ids[k++]);
    if (p.arcs[i].cost < 0) z -= r.pushed(~ids[k++]);
    out.flow.push_back(z);
    out.cost += z * p.arcs[i].cost;
  }
  return out;
}

}  // namespace decmin
