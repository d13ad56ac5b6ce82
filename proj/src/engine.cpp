#include "decmin/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace decmin {

namespace {

class CardinalityFn final : public SetFunction {
 public:
  explicit CardinalityFn(int n) : n_(n) {}
  int size() const override { return n_; }
  Int eval(Mask x) const override { return card(x); }
  OracleKind kind() const override { return OracleKind::Shifted; }

 private:
  int n_;
};

Int penalized(const SetFn& p, const SetFn& b, Mask x, Int mu) {
  const Int px = p->eval(x);
  if (px == kNegInf) return kNegInf;
  return px - mu * b->eval(x);
}

}  // namespace

SetFn cardinality(int n) { return std::make_shared<CardinalityFn>(n); }

SetFn bounding_function(const BaseHandle& b) {
  if (b.modularity == Modularity::Full) return effective_function(b);
  auto pts = enumerate_integral_points(b);
  if (pts.points.empty()) throw Infeasible("empty base-polyhedron", {});
  return table_from_points(b.n, pts.points);
}

IntVec initial_member(const BaseHandle& b) {
  if (b.p && b.modularity == Modularity::Full) {
    std::vector<int> order(b.n);
    std::iota(order.begin(), order.end(), 0);
    return greedy_member(b, order);
  }
  auto pts = enumerate_integral_points(b);
  if (pts.points.empty()) throw Infeasible("empty base-polyhedron", {});
  return pts.points.front();
}

IntVec greedy_member(const BaseHandle& b, const std::vector<int>& order) {
  if (!b.p || b.modularity != Modularity::Full) return initial_member(b);
  const SetFn p = effective_function(b);
  if (p->eval(0) > 0) throw Infeasible("box misses the base-polyhedron", {});
  IntVec m(b.n, 0);
  Mask z = 0;
  Int prev = 0;
  for (int s : order) {
    z |= bit(s);
    const Int cur = p->eval(z);
    if (!is_finite(cur)) throw Error("infinite value along the greedy chain");
    m[s] = cur - prev;
    prev = cur;
  }
  return m;
}

std::optional<Step> one_tightening(const BaseHandle& b, const IntVec& m) {
  struct Pair {
    Int gap;
    int t, s;
  };
  std::vector<Pair> pairs;
  for (int t = 0; t < b.n; ++t)
    for (int s = 0; s < b.n; ++s)
      if (m[t] >= m[s] + 2) pairs.push_back({m[t] - m[s], t, s});
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& a, const Pair& c) { return a.gap > c.gap; });
  for (const auto& pr : pairs) {
    if (exchange_feasible(b, m, pr.s, pr.t))
      return Step{pr.s, pr.t, plus_exchange(m, pr.s, pr.t)};
  }
  return std::nullopt;
}

BasicResult basic_decmin(const BaseHandle& b, const IntVec& m0) {
  BasicResult r{m0, 0};
  while (auto step = one_tightening(b, r.m)) {
    r.m = std::move(step->next);
    ++r.steps;
  }
  return r;
}

ArgmaxOracle brute_argmax(const SetFn& p, const SetFn& b) {
  check_subset_scan(p->size());
  return [p, b](Int mu) {
    const Mask full = full_mask(p->size());
    Mask best = 0;
    Int val = penalized(p, b, 0, mu);
    for (Mask x = 1; x <= full; ++x) {
      const Int v = penalized(p, b, x, mu);
      if (v > val) val = v, best = x;
    }
    return best;
  };
}

NDTrace newton_dinkelbach(const SetFn& p, const SetFn& b,
                          ArgmaxOracle argmax) {
  if (!argmax) argmax = brute_argmax(p, b);
  auto value = [&](Mask x, Int mu) { return penalized(p, b, x, mu); };
  NDTrace tr;
  tr.mus.push_back(0);
  tr.witnesses.push_back(argmax(0));
  if (value(tr.witnesses[0], 0) <= 0) {
    // Zero is already good: locate the smallest good value below it.
    tr.degenerate = true;
    auto good = [&](Int mu) { return value(argmax(mu), mu) <= 0; };
    Int lo = 0, step = 1, mu = -1;
    while (good(mu)) {
      lo = mu;
      if (step > (Int{1} << 50)) throw Error("every multiplier is good");
      step *= 2;
      mu = lo - step;
    }
    while (lo - mu > 1) {
      const Int mid = floor_div(lo + mu, 2);
      if (good(mid)) lo = mid; else mu = mid;
    }
    tr.result = lo;
    return tr;
  }
  while (true) {
    const Mask x = tr.witnesses.back();
    const Int bx = b->eval(x);
    if (bx <= 0) throw Error("no good multiplier: p(X) > 0 where b(X) = 0");
    const Int mu = ceil_div(p->eval(x), bx);
    const Mask next = argmax(mu);
    tr.mus.push_back(mu);
    tr.witnesses.push_back(next);
    if (value(next, mu) <= 0) {
      tr.result = mu;
      return tr;
    }
  }
}

IntVec beta_covered_member(const BaseHandle& b, Int beta) {
  const SetFn p = bounding_function(b);
  const int n = b.n;
  check_subset_scan(n);
  const Mask full = full_mask(n);
  IntVec x(n, beta);
  for (int i = 0; i < n; ++i) {
    Int z = kNegInf;
    for (Mask y = 0; y <= full; ++y) {
      if (!has(y, i)) continue;
      const Int py = p->eval(y);
      if (py == kNegInf) continue;
      z = std::max(z, py - sum_over(x, y & ~bit(i)));
    }
    if (z > beta) throw Error("beta is below the first essential value");
    x[i] = z;
  }
  if (sum_over(x, full) != p->eval(full))
    throw Error("beta-covered construction left the base-polyhedron");
  return x;
}

IntVec pre_decmin_tighten(const BaseHandle& b, const IntVec& m, Int beta) {
  IntVec x = m;
  bool moved = true;
  while (moved) {
    moved = false;
    std::vector<int> low;
    for (int s = 0; s < b.n; ++s)
      if (x[s] <= beta - 2) low.push_back(s);
    std::stable_sort(low.begin(), low.end(),
                     [&](int a, int c) { return x[a] < x[c]; });
    for (int t = 0; t < b.n && !moved; ++t) {
      if (x[t] != beta) continue;
      for (int s : low) {
        if (exchange_feasible(b, x, s, t)) {
          x = plus_exchange(x, s, t);
          moved = true;
          break;
        }
      }
    }
  }
  return x;
}

Mask peak_set(const BaseHandle& b, const IntVec& m, Int beta) {
  Mask out = 0;
  for (int t = 0; t < b.n; ++t)
    if (m[t] == beta) out |= smallest_tight_set(b, m, t);
  return out;
}

IntVec strongly_poly_decmin(const BaseHandle& b) {
  SetFn cur = bounding_function(b);
  if (cur->eval(0) > 0) throw Infeasible("box misses the base-polyhedron", {});
  std::vector<int> rest(b.n);
  std::iota(rest.begin(), rest.end(), 0);
  IntVec m(b.n, 0);
  while (!rest.empty()) {
    const BaseHandle h = BaseHandle::of(cur);
    const Int beta = newton_dinkelbach(cur, cardinality(h.n)).result;
    IntVec x = beta_covered_member(h, beta);
    x = pre_decmin_tighten(h, x, beta);
    const Mask peak = peak_set(h, x, beta);
    std::vector<int> next;
    for (int i = 0; i < h.n; ++i) {
      if (has(peak, i)) m[rest[i]] = x[i];
      else next.push_back(rest[i]);
    }
    if (next.size() == rest.size()) throw Error("empty peak set");
    if (next.empty()) break;
    cur = contract(cur, peak);
    rest = std::move(next);
  }
  return m;
}

DecminCheck is_decmin(const BaseHandle& b, const IntVec& m) {
  DecminCheck c;
  if (auto step = one_tightening(b, m)) {
    c.decmin = false;
    c.witness = std::make_pair(step->s, step->t);
  }
  return c;
}

MeasureReport measures(const IntVec& m, std::optional<Int> K) {
  MeasureReport r;
  for (Int v : m) r.square_sum += v * v;
  Int dk = 0;
  for (Int a : m) {
    for (Int c : m) {
      const Int d = a > c ? a - c : c - a;
      r.diff_sum += d;
      if (K) dk += std::max<Int>(d - *K, 0);
    }
  }
  if (K) r.diff_k = dk;
  IntVec sorted = m;
  std::sort(sorted.rbegin(), sorted.rend());
  Int acc = 0;
  for (Int v : sorted) r.k_largest.push_back(acc += v);
  return r;
}

}  // namespace decmin
