#include "decmin/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "decmin/engine.hpp"

namespace decmin {

int CanonicalDecomposition::block_of(int s) const {
  for (int i = 0; i < q(); ++i)
    if (has(partition[i], s)) return i;
  return -1;
}

CanonicalDecomposition canonical_from_decmin(const BaseHandle& b,
                                             const IntVec& m) {
  if (!is_member(b, m)) throw Error("vector is not a member");
  if (const auto chk = is_decmin(b, m); !chk.decmin)
    throw Error("vector is not dec-min");
  CanonicalDecomposition d;
  d.n = b.n;
  d.delta_star.assign(b.n, 0);
  d.pi_star.assign(b.n, 0);
  const Mask full = full_mask(b.n);
  std::vector<Mask> tight(b.n, 0);
  for (int u = 0; u < b.n; ++u) tight[u] = smallest_tight_set(b, m, u);

  Mask c = 0;
  while (c != full) {
    Int beta = kNegInf;
    for (int s : elements(full & ~c)) beta = std::max(beta, m[s]);
    Mask next = c;
    for (int u = 0; u < b.n; ++u)
      if (m[u] >= beta) next |= tight[u];
    const Mask block = next & ~c;
    Int count = 0;
    for (int s : elements(block)) {
      if (m[s] == beta) ++count;
      d.delta_star[s] = beta - 1;
      d.pi_star[s] = 2 * beta - 1;
    }
    Mask fixed = 0;
    for (int s : elements(block)) {
      if (m[s] != beta) continue;
      bool movable = false;
      for (int t : elements(block))
        if (m[t] == beta - 1 && exchange_feasible(b, m, t, s)) {
          movable = true;
          break;
        }
      if (!movable) fixed |= bit(s);
    }
    d.chain.push_back(next);
    d.partition.push_back(block);
    d.betas.push_back(beta);
    d.r.push_back(count);
    d.value_fixed.push_back(fixed);
    c = next;
  }
  return d;
}

bool is_tight_by_exchange(const BaseHandle& b, const IntVec& m, Mask c) {
  const Mask full = full_mask(b.n);
  for (int t : elements(c))
    for (int s : elements(full & ~c))
      if (exchange_feasible(b, m, s, t)) return false;
  return true;
}

bool decmin_set_membership(const CanonicalDecomposition& d,
                           const BaseHandle& b, const IntVec& m) {
  if (static_cast<int>(m.size()) != b.n) return false;
  for (int i = 0; i < d.q(); ++i)
    for (int s : elements(d.partition[i]))
      if (m[s] < d.betas[i] - 1 || m[s] > d.betas[i]) return false;
  if (!is_member(b, m)) return false;
  for (Mask c : d.chain)
    if (!is_tight_by_exchange(b, m, c)) return false;
  return true;
}

namespace {

// p_i(X) = p(X u C_{i-1}) - p(C_{i-1}) for X inside S_i.
Int block_value(const SetFn& p, const CanonicalDecomposition& d, int i,
                Mask x) {
  const Mask prev = d.prefix(i);
  return sat_sub(p->eval(x | prev), p->eval(prev));
}

template <typename F>
void for_each_submask(Mask set, F&& f) {
  for (Mask x = set;; x = (x - 1) & set) {
    f(x);
    if (x == 0) break;
  }
}

}  // namespace

bool matroid_Mi_base_test(const CanonicalDecomposition& d, const BaseHandle& b,
                          int i, Mask l) {
  if (card(l) != d.r.at(i)) throw Error("candidate size differs from r_i");
  if (l & ~d.partition[i]) return false;
  check_subset_scan(card(d.partition[i]));
  const SetFn p = effective_function(b);
  bool ok = true;
  for_each_submask(d.partition[i], [&](Mask x) {
    const Int need = sat_sub(block_value(p, d, i, x),
                             (d.betas[i] - 1) * card(x));
    if (card(l & x) < need) ok = false;
  });
  return ok;
}

Mask value_fixed_set(const CanonicalDecomposition& d, const BaseHandle& b,
                     int i) {
  check_subset_scan(card(d.partition[i]));
  const SetFn p = effective_function(b);
  Mask out = 0;
  for_each_submask(d.partition[i], [&](Mask x) {
    if (block_value(p, d, i, x) == d.betas[i] * card(x)) out |= x;
  });
  return out;
}

namespace {

std::vector<int> decreasing_order(const IntVec& pi) {
  std::vector<int> order(pi.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int c) { return pi[a] > pi[c]; });
  return order;
}

}  // namespace

Int linear_extension(const SetFn& p, const IntVec& pi) {
  const int n = p->size();
  if (static_cast<int>(pi.size()) != n) throw Error("dual length mismatch");
  const auto order = decreasing_order(pi);
  Int total = 0;
  Mask prefix = 0;
  for (int j = 0; j < n; ++j) {
    prefix |= bit(order[j]);
    const Int coef = j + 1 < n ? pi[order[j]] - pi[order[j + 1]] : pi[order[j]];
    if (coef == 0) continue;
    const Int v = p->eval(prefix);
    if (!is_finite(v)) throw Error("infinite value on a needed prefix");
    total += v * coef;
  }
  return total;
}

GapReport duality_gap(const BaseHandle& b, const IntVec& m, const IntVec& pi) {
  const SetFn p = effective_function(b);
  GapReport g;
  Int correction = 0;
  g.o1 = true;
  for (int s = 0; s < b.n; ++s) {
    g.W += m[s] * m[s];
    const Int lo = floor_div(pi[s], 2), hi = ceil_div(pi[s], 2);
    correction += lo * hi;
    if (m[s] != lo && m[s] != hi) g.o1 = false;
  }
  g.bound = linear_extension(p, pi) - correction;
  g.gap = g.W - g.bound;
  g.o2 = true;
  const auto order = decreasing_order(pi);
  Mask prefix = 0;
  for (int j = 0; j < b.n; ++j) {
    prefix |= bit(order[j]);
    const bool strict = j + 1 == b.n || pi[order[j]] > pi[order[j + 1]];
    if (strict && sum_over(m, prefix) != p->eval(prefix)) g.o2 = false;
  }
  return g;
}

std::vector<std::pair<int, int>> dual_arcs(const CanonicalDecomposition& d,
                                           const BaseHandle& b, int i) {
  const Mask f = d.value_fixed[i];
  std::vector<std::pair<int, int>> arcs;
  if (f == 0) return arcs;
  check_subset_scan(card(f));
  const SetFn p = effective_function(b);
  std::vector<Mask> family;
  for_each_submask(f, [&](Mask x) {
    if (block_value(p, d, i, x) == d.betas[i] * card(x)) family.push_back(x);
  });
  for (int s : elements(f))
    for (int t : elements(f)) {
      if (s == t) continue;
      const bool blocked = std::any_of(family.begin(), family.end(), [&](Mask x) {
        return has(x, t) && !has(x, s);
      });
      if (!blocked) arcs.emplace_back(s, t);
    }
  return arcs;
}

bool verify_dual_optimal(const CanonicalDecomposition& d, const BaseHandle& b,
                         const IntVec& pi) {
  if (static_cast<int>(pi.size()) != d.n) return false;
  for (int i = 0; i < d.q(); ++i) {
    const Int odd = 2 * d.betas[i] - 1;
    for (int s : elements(d.partition[i])) {
      if (has(d.value_fixed[i], s)) {
        if (pi[s] < odd || pi[s] > odd + 2) return false;
      } else if (pi[s] != odd) {
        return false;
      }
    }
    for (auto [s, t] : dual_arcs(d, b, i))
      if (pi[s] < pi[t]) return false;
  }
  return true;
}

IntVec cheapest_decmin(const BaseHandle& b, const IntVec& c,
                       const IntVec& decmin_start) {
  IntVec m = decmin_start;
  while (true) {
    int best_s = -1, best_t = -1;
    Int best = 0;
    for (int s = 0; s < b.n; ++s)
      for (int t = 0; t < b.n; ++t) {
        if (m[s] != m[t] + 1 || c[s] - c[t] <= best) continue;
        if (!exchange_feasible(b, m, t, s)) continue;
        best = c[s] - c[t];
        best_s = s;
        best_t = t;
      }
    if (best_s < 0) return m;
    m = plus_exchange(m, best_t, best_s);
  }
}

IntVec cheapest_decmin(const BaseHandle& b, const IntVec& c) {
  return cheapest_decmin(b, c, strongly_poly_decmin(b));
}

}  // namespace decmin
