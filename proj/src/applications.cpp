#include "decmin/applications.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "decmin/canonical.hpp"
#include "decmin/engine.hpp"
#include "decmin/orientation.hpp"

namespace decmin {

namespace {

// Desk-scale explicit table of X -> min x(X) when the ground set is small.
constexpr int kTableLimit = 12;

SetFn min_table(int n, const std::function<Int(Mask)>& min_over) {
  std::vector<Int> values(std::size_t{1} << n);
  for (Mask x = 0; x < values.size(); ++x) values[x] = x == 0 ? 0 : min_over(x);
  return make_table(n, std::move(values));
}

BaseHandle handle_for(int n, SetFn p, std::shared_ptr<const MembershipOracle> fast) {
  BaseHandle h;
  if (p) h = BaseHandle::of(std::move(p));
  h.n = n;
  h.fast = std::move(fast);
  return h;
}

}  // namespace

// ---- semi-matchings -------------------------------------------------------

IntVec SemiMatchingProblem::target_t() const {
  if (m_t) return *m_t;
  return IntVec(nt, 1);
}

bool SemiMatchingProblem::plain() const {
  if (f_t || g_t || f_s || g_s || gamma) return false;
  return std::all_of(edges.begin(), edges.end(),
                     [](const BipartiteEdge& e) { return e.cap == 1; });
}

namespace {

void validate(const SemiMatchingProblem& p) {
  for (const auto& e : p.edges) {
    if (e.s < 0 || e.s >= p.ns || e.t < 0 || e.t >= p.nt)
      throw Error("edge endpoint out of range");
    if (e.cap < 0) throw Error("negative edge capacity");
  }
  auto check = [](const std::optional<IntVec>& v, int n, const char* what) {
    if (v && static_cast<int>(v->size()) != n) throw Error(what);
  };
  check(p.m_t, p.nt, "m_t length mismatch");
  check(p.f_t, p.nt, "f_t length mismatch");
  check(p.g_t, p.nt, "g_t length mismatch");
  check(p.f_s, p.ns, "f_s length mismatch");
  check(p.g_s, p.ns, "g_s length mismatch");
  if (p.m_t && (p.f_t || p.g_t)) throw Error("give either m_t or T bounds");
  if ((p.f_t || p.g_t) && !p.gamma)
    throw Error("T bounds need the cardinality gamma to fix |F|");
}

struct TSide {
  IntVec lo, hi;
  Int total = 0;
};

TSide t_side(const SemiMatchingProblem& p) {
  TSide t;
  if (p.f_t || p.g_t) {
    t.lo = p.f_t.value_or(IntVec(p.nt, 0));
    t.hi = p.g_t.value_or(IntVec(p.nt, kPosInf));
    t.total = *p.gamma;
  } else {
    t.lo = t.hi = p.target_t();
    t.total = std::accumulate(t.lo.begin(), t.lo.end(), Int{0});
    if (p.gamma && *p.gamma != t.total)
      throw Infeasible("gamma differs from the sum of T degrees", {});
  }
  return t;
}

// Nodes: S, then T, then source and sink.  The source arcs are returned so
// callers can set their bounds.
struct SemiNet {
  FlowProblem fp;
  std::vector<int> source_arc, edge_arc;
  int src = 0, snk = 0;
};

SemiNet semi_net(const SemiMatchingProblem& p, const TSide& t) {
  SemiNet net;
  net.fp.n = p.ns + p.nt + 2;
  net.src = p.ns + p.nt;
  net.snk = net.src + 1;
  for (int s = 0; s < p.ns; ++s) net.source_arc.push_back(net.fp.add_arc(net.src, s, 0, kPosInf));
  for (const auto& e : p.edges)
    net.edge_arc.push_back(net.fp.add_arc(e.s, p.ns + e.t, 0, e.cap, e.cost));
  for (int j = 0; j < p.nt; ++j) net.fp.add_arc(p.ns + j, net.snk, t.lo[j], t.hi[j]);
  net.fp.add_arc(net.snk, net.src, t.total, t.total);
  net.fp.demand.assign(net.fp.n, 0);
  return net;
}

class SemiMembership final : public MembershipOracle {
 public:
  explicit SemiMembership(const SemiMatchingProblem& p) : p_(p), t_(t_side(p)) {}
  bool member(const IntVec& x) const override {
    SemiNet net = semi_net(p_, t_);
    for (int s = 0; s < p_.ns; ++s) {
      if (x[s] < 0) return false;
      net.fp.arcs[net.source_arc[s]].lower = x[s];
      net.fp.arcs[net.source_arc[s]].upper = x[s];
    }
    return feasible_m_flow(net.fp).feasible;
  }

 private:
  SemiMatchingProblem p_;
  TSide t_;
};

IntVec bounds_or(const std::optional<IntVec>& v, int n, Int fill) {
  return v ? *v : IntVec(n, fill);
}

}  // namespace

BaseHandle semimatching_base(const SemiMatchingProblem& p) {
  validate(p);
  const TSide t = t_side(p);
  SetFn table;
  if (p.ns <= kTableLimit) {
    table = min_table(p.ns, [&](Mask x) {
      SemiNet net = semi_net(p, t);
      for (auto& a : net.fp.arcs) a.cost = 0;
      for (int s : elements(x)) net.fp.arcs[net.source_arc[s]].cost = 1;
      const FlowOutcome out = min_cost_flow(net.fp);
      if (!out.feasible) throw Infeasible("no feasible semi-matching", out.violating);
      return out.cost;
    });
  }
  BaseHandle h = handle_for(p.ns, table, std::make_shared<SemiMembership>(p));
  if (p.f_s || p.g_s)
    h = h.with_box(bounds_or(p.f_s, p.ns, kNegInf), bounds_or(p.g_s, p.ns, kPosInf));
  return h;
}

SemiMatching decmin_semimatching(const SemiMatchingProblem& p) {
  validate(p);
  const TSide t = t_side(p);
  BaseHandle h = semimatching_base(p);
  IntVec x;
  if (p.plain()) {
    // T-specified orientation: an edge belongs to F when it points to S.
    Graph g;
    g.n = p.ns + p.nt;
    for (const auto& e : p.edges) g.add_edge(p.ns + e.t, e.s);
    NodeBounds b = NodeBounds::none(g.n);
    const IntVec deg = g.degrees();
    for (int j = 0; j < p.nt; ++j)
      b.f[p.ns + j] = b.g[p.ns + j] = deg[p.ns + j] - t.lo[j];
    const Orientation d = decmin_orientation_bounded(g, b);
    x.assign(d.indeg.begin(), d.indeg.begin() + p.ns);
  } else {
    SemiNet net = semi_net(p, t);
    for (int s = 0; s < p.ns; ++s) {
      if (p.f_s) net.fp.arcs[net.source_arc[s]].lower = std::max<Int>(0, (*p.f_s)[s]);
      if (p.g_s) net.fp.arcs[net.source_arc[s]].upper = (*p.g_s)[s];
    }
    const FlowOutcome start = feasible_m_flow(net.fp);
    if (!start.feasible) throw Infeasible("no feasible semi-matching", start.violating);
    for (int s = 0; s < p.ns; ++s) x.push_back(start.flow[net.source_arc[s]]);
    x = basic_decmin(h, x).m;
  }

  // Every dec-min degree vector lies in the canonical box with fixed block
  // sums, so one min-cost flow finds the cheapest F over all of them.
  const CanonicalDecomposition dc = canonical_from_decmin(h, x);
  SemiNet net = semi_net(p, t);
  const int first_block = net.fp.n;
  net.fp.n += dc.q();
  net.fp.demand.assign(net.fp.n, 0);
  for (int s = 0; s < p.ns; ++s) {
    const int i = dc.block_of(s);
    Int lo = dc.betas[i] - 1, hi = dc.betas[i];
    if (p.f_s) lo = std::max(lo, (*p.f_s)[s]);
    if (p.g_s) hi = std::min(hi, (*p.g_s)[s]);
    auto& a = net.fp.arcs[net.source_arc[s]];
    a.from = first_block + i;
    a.lower = lo;
    a.upper = hi;
  }
  for (int i = 0; i < dc.q(); ++i) {
    const Int sigma = sum_over(x, dc.partition[i]);
    net.fp.add_arc(net.src, first_block + i, sigma, sigma);
  }
  const FlowOutcome out = min_cost_flow(net.fp);
  if (!out.feasible) throw Error("cheapest semi-matching flow failed");
  SemiMatching r;
  for (int e : net.edge_arc) r.count.push_back(out.flow[e]);
  for (int s : net.source_arc) r.degree_s.push_back(out.flow[s]);
  r.cost = 0;
  for (size_t e = 0; e < p.edges.size(); ++e) r.cost += r.count[e] * p.edges[e].cost;
  return r;
}

// ---- discrete Megiddo flows ----------------------------------------------

namespace {

struct MegNet {
  FlowProblem fp;
  std::vector<int> source_arc;
};

void validate(const MegiddoProblem& p) {
  std::vector<char> role(p.n, 0);
  for (int s : p.sources) {
    if (s < 0 || s >= p.n) throw Error("source out of range");
    role[s] = 1;
  }
  for (int t : p.sinks) {
    if (t < 0 || t >= p.n) throw Error("sink out of range");
    if (role[t] == 1) throw Error("a node cannot be both source and sink");
  }
  for (const auto& a : p.arcs)
    if (a.from < 0 || a.to < 0 || a.from >= p.n || a.to >= p.n || a.cap < 0)
      throw Error("bad arc");
}

MegNet meg_net(const MegiddoProblem& p, Int amount) {
  MegNet net;
  const int src = p.n, snk = p.n + 1;
  net.fp.n = p.n + 2;
  for (const auto& a : p.arcs) net.fp.add_arc(a.from, a.to, 0, a.cap);
  for (int s : p.sources) net.source_arc.push_back(net.fp.add_arc(src, s, 0, kPosInf));
  for (int t : p.sinks) net.fp.add_arc(t, snk, 0, kPosInf);
  net.fp.add_arc(snk, src, amount, amount);
  net.fp.demand.assign(net.fp.n, 0);
  return net;
}

class MegMembership final : public MembershipOracle {
 public:
  MegMembership(const MegiddoProblem& p, Int amount) : p_(p), amount_(amount) {}
  bool member(const IntVec& x) const override {
    MegNet net = meg_net(p_, amount_);
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] < 0) return false;
      net.fp.arcs[net.source_arc[i]].lower = x[i];
      net.fp.arcs[net.source_arc[i]].upper = x[i];
    }
    return feasible_m_flow(net.fp).feasible;
  }

 private:
  MegiddoProblem p_;
  Int amount_;
};

Digraph meg_digraph(const MegiddoProblem& p) {
  Digraph d;
  d.n = p.n + 2;
  for (const auto& a : p.arcs) d.add_arc(a.from, a.to, a.cap);
  for (int s : p.sources) d.add_arc(p.n, s, kPosInf);
  for (int t : p.sinks) d.add_arc(t, p.n + 1, kPosInf);
  return d;
}

}  // namespace

BaseHandle megiddo_base(const MegiddoProblem& p, Int amount) {
  validate(p);
  const int k = static_cast<int>(p.sources.size());
  SetFn table;
  if (k <= kTableLimit) {
    table = min_table(k, [&](Mask x) {
      MegNet net = meg_net(p, amount);
      for (int i : elements(x)) net.fp.arcs[net.source_arc[i]].cost = 1;
      const FlowOutcome out = min_cost_flow(net.fp);
      if (!out.feasible) throw Infeasible("flow amount exceeds the maximum", out.violating);
      return out.cost;
    });
  }
  return handle_for(k, table, std::make_shared<MegMembership>(p, amount));
}

MegiddoFlow megiddo_discrete(const MegiddoProblem& p,
                             const std::optional<IntVec>& source_costs) {
  validate(p);
  const Digraph d = meg_digraph(p);
  const MaxFlowResult mf = max_flow(d, p.n, p.n + 1);
  const Int amount = p.amount.value_or(mf.value);
  if (amount < 0) throw Error("negative flow amount");
  if (amount > mf.value) {
    std::vector<int> cut;
    for (int v = 0; v < p.n; ++v)
      if (mf.source_side[v]) cut.push_back(v);
    throw Infeasible("flow amount exceeds the maximum", cut);
  }
  const int k = static_cast<int>(p.sources.size());
  const MaxFlowResult start = max_flow(d, p.n, p.n + 1, amount);
  IntVec x(k);
  const int first = static_cast<int>(p.arcs.size());
  for (int i = 0; i < k; ++i) x[i] = start.flow[first + i];

  const BaseHandle h = megiddo_base(p, amount);
  x = basic_decmin(h, x).m;
  if (source_costs) x = cheapest_decmin(h, *source_costs, x);

  MegNet net = meg_net(p, amount);
  for (int i = 0; i < k; ++i) {
    net.fp.arcs[net.source_arc[i]].lower = x[i];
    net.fp.arcs[net.source_arc[i]].upper = x[i];
  }
  const FlowOutcome out = feasible_m_flow(net.fp);
  if (!out.feasible) throw Error("flow reconstruction failed");
  MegiddoFlow r;
  r.flow.assign(out.flow.begin(), out.flow.begin() + first);
  r.out = x;
  r.amount = amount;
  return r;
}

// ---- root vectors ----------------------------------------------------------

namespace {

// Every node receives k arc-disjoint paths from a super-root with m(v)
// parallel arcs to v.
bool covers(const Digraph& d, Int k, const IntVec& m) {
  Digraph aug = d;
  aug.n = d.n + 1;
  for (int v = 0; v < d.n; ++v)
    if (m[v] > 0) aug.add_arc(d.n, v, m[v]);
  for (int v = 0; v < d.n; ++v)
    if (max_flow(aug, d.n, v, k).value < k) return false;
  return true;
}

class RootMembership final : public MembershipOracle {
 public:
  RootMembership(Digraph d, Int k) : d_(std::move(d)), k_(k) {}
  bool member(const IntVec& m) const override { return is_root_vector(d_, k_, m); }

 private:
  Digraph d_;
  Int k_;
};

}  // namespace

bool is_root_vector(const Digraph& d, Int k, const IntVec& m) {
  if (static_cast<int>(m.size()) != d.n) return false;
  Int total = 0;
  for (Int v : m) {
    if (v < 0) return false;
    total += v;
  }
  return total == k && covers(d, k, m);
}

BaseHandle root_vector_base(const Digraph& d, Int k) {
  std::vector<WeightedEdge> arcs;
  for (const auto& a : d.arcs) arcs.push_back({a.from, a.to, a.cap});
  BaseHandle h = BaseHandle::of(make_root_vector(d.n, std::move(arcs), k),
                                Modularity::Intersecting);
  h.fast = std::make_shared<RootMembership>(d, k);
  return h;
}

IntVec decmin_root_vector(const Digraph& d, Int k, const std::optional<IntVec>& costs) {
  if (k < 0) throw Error("negative k");
  if (d.n == 0) throw Error("empty digraph");
  IntVec m(d.n, k);
  for (int v = 0; v < d.n; ++v) {
    Int lo = 0, hi = m[v];
    while (lo < hi) {
      const Int mid = lo + (hi - lo) / 2;
      m[v] = mid;
      if (covers(d, k, m)) hi = mid;
      else lo = mid + 1;
    }
    m[v] = lo;
  }
  const Int total = std::accumulate(m.begin(), m.end(), Int{0});
  if (total != k) {
    std::vector<int> support;
    for (int v = 0; v < d.n; ++v)
      if (m[v] > 0) support.push_back(v);
    throw Infeasible("no packing of k spanning arborescences", support);
  }
  const BaseHandle h = root_vector_base(d, k);
  m = basic_decmin(h, m).m;
  if (costs) m = cheapest_decmin(h, *costs, m);
  return m;
}

}  // namespace decmin
