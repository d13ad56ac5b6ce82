#include "decmin/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "decmin/engine.hpp"

namespace decmin {

int Matroid::rank(const std::vector<int>& x) const {
  std::vector<int> cur;
  for (int e : x) {
    cur.push_back(e);
    if (!independent(cur)) cur.pop_back();
  }
  return static_cast<int>(cur.size());
}

int Matroid::rank() const {
  std::vector<int> all(size());
  std::iota(all.begin(), all.end(), 0);
  return rank(all);
}

namespace {

void check_elements(const std::vector<int>& x, int n) {
  for (int e : x)
    if (e < 0 || e >= n) throw Error("matroid element out of range");
}

bool has_repeats(std::vector<int> x) {
  std::sort(x.begin(), x.end());
  return std::adjacent_find(x.begin(), x.end()) != x.end();
}

class Uniform final : public Matroid {
 public:
  Uniform(int n, int r) : n_(n), r_(r) {}
  int size() const override { return n_; }
  bool independent(const std::vector<int>& x) const override {
    check_elements(x, n_);
    return !has_repeats(x) && static_cast<int>(x.size()) <= r_;
  }

 private:
  int n_, r_;
};

class Partition final : public Matroid {
 public:
  Partition(std::vector<int> block_of, std::vector<int> caps)
      : block_of_(std::move(block_of)), caps_(std::move(caps)) {}
  int size() const override { return static_cast<int>(block_of_.size()); }
  bool independent(const std::vector<int>& x) const override {
    check_elements(x, size());
    if (has_repeats(x)) return false;
    std::vector<int> used(caps_.size(), 0);
    for (int e : x)
      if (++used[block_of_[e]] > caps_[block_of_[e]]) return false;
    return true;
  }

 private:
  std::vector<int> block_of_, caps_;
};

class Graphic final : public Matroid {
 public:
  Graphic(int nodes, std::vector<std::pair<int, int>> edges)
      : nodes_(nodes), edges_(std::move(edges)) {}
  int size() const override { return static_cast<int>(edges_.size()); }
  bool independent(const std::vector<int>& x) const override {
    check_elements(x, size());
    std::vector<int> parent(nodes_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (int e : x) {
      const int a = find(edges_[e].first), b = find(edges_[e].second);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  }

 private:
  int nodes_;
  std::vector<std::pair<int, int>> edges_;
};

class ExplicitBases final : public Matroid {
 public:
  ExplicitBases(int n, std::vector<Mask> bases) : n_(n), bases_(std::move(bases)) {}
  int size() const override { return n_; }
  bool independent(const std::vector<int>& x) const override {
    check_elements(x, n_);
    if (has_repeats(x)) return false;
    const Mask m = to_mask(x);
    return std::any_of(bases_.begin(), bases_.end(),
                       [&](Mask b) { return (m & ~b) == 0; });
  }

 private:
  int n_;
  std::vector<Mask> bases_;
};

// Parts placed on chosen ground elements of a larger set.
class PlacedSum final : public Matroid {
 public:
  PlacedSum(int n, std::vector<MatroidPtr> parts, std::vector<std::vector<int>> place)
      : n_(n), parts_(std::move(parts)), part_of_(n, -1), local_(n, -1) {
    for (size_t i = 0; i < parts_.size(); ++i)
      for (size_t j = 0; j < place[i].size(); ++j) {
        part_of_[place[i][j]] = static_cast<int>(i);
        local_[place[i][j]] = static_cast<int>(j);
      }
  }
  int size() const override { return n_; }
  bool independent(const std::vector<int>& x) const override {
    check_elements(x, n_);
    std::vector<std::vector<int>> split(parts_.size());
    for (int e : x) {
      if (part_of_[e] < 0) return false;
      split[part_of_[e]].push_back(local_[e]);
    }
    for (size_t i = 0; i < parts_.size(); ++i)
      if (!split[i].empty() && !parts_[i]->independent(split[i])) return false;
    return true;
  }

 private:
  int n_;
  std::vector<MatroidPtr> parts_;
  std::vector<int> part_of_, local_;
};

class Parallel final : public Matroid {
 public:
  Parallel(MatroidPtr m, int k) : m_(std::move(m)), k_(k) {}
  int size() const override { return m_->size() * k_; }
  bool independent(const std::vector<int>& x) const override {
    check_elements(x, size());
    std::vector<int> proj;
    for (int e : x) proj.push_back(e % m_->size());
    return !has_repeats(proj) && m_->independent(proj);
  }

 private:
  MatroidPtr m_;
  int k_;
};

class Dual final : public Matroid {
 public:
  explicit Dual(MatroidPtr m) : m_(std::move(m)), full_rank_(m_->rank()) {}
  int size() const override { return m_->size(); }
  bool independent(const std::vector<int>& x) const override {
    check_elements(x, size());
    if (has_repeats(x)) return false;
    std::vector<char> in(size(), 0);
    for (int e : x) in[e] = 1;
    std::vector<int> rest;
    for (int e = 0; e < size(); ++e)
      if (!in[e]) rest.push_back(e);
    return m_->rank(rest) == full_rank_;
  }

 private:
  MatroidPtr m_;
  int full_rank_;
};

class Minor final : public Matroid {
 public:
  Minor(MatroidPtr m, std::vector<int> contract, const std::vector<int>& remove)
      : m_(std::move(m)), contract_(std::move(contract)) {
    std::vector<char> gone(m_->size(), 0);
    for (int e : contract_) gone.at(e) = 1;
    for (int e : remove) gone.at(e) = 1;
    for (int e = 0; e < m_->size(); ++e)
      if (!gone[e]) keep_.push_back(e);
    contract_rank_ = m_->rank(contract_);
  }
  int size() const override { return static_cast<int>(keep_.size()); }
  bool independent(const std::vector<int>& x) const override {
    check_elements(x, size());
    if (has_repeats(x)) return false;
    std::vector<int> lifted = contract_;
    for (int e : x) lifted.push_back(keep_[e]);
    return m_->rank(lifted) == contract_rank_ + static_cast<int>(x.size());
  }

 private:
  MatroidPtr m_;
  std::vector<int> contract_, keep_;
  int contract_rank_ = 0;
};

}  // namespace

MatroidPtr uniform_matroid(int n, int r) {
  if (n < 0 || r < 0) throw Error("negative uniform matroid parameters");
  return std::make_shared<Uniform>(n, std::min(n, r));
}

MatroidPtr partition_matroid(std::vector<int> block_of, std::vector<int> caps) {
  for (int b : block_of)
    if (b < 0 || b >= static_cast<int>(caps.size())) throw Error("block index out of range");
  return std::make_shared<Partition>(std::move(block_of), std::move(caps));
}

MatroidPtr graphic_matroid(int nodes, std::vector<std::pair<int, int>> edges) {
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || u >= nodes || v >= nodes) throw Error("edge endpoint out of range");
  return std::make_shared<Graphic>(nodes, std::move(edges));
}

MatroidPtr explicit_bases(int n, std::vector<Mask> bases) {
  if (n > kMaxGround) throw Error("explicit bases need at most 63 elements");
  if (bases.empty()) throw Error("a matroid needs at least one basis");
  for (Mask b : bases) {
    if (b & ~full_mask(n)) throw Error("basis element out of range");
    if (card(b) != card(bases[0])) throw Error("bases of different sizes");
  }
  return std::make_shared<ExplicitBases>(n, std::move(bases));
}

MatroidPtr direct_sum(std::vector<MatroidPtr> parts) {
  int n = 0;
  std::vector<std::vector<int>> place;
  for (const auto& p : parts) {
    place.emplace_back(p->size());
    std::iota(place.back().begin(), place.back().end(), n);
    n += p->size();
  }
  return std::make_shared<PlacedSum>(n, std::move(parts), std::move(place));
}

MatroidPtr parallel_copies(MatroidPtr m, int k) {
  if (k < 1) throw Error("need at least one copy");
  return std::make_shared<Parallel>(std::move(m), k);
}

MatroidPtr dual_matroid(MatroidPtr m) { return std::make_shared<Dual>(std::move(m)); }

MatroidPtr minor(MatroidPtr m, std::vector<int> contract, std::vector<int> remove) {
  return std::make_shared<Minor>(std::move(m), std::move(contract), remove);
}

MatroidPtr block_matroid(const CanonicalDecomposition& d, const BaseHandle& b, int i) {
  const auto ground = elements(d.partition.at(i));
  const int n = static_cast<int>(ground.size());
  const int r = static_cast<int>(d.r[i]);
  std::vector<Mask> bases;
  // Gosper's hack over r-subsets of the block.
  if (r == 0) {
    bases.push_back(0);
  } else {
    for (Mask local = full_mask(r); local < bit(n);) {
      Mask global = 0;
      for (int j : elements(local)) global |= bit(ground[j]);
      if (matroid_Mi_base_test(d, b, i, global)) bases.push_back(local);
      const Mask c = local & -local, nxt = local + c;
      local = (((nxt ^ local) >> 2) / c) | nxt;
    }
  }
  return explicit_bases(n, std::move(bases));
}

std::vector<Mask> enumerate_bases(const Matroid& m) {
  const int n = m.size();
  if (n > kMaxGround) throw CeilingExceeded("basis enumeration beyond 63 elements");
  const int r = m.rank();
  std::vector<Mask> out;
  if (r == 0) return {0};
  for (Mask x = full_mask(r); x < bit(n);) {
    if (m.independent(elements(x))) out.push_back(x);
    const Mask c = x & -x, nxt = x + c;
    x = (((nxt ^ x) >> 2) / c) | nxt;
  }
  return out;
}

std::vector<int> matroid_intersection(const Matroid& m1, const Matroid& m2) {
  const int n = m1.size();
  if (m2.size() != n) throw Error("matroids on different ground sets");
  std::vector<char> in(n, 0);
  auto current = [&] {
    std::vector<int> cur;
    for (int e = 0; e < n; ++e)
      if (in[e]) cur.push_back(e);
    return cur;
  };
  while (true) {
    const auto cur = current();
    auto with = [&](int y) {
      auto x = cur;
      x.push_back(y);
      return x;
    };
    auto swap = [&](int out, int y) {
      std::vector<int> x;
      for (int e : cur)
        if (e != out) x.push_back(e);
      x.push_back(y);
      return x;
    };
    std::vector<char> sink(n, 0);
    std::vector<int> prev(n, -2);
    std::queue<int> q;
    for (int y = 0; y < n; ++y) {
      if (in[y]) continue;
      if (m2.independent(with(y))) sink[y] = 1;
      if (m1.independent(with(y))) prev[y] = -1, q.push(y);
    }
    int end = -1;
    while (!q.empty() && end < 0) {
      const int a = q.front();
      q.pop();
      if (!in[a] && sink[a]) {
        end = a;
        break;
      }
      for (int b = 0; b < n; ++b) {
        if (prev[b] != -2 || in[a] == in[b]) continue;
        // Outside a -> inside b when swapping keeps M2 independence;
        // inside a -> outside b when swapping keeps M1 independence.
        const bool arc = in[a] ? m1.independent(swap(a, b)) : m2.independent(swap(b, a));
        if (arc) prev[b] = a, q.push(b);
      }
    }
    if (end < 0) return cur;
    for (int v = end; v != -1; v = prev[v]) in[v] ^= 1;
  }
}

std::vector<int> min_cost_basis(const Matroid& m, const IntVec& c,
                                std::optional<int> expected_rank) {
  if (static_cast<int>(c.size()) != m.size()) throw Error("cost length mismatch");
  std::vector<int> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return c[a] < c[b]; });
  std::vector<int> basis;
  for (int e : order) {
    basis.push_back(e);
    if (!m.independent(basis)) basis.pop_back();
  }
  std::sort(basis.begin(), basis.end());
  if (expected_rank && static_cast<int>(basis.size()) < *expected_rank)
    throw Infeasible("matroid has no basis of the expected size", {});
  return basis;
}

namespace {

class AggregateFn final : public SetFunction {
 public:
  AggregateFn(MatroidPtr m, std::vector<int> block_of, int blocks)
      : m_(std::move(m)), block_of_(std::move(block_of)), blocks_(blocks),
        full_(m_->rank()) {}
  int size() const override { return blocks_; }
  OracleKind kind() const override { return OracleKind::MatroidRank; }
  Int eval(Mask y) const override {
    std::vector<int> rest;
    for (int e = 0; e < m_->size(); ++e)
      if (!has(y, block_of_[e])) rest.push_back(e);
    return full_ - m_->rank(rest);
  }

 private:
  MatroidPtr m_;
  std::vector<int> block_of_;
  int blocks_;
  int full_;
};

std::vector<int> caps_basis(const MatroidPtr& m, const std::vector<int>& block_of,
                            const IntVec& y) {
  std::vector<int> caps(y.begin(), y.end());
  const auto part = partition_matroid(block_of, caps);
  return matroid_intersection(*m, *part);
}

class AggregateMembership final : public MembershipOracle {
 public:
  AggregateMembership(MatroidPtr m, std::vector<int> block_of, int blocks)
      : m_(std::move(m)), block_of_(std::move(block_of)), sizes_(blocks, 0),
        rank_(m_->rank()) {
    for (int b : block_of_) ++sizes_[b];
  }
  bool member(const IntVec& y) const override {
    Int total = 0;
    for (size_t j = 0; j < y.size(); ++j) {
      if (y[j] < 0 || y[j] > sizes_[j]) return false;
      total += y[j];
    }
    if (total != rank_) return false;
    return static_cast<Int>(caps_basis(m_, block_of_, y).size()) == rank_;
  }

 private:
  MatroidPtr m_;
  std::vector<int> block_of_;
  std::vector<Int> sizes_;
  Int rank_;
};

}  // namespace

SetFn aggregate_function(MatroidPtr m, std::vector<int> block_of, int blocks) {
  if (static_cast<int>(block_of.size()) != m->size()) throw Error("block map length mismatch");
  if (blocks > kMaxGround) throw Error("too many blocks");
  return std::make_shared<AggregateFn>(std::move(m), std::move(block_of), blocks);
}

AggregateResult decmin_aggregate(MatroidPtr m, std::vector<int> block_of, int blocks,
                                 const std::optional<NodeBounds>& box) {
  BaseHandle h = BaseHandle::of(aggregate_function(m, block_of, blocks));
  h.fast = std::make_shared<AggregateMembership>(m, block_of, blocks);
  IntVec start(blocks, 0);
  if (box) {
    h = h.with_box(box->f, box->g);
    std::vector<int> order(blocks);
    std::iota(order.begin(), order.end(), 0);
    start = greedy_member(h, order);
  } else {
    for (int e : min_cost_basis(*m, IntVec(m->size(), 0))) ++start[block_of[e]];
  }
  AggregateResult r;
  r.vector = basic_decmin(h, start).m;
  r.basis = caps_basis(m, block_of, r.vector);
  return r;
}

BasisSumResult decmin_basis_sum(const std::vector<MatroidPtr>& ms,
                                const std::optional<NodeBounds>& box) {
  if (ms.empty()) throw Error("no matroids given");
  const int n = ms[0]->size();
  for (const auto& m : ms)
    if (m->size() != n) throw Error("matroids on different ground sets");
  std::vector<int> block_of;
  for (size_t i = 0; i < ms.size(); ++i)
    for (int s = 0; s < n; ++s) block_of.push_back(s);
  const auto agg = decmin_aggregate(direct_sum(ms), block_of, n, box);
  BasisSumResult r;
  r.sum = agg.vector;
  r.bases.resize(ms.size());
  for (int e : agg.basis) r.bases[e / n].push_back(e % n);
  return r;
}

AggregateResult decmin_partition_intersection(MatroidPtr m, std::vector<int> block_of,
                                              int blocks) {
  return decmin_aggregate(std::move(m), std::move(block_of), blocks);
}

namespace {

// Direct sum of the block matroids, placed on the nodes of their blocks.
MatroidPtr canonical_union(const CanonicalDecomposition& d, const BaseHandle& b) {
  std::vector<MatroidPtr> parts;
  std::vector<std::vector<int>> place;
  for (int i = 0; i < d.q(); ++i) {
    parts.push_back(block_matroid(d, b, i));
    place.push_back(elements(d.partition[i]));
  }
  return std::make_shared<PlacedSum>(d.n, std::move(parts), std::move(place));
}

}  // namespace

std::optional<Orientation> inout_decmin_orientation(const Graph& g) {
  if (g.m() == 0) return make_orientation(g, {});
  const Orientation din = decmin_orientation(g);
  const auto dc = orientation_canonical(g, din);
  Graph rev = g;
  for (auto& e : rev.edges) std::swap(e.u, e.v);
  const Orientation dout = decmin_orientation(rev);
  const auto dr = orientation_canonical(rev, dout);

  // In-degrees are delta* + chi_L with L a basis of the in-matroid and
  // d - delta'* - 1 + chi_K with K a basis of the dual out-matroid.
  const MatroidPtr m_in = canonical_union(dc, orientation_base(g));
  const MatroidPtr n_out = dual_matroid(canonical_union(dr, orientation_base(rev)));
  const IntVec deg = g.degrees();
  std::vector<int> a2, a0, u;
  for (int v = 0; v < g.n; ++v) {
    const Int a = deg[v] - dr.delta_star[v] - 1 - dc.delta_star[v];
    if (a == 1) a2.push_back(v);
    else if (a == -1) a0.push_back(v);
    else if (a == 0) u.push_back(v);
    else return std::nullopt;
  }
  if (!m_in->independent(a2) || !n_out->independent(a0)) return std::nullopt;
  const auto x = matroid_intersection(*minor(m_in, a2, a0), *minor(n_out, a0, a2));
  const int size = static_cast<int>(x.size());
  if (size != m_in->rank() - static_cast<int>(a2.size()) ||
      size != n_out->rank() - static_cast<int>(a0.size()))
    return std::nullopt;
  IntVec target = dc.delta_star;
  for (int v : a2) ++target[v];
  for (int j : x) ++target[u[j]];
  return orient_with_indegrees(g, target);
}

}  // namespace decmin
