#include "decmin/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace decmin {

Int sat_add(Int a, Int b) {
  const bool ninf = a == kNegInf || b == kNegInf;
  const bool pinf = a == kPosInf || b == kPosInf;
  if (ninf && pinf) throw Error("undefined sum of -inf and +inf");
  if (ninf) return kNegInf;
  if (pinf) return kPosInf;
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow");
  return r;
}

Int sat_neg(Int a) {
  if (a == kNegInf) return kPosInf;
  if (a == kPosInf) return kNegInf;
  return -a;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

std::vector<int> elements(Mask x) {
  std::vector<int> out;
  while (x) {
    out.push_back(__builtin_ctzll(x));
    x &= x - 1;
  }
  return out;
}

Mask to_mask(const std::vector<int>& elems) {
  Mask x = 0;
  for (int e : elems) x |= bit(e);
  return x;
}

Int sum_over(const IntVec& v, Mask x) {
  Int s = 0;
  for (int e : elements(x)) s = sat_add(s, v[e]);
  return s;
}

GroundSet GroundSet::numbered(int n) {
  GroundSet g;
  g.n = n;
  for (int i = 1; i <= n; ++i) g.labels.push_back(std::to_string(i));
  return g;
}

const char* to_string(Order o) {
  switch (o) {
    case Order::Smaller: return "smaller";
    case Order::Equivalent: return "value-equivalent";
    case Order::Larger: return "larger";
  }
  return "?";
}

namespace {

void require_same_length(const IntVec& x, const IntVec& y) {
  if (x.size() != y.size()) throw Error("vectors differ in length");
}

}  // namespace

Order dec_compare(const IntVec& x, const IntVec& y) {
  require_same_length(x, y);
  IntVec a = x, b = y;
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return Order::Smaller;
    if (a[i] > b[i]) return Order::Larger;
  }
  return Order::Equivalent;
}

Order inc_compare(const IntVec& x, const IntVec& y) {
  require_same_length(x, y);
  IntVec a = x, b = y;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return Order::Larger;
    if (a[i] < b[i]) return Order::Smaller;
  }
  return Order::Equivalent;
}

bool value_equivalent(const IntVec& x, const IntVec& y) {
  return dec_compare(x, y) == Order::Equivalent;
}

// ---- ceilings -------------------------------------------------------------

const BruteCeiling& brute_ceiling() {
  static const BruteCeiling c = [] {
    BruteCeiling out;
    if (const char* env = std::getenv("DECMIN_BRUTE_CEILING")) {
      std::stringstream ss(env);
      std::string a, b;
      std::getline(ss, a, ',');
      std::getline(ss, b);
      try {
        if (!a.empty()) out.max_n = std::stoi(a);
        if (!b.empty()) out.max_volume = std::stod(b);
      } catch (const std::exception&) {
        // malformed override: keep defaults
      }
    }
    return out;
  }();
  return c;
}

void check_subset_scan(int n) {
  if (n > brute_ceiling().max_n || n > kMaxGround) {
    throw CeilingExceeded("subset scan over " + std::to_string(n) +
                          " elements exceeds the brute-force ceiling");
  }
}

// ---- oracles --------------------------------------------------------------

namespace {

Mask lift(Mask local, const std::vector<int>& idx) {
  Mask out = 0;
  for (int e : elements(local)) out |= bit(idx[e]);
  return out;
}

class TableFn final : public SetFunction {
 public:
  TableFn(int n, std::vector<Int> v) : n_(n), v_(std::move(v)) {
    if (v_.size() != (size_t{1} << n_)) throw Error("table size mismatch");
    v_[0] = 0;
  }
  int size() const override { return n_; }
  Int eval(Mask x) const override { return v_.at(x); }
  OracleKind kind() const override { return OracleKind::Table; }

 private:
  int n_;
  std::vector<Int> v_;
};

class InducedFn final : public SetFunction {
 public:
  InducedFn(int n, std::vector<WeightedEdge> e, bool cover)
      : n_(n), e_(std::move(e)), cover_(cover) {}
  int size() const override { return n_; }
  Int eval(Mask x) const override {
    Int s = 0;
    for (const auto& e : e_) {
      const bool a = has(x, e.u), b = has(x, e.v);
      if (cover_ ? (a || b) : (a && b)) s += e.w;
    }
    return s;
  }
  OracleKind kind() const override {
    return cover_ ? OracleKind::GraphCover : OracleKind::GraphInduced;
  }
  Role role() const override {
    return cover_ ? Role::Submodular : Role::Supermodular;
  }

 private:
  int n_;
  std::vector<WeightedEdge> e_;
  bool cover_;
};

class FlowFn final : public SetFunction {
 public:
  FlowFn(int n, std::vector<BoundedArc> a) : n_(n), a_(std::move(a)) {}
  int size() const override { return n_; }
  Int eval(Mask x) const override {
    Int s = 0;
    for (const auto& a : a_) {
      const bool tail = has(x, a.from), head = has(x, a.to);
      if (head && !tail) s = sat_add(s, a.lower);
      if (tail && !head) s = sat_sub(s, a.upper);
    }
    return s;
  }
  OracleKind kind() const override { return OracleKind::FlowInduced; }

 private:
  int n_;
  std::vector<BoundedArc> a_;
};

class RootFn final : public SetFunction {
 public:
  RootFn(int n, std::vector<WeightedEdge> a, Int k)
      : n_(n), a_(std::move(a)), k_(k) {}
  int size() const override { return n_; }
  Int eval(Mask x) const override {
    if (x == 0) return 0;
    Int in = 0;
    for (const auto& a : a_)
      if (has(x, a.v) && !has(x, a.u)) in += a.w;
    return k_ - in;
  }
  OracleKind kind() const override { return OracleKind::RootVector; }

 private:
  int n_;
  std::vector<WeightedEdge> a_;
  Int k_;
};

class ShiftedFn final : public SetFunction {
 public:
  ShiftedFn(SetFn p, IntVec s) : p_(std::move(p)), s_(std::move(s)) {}
  int size() const override { return p_->size(); }
  Int eval(Mask x) const override { return sat_add(p_->eval(x), sum_over(s_, x)); }
  OracleKind kind() const override { return OracleKind::Shifted; }
  Role role() const override { return p_->role(); }

 private:
  SetFn p_;
  IntVec s_;
};

class RestrictedFn final : public SetFunction {
 public:
  RestrictedFn(SetFn p, Mask z) : p_(std::move(p)), idx_(elements(z)) {}
  int size() const override { return static_cast<int>(idx_.size()); }
  Int eval(Mask x) const override { return p_->eval(lift(x, idx_)); }
  OracleKind kind() const override { return OracleKind::Restricted; }
  Role role() const override { return p_->role(); }

 private:
  SetFn p_;
  std::vector<int> idx_;
};

class ContractedFn final : public SetFunction {
 public:
  ContractedFn(SetFn p, Mask z) : base_(std::move(p)), z_(z) {
    pz_ = base_->eval(z_);
    if (!is_finite(pz_)) throw Error("contraction by a set of infinite value");
    idx_ = elements(full_mask(base_->size()) & ~z_);
  }
  int size() const override { return static_cast<int>(idx_.size()); }
  Int eval(Mask x) const override {
    return sat_sub(base_->eval(lift(x, idx_) | z_), pz_);
  }
  OracleKind kind() const override { return OracleKind::Contracted; }
  Role role() const override { return base_->role(); }

  const SetFn& base() const { return base_; }
  Mask z() const { return z_; }
  Mask lifted(Mask x) const { return lift(x, idx_); }

 private:
  SetFn base_;
  Mask z_;
  Int pz_;
  std::vector<int> idx_;
};

class ComplementFn final : public SetFunction {
 public:
  explicit ComplementFn(SetFn p) : p_(std::move(p)) {
    full_ = full_mask(p_->size());
    total_ = p_->eval(full_);
    if (!is_finite(total_)) throw Error("complement needs a finite p(S)");
  }
  int size() const override { return p_->size(); }
  Int eval(Mask x) const override {
    return sat_sub(total_, p_->eval(full_ & ~x));
  }
  OracleKind kind() const override { return OracleKind::Complemented; }
  Role role() const override {
    return p_->role() == Role::Supermodular ? Role::Submodular
                                            : Role::Supermodular;
  }
  const SetFn& inner() const { return p_; }

 private:
  SetFn p_;
  Mask full_;
  Int total_;
};

// Box-tightened function, tabulated once by a coordinate-wise max-plus
// transform of p(X) + f(Y-X) - g(X-Y) over X.
class BoxedFn final : public SetFunction {
 public:
  BoxedFn(const SetFn& p, const IntVec& f, const IntVec& g) : n_(p->size()) {
    check_subset_scan(n_);
    const Mask full = full_mask(n_);
    a_.resize(size_t{1} << n_);
    for (Mask x = 0; x <= full; ++x) a_[x] = p->eval(x);
    for (int v = 0; v < n_; ++v) {
      const Mask b = bit(v);
      for (Mask x = 0; x <= full; ++x) {
        if (x & b) continue;
        const Int out = a_[x];       // v not in X
        const Int in = a_[x | b];    // v in X
        // new index with v in Y / v not in Y
        a_[x | b] = std::max(in, sat_add(out, f[v]));
        a_[x] = std::max(out, sat_sub(in, g[v]));
      }
    }
  }
  int size() const override { return n_; }
  Int eval(Mask x) const override { return a_.at(x); }
  OracleKind kind() const override { return OracleKind::Boxed; }

 private:
  int n_;
  std::vector<Int> a_;
};

}  // namespace

SetFn make_table(int n, std::vector<Int> values) {
  return std::make_shared<TableFn>(n, std::move(values));
}

SetFn table_from_points(int n, const std::vector<IntVec>& points) {
  check_subset_scan(n);
  if (points.empty()) throw Error("empty point list");
  std::vector<Int> v(size_t{1} << n, kPosInf);
  for (Mask x = 0; x < v.size(); ++x)
    for (const auto& p : points) v[x] = std::min(v[x], sum_over(p, x));
  return make_table(n, std::move(v));
}

SetFn tabulate(const SetFn& p) {
  const int n = p->size();
  check_subset_scan(n);
  std::vector<Int> v(size_t{1} << n);
  for (Mask x = 0; x < v.size(); ++x) v[x] = p->eval(x);
  return make_table(n, std::move(v));
}

SetFn make_induced(int n, std::vector<WeightedEdge> edges) {
  return std::make_shared<InducedFn>(n, std::move(edges), false);
}

SetFn make_cover(int n, std::vector<WeightedEdge> edges) {
  return std::make_shared<InducedFn>(n, std::move(edges), true);
}

SetFn make_flow_induced(int n, std::vector<BoundedArc> arcs) {
  return std::make_shared<FlowFn>(n, std::move(arcs));
}

SetFn make_root_vector(int n, std::vector<WeightedEdge> arcs, Int k) {
  return std::make_shared<RootFn>(n, std::move(arcs), k);
}

SetFn shifted(const SetFn& p, IntVec shift) {
  if (static_cast<int>(shift.size()) != p->size())
    throw Error("shift length mismatch");
  return std::make_shared<ShiftedFn>(p, std::move(shift));
}

SetFn restrict_to(const SetFn& p, Mask z) {
  return std::make_shared<RestrictedFn>(p, z);
}

SetFn contract(const SetFn& p, Mask z) {
  if (const auto* c = dynamic_cast<const ContractedFn*>(p.get()))
    return std::make_shared<ContractedFn>(c->base(), c->z() | c->lifted(z));
  return std::make_shared<ContractedFn>(p, z);
}

SetFn complement(const SetFn& p) {
  if (const auto* c = dynamic_cast<const ComplementFn*>(p.get()))
    return c->inner();
  return std::make_shared<ComplementFn>(p);
}

SetFn boxed(const SetFn& p, IntVec f, IntVec g) {
  return std::make_shared<BoxedFn>(p, f, g);
}

// ---- handles and membership -----------------------------------------------

IntVec plus_exchange(const IntVec& m, int s, int t) {
  IntVec out = m;
  ++out[s];
  --out[t];
  return out;
}

bool MembershipOracle::exchange(const IntVec& m, int s, int t) const {
  return member(plus_exchange(m, s, t));
}

BaseHandle BaseHandle::of(SetFn p, Modularity mod) {
  BaseHandle b;
  b.n = p->size();
  b.p = std::move(p);
  b.modularity = mod;
  return b;
}

BaseHandle BaseHandle::with_box(IntVec f, IntVec g) const {
  if (static_cast<int>(f.size()) != n || static_cast<int>(g.size()) != n)
    throw Error("box length mismatch");
  for (int i = 0; i < n; ++i)
    if (f[i] > g[i]) throw Error("box with f > g");
  BaseHandle b = *this;
  b.lower = std::move(f);
  b.upper = std::move(g);
  return b;
}

bool BaseHandle::in_box(const IntVec& m) const {
  if (!lower) return true;
  for (int i = 0; i < n; ++i)
    if (m[i] < (*lower)[i] || m[i] > (*upper)[i]) return false;
  return true;
}

const SetFn& BaseHandle::oracle() const {
  if (!p) throw Error("operation needs a set-function oracle");
  return p;
}

SetFn effective_function(const BaseHandle& b) {
  if (!b.has_box()) return b.oracle();
  return boxed(b.oracle(), *b.lower, *b.upper);
}

namespace {

bool brute_member(const SetFn& p, const IntVec& m) {
  const int n = p->size();
  check_subset_scan(n);
  const Mask full = full_mask(n);
  if (sum_over(m, full) != p->eval(full)) return false;
  for (Mask x = 1; x < full; ++x)
    if (sum_over(m, x) < p->eval(x)) return false;
  return true;
}

}  // namespace

bool is_member(const BaseHandle& b, const IntVec& m) {
  if (static_cast<int>(m.size()) != b.n) throw Error("vector length mismatch");
  if (!b.in_box(m)) return false;
  if (b.fast) return b.fast->member(m);
  return brute_member(b.oracle(), m);
}

bool has_tight_separator(const SetFn& p, const IntVec& m, int s, int t) {
  const int n = p->size();
  check_subset_scan(n);
  const Mask full = full_mask(n);
  for (Mask x = 0; x <= full; ++x) {
    if (!has(x, t) || has(x, s)) continue;
    if (sum_over(m, x) == p->eval(x)) return true;
  }
  return false;
}

bool exchange_feasible(const BaseHandle& b, const IntVec& m, int s, int t) {
  if (s == t) throw Error("exchange needs distinct elements");
  if (b.has_box() && !b.in_box(plus_exchange(m, s, t))) return false;
  if (b.fast) return b.fast->exchange(m, s, t);
  return !has_tight_separator(b.oracle(), m, s, t);
}

Mask smallest_tight_set(const BaseHandle& b, const IntVec& m, int t) {
  Mask out = bit(t);
  for (int s = 0; s < b.n; ++s)
    if (s != t && exchange_feasible(b, m, s, t)) out |= bit(s);
  return out;
}

std::optional<SearchBox> natural_box(const BaseHandle& b) {
  SearchBox box{IntVec(b.n, kNegInf), IntVec(b.n, kPosInf)};
  if (b.p) {
    const Mask full = full_mask(b.n);
    const Int total = b.p->eval(full);
    for (int s = 0; s < b.n; ++s) {
      box.lo[s] = b.p->eval(bit(s));
      box.hi[s] = sat_sub(total, b.p->eval(full & ~bit(s)));
    }
  }
  if (b.has_box()) {
    for (int s = 0; s < b.n; ++s) {
      box.lo[s] = std::max(box.lo[s], (*b.lower)[s]);
      box.hi[s] = std::min(box.hi[s], (*b.upper)[s]);
    }
  }
  for (int s = 0; s < b.n; ++s)
    if (!is_finite(box.lo[s]) || !is_finite(box.hi[s])) return std::nullopt;
  return box;
}

EnumeratedSet enumerate_integral_points(const BaseHandle& b,
                                        const SearchBox& box) {
  const int n = b.n;
  EnumeratedSet out;
  double volume = 1;
  for (int i = 0; i < n; ++i) {
    if (box.hi[i] < box.lo[i]) return out;
    volume *= static_cast<double>(box.hi[i] - box.lo[i] + 1);
  }
  if (volume > brute_ceiling().max_volume)
    throw CeilingExceeded("search box volume exceeds the brute-force ceiling");

  // With a known total the last coordinate is determined by the others.
  const bool fixed_total = b.p != nullptr;
  const Int total = fixed_total ? b.p->eval(full_mask(n)) : 0;
  const int free = fixed_total ? n - 1 : n;
  IntVec x = box.lo;
  while (true) {
    bool ok = true;
    if (fixed_total) {
      Int partial = 0;
      for (int i = 0; i < free; ++i) partial += x[i];
      x[n - 1] = total - partial;
      ok = x[n - 1] >= box.lo[n - 1] && x[n - 1] <= box.hi[n - 1];
    }
    if (ok && is_member(b, x)) out.points.push_back(x);
    int i = 0;
    while (i < free && x[i] == box.hi[i]) x[i] = box.lo[i], ++i;
    if (i == free) break;
    ++x[i];
  }
  return out;
}

EnumeratedSet enumerate_integral_points(const BaseHandle& b) {
  auto box = natural_box(b);
  if (!box) throw Error("no finite search box; supply bounds explicitly");
  return enumerate_integral_points(b, *box);
}

bool box_intersection_feasible(const BaseHandle& b, const IntVec& f,
                               const IntVec& g) {
  const SetFn& p = b.oracle();
  const int n = b.n;
  for (int i = 0; i < n; ++i)
    if (f[i] > g[i]) return false;
  check_subset_scan(n);
  const SetFn pbar = complement(p);
  const Mask full = full_mask(n);
  for (Mask x = 0; x <= full; ++x) {
    if (p->eval(x) > sum_over(g, x)) return false;
    if (sum_over(f, x) > pbar->eval(x)) return false;
  }
  return true;
}

}  // namespace decmin
