#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace decmin {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using Mask = std::uint64_t;

inline constexpr Int kNegInf = std::numeric_limits<Int>::min();
inline constexpr Int kPosInf = std::numeric_limits<Int>::max();
inline constexpr int kMaxGround = 63;

// ---- errors ---------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a brute-force routine would exceed the configured ceiling.
struct CeilingExceeded : Error {
  using Error::Error;
};

// Infeasibility always carries a witness: a violating set of elements/nodes.
struct Infeasible : Error {
  std::vector<int> witness;
  Infeasible(const std::string& what, std::vector<int> w)
      : Error(what), witness(std::move(w)) {}
};

// ---- saturating arithmetic ------------------------------------------------

inline bool is_finite(Int a) { return a != kNegInf && a != kPosInf; }
Int sat_add(Int a, Int b);
Int sat_neg(Int a);
inline Int sat_sub(Int a, Int b) { return sat_add(a, sat_neg(b)); }
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

// ---- subsets --------------------------------------------------------------

inline Mask bit(int i) { return Mask{1} << i; }
inline bool has(Mask x, int i) { return (x >> i) & 1U; }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }
inline int card(Mask x) { return __builtin_popcountll(x); }
std::vector<int> elements(Mask x);
Mask to_mask(const std::vector<int>& elems);
Int sum_over(const IntVec& v, Mask x);

// ---- ground sets and comparators ------------------------------------------

struct GroundSet {
  int n = 0;
  std::vector<std::string> labels;
  static GroundSet numbered(int n);
};

enum class Order { Smaller, Equivalent, Larger };
const char* to_string(Order o);

// Lexicographic comparison of the decreasingly sorted vectors.
Order dec_compare(const IntVec& x, const IntVec& y);
// Lexicographic comparison of the increasingly sorted vectors.
Order inc_compare(const IntVec& x, const IntVec& y);
bool value_equivalent(const IntVec& x, const IntVec& y);

// ---- set-function oracles -------------------------------------------------

enum class OracleKind {
  Table,
  GraphInduced,
  GraphCover,
  FlowInduced,
  Shifted,
  Restricted,
  Contracted,
  Complemented,
  Boxed,
  RootVector,
  MatroidRank,
};

enum class Role { Supermodular, Submodular };

class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual int size() const = 0;
  virtual Int eval(Mask x) const = 0;
  virtual OracleKind kind() const = 0;
  virtual Role role() const { return Role::Supermodular; }
};
using SetFn = std::shared_ptr<const SetFunction>;

// Explicit value table indexed by bitmask.
SetFn make_table(int n, std::vector<Int> values);
// Table built as the pointwise minimum of x(X) over a point list; this is the
// bounding function of an M-convex set given by its members.
SetFn table_from_points(int n, const std::vector<IntVec>& points);
// Materialize any oracle into a table (subset scan, ceiling-guarded).
SetFn tabulate(const SetFn& p);

struct WeightedEdge {
  int u, v;
  Int w = 1;
};
// i_G(X): total weight of edges with both ends in X.
SetFn make_induced(int n, std::vector<WeightedEdge> edges);
// e_G(X): total weight of edges with at least one end in X (submodular role).
SetFn make_cover(int n, std::vector<WeightedEdge> edges);

struct BoundedArc {
  int from, to;
  Int lower, upper;
};
// p_fg(Z) = in-lower(Z) - out-upper(Z).
SetFn make_flow_induced(int n, std::vector<BoundedArc> arcs);
// k - in-degree(X) on nonempty X, 0 on the empty set.
SetFn make_root_vector(int n, std::vector<WeightedEdge> arcs, Int k);

// p(X) + shift(X).
SetFn shifted(const SetFn& p, IntVec shift);
// p restricted to subsets of Z; ground is Z in increasing order.
SetFn restrict_to(const SetFn& p, Mask z);
// p(X u Z) - p(Z) on subsets of S - Z; ground is S - Z in increasing order.
// Nested contractions fuse into one contraction by the union.
SetFn contract(const SetFn& p, Mask z);
// b(X) = p(S) - p(S - X); the role flips.  Double complement unwraps.
SetFn complement(const SetFn& p);
// Bounding function of B'(p) intersected with the box [f, g].
SetFn boxed(const SetFn& p, IntVec f, IntVec g);

// ---- brute-force ceilings -------------------------------------------------

struct BruteCeiling {
  int max_n = 20;
  double max_volume = 1e6;
};
// Defaults, overridden by DECMIN_BRUTE_CEILING="n[,volume]".
const BruteCeiling& brute_ceiling();
void check_subset_scan(int n);

// ---- base-polyhedra -------------------------------------------------------

enum class Modularity { Full, Intersecting, Crossing };

// Problem-specific membership, registered on a handle to replace subset scans.
// Box constraints are applied by the caller, never by the oracle.
class MembershipOracle {
 public:
  virtual ~MembershipOracle() = default;
  virtual bool member(const IntVec& m) const = 0;
  // Is m + chi_s - chi_t a member, given that m is one.
  virtual bool exchange(const IntVec& m, int s, int t) const;
};

struct BaseHandle {
  int n = 0;
  SetFn p;  // supermodular role; may be null when a fast oracle is present
  Modularity modularity = Modularity::Full;
  std::optional<IntVec> lower;
  std::optional<IntVec> upper;
  std::shared_ptr<const MembershipOracle> fast;

  static BaseHandle of(SetFn p, Modularity mod = Modularity::Full);
  BaseHandle with_box(IntVec f, IntVec g) const;
  bool has_box() const { return lower.has_value(); }
  bool in_box(const IntVec& m) const;
  const SetFn& oracle() const;  // throws when p is absent
};

// The function whose B' equals B intersected with its box.
SetFn effective_function(const BaseHandle& b);

bool is_member(const BaseHandle& b, const IntVec& m);
bool exchange_feasible(const BaseHandle& b, const IntVec& m, int s, int t);
// T_m(t): t together with every s admitting the exchange m + chi_s - chi_t.
Mask smallest_tight_set(const BaseHandle& b, const IntVec& m, int t);
// Subset-scan version of the exchange test through m-tight sets.
bool has_tight_separator(const SetFn& p, const IntVec& m, int s, int t);

struct EnumeratedSet {
  std::vector<IntVec> points;
};

struct SearchBox {
  IntVec lo, hi;
};
// Box implied by p({s}) <= m(s) <= p(S) - p(S - s) and the handle's box.
std::optional<SearchBox> natural_box(const BaseHandle& b);
EnumeratedSet enumerate_integral_points(const BaseHandle& b,
                                        const SearchBox& box);
EnumeratedSet enumerate_integral_points(const BaseHandle& b);

bool box_intersection_feasible(const BaseHandle& b, const IntVec& f,
                               const IntVec& g);

IntVec plus_exchange(const IntVec& m, int s, int t);

}  // namespace decmin
