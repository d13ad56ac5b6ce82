#pragma once

#include <vector>

#include "decmin/core.hpp"

namespace decmin {

struct CanonicalDecomposition {
  int n = 0;
  std::vector<Mask> chain;
  std::vector<Mask> partition;
  std::vector<Int> betas;
  std::vector<Int> r;
  IntVec delta_star;
  IntVec pi_star;
  std::vector<Mask> value_fixed;

  int q() const { return static_cast<int>(betas.size()); }
  int block_of(int s) const;
  Mask prefix(int i) const { return i == 0 ? 0 : chain[i - 1]; }
  bool operator==(const CanonicalDecomposition&) const = default;
};

// Chain, partition and essential values recovered from a dec-min element
// through smallest tight sets.  Throws if m is not dec-min.
CanonicalDecomposition canonical_from_decmin(const BaseHandle& b,
                                             const IntVec& m);

// Every C_i tight and beta_i - 1 <= m <= beta_i on S_i.
bool decmin_set_membership(const CanonicalDecomposition& d,
                           const BaseHandle& b, const IntVec& m);

// Tightness through exchanges: no s outside C may enter T_m(t) for t in C.
bool is_tight_by_exchange(const BaseHandle& b, const IntVec& m, Mask c);

// |L n X| >= p_i(X) - (beta_i - 1)|X| on every X in S_i; i is 0-based.
bool matroid_Mi_base_test(const CanonicalDecomposition& d, const BaseHandle& b,
                          int i, Mask l);

// Largest X in S_i with beta_i |X| = p_i(X).
Mask value_fixed_set(const CanonicalDecomposition& d, const BaseHandle& b,
                     int i);

Int linear_extension(const SetFn& p, const IntVec& pi);

struct GapReport {
  Int W = 0;
  Int bound = 0;
  Int gap = 0;
  bool o1 = false;
  bool o2 = false;
};
GapReport duality_gap(const BaseHandle& b, const IntVec& m, const IntVec& pi);

// Arcs (s, t) of the digraph on F_i used by the dual-optimal description.
std::vector<std::pair<int, int>> dual_arcs(const CanonicalDecomposition& d,
                                           const BaseHandle& b, int i);
bool verify_dual_optimal(const CanonicalDecomposition& d, const BaseHandle& b,
                         const IntVec& pi);

// Dec-min element minimizing sum c(s) m(s); starts from the given dec-min
// element and performs improving basis swaps.
IntVec cheapest_decmin(const BaseHandle& b, const IntVec& c,
                       const IntVec& decmin_start);
IntVec cheapest_decmin(const BaseHandle& b, const IntVec& c);

}  // namespace decmin
