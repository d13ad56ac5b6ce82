#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "decmin/canonical.hpp"
#include "decmin/core.hpp"
#include "decmin/orientation.hpp"

namespace decmin {

// Independence oracle on elements 0..size()-1.  Sets are element lists.
class Matroid {
 public:
  virtual ~Matroid() = default;
  virtual int size() const = 0;
  virtual bool independent(const std::vector<int>& x) const = 0;
  // Greedy rank; subclasses may override with something faster.
  virtual int rank(const std::vector<int>& x) const;
  int rank() const;
};
using MatroidPtr = std::shared_ptr<const Matroid>;

MatroidPtr uniform_matroid(int n, int r);
// block_of[s] names the block of s; at most caps[block] elements per block.
MatroidPtr partition_matroid(std::vector<int> block_of, std::vector<int> caps);
// Forests of a multigraph; element e is edges[e].
MatroidPtr graphic_matroid(int nodes, std::vector<std::pair<int, int>> edges);
// Independent sets are the subsets of the listed bases (all of equal size).
MatroidPtr explicit_bases(int n, std::vector<Mask> bases);
// Ground: part 0, then part 1, ... in order.
MatroidPtr direct_sum(std::vector<MatroidPtr> parts);
// k parallel copies of every element; copy j of s is j * n + s.
MatroidPtr parallel_copies(MatroidPtr m, int k);
MatroidPtr dual_matroid(MatroidPtr m);
// M / contract \ remove, on the remaining elements in increasing order.
MatroidPtr minor(MatroidPtr m, std::vector<int> contract, std::vector<int> remove);
// M_i of a canonical block: bases are the L inside S_i with
// Delta* + chi_L dec-min on S_i.  Ground: S_i in increasing order.
MatroidPtr block_matroid(const CanonicalDecomposition& d, const BaseHandle& b, int i);

std::vector<Mask> enumerate_bases(const Matroid& m);  // ground <= 63

// Maximum common independent set, by augmenting paths in exchange graphs.
std::vector<int> matroid_intersection(const Matroid& m1, const Matroid& m2);

// Greedy; throws Infeasible when the rank falls short of `expected_rank`.
std::vector<int> min_cost_basis(const Matroid& m, const IntVec& c,
                                std::optional<int> expected_rank = std::nullopt);

// Fully supermodular p of the aggregate set {(|Z n T_j|)_j : Z basis}.
SetFn aggregate_function(MatroidPtr m, std::vector<int> block_of, int blocks);

struct AggregateResult {
  std::vector<int> basis;
  IntVec vector;
};
// Basis whose block-count vector is dec-min; membership through
// intersection with a partition matroid.
AggregateResult decmin_aggregate(MatroidPtr m, std::vector<int> block_of,
                                 int blocks, const std::optional<NodeBounds>& box = std::nullopt);

struct BasisSumResult {
  std::vector<std::vector<int>> bases;
  IntVec sum;
};
// Matroids on a common ground set; optional per-element bounds on the sum.
BasisSumResult decmin_basis_sum(const std::vector<MatroidPtr>& ms,
                                const std::optional<NodeBounds>& box = std::nullopt);

// block_of assigns each ground element to one of `blocks` classes.
AggregateResult decmin_partition_intersection(MatroidPtr m, std::vector<int> block_of,
                                              int blocks);

// Orientation that is dec-min in its in-degrees and in its out-degrees at
// the same time, when one exists.
std::optional<Orientation> inout_decmin_orientation(const Graph& g);

}  // namespace decmin
