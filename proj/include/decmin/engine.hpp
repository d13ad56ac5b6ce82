#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "decmin/core.hpp"

namespace decmin {

// |X| as a set-function.
SetFn cardinality(int n);

// Member from the chain of prefixes of `order`; falls back to a search for
// non-fully-supermodular oracles.
IntVec greedy_member(const BaseHandle& b, const std::vector<int>& order);
// Any member, or Infeasible when the set is empty.
IntVec initial_member(const BaseHandle& b);
// Fully supermodular bounding function, built from the member list when the
// handle only carries an intersecting or crossing supermodular oracle.
SetFn bounding_function(const BaseHandle& b);

struct Step {
  int s = -1;  // gains one unit
  int t = -1;  // loses one unit
  IntVec next;
};

std::optional<Step> one_tightening(const BaseHandle& b, const IntVec& m);

struct BasicResult {
  IntVec m;
  long steps = 0;
};
BasicResult basic_decmin(const BaseHandle& b, const IntVec& m0);

struct NDTrace {
  std::vector<Int> mus;
  std::vector<Mask> witnesses;
  Int result = 0;
  bool degenerate = false;
  int iterations() const { return static_cast<int>(mus.size()) - 1; }
};

// Returns a maximizer of p(X) - mu * b(X).
using ArgmaxOracle = std::function<Mask(Int mu)>;
ArgmaxOracle brute_argmax(const SetFn& p, const SetFn& b);

// Smallest integer mu with p(X) <= mu * b(X) for every X.
NDTrace newton_dinkelbach(const SetFn& p, const SetFn& b,
                          ArgmaxOracle argmax = {});

IntVec beta_covered_member(const BaseHandle& b, Int beta);
IntVec pre_decmin_tighten(const BaseHandle& b, const IntVec& m, Int beta);
Mask peak_set(const BaseHandle& b, const IntVec& m, Int beta);
IntVec strongly_poly_decmin(const BaseHandle& b);

struct DecminCheck {
  bool decmin = true;
  std::optional<std::pair<int, int>> witness;  // (s, t)
};
DecminCheck is_decmin(const BaseHandle& b, const IntVec& m);

struct MeasureReport {
  Int square_sum = 0;
  Int diff_sum = 0;
  std::vector<Int> k_largest;
  std::optional<Int> diff_k;
};
MeasureReport measures(const IntVec& m, std::optional<Int> K = std::nullopt);

}  // namespace decmin
