#pragma once

#include <cstdint>
#include <random>

#include "decmin/core.hpp"
#include "decmin/orientation.hpp"

namespace decmin::gen {

using Rng = std::mt19937_64;

// Fully supermodular table on n elements with every value in [lo, hi]:
// a modular part plus convex functions of |X n A| for random sets A.
SetFn supermodular_table(Rng& rng, int n, Int lo = -4, Int hi = 4);

// Loopless multigraph; connected when asked (needs n - 1 <= m).
Graph multigraph(Rng& rng, int n, int m, bool connected);

// i_G of a random multigraph, as a set-function on its nodes.
SetFn induced_of(const Graph& g);

}  // namespace decmin::gen
