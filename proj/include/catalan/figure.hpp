#pragma once

#include <string>

#include "catalan/poset.hpp"

namespace catalan {

// Rank-2 picture of the extended arrangement: every hyperplane H_{α,k} for
// 0 ≤ k ≤ m clipped to the dominant cone, the bounded dominant regions
// shaded, their maximal alcoves hatched, the dilated fundamental simplex
// outlined and the coroot lattice points inside it dotted.  Geometry is
// computed exactly; coordinates are projected at fixed precision only when
// printed.
std::string render_figure(const RootPoset& p, int m);

}  // namespace catalan
