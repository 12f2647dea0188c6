#pragma once

#include <vector>

#include "catalan/errors.hpp"
#include "catalan/rational.hpp"

namespace catalan {

enum class Rel { LT, LE, EQ, GE, GT };

struct IneqRow {
  RatVec a;
  Rel rel = Rel::LE;
  Rat b;
};

// Exact rational linear system a·x rel b.
struct IneqSystem {
  int vars = 0;
  std::vector<IneqRow> rows;

  explicit IneqSystem(int v = 0) : vars(v) {}
  void add(RatVec a, Rel rel, Rat b) { rows.push_back({std::move(a), rel, std::move(b)}); }
  void add_int(const std::vector<long long>& a, Rel rel, long long b);
};

struct FMResult {
  bool empty = true;
  int dim = -1;     // affine dimension of the solution set
  RatVec sample;    // a point of the solution set
};

// Fourier–Motzkin elimination with strict/weak bookkeeping.  Variables are
// eliminated by increasing number of occurrences; redundant rows are pruned
// by pairwise dominance.  With want_dimension the affine dimension is found
// by detecting implicit equalities among the weak rows.
FMResult fm_feasible(const IneqSystem& sys, bool want_dimension = true, int max_vars = 12);

}  // namespace catalan
