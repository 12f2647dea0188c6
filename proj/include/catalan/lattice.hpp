#pragma once

#include <vector>

#include "catalan/regions.hpp"

namespace catalan {

// Point of the coroot lattice Q̌, stored in coroot coordinates.
struct CorootPoint {
  std::vector<long long> n;
  friend bool operator==(const CorootPoint&, const CorootPoint&) = default;
  friend bool operator<(const CorootPoint& a, const CorootPoint& b) { return a.n < b.n; }
};

// (σ_i, x) for all i; the values determining membership in the simplices.
std::vector<long long> coweight_values(const RootSystem& rs, const CorootPoint& pt);

// D_m(Φ) = Q̌ ∩ p·closure(A∘) with p = mh−1, by a box scan over the
// fundamental-coweight coordinates with an exact change-of-basis check.
std::vector<CorootPoint> enumerate_Dm(const RootSystem& rs, int m);

// Number of the ℓ+1 bounding hyperplanes of Σ^r_m met with equality.
// Requires pt ∈ Σ^r_m.
int wall_incidence(const RootSystem& rs, const CorootPoint& pt, int r, int m);

// Same count without the membership requirement; a point can satisfy wall
// equalities of Σ^r_m, r < m, while lying outside that simplex.
int sigma_wall_equalities(const RootSystem& rs, const CorootPoint& pt, int r, int m);
bool sigma_wall_equality(const RootSystem& rs, const CorootPoint& pt, int r, int m, int i);

// The element whose alcove is {(σ_i,x) ∈ (m−1,m), (α̃,x) ∈ (mh−m−1, mh−m)},
// i.e. the maximal alcove of the region with J_r = ∅ for r < m, J_m = Π.
AffineElement w_f(const RootPoset& p, int m);

// ρ(w) = (w_f w⁻¹)·0; a bijection from the maximal alcoves onto D_m(Φ).
CorootPoint rho(const RootSystem& rs, const AffineElement& w, const AffineElement& wf, int m);

// Orbits of W on Q̌/pQ̌ by union-find over residue vectors.
long long orbit_count_bruteforce(const RootSystem& rs, int m, long long guard = 200000);

}  // namespace catalan
