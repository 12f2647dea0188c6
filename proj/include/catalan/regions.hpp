#pragma once

#include <optional>
#include <vector>

#include "catalan/chains.hpp"
#include "catalan/fm.hpp"

namespace catalan {

// Dominant region of the extended Catalan arrangement, represented
// intensionally by its geometric chain of filters: for each positive root α
// the region pins (α,x) to the interval (t_α, t_α+1) when t_α < m and to
// (m,∞) when t_α = m, where t_α = max{t : α ∈ I_t}.
struct Region {
  FilterChain chain;
  std::vector<int> level;  // t_α per positive-root index
  bool bounded = false;
};

Region region_of_chain(const RootPoset& p, const FilterChain& c);
// Bounded case: accepts a positive geometric chain of ideals.
Region region_of_chain(const RootPoset& p, const IdealChain& c);
FilterChain chain_of_region(const Region& r);
IdealChain ideal_chain_of(const RootPoset& p, const Region& r);

// Alcove coordinates r(w,α): the unique integers with r−1 < (α,x) < r on
// wA∘.  Valid vectors satisfy r_α + r_β − 1 ≤ r_{α+β} ≤ r_α + r_β.
struct ShiVector {
  std::vector<int> r;
  friend bool operator==(const ShiVector&, const ShiVector&) = default;
};

bool shi_condition_holds(const RootSystem& rs, const ShiVector& s);

// The maximal alcove of the bounded region of a positive geometric chain of
// ideals: its coordinates are exactly the rank table.
ShiVector max_alcove(const RootPoset& p, const IdealChain& c);

// Element of the affine Weyl group W ⋉ Q̌ as x ↦ Lx + t.  L acts on
// simple-root coordinates; the translation is kept in coroot coordinates.
// linv caches L⁻¹ and is maintained under composition.
struct AffineElement {
  std::vector<std::vector<int>> lin, linv;
  std::vector<long long> trans;
  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

AffineElement affine_identity(const RootSystem& rs);
AffineElement affine_mul(const RootSystem& rs, const AffineElement& a, const AffineElement& b);
AffineElement affine_inverse(const RootSystem& rs, const AffineElement& a);
// i = 0 is the reflection in H_{α̃,1}; i = 1..ℓ the simple reflections.
AffineElement simple_affine_reflection(const RootSystem& rs, int i);

// A rational point in coweight coordinates: y_i = (σ_i, x) = ynum[i]/den.
struct AlcovePoint {
  std::vector<long long> ynum;
  long long den = 1;
};

AlcovePoint fundamental_barycenter(const RootSystem& rs);
AlcovePoint apply_to_point(const RootSystem& rs, const AffineElement& w, const AlcovePoint& pt);
// (α, x) evaluated at a coweight point, as a rational num/den pair.
long long eval_root_num(const RootSystem& rs, int root, const AlcovePoint& pt);

ShiVector shi_of(const RootSystem& rs, const AffineElement& w);

// Walks a gallery from the fundamental alcove to the alcove with the given
// coordinates, crossing one separating wall per step.
AffineElement shi_to_affine(const RootSystem& rs, const ShiVector& target);

// The i-th wall of wA̅∘ as an arrangement hyperplane H_{root,level} with the
// root normalized positive.
struct Hyperplane {
  int root;
  long long level;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};
Hyperplane alcove_wall(const RootSystem& rs, const AffineElement& w, int i);

// Image of H_{root,level} under the affine map, normalized to a positive root.
Hyperplane map_hyperplane(const RootSystem& rs, const AffineElement& u, int root,
                          long long level);

// Number of i ∈ {0..ℓ} with ℓ(ws_i) > ℓ(w) and ws_i A∘ still dominant.
// Equals the number of walls of wA∘ at level ≥ 1 not separating wA∘ from A∘.
int ascent_count(const RootSystem& rs, const AffineElement& w);

// Walls of w A̅∘ of the form H_{α,r}, 1 ≤ r ≤ m, not separating wA∘ from A∘,
// grouped by r (result[r-1]).
std::vector<RootSet> nonsep_wall_roots_by_rank(const RootSystem& rs, const AffineElement& w,
                                               int m);

struct WallInfo {
  int root;
  int level;
  bool separates;
  std::optional<bool> is_wall;  // unset when no combinatorial criterion applies
};

// Candidate walls of a region with separation flags; wall status is decided
// by the indecomposability criteria (non-separating at every rank for
// bounded regions; separating at rank m for every dominant region).
std::vector<WallInfo> walls_and_separation(const RootPoset& p, const Region& r);

// FM systems in coweight coordinates.
IneqSystem region_system(const RootSystem& rs, const Region& r, bool closed = false);
IneqSystem alcove_system(const RootSystem& rs, const ShiVector& s);

// Exact facet test at small rank: is H_{root,level} a wall of the region?
bool fm_is_wall(const RootSystem& rs, const Region& r, int root, long long level);

// Cell counts |F_k| (reported as f_{k−1}) by the pair-counting routes.
struct PairCellCounts {
  std::vector<Int> f;               // pairs (R,S): all dominant regions
  std::vector<Int> f_plus;          // pairs with S forced over the simple walls
  std::vector<Int> f_plus_bounded;  // bounded regions with non-separating walls
};
PairCellCounts cells_by_pairs(const RootPoset& p, int m);

// Direct geometric enumeration at rank ≤ 3: per-root interval labels with an
// FM feasibility and dimension test.  Label m+1 encodes (α,x) = m.
struct Cell {
  std::vector<int> label;
  int dim;
  bool bounded;
};
struct CellCounts {
  std::vector<long long> f, f_plus;  // index k = 0..ℓ holds |F_k| = f_{k−1}
  std::vector<Cell> cells;
};
CellCounts cells_by_fm(const RootPoset& p, int m, bool keep_cells = false);

}  // namespace catalan
