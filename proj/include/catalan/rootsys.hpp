#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catalan/errors.hpp"
#include "catalan/rational.hpp"

namespace catalan {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family;
  int rank;

  // Validates the rank constraints per family; D3 is rejected (use A3).
  CartanType(Family f, int r);
  static CartanType parse(const std::string& s);  // "A2", "F4", ...
  std::string name() const;
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

// Coefficients on the ordered simple roots σ_1,...,σ_ℓ (Bourbaki numbering).
using RootVec = std::vector<int>;

RootVec vec_add(const RootVec& a, const RootVec& b);
RootVec vec_sub(const RootVec& a, const RootVec& b);

// Irreducible crystallographic root system with exact integer data.
//
// Normalization: long roots have squared length 2, so the Gram matrix has
// entries in (1/6)Z (stored as 6x the value) and every coroot 2α/(α,α) is an
// integer multiple of α.  Simple coroots are σ̌_i = coroot_scale[i]·σ_i.
//
// Two coordinate frames are used throughout:
//   * root coordinates: coefficients on σ_1..σ_ℓ;
//   * coweight coordinates of a point x: the values y_i = (σ_i, x), in which
//     every arrangement functional (α, x) is the integer form Σ a_i y_i.
struct RootSystem {
  explicit RootSystem(CartanType t) : type(t), rank(t.rank) {}

  CartanType type;
  int rank;                                       // ℓ
  std::vector<std::vector<int>> cartan;           // cartan[i][j] = (σ_i, σ̌_j)
  std::vector<std::vector<int>> gram6;            // 6·(σ_i, σ_j)
  std::vector<RootVec> roots;                     // Φ⁺; first ℓ entries are Π
  std::vector<int> height;                        // height[i] = Σ coords of roots[i]
  std::vector<std::vector<std::int16_t>> sum;     // index of roots[i]+roots[j], or -1
  std::vector<std::vector<std::pair<int, int>>> splits;  // splits[k]: pairs i<=j with sum k
  int highest = -1;                               // index of α̃
  std::vector<int> exponents;                     // e_1 <= ... <= e_ℓ
  int coxeter = 0;                                // h
  std::vector<int> coroot_scale;                  // k_i = 2/(σ_i,σ_i) ∈ {1,2,3}
  std::vector<std::vector<std::vector<int>>> refl;  // refl[i]: matrix of s_i on root coords

  int size() const { return static_cast<int>(roots.size()); }
  bool is_simple(int i) const { return i < rank; }
  int sum_index(int i, int j) const { return sum[i][j]; }
  int root_index(const RootVec& v) const;  // -1 if v ∉ Φ⁺

  long long inner6(const RootVec& x, const RootVec& y) const;  // 6·(x,y)
  // a^T · cartan · n, the pairing of a root-coordinate vector with a point
  // given in coroot coordinates (x = Σ n_j σ̌_j).  Always an integer.
  long long pair_root_coroot(const RootVec& a, const std::vector<long long>& n) const;

  RootVec apply_matrix(const std::vector<std::vector<int>>& M, const RootVec& v) const;

 private:
  std::map<RootVec, int> index_;
  friend RootSystem build_root_system(CartanType);
};

RootSystem build_root_system(CartanType t);

// Exact inner product of two integer coordinate vectors of length ℓ.
Rat inner(const RootSystem& rs, const RootVec& x, const RootVec& y);

// 2α/(α,α) in simple-root coordinates; α must be a root (either sign).
RatVec coroot(const RootSystem& rs, const RootVec& alpha);

// |W| by closure of the simple-reflection orbit of a regular dominant point.
long long weyl_order(const RootSystem& rs, long long guard = 4000000);

struct ParabolicComponent {
  CartanType type;
  std::vector<int> nodes;  // indices into Π, in the component's Bourbaki order
};

// Parabolic root subsystem Φ_J split into irreducible components.
struct Parabolic {
  std::vector<ParabolicComponent> components;
  int rank = 0;                        // |J|
  long long positive_root_count = 0;   // |Φ⁺ ∩ span{σ_j : j ∈ J}|
};

Parabolic parabolic(const RootSystem& rs, const std::vector<int>& J);

}  // namespace catalan
