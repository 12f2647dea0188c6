#pragma once

#include <functional>
#include <vector>

#include "catalan/poset.hpp"

namespace catalan {

// Increasing chain J_1 ⊆ ... ⊆ J_m of ideals in Φ⁺ (J_0 = ∅ implicit).
struct IdealChain {
  int m = 0;
  std::vector<RootSet> ideals;
};

// Decreasing chain I_1 ⊇ ... ⊇ I_m of filters (I_0 = Φ⁺ implicit).
struct FilterChain {
  int m = 0;
  std::vector<RootSet> filters;
};

IdealChain complement(const RootPoset& p, const FilterChain& c);
FilterChain complement(const RootPoset& p, const IdealChain& c);

// Verdict of the geometricity test; on failure carries the first violated
// instance: roots alpha ∈ X_i, beta ∈ X_j with alpha+beta ∉ X_target.
struct GeomCheck {
  bool ok = true;
  const char* condition = "";  // "(2)" or "(3)"
  int i = -1, j = -1, alpha = -1, beta = -1;
};

// Conditions (J_i+J_j)∩Φ⁺ ⊆ J_{i+j} for i+j ≤ m and (I_i+I_j)∩Φ⁺ ⊆ I_{i+j}
// for all i,j (with I_i = I_m for i > m).  Throws on non-nested input or a
// member that is not an ideal/filter.
GeomCheck is_geometric(const RootPoset& p, const IdealChain& c);
GeomCheck is_geometric(const RootPoset& p, const FilterChain& c);

bool is_positive(const RootPoset& p, const IdealChain& c);   // Π ⊆ J_m
bool is_positive_filter_chain(const RootPoset& p, const FilterChain& c);  // I_m ∩ Π = ∅

// Enumerates geometric chains exactly once each, extending one member at a
// time with incremental pruning.  Deterministic order.
void enumerate_ideal_chains(const RootPoset& p, int m, bool positive_only,
                            const std::function<void(const IdealChain&)>& emit,
                            long long guard = 5000000);
void enumerate_filter_chains(const RootPoset& p, int m,
                             const std::function<void(const FilterChain&)>& emit,
                             long long guard = 5000000);
std::vector<IdealChain> all_ideal_chains(const RootPoset& p, int m, bool positive_only,
                                         long long guard = 5000000);
std::vector<FilterChain> all_filter_chains(const RootPoset& p, int m,
                                           long long guard = 5000000);

// r_α(J) = min{ r_1+...+r_k : α = α_1+...+α_k, α_i ∈ J_{r_i} }, computed by
// height-increasing DP over two-part splits.  Values may exceed m.
struct RankTable {
  std::vector<int> r;
};

RankTable rank_table(const RootPoset& p, const IdealChain& c);

// min{t : α ∈ J_t}, or m+1 when α ∉ J_m.
std::vector<int> first_levels(const IdealChain& c, int root_count);
// max{t ∈ 0..m : α ∈ I_t}; always ≥ 0 since I_0 = Φ⁺.
std::vector<int> last_levels(const FilterChain& c, int root_count);

// Indecomposable roots of rank r with respect to a positive geometric chain
// of ideals: r_α = r, no split α = β+γ with β ∈ J_i, γ ∈ J_j, i+j = r,
// i,j ≥ 1, and the rank-additivity condition on all α+β ∈ Φ⁺.
RootSet indecomposables(const RootPoset& p, const IdealChain& c, const RankTable& rt, int r);

// Rank-m indecomposables of a chain of filters: α ∈ I_m with no split
// α = β+γ, β ∈ I_i, γ ∈ I_j, i+j = m, i,j ≥ 0.
RootSet filter_indecomposables_m(const RootPoset& p, const FilterChain& c);

}  // namespace catalan
