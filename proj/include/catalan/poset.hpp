#pragma once

#include <functional>
#include <map>
#include <vector>

#include "catalan/rootset.hpp"
#include "catalan/rootsys.hpp"

namespace catalan {

// The root poset of Φ⁺: α ≤ β iff β−α has nonnegative simple-root
// coordinates (equivalent to "β−α is a nonnegative combination of positive
// roots" since Π ⊆ Φ⁺).
struct RootPoset {
  const RootSystem* rs = nullptr;
  int n = 0;  // |Φ⁺|
  std::vector<RootSet> up, up_strict;      // up[i] contains i
  std::vector<RootSet> down, down_strict;
  std::vector<std::pair<int, int>> covers;  // (lower, upper), upper−lower ∈ Π
  RootSet all, simples;

  bool leq(int i, int j) const { return up[i].test(j); }
  bool is_filter(RootSet s) const;
  bool is_ideal(RootSet s) const;
  RootSet up_closure(RootSet s) const;
  RootSet minimal_elements(RootSet s) const;
  RootSet maximal_elements(RootSet s) const;
};

RootPoset build_poset(const RootSystem& rs);

// Emits every filter exactly once, as the up-closure of each antichain of
// minimal elements; DFS over the fixed root ordering, so the order is
// deterministic.  positive filters are those containing no simple root.
void enumerate_filters(const RootPoset& p, bool positive_only,
                       const std::function<void(RootSet)>& emit);

std::vector<RootSet> all_filters(const RootPoset& p, bool positive_only = false);
std::vector<RootSet> all_ideals(const RootPoset& p);

std::map<int, long long> count_filters_by_min_elements(const RootPoset& p, bool positive_only);
std::map<int, long long> count_ideals_by_max_elements(const RootPoset& p,
                                                      bool must_contain_simples);

}  // namespace catalan
