#include "catalan/chains.hpp"

#include <algorithm>
#include <limits>

namespace catalan {

namespace {
constexpr int kBig = 1 << 20;  // stand-in for "not in any member"
}

IdealChain complement(const RootPoset& p, const FilterChain& c) {
  IdealChain out{c.m, {}};
  for (const RootSet& f : c.filters) out.ideals.push_back(p.all - f);
  return out;
}

FilterChain complement(const RootPoset& p, const IdealChain& c) {
  FilterChain out{c.m, {}};
  for (const RootSet& j : c.ideals) out.filters.push_back(p.all - j);
  return out;
}

namespace {

// (A + B) ∩ Φ⁺ ⊆ T; returns a witness pair on failure.
bool sums_inside(const RootPoset& p, RootSet A, RootSet B, RootSet T, GeomCheck& gc) {
  const RootSystem& rs = *p.rs;
  bool ok = true;
  A.for_each([&](int a) {
    if (!ok) return;
    B.for_each([&](int b) {
      if (!ok) return;
      int s = rs.sum_index(a, b);
      if (s >= 0 && !T.test(s)) {
        ok = false;
        gc.alpha = a;
        gc.beta = b;
      }
    });
  });
  return ok;
}

// Checks all instances of (2) and (3) that are determined by the first
// `t` members of the chain (t = m gives the full test).  Members are the
// ideals J_1..J_t; complements are taken against Φ⁺.
GeomCheck check_prefix(const RootPoset& p, const std::vector<RootSet>& J, int m, int t) {
  GeomCheck gc;
  auto ideal_at = [&](int i) { return i == 0 ? RootSet{} : J[i - 1]; };
  auto filter_at = [&](int i) { return i == 0 ? p.all : p.all - J[i - 1]; };
  for (int i = 1; i <= t; ++i)
    for (int j = i; j <= t; ++j) {
      if (i + j <= m && i + j <= t) {
        if (!sums_inside(p, ideal_at(i), ideal_at(j), ideal_at(i + j), gc)) {
          gc.ok = false;
          gc.condition = "(2)";
          gc.i = i;
          gc.j = j;
          return gc;
        }
      }
    }
  for (int i = 0; i <= t; ++i)
    for (int j = i; j <= t; ++j) {
      int tgt = std::min(i + j, m);
      if (tgt > t) continue;
      if (!sums_inside(p, filter_at(i), filter_at(j), filter_at(tgt), gc)) {
        gc.ok = false;
        gc.condition = "(3)";
        gc.i = i;
        gc.j = j;
        return gc;
      }
    }
  return gc;
}

void validate_nesting_ideals(const RootPoset& p, const IdealChain& c) {
  if (c.m < 1 || static_cast<int>(c.ideals.size()) != c.m)
    throw std::invalid_argument("ideal chain: m must be >= 1 and match the chain length");
  for (int t = 0; t < c.m; ++t) {
    if (!p.is_ideal(c.ideals[t])) throw std::invalid_argument("ideal chain: member is not an ideal");
    if (t > 0 && !c.ideals[t - 1].subset_of(c.ideals[t]))
      throw std::invalid_argument("ideal chain: not nested");
  }
}

void validate_nesting_filters(const RootPoset& p, const FilterChain& c) {
  if (c.m < 1 || static_cast<int>(c.filters.size()) != c.m)
    throw std::invalid_argument("filter chain: m must be >= 1 and match the chain length");
  for (int t = 0; t < c.m; ++t) {
    if (!p.is_filter(c.filters[t]))
      throw std::invalid_argument("filter chain: member is not a filter");
    if (t > 0 && !c.filters[t].subset_of(c.filters[t - 1]))
      throw std::invalid_argument("filter chain: not nested");
  }
}

}  // namespace

GeomCheck is_geometric(const RootPoset& p, const IdealChain& c) {
  validate_nesting_ideals(p, c);
  return check_prefix(p, c.ideals, c.m, c.m);
}

GeomCheck is_geometric(const RootPoset& p, const FilterChain& c) {
  validate_nesting_filters(p, c);
  return check_prefix(p, complement(p, c).ideals, c.m, c.m);
}

bool is_positive(const RootPoset& p, const IdealChain& c) {
  return p.simples.subset_of(c.ideals.back());
}

bool is_positive_filter_chain(const RootPoset& p, const FilterChain& c) {
  return (c.filters.back() & p.simples).none();
}

namespace {

RootSet sum_set(const RootPoset& p, RootSet A, RootSet B) {
  RootSet out;
  const RootSystem& rs = *p.rs;
  A.for_each([&](int a) {
    B.for_each([&](int b) {
      int s = rs.sum_index(a, b);
      if (s >= 0) out.set(s);
    });
  });
  return out;
}

}  // namespace

void enumerate_ideal_chains(const RootPoset& p, int m, bool positive_only,
                            const std::function<void(const IdealChain&)>& emit,
                            long long guard) {
  if (m < 1) throw std::invalid_argument("enumerate_ideal_chains: m must be >= 1");
  std::vector<RootSet> ideals = all_ideals(p);
  std::vector<RootSet> J;
  long long count = 0;
  std::function<void()> rec = [&]() {
    int t = static_cast<int>(J.size());
    if (t == m) {
      if (!positive_only || p.simples.subset_of(J.back())) {
        if (++count > guard)
          throw work_limit_exceeded("enumerate_ideal_chains: more than " +
                                    std::to_string(guard) + " chains");
        emit(IdealChain{m, J});
      }
      return;
    }
    RootSet bound = t > 0 ? J.back() : RootSet{};
    for (int i = 1; i <= t; ++i) {
      int j = t + 1 - i;
      if (j >= 1 && j <= t && i <= j) bound |= sum_set(p, J[i - 1], J[j - 1]);
    }
    for (const RootSet& X : ideals) {
      if (!bound.subset_of(X)) continue;
      J.push_back(X);
      if (check_prefix(p, J, m, t + 1).ok) rec();
      J.pop_back();
    }
  };
  rec();
}

void enumerate_filter_chains(const RootPoset& p, int m,
                             const std::function<void(const FilterChain&)>& emit,
                             long long guard) {
  if (m < 1) throw std::invalid_argument("enumerate_filter_chains: m must be >= 1");
  std::vector<RootSet> filters = all_filters(p);
  std::vector<RootSet> I;
  std::vector<RootSet> Jmirror;  // complements, for the shared prefix check
  long long count = 0;
  std::function<void()> rec = [&]() {
    int t = static_cast<int>(I.size());
    if (t == m) {
      if (++count > guard)
        throw work_limit_exceeded("enumerate_filter_chains: more than " +
                                  std::to_string(guard) + " chains");
      emit(FilterChain{m, I});
      return;
    }
    // (3) forces (I_i + I_j) ∩ Φ⁺ ⊆ I_{t+1} for i+j = t+1; nesting bounds above.
    RootSet lower;
    for (int i = 1; i <= t; ++i) {
      int j = t + 1 - i;
      if (j >= 1 && j <= t && i <= j) lower |= sum_set(p, I[i - 1], I[j - 1]);
    }
    RootSet upper = t > 0 ? I.back() : p.all;
    for (const RootSet& X : filters) {
      if (!lower.subset_of(X) || !X.subset_of(upper)) continue;
      I.push_back(X);
      Jmirror.push_back(p.all - X);
      if (check_prefix(p, Jmirror, m, t + 1).ok) rec();
      I.pop_back();
      Jmirror.pop_back();
    }
  };
  rec();
}

std::vector<IdealChain> all_ideal_chains(const RootPoset& p, int m, bool positive_only,
                                         long long guard) {
  std::vector<IdealChain> v;
  enumerate_ideal_chains(p, m, positive_only, [&](const IdealChain& c) { v.push_back(c); },
                         guard);
  return v;
}

std::vector<FilterChain> all_filter_chains(const RootPoset& p, int m, long long guard) {
  std::vector<FilterChain> v;
  enumerate_filter_chains(p, m, [&](const FilterChain& c) { v.push_back(c); }, guard);
  return v;
}

std::vector<int> first_levels(const IdealChain& c, int root_count) {
  std::vector<int> fl(root_count, c.m + 1);
  for (int t = c.m - 1; t >= 0; --t)
    c.ideals[t].for_each([&](int i) { fl[i] = t + 1; });
  return fl;
}

std::vector<int> last_levels(const FilterChain& c, int root_count) {
  std::vector<int> ll(root_count, 0);
  for (int t = 0; t < c.m; ++t)
    c.filters[t].for_each([&](int i) { ll[i] = t + 1; });
  return ll;
}

RankTable rank_table(const RootPoset& p, const IdealChain& c) {
  const RootSystem& rs = *p.rs;
  if (!is_positive(p, c)) throw std::invalid_argument("rank_table: chain is not positive");
  std::vector<int> fl = first_levels(c, p.n);
  RankTable rt;
  rt.r.assign(p.n, kBig);
  // Roots are indexed by increasing height, so two-part splits are resolved
  // before their sum (Lemma 2.1(i) justifies restricting to two parts).
  for (int k = 0; k < p.n; ++k) {
    int best = fl[k] <= c.m ? fl[k] : kBig;
    for (auto [i, j] : rs.splits[k]) best = std::min(best, rt.r[i] + rt.r[j]);
    rt.r[k] = best;
    if (best >= kBig) throw internal_error("rank_table: undefined rank");
  }
  // Lemma 3.2: (i) r ≤ m forces membership at level r; (ii) r > m is
  // achieved by a split with one part of rank ≤ m.
  for (int k = 0; k < p.n; ++k) {
    if (rt.r[k] <= c.m) {
      if (fl[k] > rt.r[k]) throw internal_error("rank_table: Lemma 3.2(i) failed");
    } else {
      bool found = false;
      for (auto [i, j] : rs.splits[k])
        if (rt.r[i] + rt.r[j] == rt.r[k] && (rt.r[i] <= c.m || rt.r[j] <= c.m)) found = true;
      if (!found) throw internal_error("rank_table: Lemma 3.2(ii) failed");
    }
  }
  return rt;
}

RootSet indecomposables(const RootPoset& p, const IdealChain& c, const RankTable& rt, int r) {
  if (r < 1 || r > c.m) throw std::invalid_argument("indecomposables: rank out of range");
  const RootSystem& rs = *p.rs;
  std::vector<int> fl = first_levels(c, p.n);
  RootSet out;
  for (int k = 0; k < p.n; ++k) {
    if (rt.r[k] != r) continue;
    bool ok = true;
    for (auto [i, j] : rs.splits[k])
      if (fl[i] + fl[j] <= r) ok = false;
    if (!ok) continue;
    for (int b = 0; b < p.n && ok; ++b) {
      int s = rs.sum_index(k, b);
      if (s < 0) continue;
      int t = rt.r[s];
      if (t <= c.m && (t - r < 1 || fl[b] > t - r)) ok = false;
    }
    if (ok) out.set(k);
  }
  return out;
}

RootSet filter_indecomposables_m(const RootPoset& p, const FilterChain& c) {
  const RootSystem& rs = *p.rs;
  std::vector<int> ll = last_levels(c, p.n);
  RootSet out;
  c.filters.back().for_each([&](int k) {
    bool ok = true;
    for (auto [i, j] : rs.splits[k])
      if (ll[i] + ll[j] >= c.m) ok = false;
    if (ok) out.set(k);
  });
  return out;
}

}  // namespace catalan
