#include "catalan/poset.hpp"

#include <algorithm>

namespace catalan {

bool RootPoset::is_filter(RootSet s) const {
  bool ok = true;
  s.for_each([&](int i) {
    if (!up[i].subset_of(s)) ok = false;
  });
  return ok;
}

bool RootPoset::is_ideal(RootSet s) const {
  bool ok = true;
  s.for_each([&](int i) {
    if (!down[i].subset_of(s)) ok = false;
  });
  return ok;
}

RootSet RootPoset::up_closure(RootSet s) const {
  RootSet r;
  s.for_each([&](int i) { r |= up[i]; });
  return r;
}

RootSet RootPoset::minimal_elements(RootSet s) const {
  RootSet r;
  s.for_each([&](int i) {
    if ((down_strict[i] & s).none()) r.set(i);
  });
  return r;
}

RootSet RootPoset::maximal_elements(RootSet s) const {
  RootSet r;
  s.for_each([&](int i) {
    if ((up_strict[i] & s).none()) r.set(i);
  });
  return r;
}

RootPoset build_poset(const RootSystem& rs) {
  RootPoset p;
  p.rs = &rs;
  p.n = rs.size();
  p.up.assign(p.n, {});
  p.up_strict.assign(p.n, {});
  p.down.assign(p.n, {});
  p.down_strict.assign(p.n, {});
  p.all = RootSet::full(p.n);
  for (int i = 0; i < rs.rank; ++i) p.simples.set(i);

  auto coordwise_leq = [&](int i, int j) {
    for (int k = 0; k < rs.rank; ++k)
      if (rs.roots[i][k] > rs.roots[j][k]) return false;
    return true;
  };
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (coordwise_leq(i, j)) {
        p.up[i].set(j);
        p.down[j].set(i);
        if (i != j) {
          p.up_strict[i].set(j);
          p.down_strict[j].set(i);
        }
      }

  // Covers: pairs whose difference is a simple root.  Cross-checked against
  // the transitive reduction, which must coincide for root posets.
  auto simple_diff = [&](int i, int j) {
    int d = rs.root_index(vec_sub(rs.roots[j], rs.roots[i]));
    return d >= 0 && d < rs.rank;
  };
  for (int i = 0; i < p.n; ++i) {
    p.up_strict[i].for_each([&](int j) {
      if (simple_diff(i, j)) p.covers.push_back({i, j});
      bool has_mid = false;
      p.up_strict[i].for_each([&](int k) {
        if (k != j && p.up_strict[k].test(j)) has_mid = true;
      });
      if (!has_mid != simple_diff(i, j))
        throw internal_error("root poset covers differ from transitive reduction");
    });
  }

  // Minimal elements are exactly Π; α̃ the unique maximal element.
  if (p.minimal_elements(p.all) != p.simples)
    throw internal_error("root poset minimal elements are not the simple roots");
  RootSet top;
  top.set(rs.highest);
  if (p.maximal_elements(p.all) != top)
    throw internal_error("root poset has more than one maximal element");
  return p;
}

namespace {

void filters_rec(const RootPoset& p, bool positive_only, int start, RootSet filter,
                 RootSet blocked, const std::function<void(RootSet)>& emit) {
  emit(filter);
  for (int i = start; i < p.n; ++i) {
    if (blocked.test(i)) continue;
    if (positive_only && i < p.rs->rank) continue;
    filters_rec(p, positive_only, i + 1, filter | p.up[i],
                blocked | p.up[i] | p.down[i], emit);
  }
}

}  // namespace

void enumerate_filters(const RootPoset& p, bool positive_only,
                       const std::function<void(RootSet)>& emit) {
  filters_rec(p, positive_only, 0, {}, {}, emit);
}

std::vector<RootSet> all_filters(const RootPoset& p, bool positive_only) {
  std::vector<RootSet> v;
  enumerate_filters(p, positive_only, [&](RootSet s) { v.push_back(s); });
  std::sort(v.begin(), v.end(), [](RootSet a, RootSet b) {
    return a.count() != b.count() ? a.count() < b.count() : a < b;
  });
  return v;
}

std::vector<RootSet> all_ideals(const RootPoset& p) {
  std::vector<RootSet> v;
  enumerate_filters(p, false, [&](RootSet s) { v.push_back(p.all - s); });
  std::sort(v.begin(), v.end(), [](RootSet a, RootSet b) {
    return a.count() != b.count() ? a.count() < b.count() : a < b;
  });
  return v;
}

std::map<int, long long> count_filters_by_min_elements(const RootPoset& p, bool positive_only) {
  std::map<int, long long> hist;
  enumerate_filters(p, positive_only,
                    [&](RootSet s) { hist[p.minimal_elements(s).count()]++; });
  return hist;
}

std::map<int, long long> count_ideals_by_max_elements(const RootPoset& p,
                                                      bool must_contain_simples) {
  std::map<int, long long> hist;
  enumerate_filters(p, must_contain_simples, [&](RootSet s) {
    hist[p.maximal_elements(p.all - s).count()]++;
  });
  return hist;
}

}  // namespace catalan
