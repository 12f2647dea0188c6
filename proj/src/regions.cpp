#include "catalan/regions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace catalan {

namespace {

std::vector<std::vector<int>> mat_mul(const std::vector<std::vector<int>>& A,
                                      const std::vector<std::vector<int>>& B) {
  int n = static_cast<int>(A.size());
  std::vector<std::vector<int>> C(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (A[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

std::vector<std::vector<int>> mat_id(int n) {
  std::vector<std::vector<int>> I(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

// W preserves Q̌; conjugating the root-coordinate action by the coroot
// scales gives the integer action on coroot coordinates.
std::vector<long long> apply_lin_coroot(const RootSystem& rs,
                                        const std::vector<std::vector<int>>& M,
                                        const std::vector<long long>& n) {
  std::vector<long long> out(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i) {
    long long v = 0;
    for (int j = 0; j < rs.rank; ++j)
      v += static_cast<long long>(M[i][j]) * rs.coroot_scale[j] * n[j];
    if (v % rs.coroot_scale[i] != 0)
      throw internal_error("affine element translation left the coroot lattice");
    out[i] = v / rs.coroot_scale[i];
  }
  return out;
}

long long floordiv(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

Region region_of_chain(const RootPoset& p, const FilterChain& c) {
  GeomCheck gc = is_geometric(p, c);
  if (!gc.ok) throw std::invalid_argument(std::string("region_of_chain: chain violates ") +
                                          gc.condition);
  Region r;
  r.chain = c;
  r.level = last_levels(c, p.n);
  r.bounded = is_positive_filter_chain(p, c);
  return r;
}

Region region_of_chain(const RootPoset& p, const IdealChain& c) {
  if (!is_positive(p, c))
    throw std::invalid_argument("region_of_chain: ideal chain is not positive");
  return region_of_chain(p, complement(p, c));
}

FilterChain chain_of_region(const Region& r) { return r.chain; }

IdealChain ideal_chain_of(const RootPoset& p, const Region& r) {
  return complement(p, r.chain);
}

bool shi_condition_holds(const RootSystem& rs, const ShiVector& s) {
  for (int k = 0; k < rs.size(); ++k)
    for (auto [i, j] : rs.splits[k]) {
      if (s.r[i] + s.r[j] - 1 > s.r[k]) return false;
      if (s.r[k] > s.r[i] + s.r[j]) return false;
    }
  return true;
}

ShiVector max_alcove(const RootPoset& p, const IdealChain& c) {
  GeomCheck gc = is_geometric(p, c);
  if (!gc.ok)
    throw std::invalid_argument(std::string("max_alcove: chain violates ") + gc.condition);
  ShiVector s{rank_table(p, c).r};
  if (!shi_condition_holds(*p.rs, s))
    throw internal_error("max_alcove: rank table violates the alcove condition");
  return s;
}

AffineElement affine_identity(const RootSystem& rs) {
  return {mat_id(rs.rank), mat_id(rs.rank), std::vector<long long>(rs.rank, 0)};
}

AffineElement affine_mul(const RootSystem& rs, const AffineElement& a, const AffineElement& b) {
  AffineElement c;
  c.lin = mat_mul(a.lin, b.lin);
  c.linv = mat_mul(b.linv, a.linv);
  c.trans = apply_lin_coroot(rs, a.lin, b.trans);
  for (int i = 0; i < rs.rank; ++i) c.trans[i] += a.trans[i];
  return c;
}

AffineElement affine_inverse(const RootSystem& rs, const AffineElement& a) {
  AffineElement c;
  c.lin = a.linv;
  c.linv = a.lin;
  c.trans = apply_lin_coroot(rs, a.linv, a.trans);
  for (long long& v : c.trans) v = -v;
  return c;
}

AffineElement simple_affine_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank)
    throw std::invalid_argument("simple_affine_reflection: index out of range");
  if (i >= 1) return {rs.refl[i - 1], rs.refl[i - 1], std::vector<long long>(rs.rank, 0)};
  // s_0: reflection in H_{α̃,1}: x ↦ x − ((α̃,x) − 1)·α̃̌, with α̃̌ = α̃.
  const RootVec& hr = rs.roots[rs.highest];
  std::vector<std::vector<int>> M = mat_id(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    long long q6 = 0;
    for (int k = 0; k < rs.rank; ++k) q6 += static_cast<long long>(rs.gram6[j][k]) * hr[k];
    if (q6 % 6 != 0) throw internal_error("s0: non-integral pairing with the highest root");
    long long q = q6 / 6;  // (σ_j, α̃̌) since (α̃,α̃) = 2
    for (int k = 0; k < rs.rank; ++k) M[k][j] -= static_cast<int>(q) * hr[k];
  }
  std::vector<long long> t(rs.rank);
  for (int k = 0; k < rs.rank; ++k) {
    if (hr[k] % rs.coroot_scale[k] != 0)
      throw internal_error("s0: highest coroot not in the coroot lattice");
    t[k] = hr[k] / rs.coroot_scale[k];
  }
  return {M, M, t};
}

AlcovePoint fundamental_barycenter(const RootSystem& rs) {
  const RootVec& c = rs.roots[rs.highest];
  long long L = 1;
  for (int i = 0; i < rs.rank; ++i) L = std::lcm(L, static_cast<long long>(c[i]));
  AlcovePoint pt;
  pt.den = L * (rs.rank + 1);
  pt.ynum.resize(rs.rank);
  for (int i = 0; i < rs.rank; ++i) pt.ynum[i] = L / c[i];
  return pt;
}

AlcovePoint apply_to_point(const RootSystem& rs, const AffineElement& w, const AlcovePoint& pt) {
  AlcovePoint out;
  out.den = pt.den;
  out.ynum.assign(rs.rank, 0);
  for (int k = 0; k < rs.rank; ++k) {
    long long v = 0;
    for (int j = 0; j < rs.rank; ++j) v += static_cast<long long>(w.linv[j][k]) * pt.ynum[j];
    long long shift = 0;
    for (int j = 0; j < rs.rank; ++j)
      shift += static_cast<long long>(rs.cartan[k][j]) * w.trans[j];
    out.ynum[k] = v + shift * pt.den;
  }
  return out;
}

long long eval_root_num(const RootSystem& rs, int root, const AlcovePoint& pt) {
  long long v = 0;
  const RootVec& a = rs.roots[root];
  for (int i = 0; i < rs.rank; ++i) v += static_cast<long long>(a[i]) * pt.ynum[i];
  return v;
}

ShiVector shi_of(const RootSystem& rs, const AffineElement& w) {
  AlcovePoint pt = apply_to_point(rs, w, fundamental_barycenter(rs));
  ShiVector s;
  s.r.resize(rs.size());
  for (int k = 0; k < rs.size(); ++k) {
    long long v = eval_root_num(rs, k, pt);
    if (v % pt.den == 0) throw internal_error("shi_of: barycenter on a hyperplane");
    s.r[k] = static_cast<int>(floordiv(v, pt.den)) + 1;
  }
  return s;
}

Hyperplane map_hyperplane(const RootSystem& rs, const AffineElement& u, int root,
                          long long level) {
  // u·H_{β,k} = H_{Lβ, k + (Lβ, t)}.
  RootVec img = rs.apply_matrix(u.lin, rs.roots[root]);
  long long lvl = level + rs.pair_root_coroot(img, u.trans);
  int sign = 0;
  for (int c : img)
    if (c != 0) {
      sign = c > 0 ? 1 : -1;
      break;
    }
  if (sign < 0) {
    for (int& c : img) c = -c;
    lvl = -lvl;
  }
  int idx = rs.root_index(img);
  if (idx < 0) throw internal_error("map_hyperplane: image is not a root");
  return {idx, lvl};
}

Hyperplane alcove_wall(const RootSystem& rs, const AffineElement& w, int i) {
  return i == 0 ? map_hyperplane(rs, w, rs.highest, 1) : map_hyperplane(rs, w, i - 1, 0);
}

AffineElement shi_to_affine(const RootSystem& rs, const ShiVector& target) {
  if (static_cast<int>(target.r.size()) != rs.size())
    throw std::invalid_argument("shi_to_affine: wrong vector length");
  if (!shi_condition_holds(rs, target))
    throw std::invalid_argument("shi_to_affine: coordinates violate the alcove condition");
  AffineElement w = affine_identity(rs);
  std::vector<int> cur(rs.size(), 1);
  long long total = 0;
  for (int k = 0; k < rs.size(); ++k) total += std::abs(target.r[k] - 1);
  while (total > 0) {
    bool moved = false;
    for (int i = 0; i <= rs.rank && !moved; ++i) {
      auto [beta, k] = alcove_wall(rs, w, i);
      int newr;
      if (cur[beta] == k)
        newr = static_cast<int>(k) + 1;
      else if (cur[beta] == k + 1)
        newr = static_cast<int>(k);
      else
        throw internal_error("shi_to_affine: wall level inconsistent with coordinates");
      if (std::abs(newr - target.r[beta]) < std::abs(cur[beta] - target.r[beta])) {
        w = affine_mul(rs, w, simple_affine_reflection(rs, i));
        cur[beta] = newr;
        --total;
        moved = true;
      }
    }
    if (!moved) throw internal_error("shi_to_affine: no separating wall to cross");
  }
  return w;
}

int ascent_count(const RootSystem& rs, const AffineElement& w) {
  ShiVector s = shi_of(rs, w);
  for (int i = 0; i < rs.rank; ++i)
    if (s.r[i] < 1) throw std::invalid_argument("ascent_count: alcove is not dominant");
  int count = 0;
  for (int i = 0; i <= rs.rank; ++i) {
    auto [beta, k] = alcove_wall(rs, w, i);
    if (k >= 1 && s.r[beta] == k) ++count;
  }
  return count;
}

std::vector<RootSet> nonsep_wall_roots_by_rank(const RootSystem& rs, const AffineElement& w,
                                               int m) {
  ShiVector s = shi_of(rs, w);
  std::vector<RootSet> out(m);
  for (int i = 0; i <= rs.rank; ++i) {
    auto [beta, k] = alcove_wall(rs, w, i);
    if (k >= 1 && k <= m && s.r[beta] == k) out[k - 1].set(beta);
  }
  return out;
}

std::vector<WallInfo> walls_and_separation(const RootPoset& p, const Region& r) {
  const RootSystem& rs = *p.rs;
  int m = r.chain.m;
  std::vector<WallInfo> out;
  std::optional<RankTable> rt;
  IdealChain ideals = ideal_chain_of(p, r);
  if (r.bounded) rt = rank_table(p, ideals);
  std::vector<RootSet> nonsep(m);
  if (r.bounded)
    for (int rr = 1; rr <= m; ++rr) nonsep[rr - 1] = indecomposables(p, ideals, *rt, rr);
  RootSet sep_m = filter_indecomposables_m(p, r.chain);

  for (int k = 0; k < p.n; ++k) {
    int t = r.level[k];
    // Lower bounding hyperplane H_{α,t}.
    WallInfo lo{k, t, t >= 1, std::nullopt};
    if (t == m)
      lo.is_wall = sep_m.test(k);
    else if (t == 0 && !rs.is_simple(k))
      lo.is_wall = false;  // would force two chamber walls at once
    out.push_back(lo);
    // Upper bounding hyperplane H_{α,t+1}, present when t < m.
    if (t < m) {
      WallInfo hi{k, t + 1, false, std::nullopt};
      if (r.bounded) hi.is_wall = nonsep[t].test(k);
      out.push_back(hi);
    }
  }
  return out;
}

IneqSystem region_system(const RootSystem& rs, const Region& r, bool closed) {
  IneqSystem sys(rs.rank);
  int m = r.chain.m;
  for (int k = 0; k < rs.size(); ++k) {
    std::vector<long long> a(rs.roots[k].begin(), rs.roots[k].end());
    sys.add_int(a, closed ? Rel::GE : Rel::GT, r.level[k]);
    if (r.level[k] < m) sys.add_int(a, closed ? Rel::LE : Rel::LT, r.level[k] + 1);
  }
  return sys;
}

IneqSystem alcove_system(const RootSystem& rs, const ShiVector& s) {
  IneqSystem sys(rs.rank);
  for (int k = 0; k < rs.size(); ++k) {
    std::vector<long long> a(rs.roots[k].begin(), rs.roots[k].end());
    sys.add_int(a, Rel::GT, s.r[k] - 1);
    sys.add_int(a, Rel::LT, s.r[k]);
  }
  return sys;
}

bool fm_is_wall(const RootSystem& rs, const Region& r, int root, long long level) {
  IneqSystem sys = region_system(rs, r, /*closed=*/true);
  std::vector<long long> a(rs.roots[root].begin(), rs.roots[root].end());
  sys.add_int(a, Rel::EQ, level);
  FMResult res = fm_feasible(sys);
  return !res.empty && res.dim == rs.rank - 1;
}

PairCellCounts cells_by_pairs(const RootPoset& p, int m) {
  const RootSystem& rs = *p.rs;
  int l = rs.rank;
  PairCellCounts out;
  out.f.assign(l + 1, 0);
  out.f_plus.assign(l + 1, 0);
  out.f_plus_bounded.assign(l + 1, 0);
  enumerate_filter_chains(p, m, [&](const FilterChain& c) {
    RootSet ind = filter_indecomposables_m(p, c);
    int s = ind.count();
    int simp = (ind & p.simples).count();
    for (int k = 0; k <= l; ++k) {
      out.f[k] += binom(s, l - k);
      if (l - k - simp >= 0) out.f_plus[k] += binom(s - simp, l - k - simp);
    }
  });
  enumerate_ideal_chains(p, m, true, [&](const IdealChain& c) {
    RankTable rt = rank_table(p, c);
    int ns = indecomposables(p, c, rt, m).count();
    for (int k = 0; k <= l; ++k) out.f_plus_bounded[k] += binom(ns, l - k);
  });
  return out;
}

namespace {

struct CellBound {
  long long lo, hi;  // closed relaxation, hi = kInf for the unbounded label
};
constexpr long long kInf = 1 << 20;

CellBound bound_of(int label, int m) {
  if (label < m) return {label, label + 1};
  if (label == m) return {m, kInf};
  return {m, m};  // the hyperplane label
}

}  // namespace

CellCounts cells_by_fm(const RootPoset& p, int m, bool keep_cells) {
  const RootSystem& rs = *p.rs;
  if (rs.rank > 3)
    throw work_limit_exceeded("cells_by_fm: direct enumeration is limited to rank <= 3");
  int n = p.n, l = rs.rank;
  CellCounts out;
  out.f.assign(l + 1, 0);
  out.f_plus.assign(l + 1, 0);
  std::vector<int> label(n, -1);

  auto feasible = [&](int upto) {
    IneqSystem sys(l);
    for (int k = 0; k <= upto; ++k) {
      std::vector<long long> a(rs.roots[k].begin(), rs.roots[k].end());
      if (label[k] < m) {
        sys.add_int(a, Rel::GT, label[k]);
        sys.add_int(a, Rel::LT, label[k] + 1);
      } else if (label[k] == m) {
        sys.add_int(a, Rel::GT, m);
      } else {
        sys.add_int(a, Rel::EQ, m);
      }
    }
    return fm_feasible(sys, /*want_dimension=*/upto == n - 1);
  };

  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      FMResult res = feasible(n - 1);
      if (res.empty) return;
      bool bounded = true;
      for (int i = 0; i < l; ++i)
        if (label[i] == m) bounded = false;
      out.f[res.dim]++;
      if (bounded) out.f_plus[res.dim]++;
      if (keep_cells) out.cells.push_back({label, res.dim, bounded});
      return;
    }
    for (int lab = 0; lab <= m + 1; ++lab) {
      label[k] = lab;
      bool ok = true;
      CellBound ck = bound_of(lab, m);
      for (auto [i, j] : rs.splits[k]) {
        CellBound ci = bound_of(label[i], m), cj = bound_of(label[j], m);
        long long lo = ci.lo + cj.lo, hi = std::min(kInf, ci.hi + cj.hi);
        if (hi < ck.lo || ck.hi < lo) ok = false;
      }
      if (ok && !feasible(k).empty) rec(k + 1);
    }
    label[k] = -1;
  };
  rec(0);
  return out;
}

}  // namespace catalan
