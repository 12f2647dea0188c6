#include "catalan/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace catalan {

std::vector<long long> coweight_values(const RootSystem& rs, const CorootPoint& pt) {
  std::vector<long long> y(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      y[i] += static_cast<long long>(rs.cartan[i][j]) * pt.n[j];
  return y;
}

std::vector<CorootPoint> enumerate_Dm(const RootSystem& rs, int m) {
  if (m < 1) throw std::invalid_argument("enumerate_Dm: m must be >= 1");
  long long p = static_cast<long long>(m) * rs.coxeter - 1;
  const RootVec& c = rs.roots[rs.highest];

  // Scan y ∈ Z^ℓ, y ≥ 0, Σ c_i y_i ≤ p; keep those with A⁻¹y integral.
  // The inverse Cartan transform is done exactly with rationals.
  std::vector<CorootPoint> out;
  std::vector<long long> y(rs.rank, 0);

  // Exact solve cartan·n = y by Gaussian elimination over Q each time is
  // wasteful; precompute adj(A) and det(A) once instead.
  int l = rs.rank;
  std::vector<std::vector<Rat>> inv(l, std::vector<Rat>(l, Rat(0)));
  {
    std::vector<std::vector<Rat>> aug(l, std::vector<Rat>(2 * l, Rat(0)));
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) aug[i][j] = Rat(rs.cartan[i][j]);
      aug[i][l + i] = 1;
    }
    for (int col = 0; col < l; ++col) {
      int piv = -1;
      for (int r = col; r < l; ++r)
        if (aug[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) throw internal_error("enumerate_Dm: singular Cartan matrix");
      std::swap(aug[col], aug[piv]);
      Rat d = aug[col][col];
      for (auto& q : aug[col]) q /= d;
      for (int r = 0; r < l; ++r) {
        if (r == col || aug[r][col] == 0) continue;
        Rat f = aug[r][col];
        for (int k = 0; k < 2 * l; ++k) aug[r][k] -= f * aug[col][k];
      }
    }
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) inv[i][j] = aug[i][l + j];
  }

  std::function<void(int, long long)> scan = [&](int i, long long used) {
    if (i == l) {
      CorootPoint pt;
      pt.n.assign(l, 0);
      for (int r = 0; r < l; ++r) {
        Rat v(0);
        for (int k = 0; k < l; ++k) v += inv[r][k] * Rat(static_cast<long>(y[k]));
        if (!rat_is_integer(v)) return;
        pt.n[r] = v.get_num().get_si();
      }
      out.push_back(std::move(pt));
      return;
    }
    for (long long t = 0; used + t * c[i] <= p; ++t) {
      y[i] = t;
      scan(i + 1, used + t * c[i]);
    }
    y[i] = 0;
  };
  scan(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool sigma_wall_equality(const RootSystem& rs, const CorootPoint& pt, int r, int m, int i) {
  std::vector<long long> y = coweight_values(rs, pt);
  if (i == 0) {
    const RootVec& c = rs.roots[rs.highest];
    long long v = 0;
    for (int k = 0; k < rs.rank; ++k) v += c[k] * y[k];
    return v == static_cast<long long>(m) * rs.coxeter - m + r - 1;
  }
  return y[i - 1] == m - r;
}

int sigma_wall_equalities(const RootSystem& rs, const CorootPoint& pt, int r, int m) {
  int cnt = 0;
  for (int i = 0; i <= rs.rank; ++i)
    if (sigma_wall_equality(rs, pt, r, m, i)) ++cnt;
  return cnt;
}

int wall_incidence(const RootSystem& rs, const CorootPoint& pt, int r, int m) {
  if (r < 1 || r > m) throw std::invalid_argument("wall_incidence: rank out of range");
  std::vector<long long> y = coweight_values(rs, pt);
  const RootVec& c = rs.roots[rs.highest];
  long long v = 0;
  for (int k = 0; k < rs.rank; ++k) v += c[k] * y[k];
  for (int k = 0; k < rs.rank; ++k)
    if (y[k] < m - r) throw std::invalid_argument("wall_incidence: point outside simplex");
  if (v > static_cast<long long>(m) * rs.coxeter - m + r - 1)
    throw std::invalid_argument("wall_incidence: point outside simplex");
  return sigma_wall_equalities(rs, pt, r, m);
}

AffineElement w_f(const RootPoset& p, int m) {
  if (m < 1) throw std::invalid_argument("w_f: m must be >= 1");
  const RootSystem& rs = *p.rs;
  IdealChain chain;
  chain.m = m;
  chain.ideals.assign(m, RootSet{});
  chain.ideals[m - 1] = p.simples;
  ShiVector s = max_alcove(p, chain);
  for (int k = 0; k < rs.size(); ++k)
    if (s.r[k] != m * rs.height[k])
      throw internal_error("w_f: rank table differs from m·height");
  AffineElement w = shi_to_affine(rs, s);
  // Assert the explicit alcove description by barycenter evaluation.
  AlcovePoint b = apply_to_point(rs, w, fundamental_barycenter(rs));
  for (int i = 0; i < rs.rank; ++i) {
    long long v = eval_root_num(rs, i, b);
    if (!(v > (m - 1) * b.den && v < static_cast<long long>(m) * b.den))
      throw internal_error("w_f: simple-root description fails");
  }
  long long v = eval_root_num(rs, rs.highest, b);
  long long hi = static_cast<long long>(m) * rs.coxeter - m;
  if (!(v > (hi - 1) * b.den && v < hi * b.den))
    throw internal_error("w_f: highest-root description fails");
  return w;
}

CorootPoint rho(const RootSystem& rs, const AffineElement& w, const AffineElement& wf, int m) {
  AffineElement g = affine_mul(rs, wf, affine_inverse(rs, w));
  CorootPoint pt{g.trans};
  std::vector<long long> y = coweight_values(rs, pt);
  long long p = static_cast<long long>(m) * rs.coxeter - 1;
  const RootVec& c = rs.roots[rs.highest];
  long long v = 0;
  for (int k = 0; k < rs.rank; ++k) v += c[k] * y[k];
  for (long long yk : y)
    if (yk < 0) throw std::invalid_argument("rho: image outside the dilated alcove");
  if (v > p) throw std::invalid_argument("rho: image outside the dilated alcove");
  return pt;
}

long long orbit_count_bruteforce(const RootSystem& rs, int m, long long guard) {
  long long p = static_cast<long long>(m) * rs.coxeter - 1;
  int l = rs.rank;
  long long size = 1;
  for (int i = 0; i < l; ++i) {
    size *= p;
    if (size > guard)
      throw work_limit_exceeded("orbit_count_bruteforce: |T_m| = p^l exceeds guard " +
                                std::to_string(guard));
  }
  if (p == 1) return 1;

  std::vector<int> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  };

  std::vector<long long> n(l);
  for (long long code = 0; code < size; ++code) {
    long long rest = code;
    for (int i = 0; i < l; ++i) {
      n[i] = rest % p;
      rest /= p;
    }
    for (int i = 0; i < l; ++i) {
      // s_i: n ↦ n − (Σ_j cartan[i][j] n_j)·e_i  (mod p)
      long long q = 0;
      for (int j = 0; j < l; ++j) q += rs.cartan[i][j] * n[j];
      long long ni = ((n[i] - q) % p + p) % p;
      long long img = 0;
      for (int j = l - 1; j >= 0; --j) img = img * p + (j == i ? ni : n[j]);
      unite(static_cast<int>(code), static_cast<int>(img));
    }
  }
  long long orbits = 0;
  for (long long x = 0; x < size; ++x)
    if (find(static_cast<int>(x)) == x) ++orbits;
  return orbits;
}

}  // namespace catalan
