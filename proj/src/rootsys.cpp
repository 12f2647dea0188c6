#include "catalan/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

namespace catalan {

CartanType::CartanType(Family f, int r) : family(f), rank(r) {
  auto fail = [&](const char* why) {
    throw invalid_cartan_type(std::string("invalid Cartan type ") + static_cast<char>(f) +
                              std::to_string(r) + ": " + why);
  };
  switch (f) {
    case Family::A:
      if (r < 1) fail("A requires rank >= 1");
      break;
    case Family::B:
    case Family::C:
      if (r < 2) fail("B/C require rank >= 2");
      break;
    case Family::D:
      if (r < 4) fail("D requires rank >= 4 (D3 is A3)");
      break;
    case Family::E:
      if (r < 6 || r > 8) fail("E requires rank in {6,7,8}");
      break;
    case Family::F:
      if (r != 4) fail("F requires rank 4");
      break;
    case Family::G:
      if (r != 2) fail("G requires rank 2");
      break;
  }
}

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw invalid_cartan_type("cannot parse Cartan type '" + s + "'");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (c < 'A' || c > 'G') throw invalid_cartan_type("unknown family in '" + s + "'");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw invalid_cartan_type("bad rank in '" + s + "'");
  return CartanType(static_cast<Family>(c), std::stoi(s.substr(1)));
}

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

RootVec vec_add(const RootVec& a, const RootVec& b) {
  RootVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RootVec vec_sub(const RootVec& a, const RootVec& b) {
  RootVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

namespace {

// 6·(σ_i,σ_i) per node, under the "long roots have norm 2" normalization.
std::vector<int> norms6_of(CartanType t) {
  int n = t.rank;
  std::vector<int> v(n, 12);
  switch (t.family) {
    case Family::B:
      v[n - 1] = 6;
      break;
    case Family::C:
      for (int i = 0; i < n - 1; ++i) v[i] = 6;
      break;
    case Family::F:
      v[2] = v[3] = 6;
      break;
    case Family::G:
      v[0] = 4;
      break;
    default:
      break;
  }
  return v;
}

std::vector<std::pair<int, int>> edges_of(CartanType t) {
  int n = t.rank;
  std::vector<std::pair<int, int>> e;
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
      for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 1; ++i) e.push_back({i, i + 1});
      e.push_back({n - 3, n - 1});
      break;
    case Family::E:
      e = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < n; ++i) e.push_back({i, i + 1});
      break;
  }
  return e;
}

}  // namespace

int RootSystem::root_index(const RootVec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

long long RootSystem::inner6(const RootVec& x, const RootVec& y) const {
  long long s = 0;
  for (int i = 0; i < rank; ++i) {
    if (x[i] == 0) continue;
    long long row = 0;
    for (int j = 0; j < rank; ++j) row += static_cast<long long>(gram6[i][j]) * y[j];
    s += x[i] * row;
  }
  return s;
}

long long RootSystem::pair_root_coroot(const RootVec& a, const std::vector<long long>& n) const {
  long long s = 0;
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    long long row = 0;
    for (int j = 0; j < rank; ++j) row += static_cast<long long>(cartan[i][j]) * n[j];
    s += a[i] * row;
  }
  return s;
}

RootVec RootSystem::apply_matrix(const std::vector<std::vector<int>>& M, const RootVec& v) const {
  RootVec r(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) r[i] += M[i][j] * v[j];
  return r;
}

RootSystem build_root_system(CartanType t) {
  RootSystem rs(t);
  int n = t.rank;

  std::vector<int> norms6 = norms6_of(t);
  rs.cartan.assign(n, std::vector<int>(n, 0));
  rs.gram6.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    rs.cartan[i][i] = 2;
    rs.gram6[i][i] = norms6[i];
  }
  for (auto [u, v] : edges_of(t)) {
    // (σ_u,σ_v) = -max(norm_u,norm_v)/2 for an edge of the Dynkin diagram.
    int g6 = -std::max(norms6[u], norms6[v]) / 2;
    rs.gram6[u][v] = rs.gram6[v][u] = g6;
    rs.cartan[u][v] = 2 * g6 / norms6[v];
    rs.cartan[v][u] = 2 * g6 / norms6[u];
  }
  rs.coroot_scale.resize(n);
  for (int i = 0; i < n; ++i) rs.coroot_scale[i] = 12 / norms6[i];

  // Positive roots by closure: walk up the σ_i-strings.
  std::map<RootVec, int> idx;
  std::vector<RootVec> level;  // current height
  for (int i = 0; i < n; ++i) {
    RootVec e(n, 0);
    e[i] = 1;
    level.push_back(e);
    idx[e] = 0;  // placeholder, reindexed after the full sort
  }
  std::vector<std::vector<RootVec>> by_height{level};
  while (!by_height.back().empty()) {
    std::vector<RootVec> next;
    for (const RootVec& a : by_height.back()) {
      for (int i = 0; i < n; ++i) {
        long long c = 0;
        for (int j = 0; j < n; ++j) c += static_cast<long long>(a[j]) * rs.cartan[j][i];
        int p = 0;
        RootVec down = a;
        for (;;) {
          down[i] -= 1;
          bool zero = std::all_of(down.begin(), down.end(), [](int x) { return x == 0; });
          if (zero || !idx.count(down)) break;
          ++p;
        }
        if (p - c >= 1) {
          RootVec up = a;
          up[i] += 1;
          if (!idx.count(up)) {
            idx[up] = 0;
            next.push_back(up);
          }
        }
      }
    }
    std::sort(next.begin(), next.end(), std::greater<RootVec>());
    by_height.push_back(std::move(next));
    if (by_height.size() > 64) throw internal_error("root closure failed to terminate");
  }

  for (auto& lv : by_height) {
    std::sort(lv.begin(), lv.end(), std::greater<RootVec>());
    for (auto& r : lv) rs.roots.push_back(r);
  }
  int m = rs.size();
  if (m > 128) throw internal_error("too many positive roots for RootSet");
  rs.index_.clear();
  rs.height.resize(m);
  for (int i = 0; i < m; ++i) {
    rs.index_[rs.roots[i]] = i;
    rs.height[i] = 0;
    for (int c : rs.roots[i]) rs.height[i] += c;
  }

  // Highest root: unique root of maximal height, coordinatewise maximal.
  rs.highest = m - 1;
  int hmax = rs.height[m - 1];
  if (m >= 2 && rs.height[m - 2] == hmax)
    throw internal_error("highest root is not unique");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.roots[i][j] > rs.roots[rs.highest][j])
        throw internal_error("highest root is not coordinatewise maximal");

  // Exponents = conjugate of the height distribution of Φ⁺.
  std::vector<int> lambda(hmax + 1, 0);
  for (int i = 0; i < m; ++i) lambda[rs.height[i]]++;
  for (int i = 1; i <= n; ++i) {
    int cnt = 0;
    for (int k = 1; k <= hmax; ++k)
      if (lambda[k] >= i) ++cnt;
    rs.exponents.push_back(cnt);
  }
  std::sort(rs.exponents.begin(), rs.exponents.end());
  rs.coxeter = hmax + 1;
  if (rs.exponents.back() + 1 != rs.coxeter)
    throw internal_error("exponent/Coxeter-number mismatch");
  if (2 * m != n * rs.coxeter) throw internal_error("|Φ⁺| != ℓh/2");

  rs.sum.assign(m, std::vector<std::int16_t>(m, -1));
  rs.splits.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      int k = rs.root_index(vec_add(rs.roots[i], rs.roots[j]));
      rs.sum[i][j] = rs.sum[j][i] = static_cast<std::int16_t>(k);
      if (k >= 0) rs.splits[k].push_back({i, j});
    }

  rs.refl.resize(n);
  for (int i = 0; i < n; ++i) {
    auto& M = rs.refl[i];
    M.assign(n, std::vector<int>(n, 0));
    for (int j = 0; j < n; ++j) {
      M[j][j] = 1;
      M[i][j] -= rs.cartan[j][i];  // s_i(σ_j) = σ_j − (σ_j,σ̌_i)σ_i
    }
  }
  return rs;
}

Rat inner(const RootSystem& rs, const RootVec& x, const RootVec& y) {
  if (static_cast<int>(x.size()) != rs.rank || static_cast<int>(y.size()) != rs.rank)
    throw std::invalid_argument("inner: dimension mismatch");
  Rat q(static_cast<long>(rs.inner6(x, y)), 6);
  q.canonicalize();
  return q;
}

RatVec coroot(const RootSystem& rs, const RootVec& alpha) {
  RootVec pos = alpha;
  bool neg = std::any_of(alpha.begin(), alpha.end(), [](int c) { return c < 0; });
  if (neg)
    for (int& c : pos) c = -c;
  if (rs.root_index(pos) < 0) throw std::invalid_argument("coroot: not a root");
  long long norm6 = rs.inner6(alpha, alpha);
  RatVec out(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    out[i] = Rat(12L * alpha[i], static_cast<long>(norm6));
    out[i].canonicalize();
  }
  return out;
}

long long weyl_order(const RootSystem& rs, long long guard) {
  // Orbit of a regular dominant point, in coweight coordinates where the
  // simple reflections act by refl[i]^T.
  std::vector<int> start(rs.rank, 1);
  std::set<std::vector<int>> seen{start};
  std::vector<std::vector<int>> frontier{start};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& y : frontier) {
      for (int i = 0; i < rs.rank; ++i) {
        std::vector<int> z(rs.rank, 0);
        for (int k = 0; k < rs.rank; ++k)
          for (int j = 0; j < rs.rank; ++j) z[k] += rs.refl[i][j][k] * y[j];
        if (seen.insert(z).second) next.push_back(std::move(z));
      }
    }
    if (static_cast<long long>(seen.size()) > guard)
      throw work_limit_exceeded("weyl_order: orbit exceeds guard " + std::to_string(guard));
    frontier = std::move(next);
  }
  return static_cast<long long>(seen.size());
}

namespace {

// Classify a connected induced sub-diagram and list its nodes in the
// component's own Bourbaki order.
ParabolicComponent classify_component(const RootSystem& rs, std::vector<int> nodes) {
  int k = static_cast<int>(nodes.size());
  auto bond = [&](int u, int v) { return rs.cartan[u][v] * rs.cartan[v][u]; };
  auto adjacent = [&](int u, int v) { return u != v && rs.cartan[u][v] != 0; };

  if (k == 1) return {CartanType(Family::A, 1), nodes};

  std::vector<std::vector<int>> nbr(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && adjacent(nodes[a], nodes[b])) nbr[a].push_back(b);

  int branch = -1, triple = -1;
  std::pair<int, int> dbl{-1, -1};
  for (int a = 0; a < k; ++a) {
    if (nbr[a].size() > 3) throw internal_error("parabolic: vertex degree > 3");
    if (nbr[a].size() == 3) branch = a;
    for (int b : nbr[a]) {
      if (a < b) {
        int w = bond(nodes[a], nodes[b]);
        if (w == 3) triple = a;
        if (w == 2) dbl = {a, b};
      }
    }
  }

  auto path_from = [&](int start) {
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < k) {
      int nxt = -1;
      for (int b : nbr[cur])
        if (b != prev) nxt = b;
      if (nxt < 0) throw internal_error("parabolic: disconnected path walk");
      order.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    std::vector<int> out;
    for (int a : order) out.push_back(nodes[a]);
    return out;
  };

  if (triple >= 0) {
    if (k != 2) throw internal_error("parabolic: triple bond in rank > 2");
    // cartan[u][v] = -3 ⟺ v is the short root; Bourbaki G2 lists short first.
    int u = nodes[0], v = nodes[1];
    int shrt = rs.cartan[u][v] == -3 ? v : u;
    return {CartanType(Family::G, 2), {shrt, shrt == u ? v : u}};
  }

  if (branch >= 0) {
    // Arms of the branch node, sorted by length.
    std::vector<std::vector<int>> arms;
    for (int b : nbr[branch]) {
      std::vector<int> arm{b};
      int prev = branch, cur = b;
      for (;;) {
        int nxt = -1;
        for (int c : nbr[cur])
          if (c != prev) nxt = c;
        if (nxt < 0) break;
        arm.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      arms.push_back(arm);
    }
    std::sort(arms.begin(), arms.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    auto len = [&](int i) { return static_cast<int>(arms[i].size()); };
    std::vector<int> order;
    if (len(0) == 1 && len(1) == 1) {
      // D_k: long arm reversed, then branch, then the two leaves.
      for (auto it = arms[2].rbegin(); it != arms[2].rend(); ++it) order.push_back(nodes[*it]);
      order.push_back(nodes[branch]);
      int l1 = nodes[arms[0][0]], l2 = nodes[arms[1][0]];
      order.push_back(std::min(l1, l2));
      order.push_back(std::max(l1, l2));
      return {CartanType(Family::D, k), order};
    }
    if (len(0) == 1 && len(1) == 2 && len(2) >= 2 && len(2) <= 4) {
      // E_k in Bourbaki order: α1 at the end of the 2-arm, α2 the short arm.
      order.push_back(nodes[arms[1][1]]);
      order.push_back(nodes[arms[0][0]]);
      order.push_back(nodes[arms[1][0]]);
      order.push_back(nodes[branch]);
      for (int a : arms[2]) order.push_back(nodes[a]);
      return {CartanType(Family::E, k), order};
    }
    throw internal_error("parabolic: unrecognized branched diagram");
  }

  // Path. Identify endpoints.
  std::vector<int> ends;
  for (int a = 0; a < k; ++a)
    if (nbr[a].size() == 1) ends.push_back(a);
  if (ends.size() != 2) throw internal_error("parabolic: path without two ends");

  if (dbl.first < 0) {
    auto o1 = path_from(ends[0]);
    auto o2 = path_from(ends[1]);
    return {CartanType(Family::A, k), o1.front() < o2.front() ? o1 : o2};
  }

  auto [a, b] = dbl;
  if (k == 2) {
    // C2 ≅ B2, canonicalized to B2 = [long, short].
    int shrt = rs.cartan[nodes[a]][nodes[b]] == -2 ? b : a;
    return {CartanType(Family::B, 2), {nodes[shrt == a ? b : a], nodes[shrt]}};
  }
  bool a_end = nbr[a].size() == 1, b_end = nbr[b].size() == 1;
  if (!a_end && !b_end) {
    if (k != 4) throw internal_error("parabolic: interior double bond, rank != 4");
    // F4: start from the end adjacent to the long side of the double bond.
    int lng = rs.cartan[nodes[a]][nodes[b]] == -2 ? a : b;
    int end = -1;
    for (int e : {ends[0], ends[1]})
      for (int c : nbr[e])
        if (c == lng) end = e;
    if (end < 0) throw internal_error("parabolic: F4 shape mismatch");
    return {CartanType(Family::F, 4), path_from(end)};
  }
  int e = a_end ? a : b;
  int other = a_end ? b : a;
  bool e_short = rs.cartan[nodes[other]][nodes[e]] == -2;
  int far = ends[0] == e ? ends[1] : ends[0];
  // B_k ends in its short root, C_k in its long root (Bourbaki).
  return {CartanType(e_short ? Family::B : Family::C, k), path_from(far)};
}

}  // namespace

Parabolic parabolic(const RootSystem& rs, const std::vector<int>& J) {
  Parabolic out;
  std::vector<bool> in(rs.rank, false);
  for (int j : J) {
    if (j < 0 || j >= rs.rank) throw std::invalid_argument("parabolic: index out of range");
    in[j] = true;
  }
  std::vector<int> members;
  for (int j = 0; j < rs.rank; ++j)
    if (in[j]) members.push_back(j);
  out.rank = static_cast<int>(members.size());

  std::vector<bool> seen(rs.rank, false);
  for (int j : members) {
    if (seen[j]) continue;
    std::vector<int> comp{j};
    seen[j] = true;
    for (std::size_t q = 0; q < comp.size(); ++q)
      for (int v = 0; v < rs.rank; ++v)
        if (in[v] && !seen[v] && rs.cartan[comp[q]][v] != 0) {
          seen[v] = true;
          comp.push_back(v);
        }
    out.components.push_back(classify_component(rs, comp));
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const ParabolicComponent& x, const ParabolicComponent& y) {
              return x.nodes.front() < y.nodes.front();
            });

  for (int i = 0; i < rs.size(); ++i) {
    bool ok = true;
    for (int j = 0; j < rs.rank; ++j)
      if (rs.roots[i][j] != 0 && !in[j]) ok = false;
    if (ok) out.positive_root_count++;
  }
  return out;
}

}  // namespace catalan
