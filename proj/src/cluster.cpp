#include "catalan/cluster.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace catalan {

bool diagonals_cross(const Diagonal& d1, const Diagonal& d2) {
  return (d1.a < d2.a && d2.a < d1.b && d1.b < d2.b) ||
         (d2.a < d1.a && d1.a < d2.b && d2.b < d1.b);
}

namespace {

bool vertices_compatible(const ModelVertex& u, const ModelVertex& v) {
  for (const Diagonal& a : u.diagonals)
    for (const Diagonal& b : v.diagonals)
      if (diagonals_cross(a, b)) return false;
  return true;
}

Diagonal make_diag(int a, int b) {
  if (a > b) std::swap(a, b);
  return {a, b};
}

int positive_roots_of(Family family, int n) {
  return family == Family::A ? n * (n - 1) / 2 : n * n;
}

}  // namespace

std::vector<Diagonal> allowable_diagonals(Family family, int n, int m) {
  if (n < 2 || m < 1) throw std::invalid_argument("allowable_diagonals: need n >= 2, m >= 1");
  int gon = family == Family::A ? m * n + 2 : 2 * m * n + 2;
  std::vector<Diagonal> out;
  for (int i = 1; i <= gon; ++i)
    for (int j = i + 2; j <= gon && !(i == 1 && j == gon); ++j)
      if ((j - i - 1) % m == 0) out.push_back({i, j});
  return out;
}

ClusterModel build_model(Family family, int n, int m) {
  if (family != Family::A && family != Family::B)
    throw std::invalid_argument("build_model: only the A and B/C polygon models exist");
  ClusterModel model;
  model.family = family;
  model.n = n;
  model.m = m;
  model.rank = family == Family::A ? n - 1 : n;
  model.gon = family == Family::A ? m * n + 2 : 2 * m * n + 2;

  std::vector<Diagonal> all = allowable_diagonals(family, n, m);
  if (family == Family::A) {
    for (const Diagonal& d : all) model.vertices.push_back({{d}, false});
  } else {
    int s = m * n + 1;  // half-turn: v ↦ v+s
    auto tau = [&](const Diagonal& d) {
      return make_diag((d.a - 1 + s) % (2 * s) + 1, (d.b - 1 + s) % (2 * s) + 1);
    };
    std::set<std::vector<Diagonal>> seen;
    for (const Diagonal& d : all) {
      if (d.b - d.a == s) {
        model.vertices.push_back({{d}, true});
        continue;
      }
      Diagonal e = tau(d);
      if (diagonals_cross(d, e))
        throw internal_error("build_model: symmetric pair crosses itself");
      std::vector<Diagonal> pair{std::min(d, e), std::max(d, e)};
      if (seen.insert(pair).second) model.vertices.push_back({pair, false});
    }
  }
  std::sort(model.vertices.begin(), model.vertices.end(),
            [](const ModelVertex& u, const ModelVertex& v) { return u.diagonals < v.diagonals; });

  int expected = m * positive_roots_of(family, n) + model.rank;
  if (static_cast<int>(model.vertices.size()) != expected)
    throw internal_error("build_model: vertex count differs from m|Φ⁺|+ℓ");
  if (model.vertices.size() > 128)
    throw work_limit_exceeded("build_model: more than 128 vertices");

  int nv = static_cast<int>(model.vertices.size());
  model.compat.assign(nv, {});
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j)
      if (i != j && vertices_compatible(model.vertices[i], model.vertices[j]))
        model.compat[i].set(j);
  return model;
}

std::vector<int> snake_vertices(const ClusterModel& model, int rotate) {
  int gon = model.gon, m = model.m;
  auto rot = [&](int v) { return (v - 1 + rotate % gon + gon) % gon + 1; };

  std::vector<std::vector<Diagonal>> keys;
  if (model.family == Family::A) {
    // Zig-zag between the progressions 1+km from below and gon−km from
    // above; any such diagonal is m-allowable.
    int lo = 1 + m, hi = gon;
    for (int k = 0; k < model.rank; ++k) {
      keys.push_back({make_diag(rot(lo), rot(hi))});
      if (k % 2 == 0)
        hi -= m;
      else
        lo += m;
    }
  } else {
    int s = m * model.n + 1;
    auto tau = [&](const Diagonal& d) {
      return make_diag((d.a - 1 + s) % (2 * s) + 1, (d.b - 1 + s) % (2 * s) + 1);
    };
    keys.push_back({make_diag(rot(s), rot(2 * s))});
    int lo = s + m, hi = 2 * s;
    for (int k = 0; k + 1 < model.rank; ++k) {
      Diagonal d = make_diag(rot(lo), rot(hi));
      Diagonal e = tau(d);
      keys.push_back({std::min(d, e), std::max(d, e)});
      if (k % 2 == 0)
        hi -= m;
      else
        lo += m;
    }
  }

  std::map<std::vector<Diagonal>, int> index;
  for (int i = 0; i < static_cast<int>(model.vertices.size()); ++i)
    index[model.vertices[i].diagonals] = i;
  std::vector<int> out;
  for (auto& k : keys) {
    auto it = index.find(k);
    if (it == index.end()) throw internal_error("snake: diagonal is not a model vertex");
    out.push_back(it->second);
  }

  // Facet property: pairwise compatible and maximal.
  RootSet common = RootSet::full(static_cast<int>(model.vertices.size()));
  for (int v : out) common &= model.compat[v];
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (!model.compat[out[i]].test(out[j])) throw internal_error("snake: members cross");
  for (int v : out) common.reset(v);
  if (common.any()) throw internal_error("snake: not a facet");
  return out;
}

ComplexSummary summarize_faces(const ClusterModel& model, const std::vector<int>& removed,
                               long long max_faces, bool require_pure) {
  int nv = static_cast<int>(model.vertices.size());
  RootSet active = RootSet::full(nv);
  for (int v : removed) active.reset(v);

  ComplexSummary out;
  out.f.assign(model.rank + 1, 0);
  long long total = 0;

  // DFS over cliques of the compatibility graph in vertex order.  `common`
  // tracks all active vertices compatible with the whole face, for both the
  // branch candidates and the purity assertion.
  std::function<void(int, RootSet, RootSet)> rec = [&](int size, RootSet common, RootSet cand) {
    if (++total > max_faces)
      throw work_limit_exceeded("summarize_faces: more than " + std::to_string(max_faces) +
                                " faces");
    out.f[size]++;
    if (require_pure && common.none() && size != model.rank)
      throw internal_error("summarize_faces: maximal face of dimension != ℓ−1");
    cand.for_each([&](int v) {
      RootSet nc = common & model.compat[v];
      RootSet sub = cand & model.compat[v];
      RootSet above;
      sub.for_each([&](int k) {
        if (k > v) above.set(k);
      });
      rec(size + 1, nc, above);
    });
  };
  rec(0, active, active);
  out.h = h_from_f(out.f);
  for (long long hk : out.h)
    if (hk < 0) throw internal_error("summarize_faces: negative h-entry");
  return out;
}

ComplexSummary build_complex(Family family, int n, int m, bool positive_only,
                             long long max_faces) {
  ClusterModel model = build_model(family, n, m);
  std::vector<int> removed;
  if (positive_only) removed = snake_vertices(model);
  // Purity is a theorem for the full complex; for the positive part it is
  // only verified numerically downstream, so it is not asserted here.
  return summarize_faces(model, removed, max_faces, !positive_only);
}

namespace {

std::vector<long long> convolve(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
  std::vector<long long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

bool parabolic_face_identity_check(Family family, int n, int m, std::string* detail) {
  int rank = family == Family::A ? n - 1 : n;
  std::vector<long long> lhs = build_complex(family, n, m, false).f;

  // Positive-part f-vectors of the parabolic components, cached by type.
  std::map<std::pair<char, int>, std::vector<long long>> cache;
  auto positive_f = [&](Family fam, int comp_rank) -> const std::vector<long long>& {
    char key = comp_rank == 1 ? 'A' : static_cast<char>(fam);
    auto it = cache.find({key, comp_rank});
    if (it == cache.end()) {
      Family f = comp_rank == 1 ? Family::A : fam;
      int nn = f == Family::A ? comp_rank + 1 : comp_rank;
      it = cache.emplace(std::make_pair(key, comp_rank), build_complex(f, nn, m, true).f).first;
    }
    return it->second;
  };

  std::vector<long long> rhs(rank + 1, 0);
  for (int mask = 0; mask < (1 << rank); ++mask) {
    // mask = the removed index set J; components are runs of surviving nodes.
    std::vector<long long> prod{1};
    int run = 0, removed = 0;
    for (int i = 0; i <= rank; ++i) {
      bool alive = i < rank && !(mask & (1 << i));
      if (alive) {
        ++run;
        continue;
      }
      if (i < rank) ++removed;
      if (run > 0) {
        // In the B/C diagram the run containing the short end stays B/C.
        Family fam = (family == Family::B && i == rank) ? Family::B : Family::A;
        prod = convolve(prod, positive_f(fam, run));
        run = 0;
      }
    }
    for (int t = 0; t + removed <= rank; ++t)
      if (t < static_cast<int>(prod.size())) rhs[t + removed] += prod[t];
  }
  if (lhs != rhs && detail)
    *detail = "face-count identity mismatch for " + std::string(1, static_cast<char>(family)) +
              std::to_string(n) + ", m=" + std::to_string(m);
  return lhs == rhs;
}

}  // namespace catalan
