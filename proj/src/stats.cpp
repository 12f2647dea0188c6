#include "catalan/stats.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace catalan {

namespace {

Int assert_integer(const Rat& q, const char* what) {
  if (!rat_is_integer(q)) throw internal_error(std::string(what) + ": non-integer value");
  return q.get_num();
}

Int exact_div(const Int& a, long d, const char* what) {
  if (a % d != 0) throw internal_error(std::string(what) + ": non-exact division");
  return a / d;
}

std::string vec_str(const std::vector<long long>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

Int n_plus_formula(const RootSystem& rs, long m) {
  if (m < 0) throw std::invalid_argument("n_plus_formula: m must be >= 0");
  Rat prod(1);
  for (int e : rs.exponents) {
    Rat factor(e + m * rs.coxeter - 1, e + 1);
    factor.canonicalize();
    prod *= factor;
  }
  return assert_integer(prod, "n_plus_formula");
}

Int n_total_formula(const RootSystem& rs, long m) {
  Rat prod(1);
  for (int e : rs.exponents) {
    Rat factor(e + m * rs.coxeter + 1, e + 1);
    factor.canonicalize();
    prod *= factor;
  }
  return assert_integer(prod, "n_total_formula");
}

Int h_plus_closed_form(Family family, int n, long m, int i) {
  switch (family) {
    case Family::A:
      return exact_div(binom(n - 1, i) * binom(m * n - 2, i), i + 1, "h_plus_closed_form");
    case Family::B:
    case Family::C:
      return binom(n, i) * binom(m * n - 1, i);
    case Family::D:
      return binom(n, i) * binom(m * (n - 1) - 1, i) +
             binom(n - 2, i - 2) * binom(m * (n - 1), i);
    default:
      throw std::invalid_argument("h_plus_closed_form: classical families only");
  }
}

Int f_plus_closed_form(Family family, int n, long m, int k) {
  switch (family) {
    case Family::A:
      return exact_div(binom(n - 1, k) * binom(m * n + k - 1, k), k + 1, "f_plus_closed_form");
    case Family::B:
    case Family::C:
      return binom(n, k) * binom(m * n + k - 1, k);
    case Family::D:
      return binom(n, k) * binom(m * (n - 1) + k - 1, k) +
             binom(n - 2, k - 2) * binom(m * (n - 1) + k - 2, k);
    default:
      throw std::invalid_argument("f_plus_closed_form: classical families only");
  }
}

Int f_cluster_closed_form(Family family, int n, long m, int k) {
  if (family == Family::D && m != 1)
    throw std::invalid_argument("f_cluster_closed_form: type D only at m = 1");
  return f_plus_closed_form(family, n, m, k);
}

namespace {

std::vector<long long> hplus_via_walls(const RootPoset& p, int m) {
  const RootSystem& rs = *p.rs;
  std::vector<long long> hp(rs.rank + 1, 0);
  enumerate_ideal_chains(p, m, true, [&](const IdealChain& c) {
    AffineElement w = shi_to_affine(rs, max_alcove(p, c));
    int nonsep = nonsep_wall_roots_by_rank(rs, w, m)[m - 1].count();
    hp[rs.rank - nonsep]++;
  });
  return hp;
}

std::vector<long long> h_via_filter_chains(const RootPoset& p, int m) {
  const RootSystem& rs = *p.rs;
  std::vector<long long> h(rs.rank + 1, 0);
  enumerate_filter_chains(p, m, [&](const FilterChain& c) {
    h[rs.rank - filter_indecomposables_m(p, c).count()]++;
  });
  return h;
}

}  // namespace

StatReport compute_stats(const RootPoset& p, int m) {
  const RootSystem& rs = *p.rs;
  StatReport rep;
  rep.type = rs.type.name();
  rep.m = m;
  rep.N = n_total_formula(rs, m);
  rep.N_plus = n_plus_formula(rs, m);
  rep.h = h_via_filter_chains(p, m);
  rep.h_plus = hplus_via_walls(p, m);
  rep.f = f_from_h(rep.h);
  rep.f_plus = f_from_h(rep.h_plus);
  rep.sources = {{"N", "formula"},        {"N_plus", "formula"},
                 {"h", "chains"},         {"h_plus", "regions"},
                 {"f", "transform(h)"},   {"f_plus", "transform(h_plus)"}};
  return rep;
}

std::vector<long long> region_h_plus(CartanType t, int m) {
  RootSystem rs = build_root_system(t);
  RootPoset p = build_poset(rs);
  std::vector<long long> hp(rs.rank + 1, 0);
  enumerate_ideal_chains(p, m, true, [&](const IdealChain& c) {
    RankTable rt = rank_table(p, c);
    hp[rs.rank - indecomposables(p, c, rt, m).count()]++;
  });
  return hp;
}

std::vector<long long> region_h(CartanType t, int m) {
  RootSystem rs = build_root_system(t);
  RootPoset p = build_poset(rs);
  return h_via_filter_chains(p, m);
}

namespace {

// Frozen positive-filter histograms for the exceptional types at m = 1.
const std::map<std::string, std::vector<long long>> kExceptionalTable = {
    {"G2", {1, 4}},
    {"F4", {1, 20, 35, 10}},
    {"E6", {1, 30, 135, 175, 70, 7}},
    {"E7", {1, 56, 420, 952, 770, 216, 16}},
    {"E8", {1, 112, 1323, 4774, 6622, 3696, 770, 44}},
};

std::vector<long long> convolve(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
  std::vector<long long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<long long> hist_to_vec(const std::map<int, long long>& h, int len) {
  std::vector<long long> v(len, 0);
  for (auto& [k, c] : h)
    if (k >= 0 && k < len) v[k] = c;
  return v;
}

std::vector<int> complement_indices(int rank, int mask) {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i)
    if (!(mask & (1 << i))) out.push_back(i);
  return out;
}

}  // namespace

VerifyReport verify_all(const RootPoset& p, int m, Depth depth) {
  const RootSystem& rs = *p.rs;
  const int l = rs.rank;
  VerifyReport rep;
  rep.type = rs.type.name();
  rep.m = m;
  auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back({name, pass, detail});
    if (!pass) rep.all_pass = false;
  };

  // Root-system constants.
  {
    int csum = 0;
    for (int c : rs.roots[rs.highest]) csum += c;
    check("highest_coeff_sum", csum == rs.coxeter - 1,
          "sum " + std::to_string(csum) + " vs h-1 = " + std::to_string(rs.coxeter - 1));
    long long worder = 1;
    bool fits = true;
    for (int e : rs.exponents) {
      worder *= e + 1;
      if (worder > 4000000) fits = false;
    }
    if (fits) check("weyl_order", weyl_order(rs) == worder);
  }

  // Enumerations shared by the route comparisons.
  std::vector<IdealChain> pos_chains = all_ideal_chains(p, m, true);
  std::vector<CorootPoint> dm = enumerate_Dm(rs, m);
  Int nplus = n_plus_formula(rs, m);
  StatReport stats = compute_stats(p, m);
  rep.stats = stats;

  long long bounded_regions = 0;
  enumerate_filter_chains(p, m, [&](const FilterChain& c) {
    if (is_positive_filter_chain(p, c)) ++bounded_regions;
  });
  {
    std::ostringstream os;
    os << "chains=" << pos_chains.size() << " regions=" << bounded_regions
       << " lattice=" << dm.size() << " formula=" << nplus.get_str();
    bool eq = Int(static_cast<long>(pos_chains.size())) == nplus &&
              to_int(bounded_regions) == nplus && Int(static_cast<long>(dm.size())) == nplus;
    check("counts_four_routes", eq, os.str());
  }
  {
    long long tsize = 1;
    bool fits = true;
    for (int i = 0; i < l; ++i) {
      tsize *= static_cast<long long>(m) * rs.coxeter - 1;
      if (tsize > 200000) fits = false;
    }
    if (fits)
      check("orbit_count", orbit_count_bruteforce(rs, m) == static_cast<long long>(dm.size()));
  }

  // Per-chain data: indecomposables, alcove walls, rho.
  AffineElement wf = w_f(p, m);
  std::vector<Hyperplane> wfwalls(l + 1);
  wfwalls[0] = {rs.highest, static_cast<long long>(m) * rs.coxeter - m - 1};
  for (int i = 1; i <= l; ++i) wfwalls[i] = {i - 1, m};

  bool thm310 = true, shi_rt = true, transfer = true;
  std::map<std::vector<int>, long long> mr_chains, mr_walls, mr_lattice;
  std::vector<long long> hp_chains(l + 1, 0), hp_walls(l + 1, 0), hp_lattice(l + 1, 0);
  std::set<CorootPoint> rho_image;
  std::map<int, long long> ascent_hist;
  for (const IdealChain& ch : pos_chains) {
    RankTable rt = rank_table(p, ch);
    ShiVector s = max_alcove(p, ch);
    AffineElement w = shi_to_affine(rs, s);
    if (!(shi_of(rs, w) == s)) shi_rt = false;
    auto walls = nonsep_wall_roots_by_rank(rs, w, m);
    std::vector<int> vc, vw;
    for (int r = 1; r <= m; ++r) {
      RootSet ind = indecomposables(p, ch, rt, r);
      if (!(ind == walls[r - 1])) thm310 = false;
      vc.push_back(ind.count());
      vw.push_back(walls[r - 1].count());
    }
    mr_chains[vc]++;
    mr_walls[vw]++;
    hp_chains[l - vc[m - 1]]++;
    hp_walls[l - vw[m - 1]]++;
    CorootPoint pt = rho(rs, w, wf, m);
    rho_image.insert(pt);
    AffineElement u = affine_mul(rs, w, affine_inverse(rs, wf));
    for (int r = 1; r <= m; ++r)
      for (int i = 0; i <= l; ++i) {
        Hyperplane img = map_hyperplane(rs, u, wfwalls[i].root, wfwalls[i].level);
        bool rhs = img.level == r && s.r[img.root] == r;
        if (sigma_wall_equality(rs, pt, r, m, i) != rhs) transfer = false;
      }
    if (m == 1) ascent_hist[ascent_count(rs, w)]++;
  }
  for (const CorootPoint& pt : dm) {
    std::vector<int> vr;
    for (int r = 1; r <= m; ++r) vr.push_back(sigma_wall_equalities(rs, pt, r, m));
    mr_lattice[vr]++;
    hp_lattice[l - vr[m - 1]]++;
  }
  check("thm_indec_eq_walls", thm310);
  check("shi_roundtrip", shi_rt);
  check("refined_histograms",
        hp_chains == hp_walls && hp_walls == hp_lattice && hp_chains == stats.h_plus,
        "chains=" + vec_str(hp_chains) + " walls=" + vec_str(hp_walls) +
            " lattice=" + vec_str(hp_lattice));
  check("multirank", mr_chains == mr_walls && mr_walls == mr_lattice);
  check("rho_bijection", rho_image.size() == dm.size() &&
                             std::set<CorootPoint>(dm.begin(), dm.end()) == rho_image);
  check("rho_wall_transfer", transfer);

  // Sum rules and transforms.
  {
    long long hsum = 0, hpsum = 0;
    for (long long v : stats.h) hsum += v;
    for (long long v : stats.h_plus) hpsum += v;
    check("h_sums", to_int(hsum) == stats.N && to_int(hpsum) == stats.N_plus);
    check("transform_roundtrip",
          h_from_f(stats.f) == stats.h && h_from_f(stats.f_plus) == stats.h_plus);
  }

  // Pair-counting cell routes against the transforms.
  {
    PairCellCounts pc = cells_by_pairs(p, m);
    bool okf = true, okfp = true;
    for (int k = 0; k <= l; ++k) {
      if (pc.f[k] != to_int(stats.f[k])) okf = false;
      if (pc.f_plus[k] != to_int(stats.f_plus[k]) || pc.f_plus_bounded[k] != to_int(stats.f_plus[k]))
        okfp = false;
    }
    check("cells_pairs_f", okf);
    check("cells_pairs_fplus", okfp);
    if (depth == Depth::full && l <= 3) {
      CellCounts cc = cells_by_fm(p, m);
      check("cells_fm", cc.f == stats.f && cc.f_plus == stats.f_plus,
            "fm f=" + vec_str(cc.f) + " f_plus=" + vec_str(cc.f_plus));
    }
  }

  // Closed forms for the classical families.
  if (rs.type.family == Family::A || rs.type.family == Family::B ||
      rs.type.family == Family::C || rs.type.family == Family::D) {
    int n = rs.type.family == Family::A ? l + 1 : l;
    bool okh = true, okf = true;
    for (int i = 0; i <= l; ++i) {
      if (h_plus_closed_form(rs.type.family, n, m, i) != to_int(stats.h_plus[i])) okh = false;
      if (f_plus_closed_form(rs.type.family, n, m, i) != to_int(stats.f_plus[i])) okf = false;
    }
    check("hplus_closed_form", okh);
    check("fplus_closed_form", okf);
  }

  // Polygon models (A and B/C).
  if (rs.type.family == Family::A || rs.type.family == Family::B ||
      rs.type.family == Family::C) {
    Family fam = rs.type.family == Family::A ? Family::A : Family::B;
    int n = fam == Family::A ? l + 1 : l;
    ComplexSummary full = build_complex(fam, n, m, false);
    ComplexSummary pos = build_complex(fam, n, m, true);
    check("cluster_h", full.h == stats.h,
          "model " + vec_str(full.h) + " vs chains " + vec_str(stats.h));
    check("cluster_hplus", pos.h == stats.h_plus,
          "model " + vec_str(pos.h) + " vs regions " + vec_str(stats.h_plus));
    bool ok63 = true;
    for (int k = 0; k <= l; ++k)
      if (f_cluster_closed_form(fam, n, m, k) != to_int(pos.f[k])) ok63 = false;
    check("fcluster_closed_form", ok63);
    check("cluster_euler", to_int(pos.h[l]) == n_plus_formula(rs, m - 1));
    {
      ClusterModel model = build_model(fam, n, m);
      ComplexSummary rot = summarize_faces(model, snake_vertices(model, 1), 10000000, false);
      check("snake_invariance", rot.f == pos.f);
    }
    check("parabolic_faces_eq", parabolic_face_identity_check(fam, n, m));
  }

  // Parabolic decomposition of the f-numbers (any family, small rank).
  if (l <= 4) {
    std::map<std::string, std::vector<long long>> fplus_cache;
    auto fplus_of = [&](CartanType t) {
      auto it = fplus_cache.find(t.name());
      if (it == fplus_cache.end())
        it = fplus_cache.emplace(t.name(), f_from_h(region_h_plus(t, m))).first;
      return it->second;
    };
    std::vector<long long> rhs(l + 1, 0);
    for (int mask = 0; mask < (1 << l); ++mask) {
      Parabolic par = parabolic(rs, complement_indices(l, mask));
      std::vector<long long> conv{1};
      for (const auto& comp : par.components) conv = convolve(conv, fplus_of(comp.type));
      int removed = l - par.rank;
      for (int t = 0; t + removed <= l; ++t)
        if (t < static_cast<int>(conv.size())) rhs[t + removed] += conv[t];
    }
    check("parabolic_f_decomposition", rhs == stats.f,
          "assembled " + vec_str(rhs) + " vs " + vec_str(stats.f));
  }

  if (m == 1) {
    auto filt_hist = hist_to_vec(count_filters_by_min_elements(p, false), l + 1);
    std::vector<long long> flipped(filt_hist.rbegin(), filt_hist.rend());
    // h_k counts filters with ℓ−k minimal elements; symmetry flips the histogram.
    check("panyushev_symmetry", filt_hist == flipped, "filter histogram " + vec_str(filt_hist));
    auto pos_hist = hist_to_vec(count_filters_by_min_elements(p, true), l + 1);
    check("positive_filters_eq_hplus", pos_hist == stats.h_plus,
          "filters " + vec_str(pos_hist) + " vs regions " + vec_str(stats.h_plus));
    auto ideal_hist = hist_to_vec(count_ideals_by_max_elements(p, true), l + 1);
    bool okci = true;
    for (int i = 0; i <= l; ++i)
      if (ideal_hist[i] != stats.h_plus[l - i]) okci = false;
    check("ideals_by_max_eq_hplus", okci);

    if (auto it = kExceptionalTable.find(rs.type.name()); it != kExceptionalTable.end()) {
      auto row = hist_to_vec(count_filters_by_min_elements(p, true),
                             static_cast<int>(it->second.size()));
      check("exceptional_table_row", row == it->second, vec_str(row));
    }

    std::vector<long long> asc(l + 2, 0);
    for (auto& [i, c] : ascent_hist) asc[i] = c;
    bool okasc = true;
    for (int i = 0; i <= l; ++i)
      if (asc[i] != stats.h_plus[l - i]) okasc = false;
    check("ascent_histogram", okasc && asc[l + 1] == 0);

    if (l <= 4) {
      std::map<std::string, std::vector<long long>> tilde_cache, hp_cache;
      auto tilde_of = [&](CartanType t) {
        auto it2 = tilde_cache.find(t.name());
        if (it2 == tilde_cache.end()) {
          RootSystem crs = build_root_system(t);
          RootPoset cp = build_poset(crs);
          it2 = tilde_cache
                    .emplace(t.name(), hist_to_vec(count_filters_by_min_elements(cp, true),
                                                   crs.rank + 1))
                    .first;
        }
        return it2->second;
      };
      auto hp_of = [&](CartanType t) {
        auto it2 = hp_cache.find(t.name());
        if (it2 == hp_cache.end()) it2 = hp_cache.emplace(t.name(), region_h_plus(t, 1)).first;
        return it2->second;
      };
      std::vector<long long> rhs12(l + 1, 0), rhs13(l + 1, 0);
      for (int mask = 0; mask < (1 << l); ++mask) {
        Parabolic par = parabolic(rs, complement_indices(l, mask));
        std::vector<long long> c12{1}, c13{1};
        for (const auto& comp : par.components) {
          c12 = convolve(c12, tilde_of(comp.type));
          c13 = convolve(c13, hp_of(comp.type));
        }
        int removed = l - par.rank;
        for (int t = 0; t + removed <= l; ++t) {
          if (t < static_cast<int>(c12.size())) rhs12[t + removed] += c12[t];
          if (t < static_cast<int>(c13.size())) rhs13[t + removed] += c13[t];
        }
      }
      check("filter_count_decomposition", rhs12 == filt_hist,
            "assembled " + vec_str(rhs12) + " vs " + vec_str(filt_hist));
      check("hplus_count_decomposition", rhs13 == filt_hist,
            "assembled " + vec_str(rhs13) + " vs " + vec_str(filt_hist));
    }
  }

  if (m >= 2) {
    long long interior = 0;
    for (const CorootPoint& pt : dm)
      if (sigma_wall_equalities(rs, pt, m, m) == 0) ++interior;
    bool ok = to_int(stats.h_plus[l]) == n_plus_formula(rs, m - 1) &&
              to_int(interior) == n_plus_formula(rs, m - 1);
    check("hplus_top_eq_previous", ok,
          "h_plus[l]=" + std::to_string(stats.h_plus[l]) +
              " interior=" + std::to_string(interior));
  }
  {
    Int lhs = n_plus_formula(rs, m - 1);
    Int rhs = n_total_formula(rs, -static_cast<long>(m));
    if (l % 2) rhs = -rhs;
    check("reciprocity", lhs == rhs, lhs.get_str() + " vs signed " + rhs.get_str());
  }

  // FM-backed geometry oracles.
  if (depth == Depth::full && l <= 3) {
    bool nonempty = true, dims = true;
    std::vector<IneqSystem> systems;
    std::vector<Region> regions;
    enumerate_filter_chains(p, m, [&](const FilterChain& c) {
      regions.push_back(region_of_chain(p, c));
      systems.push_back(region_system(rs, regions.back()));
    });
    for (const IneqSystem& sys : systems) {
      FMResult r = fm_feasible(sys);
      if (r.empty) nonempty = false;
      else if (r.dim != l) dims = false;
    }
    check("fm_regions_nonempty", nonempty && dims);

    bool disjoint = true;
    for (std::size_t i = 0; i < systems.size(); ++i)
      for (std::size_t j = i + 1; j < systems.size(); ++j) {
        IneqSystem both = systems[i];
        for (const auto& row : systems[j].rows) both.rows.push_back(row);
        if (!fm_feasible(both, false).empty) disjoint = false;
      }
    check("fm_regions_disjoint", disjoint);

    bool walls_ok = true;
    for (const Region& reg : regions)
      for (const WallInfo& info : walls_and_separation(p, reg))
        if (info.is_wall && *info.is_wall != fm_is_wall(rs, reg, info.root, info.level))
          walls_ok = false;
    check("fm_wall_agreement", walls_ok);
  }
  if (depth == Depth::full && l <= 2) {
    // Geometricity ⟺ nonempty region system, over all nested ideal tuples.
    std::vector<RootSet> ideals = all_ideals(p);
    bool iff = true;
    std::vector<RootSet> cur;
    std::function<void()> recnest = [&]() {
      if (static_cast<int>(cur.size()) == m) {
        IdealChain cand{m, cur};
        FilterChain fc = complement(p, cand);
        IneqSystem sys(l);
        std::vector<int> lev = last_levels(fc, p.n);
        for (int k = 0; k < p.n; ++k) {
          std::vector<long long> a(rs.roots[k].begin(), rs.roots[k].end());
          sys.add_int(a, Rel::GT, lev[k]);
          if (lev[k] < m) sys.add_int(a, Rel::LT, lev[k] + 1);
        }
        if (is_geometric(p, cand).ok == fm_feasible(sys, false).empty) iff = false;
        return;
      }
      for (const RootSet& x : ideals) {
        if (!cur.empty() && !cur.back().subset_of(x)) continue;
        cur.push_back(x);
        recnest();
        cur.pop_back();
      }
    };
    recnest();
    check("fm_geometricity_iff", iff);

    // The maximal alcove lies in its region and touches every upper bound.
    bool prop = true;
    for (const IdealChain& ch : pos_chains) {
      Region reg = region_of_chain(p, ch);
      ShiVector s = max_alcove(p, ch);
      IneqSystem alc = alcove_system(rs, s);
      for (const IneqRow& row : region_system(rs, reg).rows) {
        IneqSystem probe = alc;
        Rel neg = row.rel == Rel::GT ? Rel::LE : Rel::GE;
        probe.add(row.a, neg, row.b);
        if (!fm_feasible(probe, false).empty) prop = false;
      }
      for (int k = 0; k < p.n; ++k) {
        IneqSystem probe = region_system(rs, reg);
        std::vector<long long> a(rs.roots[k].begin(), rs.roots[k].end());
        probe.add_int(a, Rel::GT, s.r[k]);
        if (!fm_feasible(probe, false).empty) prop = false;
      }
    }
    check("fm_maximal_alcove", prop);
  }

  return rep;
}

}  // namespace catalan
