#include "catalan/fm.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace catalan {

void IneqSystem::add_int(const std::vector<long long>& a, Rel rel, long long b) {
  RatVec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = Rat(static_cast<long>(a[i]));
  add(std::move(v), rel, Rat(static_cast<long>(b)));
}

namespace {

enum Kind { WEAK, STRICT, EQUAL };

struct Row {
  RatVec a;
  Rat b;
  Kind kind;
};

std::vector<Row> normalize(const IneqSystem& sys) {
  std::vector<Row> rows;
  for (const IneqRow& r : sys.rows) {
    Row row{r.a, r.b, WEAK};
    switch (r.rel) {
      case Rel::LE: row.kind = WEAK; break;
      case Rel::LT: row.kind = STRICT; break;
      case Rel::EQ: row.kind = EQUAL; break;
      case Rel::GE:
      case Rel::GT:
        for (Rat& q : row.a) q = -q;
        row.b = -row.b;
        row.kind = r.rel == Rel::GE ? WEAK : STRICT;
        break;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool is_zero_vec(const RatVec& a) {
  for (const Rat& q : a)
    if (q != 0) return false;
  return true;
}

struct EqSubst {
  int var;
  RatVec a;  // pivot row: a·x = b with a[var] != 0
  Rat b;
};

// Eliminates EQUAL rows by substitution.  Returns false on inconsistency.
bool eliminate_equalities(std::vector<Row>& rows, std::vector<bool>& live,
                          std::vector<EqSubst>& subs) {
  for (;;) {
    int eq = -1;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r].kind == EQUAL && !is_zero_vec(rows[r].a)) {
        eq = static_cast<int>(r);
        break;
      }
    if (eq < 0) break;
    Row pivot = rows[eq];
    rows.erase(rows.begin() + eq);
    int v = -1;
    for (std::size_t k = 0; k < pivot.a.size(); ++k)
      if (pivot.a[k] != 0) {
        v = static_cast<int>(k);
        break;
      }
    for (Row& r : rows) {
      if (r.a[v] == 0) continue;
      Rat f = r.a[v] / pivot.a[v];
      for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] -= f * pivot.a[k];
      r.b -= f * pivot.b;
    }
    live[v] = false;
    subs.push_back({v, pivot.a, pivot.b});
  }
  // Constant rows: check and drop.
  std::vector<Row> keep;
  for (Row& r : rows) {
    if (!is_zero_vec(r.a)) {
      keep.push_back(std::move(r));
      continue;
    }
    bool ok = r.kind == EQUAL ? r.b == 0 : (r.kind == WEAK ? r.b >= 0 : r.b > 0);
    if (!ok) return false;
  }
  rows = std::move(keep);
  return true;
}

// Keeps, per direction, only the tightest bound.
void prune_dominated(std::vector<Row>& rows) {
  std::map<std::vector<std::string>, std::size_t> best;
  std::vector<Row> keep;
  for (Row& r : rows) {
    // Canonical direction: scale by the positive inverse of the first
    // nonzero coefficient's absolute value... scale so the vector is
    // primitive with the original orientation.
    Rat scale;
    for (const Rat& q : r.a)
      if (q != 0) {
        scale = abs(q);
        break;
      }
    std::vector<std::string> key;
    key.reserve(r.a.size());
    for (const Rat& q : r.a) key.push_back(Rat(q / scale).get_str());
    Rat nb = r.b / scale;
    auto it = best.find(key);
    if (it == best.end()) {
      best[key] = keep.size();
      Row nr = r;
      for (Rat& q : nr.a) q /= scale;
      nr.b = nb;
      keep.push_back(std::move(nr));
    } else {
      Row& old = keep[it->second];
      bool tighter = nb < old.b || (nb == old.b && r.kind == STRICT && old.kind == WEAK);
      if (tighter) {
        Row nr = r;
        for (Rat& q : nr.a) q /= scale;
        nr.b = nb;
        old = std::move(nr);
      }
    }
  }
  rows = std::move(keep);
}

struct Stage {
  int var;
  std::vector<Row> lowers, uppers;  // rows still containing `var`
};

// Core elimination; on success fills stages for sample reconstruction.
bool run_fm(std::vector<Row> rows, std::vector<bool> live, std::vector<Stage>& stages) {
  int nvars = static_cast<int>(live.size());
  for (;;) {
    // Constant rows.
    std::vector<Row> keep;
    for (Row& r : rows) {
      if (is_zero_vec(r.a)) {
        bool ok = r.kind == WEAK ? r.b >= 0 : r.b > 0;
        if (!ok) return false;
      } else {
        keep.push_back(std::move(r));
      }
    }
    rows = std::move(keep);
    prune_dominated(rows);

    int v = -1;
    long best = -1;
    for (int k = 0; k < nvars; ++k) {
      if (!live[k]) continue;
      long occ = 0;
      for (const Row& r : rows)
        if (r.a[k] != 0) ++occ;
      if (occ == 0) continue;
      if (v < 0 || occ < best) {
        v = k;
        best = occ;
      }
    }
    if (v < 0) return true;  // no variable occurs; remaining rows were constant

    Stage st{v, {}, {}};
    std::vector<Row> pass;
    for (Row& r : rows) {
      if (r.a[v] == 0)
        pass.push_back(std::move(r));
      else if (r.a[v] > 0)
        st.uppers.push_back(std::move(r));
      else
        st.lowers.push_back(std::move(r));
    }
    for (const Row& lo : st.lowers)
      for (const Row& up : st.uppers) {
        Row comb;
        comb.kind = (lo.kind == STRICT || up.kind == STRICT) ? STRICT : WEAK;
        comb.a.resize(nvars);
        Rat cl = up.a[v];    // > 0
        Rat cu = -lo.a[v];   // > 0
        for (int k = 0; k < nvars; ++k) comb.a[k] = cl * lo.a[k] + cu * up.a[k];
        comb.b = cl * lo.b + cu * up.b;
        pass.push_back(std::move(comb));
      }
    live[v] = false;
    stages.push_back(std::move(st));
    rows = std::move(pass);
  }
}

Rat eval_rest(const Row& r, int var, const RatVec& x) {
  Rat s = r.b;
  for (std::size_t k = 0; k < r.a.size(); ++k)
    if (static_cast<int>(k) != var) s -= r.a[k] * x[k];
  return s;
}

}  // namespace

FMResult fm_feasible(const IneqSystem& sys, bool want_dimension, int max_vars) {
  if (sys.vars > max_vars)
    throw work_limit_exceeded("fm_feasible: " + std::to_string(sys.vars) +
                              " variables exceeds the guard of " + std::to_string(max_vars));
  FMResult res;
  std::vector<Row> rows = normalize(sys);
  std::vector<bool> live(sys.vars, true);
  std::vector<EqSubst> subs;
  if (!eliminate_equalities(rows, live, subs)) return res;

  std::vector<Stage> stages;
  std::vector<Row> ineqs = rows;
  if (!run_fm(ineqs, live, stages)) return res;
  res.empty = false;

  // Sample point by back-substitution through the elimination stages.
  RatVec x(sys.vars, Rat(0));
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    std::optional<Rat> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const Row& r : it->lowers) {
      Rat bound = eval_rest(r, it->var, x) / r.a[it->var];  // a[v] < 0 flips to >=
      if (!lo || bound > *lo || (bound == *lo && r.kind == STRICT)) {
        lo = bound;
        lo_strict = r.kind == STRICT;
      }
    }
    for (const Row& r : it->uppers) {
      Rat bound = eval_rest(r, it->var, x) / r.a[it->var];
      if (!hi || bound < *hi || (bound == *hi && r.kind == STRICT)) {
        hi = bound;
        hi_strict = r.kind == STRICT;
      }
    }
    Rat val;
    if (lo && hi) {
      if (*lo > *hi || (*lo == *hi && (lo_strict || hi_strict)))
        throw internal_error("fm_feasible: empty interval during reconstruction");
      val = *lo == *hi ? *lo : Rat(*lo + *hi) / 2;
    } else if (lo) {
      val = *lo + 1;
    } else if (hi) {
      val = *hi - 1;
    } else {
      val = 0;
    }
    x[it->var] = val;
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    Rat s = it->b;
    for (std::size_t k = 0; k < it->a.size(); ++k)
      if (static_cast<int>(k) != it->var) s -= it->a[k] * x[k];
    x[it->var] = s / it->a[it->var];
  }
  res.sample = x;

  if (!want_dimension) return res;

  // Affine dimension: promote implicit equalities among weak rows, then
  // count independent equalities.
  IneqSystem work = sys;
  for (;;) {
    bool promoted = false;
    for (std::size_t r = 0; r < work.rows.size(); ++r) {
      Rel rel = work.rows[r].rel;
      if (rel != Rel::LE && rel != Rel::GE) continue;
      IneqSystem probe = work;
      probe.rows[r].rel = rel == Rel::LE ? Rel::LT : Rel::GT;
      if (fm_feasible(probe, false, max_vars).empty) {
        work.rows[r].rel = Rel::EQ;
        promoted = true;
      }
    }
    if (!promoted) break;
  }
  std::vector<Row> eqrows;
  for (const Row& r : normalize(work))
    if (r.kind == EQUAL) eqrows.push_back(r);
  std::vector<bool> elive(sys.vars, true);
  std::vector<EqSubst> esubs;
  std::vector<Row> tmp = eqrows;
  if (!eliminate_equalities(tmp, elive, esubs))
    throw internal_error("fm_feasible: inconsistent equalities in nonempty system");
  res.dim = sys.vars - static_cast<int>(esubs.size());
  return res;
}

}  // namespace catalan
