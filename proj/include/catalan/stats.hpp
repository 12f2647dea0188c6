#pragma once

#include <map>
#include <string>
#include <vector>

#include "catalan/cluster.hpp"
#include "catalan/fvec.hpp"
#include "catalan/lattice.hpp"
#include "catalan/regions.hpp"

namespace catalan {

// N⁺(Φ,m) = ∏ (e_i + mh − 1)/(e_i + 1); exact, asserted integral.
Int n_plus_formula(const RootSystem& rs, long m);

// N(Φ,m) = ∏ (e_i + mh + 1)/(e_i + 1); m may be negative (reciprocity),
// the result is then a signed integer.
Int n_total_formula(const RootSystem& rs, long m);

// Closed forms for the classical families; family A means A_{n−1}.
Int h_plus_closed_form(Family family, int n, long m, int i);
Int f_plus_closed_form(Family family, int n, long m, int k);
// Positive-part face counts of the polygon models (types A and B/C for all
// m; type D only at m = 1).
Int f_cluster_closed_form(Family family, int n, long m, int k);

struct StatReport {
  std::string type;
  int m = 0;
  Int N, N_plus;
  std::vector<long long> h, h_plus, f, f_plus;  // indexed as h_i / f_{i−1}
  std::map<std::string, std::string> sources;    // statistic → computing module
};

// Enumeration-backed statistics: h from chains of filters, h⁺ from the
// walls of the maximal alcoves of the bounded regions.
StatReport compute_stats(const RootPoset& p, int m);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string type;
  int m = 0;
  bool all_pass = true;
  std::vector<CheckResult> checks;
  StatReport stats;
};

enum class Depth { quick, full };

// Runs every cross-check applicable to (Φ,m) and reports a pass/fail ledger
// with witnesses for failures.  quick skips the FM-backed geometry oracles.
VerifyReport verify_all(const RootPoset& p, int m, Depth depth);

// Region-route statistics for an arbitrary Cartan type (used for parabolic
// identities); conventions as in StatReport.
std::vector<long long> region_h_plus(CartanType t, int m);
std::vector<long long> region_h(CartanType t, int m);

}  // namespace catalan
