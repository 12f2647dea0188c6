#include <sstream>

#include "catalan/stats.hpp"
#include "doctest.h"

using namespace catalan;

namespace {

struct Ctx {
  RootSystem rs;
  RootPoset p;
  explicit Ctx(const std::string& t) : rs(build_root_system(CartanType::parse(t))), p(build_poset(rs)) {}
};

std::string failures(const VerifyReport& rep) {
  std::ostringstream os;
  for (const CheckResult& c : rep.checks)
    if (!c.pass) os << c.name << " [" << c.detail << "] ";
  return os.str();
}

}  // namespace

TEST_CASE("count formulas") {
  Ctx a2("A2");
  CHECK(n_plus_formula(a2.rs, 1) == 2);
  CHECK(n_plus_formula(a2.rs, 2) == 7);
  CHECK(n_total_formula(a2.rs, 1) == 5);
  CHECK(n_total_formula(a2.rs, 2) == 12);
  CHECK(n_plus_formula(a2.rs, 0) == 0);
  CHECK(n_total_formula(a2.rs, 0) == 1);
  CHECK_THROWS_AS(n_plus_formula(a2.rs, -1), std::invalid_argument);

  Ctx g2("G2");
  CHECK(n_plus_formula(g2.rs, 1) == 5);
  Ctx f4("F4");
  CHECK(n_plus_formula(f4.rs, 1) == 66);

  // Rank one: N = m+1, N⁺ = m.
  Ctx a1("A1");
  for (long m = 1; m <= 6; ++m) {
    CHECK(n_total_formula(a1.rs, m) == m + 1);
    CHECK(n_plus_formula(a1.rs, m) == m);
  }

  // Reciprocity instance: (−1)^ℓ N(Φ,−2) = N⁺(Φ,1).
  CHECK(n_total_formula(a2.rs, -2) == 2);  // ℓ even
}

TEST_CASE("closed forms of the classical families") {
  CHECK(h_plus_closed_form(Family::A, 3, 2, 0) == 1);
  CHECK(h_plus_closed_form(Family::A, 3, 2, 1) == 4);
  CHECK(h_plus_closed_form(Family::A, 3, 2, 2) == 2);
  CHECK(h_plus_closed_form(Family::B, 2, 1, 0) == 1);
  CHECK(h_plus_closed_form(Family::B, 2, 1, 1) == 2);
  CHECK(h_plus_closed_form(Family::B, 2, 1, 2) == 0);
  // D4, m=1: the vector sums to N⁺(D4,1) = 20.
  Int total = 0;
  for (int i = 0; i <= 4; ++i) total += h_plus_closed_form(Family::D, 4, 1, i);
  Ctx d4("D4");
  CHECK(total == n_plus_formula(d4.rs, 1));

  CHECK(f_plus_closed_form(Family::A, 3, 2, 1) == 6);
  CHECK(f_plus_closed_form(Family::A, 3, 2, 2) == 7);
  CHECK(f_plus_closed_form(Family::B, 2, 1, 2) == 3);
  CHECK(f_cluster_closed_form(Family::B, 2, 1, 2) == 3);
  CHECK_THROWS_AS(f_cluster_closed_form(Family::D, 4, 2, 1), std::invalid_argument);
}

TEST_CASE("f/h transforms") {
  CHECK(f_from_h({1, 4, 2}) == std::vector<long long>{1, 6, 7});
  CHECK(f_from_h({1, 0, 0}) == std::vector<long long>{1, 2, 1});  // simplex boundary
  CHECK(h_from_f({1, 6, 7}) == std::vector<long long>{1, 4, 2});
  for (std::vector<long long> v :
       {std::vector<long long>{1, 5, 3, 2}, {2, 0, 7, 1}, {1, 1, 1, 1}})
    CHECK(h_from_f(f_from_h(v)) == v);
}

TEST_CASE("stat reports carry provenance and consistent vectors") {
  Ctx a2("A2");
  StatReport rep = compute_stats(a2.p, 2);
  CHECK(rep.N_plus == 7);
  CHECK(rep.N == 12);
  CHECK(rep.h == std::vector<long long>{1, 6, 5});
  CHECK(rep.h_plus == std::vector<long long>{1, 4, 2});
  CHECK(rep.f == std::vector<long long>{1, 8, 12});
  CHECK(rep.f_plus == std::vector<long long>{1, 6, 7});
  CHECK(rep.sources.at("h") == "chains");
  CHECK(rep.sources.at("h_plus") == "regions");
}

TEST_CASE("verify_all: full depth on small types") {
  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    for (int m : {1, 2}) {
      CAPTURE(t);
      CAPTURE(m);
      VerifyReport rep = verify_all(Ctx(t).p, m, Depth::full);
      CHECK_MESSAGE(rep.all_pass, failures(rep));
    }
  }
}

TEST_CASE("verify_all: quick depth across the desk grid") {
  for (const char* t : {"A3", "B3", "C3", "D4"}) {
    for (int m : {1, 2}) {
      CAPTURE(t);
      CAPTURE(m);
      VerifyReport rep = verify_all(Ctx(t).p, m, Depth::quick);
      CHECK_MESSAGE(rep.all_pass, failures(rep));
    }
  }
}

TEST_CASE("verify_all: exceptional table rows") {
  VerifyReport g2 = verify_all(Ctx("G2").p, 1, Depth::quick);
  bool found = false;
  for (const CheckResult& c : g2.checks)
    if (c.name == "exceptional_table_row") {
      found = true;
      CHECK(c.pass);
    }
  CHECK(found);

  VerifyReport f4 = verify_all(Ctx("F4").p, 1, Depth::quick);
  CHECK_MESSAGE(f4.all_pass, failures(f4));
}
