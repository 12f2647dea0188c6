#include "catalan/fm.hpp"
#include "doctest.h"

using namespace catalan;

namespace {

Rat eval(const RatVec& a, const RatVec& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

bool satisfies(const IneqSystem& sys, const RatVec& x) {
  for (const IneqRow& r : sys.rows) {
    Rat v = eval(r.a, x);
    switch (r.rel) {
      case Rel::LT: if (!(v < r.b)) return false; break;
      case Rel::LE: if (!(v <= r.b)) return false; break;
      case Rel::EQ: if (!(v == r.b)) return false; break;
      case Rel::GE: if (!(v >= r.b)) return false; break;
      case Rel::GT: if (!(v > r.b)) return false; break;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("one-variable intervals") {
  IneqSystem sys(1);
  sys.add_int({1}, Rel::GT, 0);
  sys.add_int({1}, Rel::LT, 1);
  FMResult r = fm_feasible(sys);
  REQUIRE(!r.empty);
  CHECK(r.dim == 1);
  CHECK(r.sample[0] > 0);
  CHECK(r.sample[0] < 1);

  IneqSystem bad(1);
  bad.add_int({1}, Rel::GT, 1);
  bad.add_int({1}, Rel::LT, 1);
  CHECK(fm_feasible(bad).empty);

  IneqSystem pt(1);
  pt.add_int({1}, Rel::GE, 1);
  pt.add_int({1}, Rel::LE, 1);
  FMResult rp = fm_feasible(pt);
  REQUIRE(!rp.empty);
  CHECK(rp.dim == 0);
  CHECK(rp.sample[0] == 1);
}

TEST_CASE("implicit equality detection") {
  // x ≥ 0, y ≥ 0, x + y ≤ 0 pins both variables.
  IneqSystem sys(2);
  sys.add_int({1, 0}, Rel::GE, 0);
  sys.add_int({0, 1}, Rel::GE, 0);
  sys.add_int({1, 1}, Rel::LE, 0);
  FMResult r = fm_feasible(sys);
  REQUIRE(!r.empty);
  CHECK(r.dim == 0);
  CHECK(r.sample == RatVec{Rat(0), Rat(0)});
}

TEST_CASE("equalities, dimensions and samples") {
  IneqSystem sys(3);
  sys.add_int({1, 1, 1}, Rel::EQ, 3);
  sys.add_int({1, 0, 0}, Rel::GT, 0);
  sys.add_int({0, 1, 0}, Rel::GT, 0);
  sys.add_int({0, 0, 1}, Rel::GT, 0);
  FMResult r = fm_feasible(sys);
  REQUIRE(!r.empty);
  CHECK(r.dim == 2);
  CHECK(satisfies(sys, r.sample));

  sys.add_int({1, -1, 0}, Rel::EQ, 0);
  r = fm_feasible(sys);
  REQUIRE(!r.empty);
  CHECK(r.dim == 1);
  CHECK(satisfies(sys, r.sample));

  sys.add_int({1, 0, 0}, Rel::GT, 100);
  CHECK(fm_feasible(sys).empty);
}

TEST_CASE("unbounded directions still sample correctly") {
  IneqSystem sys(2);
  sys.add_int({1, 0}, Rel::GT, 5);
  sys.add_int({0, -1}, Rel::LT, -2);  // y > 2
  FMResult r = fm_feasible(sys);
  REQUIRE(!r.empty);
  CHECK(r.dim == 2);
  CHECK(satisfies(sys, r.sample));
}

TEST_CASE("variable guard") {
  IneqSystem sys(20);
  CHECK_THROWS_AS(fm_feasible(sys), work_limit_exceeded);
}

TEST_CASE("rational coefficients") {
  // x/2 + y/3 ≤ 1/6 and x/2 − y/3 = 1/6 with y ≥ 0 pin the point (1/3, 0).
  IneqSystem sys(2);
  sys.add({make_rat(1, 2), make_rat(1, 3)}, Rel::LE, make_rat(1, 6));
  sys.add({make_rat(1, 2), make_rat(-1, 3)}, Rel::EQ, make_rat(1, 6));
  sys.add({Rat(0), Rat(1)}, Rel::GE, Rat(0));
  FMResult r = fm_feasible(sys);
  REQUIRE(!r.empty);
  CHECK(satisfies(sys, r.sample));
  CHECK(r.dim == 0);
  CHECK(r.sample == RatVec{make_rat(1, 3), Rat(0)});
}
