#include <algorithm>
#include <set>

#include "catalan/rootsys.hpp"
#include "doctest.h"

using namespace catalan;

namespace {

const std::vector<std::string> kDeskTypes = {"A1", "A2", "A3", "A4", "A5", "B2", "B3",
                                             "B4", "C3", "C4", "D4", "G2", "F4", "E6"};

long long expected_weyl_order(const RootSystem& rs) {
  long long w = 1;
  for (int e : rs.exponents) w *= e + 1;
  return w;
}

}  // namespace

TEST_CASE("rank constraints per family") {
  CHECK_THROWS_AS(CartanType(Family::A, 0), invalid_cartan_type);
  CHECK_THROWS_AS(CartanType(Family::B, 1), invalid_cartan_type);
  CHECK_THROWS_AS(CartanType(Family::D, 3), invalid_cartan_type);
  CHECK_THROWS_AS(CartanType(Family::E, 5), invalid_cartan_type);
  CHECK_THROWS_AS(CartanType(Family::E, 9), invalid_cartan_type);
  CHECK_THROWS_AS(CartanType(Family::F, 3), invalid_cartan_type);
  CHECK_THROWS_AS(CartanType(Family::G, 3), invalid_cartan_type);
  CHECK_THROWS_AS(CartanType::parse("H3"), invalid_cartan_type);
  CHECK_THROWS_AS(CartanType::parse("A"), invalid_cartan_type);
  CHECK(CartanType::parse("D4").name() == "D4");
}

TEST_CASE("A1: single root, h=2") {
  RootSystem rs = build_root_system(CartanType::parse("A1"));
  CHECK(rs.size() == 1);
  CHECK(rs.coxeter == 2);
  CHECK(rs.exponents == std::vector<int>{1});
}

TEST_CASE("A2: closure, exponents, highest root") {
  RootSystem rs = build_root_system(CartanType::parse("A2"));
  CHECK(rs.size() == 3);
  CHECK(rs.roots[0] == RootVec{1, 0});
  CHECK(rs.roots[1] == RootVec{0, 1});
  CHECK(rs.roots[2] == RootVec{1, 1});
  CHECK(rs.coxeter == 3);
  CHECK(rs.exponents == std::vector<int>{1, 2});
  CHECK(rs.highest == 2);
  int csum = 0;
  for (int c : rs.roots[rs.highest]) csum += c;
  CHECK(csum == rs.coxeter - 1);
}

TEST_CASE("G2: six positive roots, exponents (1,5)") {
  RootSystem rs = build_root_system(CartanType::parse("G2"));
  CHECK(rs.size() == 6);
  CHECK(rs.coxeter == 6);
  CHECK(rs.exponents == std::vector<int>{1, 5});
  CHECK(rs.roots[rs.highest] == RootVec{3, 2});
}

TEST_CASE("inner products under the long-norm-2 normalization") {
  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  CHECK(inner(a2, a2.roots[0], a2.roots[1]) == Rat(-1));
  CHECK(inner(a2, a2.roots[0], a2.roots[0]) == Rat(2));
  CHECK(inner(a2, a2.roots[2], RootVec{0, 0}) == Rat(0));

  RootSystem b2 = build_root_system(CartanType::parse("B2"));
  CHECK(inner(b2, b2.roots[0], b2.roots[0]) == Rat(2));  // long
  CHECK(inner(b2, b2.roots[1], b2.roots[1]) == Rat(1));  // short
  CHECK(inner(b2, b2.roots[0], b2.roots[1]) == Rat(-1));
  // Cartan identity a_ij = 2(σ_i,σ_j)/(σ_j,σ_j)
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(Rat(b2.cartan[i][j]) ==
            2 * inner(b2, b2.roots[i], b2.roots[j]) / inner(b2, b2.roots[j], b2.roots[j]));
  CHECK_THROWS(inner(b2, RootVec{1}, RootVec{1, 0}));
}

TEST_CASE("coroots") {
  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  CHECK(coroot(a2, a2.roots[2]) == RatVec{Rat(1), Rat(1)});  // simply laced: α̌ = α
  RootSystem b2 = build_root_system(CartanType::parse("B2"));
  CHECK(coroot(b2, b2.roots[1]) == RatVec{Rat(0), Rat(2)});  // short: 2β
  CHECK_THROWS(coroot(b2, RootVec{5, 0}));
}

TEST_CASE("invariants across desk-scale types") {
  for (const auto& name : kDeskTypes) {
    CAPTURE(name);
    RootSystem rs = build_root_system(CartanType::parse(name));
    CHECK(2 * rs.size() == rs.rank * rs.coxeter);
    int csum = 0;
    for (int c : rs.roots[rs.highest]) csum += c;
    CHECK(csum == rs.coxeter - 1);  // Σc_i = h−1
    long long exps = 0;
    for (int e : rs.exponents) exps += e;
    CHECK(exps == rs.size());
    CHECK(expected_weyl_order(rs) == weyl_order(rs));
    // Simple reflections permute Φ⁺ \ {σ_i}.
    for (int i = 0; i < rs.rank; ++i)
      for (int k = 0; k < rs.size(); ++k) {
        if (k == i) continue;
        RootVec img = rs.apply_matrix(rs.refl[i], rs.roots[k]);
        CHECK(rs.root_index(img) >= 0);
      }
    // Highest root is long: norm 2.
    CHECK(rs.inner6(rs.roots[rs.highest], rs.roots[rs.highest]) == 12);
    // Coroots of simples are integral multiples recorded in coroot_scale.
    for (int i = 0; i < rs.rank; ++i)
      CHECK(Rat(rs.coroot_scale[i]) * inner(rs, rs.roots[i], rs.roots[i]) == Rat(2));
  }
}

TEST_CASE("frozen exponent tables") {
  CHECK(build_root_system(CartanType::parse("B3")).exponents == std::vector<int>{1, 3, 5});
  CHECK(build_root_system(CartanType::parse("C4")).exponents == std::vector<int>{1, 3, 5, 7});
  CHECK(build_root_system(CartanType::parse("D4")).exponents == std::vector<int>{1, 3, 3, 5});
  CHECK(build_root_system(CartanType::parse("F4")).exponents == std::vector<int>{1, 5, 7, 11});
  CHECK(build_root_system(CartanType::parse("E6")).exponents ==
        std::vector<int>{1, 4, 5, 7, 8, 11});
}

TEST_CASE("E7/E8 build cleanly") {
  CHECK(build_root_system(CartanType::parse("E7")).size() == 63);
  CHECK(build_root_system(CartanType::parse("E8")).size() == 120);
}

TEST_CASE("parabolic subsystems") {
  RootSystem a3 = build_root_system(CartanType::parse("A3"));
  Parabolic empty = parabolic(a3, {});
  CHECK(empty.components.empty());
  CHECK(empty.positive_root_count == 0);

  Parabolic p = parabolic(a3, {0, 2});
  REQUIRE(p.components.size() == 2);
  CHECK(p.components[0].type == CartanType(Family::A, 1));
  CHECK(p.components[1].type == CartanType(Family::A, 1));
  CHECK(p.positive_root_count == 2);

  RootSystem b3 = build_root_system(CartanType::parse("B3"));
  Parabolic q = parabolic(b3, {1, 2});  // short end of the B3 path
  REQUIRE(q.components.size() == 1);
  CHECK(q.components[0].type == CartanType(Family::B, 2));
  CHECK(q.positive_root_count == 4);

  RootSystem f4 = build_root_system(CartanType::parse("F4"));
  CHECK(parabolic(f4, {0, 1, 2}).components[0].type == CartanType(Family::B, 3));
  CHECK(parabolic(f4, {1, 2, 3}).components[0].type == CartanType(Family::C, 3));
  CHECK(parabolic(f4, {0, 1}).components[0].type == CartanType(Family::A, 2));
  CHECK(parabolic(f4, {1, 2}).components[0].type == CartanType(Family::B, 2));

  RootSystem e6 = build_root_system(CartanType::parse("E6"));
  CHECK(parabolic(e6, {0, 1, 2, 3, 4}).components[0].type == CartanType(Family::D, 5));
  CHECK(parabolic(e6, {0, 2, 3, 4, 5}).components[0].type == CartanType(Family::A, 5));
  RootSystem g2 = build_root_system(CartanType::parse("G2"));
  CHECK(parabolic(g2, {0, 1}).components[0].type == CartanType(Family::G, 2));

  // Component count of Φ⁺ restricted to the span equals the component sum.
  RootSystem d4 = build_root_system(CartanType::parse("D4"));
  Parabolic r = parabolic(d4, {0, 2, 3});
  long long total = 0;
  for (const auto& c : r.components) {
    RootSystem crs = build_root_system(c.type);
    total += crs.size();
  }
  CHECK(total == r.positive_root_count);
}
