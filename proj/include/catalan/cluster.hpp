#pragma once

#include <string>
#include <vector>

#include "catalan/fvec.hpp"
#include "catalan/rootset.hpp"
#include "catalan/rootsys.hpp"

namespace catalan {

// Diagonal of a convex polygon with 1-based clockwise vertex labels; a < b.
struct Diagonal {
  int a, b;
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
  friend bool operator<(const Diagonal& x, const Diagonal& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

// Strict interior crossing; shared endpoints do not cross.
bool diagonals_cross(const Diagonal& d1, const Diagonal& d2);

// Vertex of the polygon model: one diagonal in type A; in type B/C either a
// diameter (one diagonal) or an unordered centrally symmetric pair.
struct ModelVertex {
  std::vector<Diagonal> diagonals;
  bool diameter = false;
};

// Polygon model of the generalized cluster complex: type A on an (mn+2)-gon
// with the m-allowable diagonals, type B/C on a (2mn+2)-gon with diameters
// and symmetric pairs of m-allowable diagonals.
struct ClusterModel {
  Family family;  // A (meaning A_{n−1}) or B (covering C as well)
  int n, m;
  int gon;
  int rank;  // ℓ = n−1 (A) or n (B/C)
  std::vector<ModelVertex> vertices;
  std::vector<RootSet> compat;  // pairwise-noncrossing graph, ≤128 vertices
};

ClusterModel build_model(Family family, int n, int m);

std::vector<Diagonal> allowable_diagonals(Family family, int n, int m);

// The ℓ pairwise-noncrossing vertices standing for the negative simple
// roots; returns indices into model.vertices.  rotate shifts every diagonal
// by the same number of polygon steps (any rotation is again a snake).
std::vector<int> snake_vertices(const ClusterModel& model, int rotate = 0);

struct ComplexSummary {
  std::vector<long long> f;  // f[k] = f_{k−1}, k = 0..ℓ
  std::vector<long long> h;  // h[k] = h_k
};

// Face counts by clique enumeration over the noncrossing graph; asserts
// purity (every maximal face has ℓ vertices).  positive_only removes the
// snake vertices first.
ComplexSummary build_complex(Family family, int n, int m, bool positive_only,
                             long long max_faces = 10000000);
ComplexSummary summarize_faces(const ClusterModel& model, const std::vector<int>& removed,
                               long long max_faces, bool require_pure = true);

// Checks f_{k−1}(Δ^m(Φ_I)) = Σ_{J⊆I} f_{k−|J|−1}(Δ^m_+(Φ_{I\J})) using the
// models of the parabolic components.
bool parabolic_face_identity_check(Family family, int n, int m, std::string* detail = nullptr);

}  // namespace catalan
