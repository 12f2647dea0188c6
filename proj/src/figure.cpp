#include "catalan/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "catalan/chains.hpp"
#include "catalan/lattice.hpp"
#include "catalan/regions.hpp"

namespace catalan {

namespace {

struct Pt {
  Rat x, y;  // coweight coordinates
  friend bool operator==(const Pt&, const Pt&) = default;
};

struct Line {
  // a·y = b over the coweight plane
  long long a1, a2, b;
};

bool intersect(const Line& l1, const Line& l2, Pt& out) {
  long long det = l1.a1 * l2.a2 - l1.a2 * l2.a1;
  if (det == 0) return false;
  out.x = Rat(static_cast<long>(l1.b * l2.a2 - l1.a2 * l2.b), static_cast<long>(det));
  out.y = Rat(static_cast<long>(l1.a1 * l2.b - l1.b * l2.a1), static_cast<long>(det));
  out.x.canonicalize();
  out.y.canonicalize();
  return true;
}

Rat eval(const Line& l, const Pt& p) {
  return Rat(static_cast<long>(l.a1)) * p.x + Rat(static_cast<long>(l.a2)) * p.y;
}

// Vertices of the (bounded) intersection of half-planes a·y ≥/≤ b, sorted
// counterclockwise around the centroid.  Exact throughout.
struct HalfPlane {
  Line line;
  bool lower;  // true: a·y ≥ b
};

std::vector<Pt> polygon(const std::vector<HalfPlane>& hs) {
  std::vector<Pt> pts;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      Pt q;
      if (!intersect(hs[i].line, hs[j].line, q)) continue;
      bool ok = true;
      for (const HalfPlane& h : hs) {
        Rat v = eval(h.line, q);
        Rat b(static_cast<long>(h.line.b));
        if (h.lower ? v < b : v > b) ok = false;
      }
      if (ok && std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
    }
  if (pts.size() < 3) return pts;
  Rat cx(0), cy(0);
  for (const Pt& q : pts) {
    cx += q.x;
    cy += q.y;
  }
  cx /= static_cast<long>(pts.size());
  cy /= static_cast<long>(pts.size());
  auto half = [&](const Pt& q) { return q.y - cy < 0 || (q.y - cy == 0 && q.x - cx < 0); };
  std::sort(pts.begin(), pts.end(), [&](const Pt& u, const Pt& v) {
    bool hu = half(u), hv = half(v);
    if (hu != hv) return hv;
    Rat cross = (u.x - cx) * (v.y - cy) - (u.y - cy) * (v.x - cx);
    return cross > 0;
  });
  return pts;
}

}  // namespace

std::string render_figure(const RootPoset& p, int m) {
  const RootSystem& rs = *p.rs;
  if (rs.rank != 2) throw std::invalid_argument("render_figure: rank-2 types only");
  if (m < 1) throw std::invalid_argument("render_figure: m must be >= 1");

  // Cartesian embedding of the simple roots, matching the Gram matrix.
  double e1x, e1y, e2x, e2y;
  switch (rs.type.family) {
    case Family::A:
      e1x = std::sqrt(2.0), e1y = 0;
      e2x = -std::sqrt(2.0) / 2, e2y = std::sqrt(6.0) / 2;
      break;
    case Family::B:
    case Family::C:
      e1x = std::sqrt(2.0), e1y = 0;
      e2x = -1 / std::sqrt(2.0), e2y = 1 / std::sqrt(2.0);
      break;
    default:  // G2
      e1x = std::sqrt(2.0 / 3.0), e1y = 0;
      e2x = -std::sqrt(1.5), e2y = std::sqrt(0.5);
      break;
  }
  // x̂ = G⁻¹ y maps coweight to root coordinates; then embed.
  Rat g11(rs.gram6[0][0], 6), g12(rs.gram6[0][1], 6), g22(rs.gram6[1][1], 6);
  g11.canonicalize();
  g12.canonicalize();
  g22.canonicalize();
  Rat det = g11 * g22 - g12 * g12;
  auto cart = [&](const Pt& q, double& ox, double& oy) {
    Rat r1 = (g22 * q.x - g12 * q.y) / det;
    Rat r2 = (g11 * q.y - g12 * q.x) / det;
    double a = r1.get_d(), b = r2.get_d();
    ox = a * e1x + b * e2x;
    oy = a * e1y + b * e2y;
  };
  auto fmt = [&](const Pt& q) {
    double ox, oy;
    cart(q, ox, oy);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f,%.6f", ox, -oy);  // SVG y grows downward
    return std::string(buf);
  };

  long long pdil = static_cast<long long>(m) * rs.coxeter - 1;
  const RootVec& hc = rs.roots[rs.highest];
  long long clip = pdil + 1;

  // Clip triangle for the hyperplane segments: y ≥ 0, (α̃,x) ≤ clip.
  std::vector<Line> edges = {{1, 0, 0}, {0, 1, 0}, {hc[0], hc[1], clip}};

  std::ostringstream svg;
  std::vector<std::string> lines, regions, alcoves, dots;
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  auto grow = [&](const Pt& q) {
    double ox, oy;
    cart(q, ox, oy);
    minx = std::min(minx, ox);
    maxx = std::max(maxx, ox);
    miny = std::min(miny, -oy);
    maxy = std::max(maxy, -oy);
  };

  // Arrangement hyperplanes restricted to the dominant cone.
  for (int k = 0; k < p.n; ++k) {
    const RootVec& a = rs.roots[k];
    for (long long lev = 0; lev <= m; ++lev) {
      Line hl{a[0], a[1], lev};
      std::vector<Pt> ends;
      for (const Line& e : edges) {
        Pt q;
        if (!intersect(hl, e, q)) continue;
        if (q.x < 0 || q.y < 0 ||
            Rat(hc[0]) * q.x + Rat(hc[1]) * q.y > Rat(static_cast<long>(clip)))
          continue;
        if (std::find(ends.begin(), ends.end(), q) == ends.end()) ends.push_back(q);
      }
      if (ends.size() != 2) continue;
      grow(ends[0]);
      grow(ends[1]);
      lines.push_back("  <path class=\"hyperplane\" d=\"M " + fmt(ends[0]) + " L " +
                      fmt(ends[1]) + "\"/>");
    }
  }

  // Bounded dominant regions, shaded, with their maximal alcoves hatched.
  Pt a0{Rat(0), Rat(0)}, a1{Rat(1, static_cast<long>(hc[0])), Rat(0)},
      a2{Rat(0), Rat(1, static_cast<long>(hc[1]))};
  a1.x.canonicalize();
  a2.y.canonicalize();
  enumerate_ideal_chains(p, m, true, [&](const IdealChain& ch) {
    Region reg = region_of_chain(p, ch);
    std::vector<HalfPlane> hs;
    for (int k = 0; k < p.n; ++k) {
      Line l{rs.roots[k][0], rs.roots[k][1], reg.level[k]};
      hs.push_back({l, true});
      if (reg.level[k] < m) hs.push_back({{l.a1, l.a2, l.b + 1}, false});
    }
    std::vector<Pt> poly = polygon(hs);
    if (poly.size() >= 3) {
      std::string d = "M " + fmt(poly[0]);
      for (std::size_t i = 1; i < poly.size(); ++i) d += " L " + fmt(poly[i]);
      regions.push_back("  <path class=\"region\" d=\"" + d + " Z\"/>");
      for (const Pt& q : poly) grow(q);
    }

    AffineElement w = shi_to_affine(rs, max_alcove(p, ch));
    auto apply = [&](const Pt& q) {
      Pt out{Rat(0), Rat(0)};
      Rat in[2] = {q.x, q.y};
      Rat res[2];
      for (int kk = 0; kk < 2; ++kk) {
        res[kk] = Rat(0);
        for (int j = 0; j < 2; ++j) res[kk] += Rat(w.linv[j][kk]) * in[j];
        long long shift = 0;
        for (int j = 0; j < 2; ++j) shift += static_cast<long long>(rs.cartan[kk][j]) * w.trans[j];
        res[kk] += Rat(static_cast<long>(shift));
      }
      out.x = res[0];
      out.y = res[1];
      return out;
    };
    Pt t0 = apply(a0), t1 = apply(a1), t2 = apply(a2);
    alcoves.push_back("  <path class=\"alcove\" d=\"M " + fmt(t0) + " L " + fmt(t1) + " L " +
                      fmt(t2) + " Z\"/>");
  });

  // Dilated fundamental simplex and its coroot lattice points.
  Pt s1{Rat(static_cast<long>(pdil), static_cast<long>(hc[0])), Rat(0)};
  Pt s2{Rat(0), Rat(static_cast<long>(pdil), static_cast<long>(hc[1]))};
  s1.x.canonicalize();
  s2.y.canonicalize();
  std::string simplex = "  <path class=\"simplex\" d=\"M " + fmt(a0) + " L " + fmt(s1) + " L " +
                        fmt(s2) + " Z\"/>";
  grow(s1);
  grow(s2);
  for (const CorootPoint& pt : enumerate_Dm(rs, m)) {
    auto y = coweight_values(rs, pt);
    Pt q{Rat(static_cast<long>(y[0])), Rat(static_cast<long>(y[1]))};
    double ox, oy;
    cart(q, ox, oy);
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "  <circle class=\"dm-point\" cx=\"%.6f\" cy=\"%.6f\" r=\"0.06\"/>", ox, -oy);
    dots.push_back(buf);
  }

  double margin = 0.4;
  char vb[160];
  std::snprintf(vb, sizeof vb, "%.6f %.6f %.6f %.6f", minx - margin, miny - margin,
                maxx - minx + 2 * margin, maxy - miny + 2 * margin);

  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << vb << "\">\n";
  svg << "  <defs>\n"
         "    <pattern id=\"hatch\" width=\"0.12\" height=\"0.12\" "
         "patternTransform=\"rotate(45)\" patternUnits=\"userSpaceOnUse\">\n"
         "      <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"0.12\" stroke=\"#1f5fa8\" "
         "stroke-width=\"0.03\"/>\n"
         "    </pattern>\n"
         "    <style>\n"
         "      .hyperplane { stroke: #999999; stroke-width: 0.01; fill: none; }\n"
         "      .region { fill: #f2c94c; fill-opacity: 0.45; stroke: none; }\n"
         "      .alcove { fill: url(#hatch); stroke: #1f5fa8; stroke-width: 0.015; }\n"
         "      .simplex { fill: none; stroke: #c0392b; stroke-width: 0.025; }\n"
         "      .dm-point { fill: #c0392b; }\n"
         "    </style>\n"
         "  </defs>\n";
  for (const std::string& s : regions) svg << s << "\n";
  for (const std::string& s : lines) svg << s << "\n";
  for (const std::string& s : alcoves) svg << s << "\n";
  svg << simplex << "\n";
  for (const std::string& s : dots) svg << s << "\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace catalan
