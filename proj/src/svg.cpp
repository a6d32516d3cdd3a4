#include "alcove/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace alcove {

namespace {

std::string fmt(double v) {
  char buf[32];
  if (v == 0.0) v = 0.0;  // normalize -0
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string render_alcove_svg(const RootSystem& rs, Int window,
                              const std::function<bool(const AffElem&)>& member) {
  if (rs.rank() != 2) throw UsageError("alcove plots need a rank-2 system");

  // Euclidean embedding from the coroot Gram matrix (a_ij / d_j with d from
  // the symmetrizing lengths).
  MatI a = rs.cartan();
  double d1 = 1.0, d2 = 1.0;
  // d1 * a12 = d2 * a21
  if (a(0, 1) != 0) {
    d1 = static_cast<double>(a(1, 0)) / static_cast<double>(a(0, 1));
    d2 = 1.0;
    if (d1 < 0) d1 = -d1;
    if (d1 < 1.0) {
      d2 = 1.0 / d1;
      d1 = 1.0;
    }
  }
  double g11 = 2.0 / d1, g22 = 2.0 / d2;
  double g12 = static_cast<double>(a(0, 1)) / d2;  // (cr_i, cr_j) = a_ij / d_j
  // Basis vectors in the plane: e1 -> (sqrt(g11), 0), e2 -> (g12/sqrt(g11), h)
  double b1x = std::sqrt(g11), b1y = 0.0;
  double b2x = g12 / b1x;
  double b2y = std::sqrt(std::max(0.0, g22 - b2x * b2x));

  auto embed = [&](const VecR& v) {
    double c1 = static_cast<double>(v[0].num()) / static_cast<double>(v[0].den());
    double c2 = static_cast<double>(v[1].num()) / static_cast<double>(v[1].den());
    return std::pair<double, double>{c1 * b1x + c2 * b2x, c1 * b1y + c2 * b2y};
  };

  // Alcoves whose center falls in the coordinate box.
  std::vector<AffElem> shown;
  const VecR x0 = rs.alcove_center();
  for (Int m1 = -2 * window - 2; m1 <= 2 * window + 2; ++m1) {
    for (Int m2 = -2 * window - 2; m2 <= 2 * window + 2; ++m2) {
      for (int u = 0; u < rs.weyl_order(); ++u) {
        VecI mu(2);
        mu << m1, m2;
        AffElem w{mu, u};
        VecR c = aff_apply(rs, w, x0);
        bool in = true;
        for (int i = 0; i < 2; ++i)
          if (c[i] < Rat(-window) || c[i] > Rat(window)) in = false;
        if (in) shown.push_back(w);
      }
    }
  }
  shown = [&] {
    std::sort(shown.begin(), shown.end(), [&](const AffElem& p, const AffElem& q) {
      if (!vec_eq<Int>(p.mu, q.mu)) return vec_lex_less(p.mu, q.mu);
      return p.u < q.u;
    });
    return shown;
  }();

  double minx = 0, miny = 0, maxx = 0, maxy = 0;
  bool first = true;
  std::vector<std::array<std::pair<double, double>, 3>> tris;
  std::vector<bool> fills;
  for (const AffElem& w : shown) {
    std::array<std::pair<double, double>, 3> tri;
    for (int i = 0; i < 3; ++i) {
      tri[static_cast<std::size_t>(i)] =
          embed(aff_apply(rs, w, rs.alcove_vertices()[static_cast<std::size_t>(i)]));
      auto [x, y] = tri[static_cast<std::size_t>(i)];
      if (first) {
        minx = maxx = x;
        miny = maxy = y;
        first = false;
      }
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
    tris.push_back(tri);
    fills.push_back(member(w));
  }
  double pad = 0.3;
  double scale = 60.0;
  double w_px = (maxx - minx + 2 * pad) * scale;
  double h_px = (maxy - miny + 2 * pad) * scale;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w_px) + "\" height=\"" +
         fmt(h_px) + "\" viewBox=\"0 0 " + fmt(w_px) + " " + fmt(h_px) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  int shaded = 0;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    std::string pts;
    for (int k = 0; k < 3; ++k) {
      auto [x, y] = tris[i][static_cast<std::size_t>(k)];
      // y grows upward in the alcove model, downward in SVG
      double px = (x - minx + pad) * scale;
      double py = (maxy - y + pad) * scale;
      if (k) pts += " ";
      pts += fmt(px) + "," + fmt(py);
    }
    out += "<polygon points=\"" + pts + "\" fill=\"" +
           (fills[i] ? std::string("#7aa8d6") : std::string("none")) +
           "\" stroke=\"#777777\" stroke-width=\"0.8\"/>\n";
    if (fills[i]) ++shaded;
  }
  out += "<!-- shaded=" + std::to_string(shaded) + " of " + std::to_string(tris.size()) +
         " alcoves -->\n";
  out += "</svg>\n";
  return out;
}

}  // namespace alcove
