#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace gridloc {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_drawing_svg(const GridDrawing& dr) {
  dr.check_shape();
  if (dr.dim != 2) throw input_error("SVG output supports only dim-2 drawings");

  const double size = 720.0, margin = 40.0;
  BigInt minx, maxx, miny, maxy;
  bool first = true;
  for (const auto& p : dr.points) {
    if (first) {
      minx = maxx = p.coords[0];
      miny = maxy = p.coords[1];
      first = false;
    } else {
      minx = std::min(minx, p.coords[0]);
      maxx = std::max(maxx, p.coords[0]);
      miny = std::min(miny, p.coords[1]);
      maxy = std::max(maxy, p.coords[1]);
    }
  }
  if (first) minx = maxx = miny = maxy = 0;
  // per-axis fit; column constructions are far taller than wide
  BigInt spanx = std::max(BigInt(maxx - minx), BigInt(1));
  BigInt spany = std::max(BigInt(maxy - miny), BigInt(1));

  auto sx = [&](const BigInt& x) {
    Rational t(x - minx);
    t /= Rational(spanx);
    return margin + rational_to_double(t) * (size - 2 * margin);
  };
  auto sy = [&](const BigInt& y) {
    Rational t(y - miny);
    t /= Rational(spany);
    // flip: SVG y grows downward
    return size - margin - rational_to_double(t) * (size - 2 * margin);
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size
      << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (auto [u, v] : dr.graph.edges()) {
    out << "  <line x1=\"" << fmt(sx(dr.points[u].coords[0])) << "\" y1=\""
        << fmt(sy(dr.points[u].coords[1])) << "\" x2=\""
        << fmt(sx(dr.points[v].coords[0])) << "\" y2=\""
        << fmt(sy(dr.points[v].coords[1]))
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  // interior grid points of non-primitive segments: empty circles
  for (auto [u, v] : dr.graph.edges()) {
    auto pts = segment_lattice_points(dr.points[u], dr.points[v]);
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
      out << "  <circle cx=\"" << fmt(sx(pts[i].coords[0])) << "\" cy=\""
          << fmt(sy(pts[i].coords[1]))
          << "\" r=\"5\" fill=\"white\" stroke=\"black\" "
             "stroke-width=\"1.5\"/>\n";
    }
  }
  for (int v = 0; v < dr.graph.vertex_count(); ++v) {
    out << "  <circle cx=\"" << fmt(sx(dr.points[v].coords[0])) << "\" cy=\""
        << fmt(sy(dr.points[v].coords[1])) << "\" r=\"6\" fill=\"black\"/>\n";
    out << "  <text x=\"" << fmt(sx(dr.points[v].coords[0]) + 9) << "\" y=\""
        << fmt(sy(dr.points[v].coords[1]) - 9)
        << "\" font-size=\"13\" font-family=\"sans-serif\">" << v
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace gridloc
