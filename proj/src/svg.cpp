#include <algorithm>
#include <charconv>
#include <cmath>

#include "geonet/error.hpp"
#include "geonet/io.hpp"

namespace geonet {

void SvgStyle::validate() const {
  if (!(stroke_width > 0.0 && balanced_radius > 0.0 && boundary_radius > 0.0 && margin_fraction > 0.0)) {
    throw Error(Errc::invalid_argument, "SVG style lengths must all be positive");
  }
}

namespace {

// Fixed six decimals; to_chars rounds exactly, so output is platform independent.
std::string num(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 6);
  std::string s(buf, res.ptr);
  if (s == "-0.000000") s.erase(0, 1);
  return s;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const EmbeddedNet& net, const SvgStyle& style) {
  style.validate();
  const NetTopology& topo = net.topology();
  const BoundingBox box = net.bounds();
  const double w = box.max.x - box.min.x;
  const double h = box.max.y - box.min.y;
  double diag = std::hypot(w, h);
  if (!(diag > 0.0)) diag = 1.0;
  const double margin = style.margin_fraction * diag;

  // SVG y grows downward; render (x, -y).
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(box.min.x - margin) +
         " " + num(-box.max.y - margin) + " " + num(w + 2 * margin) + " " + num(h + 2 * margin) +
         "\" width=\"800\" height=\"" + num(800.0 * (h + 2 * margin) / (w + 2 * margin)) + "\">\n";
  out += "<rect x=\"" + num(box.min.x - margin) + "\" y=\"" + num(-box.max.y - margin) + "\" width=\"" +
         num(w + 2 * margin) + "\" height=\"" + num(h + 2 * margin) + "\" fill=\"white\"/>\n";
  out += "<g stroke=\"#1d3557\" stroke-width=\"" + num(style.stroke_width * diag) +
         "\" stroke-linecap=\"round\">\n";
  for (const IndexEdge& e : topo.edges()) {
    const Point a = net.position(e.u), b = net.position(e.v);
    out += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(-a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" +
           num(-b.y) + "\"/>\n";
  }
  out += "</g>\n<g>\n";
  for (std::size_t v = 0; v < topo.vertex_count(); ++v) {
    const Point p = net.position(v);
    const bool boundary = topo.is_boundary(v);
    out += "<circle data-id=\"" + xml_escape(topo.id(v)) + "\" cx=\"" + num(p.x) + "\" cy=\"" + num(-p.y) +
           "\" r=\"" + num((boundary ? style.boundary_radius : style.balanced_radius) * diag) + "\" fill=\"" +
           (boundary ? "#e63946" : "#1d3557") + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

void export_svg(const EmbeddedNet& net, const std::filesystem::path& path, const SvgStyle& style) {
  write_text(path, render_svg(net, style));
}

}  // namespace geonet
