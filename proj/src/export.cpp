#include "ccq/export.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ccq {

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  const std::string s(buf);
  return s == "-0.000000" ? "0.000000" : s;
}

const char* colour(VertexKind k) {
  switch (k) {
    case VertexKind::regular:
      return "#555555";
    case VertexKind::x_critical:
      return "#1f77b4";
    case VertexKind::apparent_node:
      return "#d62728";
    case VertexKind::control:
      break;
  }
  return "#2ca02c";
}

}  // namespace

std::vector<std::pair<double, double>> vertex_coordinates(const TopologyGraph& G) {
  const Rational eps(1, 1000000);
  std::vector<double> xs;
  for (const auto& f : G.fibers) {
    xs.push_back(f.x.is_rational() ? to_double(f.x.rational_value()) : refine(f.x, eps).approx());
  }
  std::vector<std::pair<double, double>> out;
  for (const auto& v : G.vertices) out.emplace_back(xs[static_cast<std::size_t>(v.fiber)], to_double(v.y.mid()));
  return out;
}

std::string to_dot(const TopologyGraph& G, const std::string& name) {
  const auto xy = vertex_coordinates(G);
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  os << "  node [shape=circle, width=0.1, label=\"\"];\n";
  for (const auto& v : G.vertices) {
    const auto [x, y] = xy[static_cast<std::size_t>(v.id)];
    os << "  v" << v.id << " [kind=" << to_string(v.kind) << ", fiber=" << v.fiber << ", x=\"" << fixed(x)
       << "\", y=\"" << fixed(y) << "\", pos=\"" << fixed(x) << "," << fixed(y) << "!\"];\n";
  }
  for (const auto& [a, b] : G.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_svg(const TopologyGraph& G, const std::string& title) {
  const auto xy = vertex_coordinates(G);
  double x0 = -1, x1 = 1, y0 = -1, y1 = 1;
  if (!xy.empty()) {
    x0 = x1 = xy[0].first;
    y0 = y1 = xy[0].second;
    for (const auto& [x, y] : xy) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-9});
  const double size = 600, margin = 20;
  const double scale = (size - 2 * margin) / span;
  auto px = [&](double x) { return fixed(margin + (x - x0) * scale); };
  auto py = [&](double y) { return fixed(size - margin - (y - y0) * scale); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << " " << size << "\">\n";
  os << "  <title>" << title << "</title>\n";
  os << "  <g stroke=\"#333333\" stroke-width=\"1.5\">\n";
  for (const auto& [a, b] : G.edges) {
    const auto& p = xy[static_cast<std::size_t>(a)];
    const auto& q = xy[static_cast<std::size_t>(b)];
    os << "    <line x1=\"" << px(p.first) << "\" y1=\"" << py(p.second) << "\" x2=\"" << px(q.first) << "\" y2=\""
       << py(q.second) << "\"/>\n";
  }
  os << "  </g>\n  <g>\n";
  for (const auto& v : G.vertices) {
    const auto& p = xy[static_cast<std::size_t>(v.id)];
    os << "    <circle cx=\"" << px(p.first) << "\" cy=\"" << py(p.second) << "\" r=\"4\" fill=\"" << colour(v.kind)
       << "\"><title>v" << v.id << " " << to_string(v.kind) << "</title></circle>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace ccq
