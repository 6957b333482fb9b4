#include "geonet/builder.hpp"

#include <cmath>
#include <sstream>

#include "geonet/error.hpp"

namespace geonet {

int cyc(int i) { return ((i - 1) % 4 + 4) % 4 + 1; }

std::string vid(char kind, int i) { return std::string(1, kind) + std::to_string(cyc(i)); }

std::string vid(char kind, int i, int j) {
  return std::string(1, kind) + std::to_string(cyc(i)) + std::to_string(j);
}

namespace {

struct PolygonStep {
  std::string role;
  double side_after;  // length of the side leaving this corner
  double turn_after;  // exterior angle at the next corner
};

// Walks a polygon starting at the origin heading along +x.
std::vector<Point> walk(const std::vector<PolygonStep>& steps, double* closure_error) {
  std::vector<Point> pts;
  Point cur{};
  double heading = 0.0;
  for (const PolygonStep& s : steps) {
    pts.push_back(cur);
    cur += polar(s.side_after, heading);
    heading += s.turn_after;
  }
  *closure_error = distance(cur, pts.front());
  return pts;
}

Point outward_normal(Point from, Point to) {
  const UnitVector t = unit_toward(from, to);
  return {t.dy, -t.dx};  // right-hand side of a counterclockwise traversal
}

Point fermat_or_throw(Point a, Point b, Point c, const std::string& role) {
  try {
    return fermat_point(Triangle{{a, b, c}});
  } catch (const Error& e) {
    throw Error(e.code(), "while placing " + role + ": " + e.what());
  }
}

}  // namespace

std::vector<LabeledPoint> build_dodecagon(const ConstructionParams& params) {
  if (!(params.side_long > 0.0) || !(params.side_short > 0.0)) {
    throw Error(Errc::invalid_argument, "dodecagon side lengths must be positive");
  }
  const double turn_a = kPi - 11.0 * kPi / 12.0;
  const double turn_b = kPi - 2.0 * kPi / 3.0;
  std::vector<PolygonStep> steps;
  for (int i = 1; i <= 4; ++i) {
    steps.push_back({vid('a', i, 1), params.side_long, turn_a});
    steps.push_back({vid('a', i, 2), params.side_short, turn_b});
    steps.push_back({vid('b', i + 1), params.side_short, turn_a});
  }
  double closure = 0.0;
  const std::vector<Point> pts = walk(steps, &closure);
  if (!(closure <= 1e-9)) {
    std::ostringstream os;
    os << "dodecagon misses its start by " << closure;
    throw Error(Errc::closure_failure, os.str());
  }
  // Reorder so the list starts at b1 (the last corner walked).
  std::vector<LabeledPoint> out;
  out.push_back({steps.back().role, pts.back()});
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) out.push_back({steps[k].role, pts[k]});
  return out;
}

ConstructionResult build_net25(const AngleSolution& sol) {
  if (!(sol.alpha > kPi && sol.alpha < 13.0 * kPi / 12.0) || !(sol.beta > 0.0 && sol.beta < kPi / 2.0)) {
    throw Error(Errc::invalid_argument, "angle solution outside alpha in (pi, 13pi/12), beta in (0, pi/2)");
  }
  return build_net25(make_construction_params(sol));
}

ConstructionResult build_net25(const ConstructionParams& params) {
  PointMap pos;
  for (const LabeledPoint& lp : build_dodecagon(params)) pos[lp.role] = lp.position;

  pos["p"] = line_intersection(pos[vid('b', 1)], pos[vid('b', 3)], pos[vid('b', 2)], pos[vid('b', 4)]);

  for (int i = 1; i <= 4; ++i) {
    const Point a1 = pos[vid('a', i, 1)];
    const Point a2 = pos[vid('a', i, 2)];
    pos[vid('f', i)] = fermat_or_throw(a1, a2, pos["p"], vid('f', i));
    const Point mid = 0.5 * (a1 + a2);
    const double height = 0.5 * distance(a1, a2) * std::tan(params.beta);
    pos[vid('d', i)] = mid + height * outward_normal(a1, a2);
  }
  for (int i = 1; i <= 4; ++i) {
    pos[vid('c', i)] = line_intersection(pos[vid('a', i - 1, 2)], pos[vid('d', i)],
                                         pos[vid('a', i, 1)], pos[vid('d', i - 1)]);
  }
  for (int i = 1; i <= 4; ++i) {
    pos[vid('e', i)] =
        fermat_or_throw(pos[vid('c', i)], pos[vid('d', i)], pos[vid('d', i - 1)], vid('e', i));
  }

  std::vector<VertexSpec> vertices;
  std::map<std::string, std::string> landmarks;
  for (const auto& [id, _] : pos) {
    vertices.push_back({id, id[0] == 'd' ? VertexKind::boundary : VertexKind::interior});
    landmarks.emplace(id, id);
  }

  std::vector<Edge> edges;
  auto link = [&](const std::string& u, const std::string& v) { edges.push_back(make_edge(u, v)); };
  std::vector<std::string> cycle;
  for (int i = 1; i <= 4; ++i) {
    cycle.push_back(vid('b', i));
    cycle.push_back(vid('a', i, 1));
    cycle.push_back(vid('a', i, 2));
  }
  for (std::size_t k = 0; k < cycle.size(); ++k) link(cycle[k], cycle[(k + 1) % cycle.size()]);
  for (int i = 1; i <= 4; ++i) {
    link(vid('f', i), vid('a', i, 1));
    link(vid('f', i), vid('a', i, 2));
    link(vid('f', i), "p");
    link(vid('a', i, 1), vid('d', i));
    link(vid('a', i, 2), vid('d', i));
    for (const std::string& other : {vid('a', i - 1, 2), vid('a', i, 1), vid('d', i), vid('d', i - 1),
                                     vid('b', i), vid('e', i)}) {
      link(vid('c', i), other);
    }
    link(vid('e', i), vid('d', i));
    link(vid('e', i), vid('d', i - 1));
  }

  return ConstructionResult{EmbeddedNet(NetTopology(std::move(vertices), std::move(edges)), pos),
                            params, std::move(landmarks)};
}

namespace {

TopologyTemplate t3_template() {
  const ConstructionResult built = build_net25(solve_angles());
  return {built.net.topology(), built.net.position_map(), false};
}

// Octagon net with 16 balanced vertices. Labels follow the octagon figure:
// a_i on the axes, b_i on the diagonals, boundary c_i far out on the axes,
// d_i near-corner Fermat vertices, x_i where a_i c_(i+1) crosses a_(i+1) c_i.
TopologyTemplate t2_template() {
  auto id = [](char kind, int i) { return vid(kind, i); };
  const double outer = std::tan(76.0 * kPi / 180.0);
  PointMap pos;
  for (int i = 1; i <= 4; ++i) {
    const double axis = (i - 1) * kPi / 2.0;
    const double diag = axis + kPi / 4.0;
    pos[id('a', i)] = polar(1.0, axis);
    pos[id('b', i)] = polar(1.12, diag);
    pos[id('c', i)] = polar(outer, axis);
    pos[id('d', i)] = polar(1.12 + 0.07, diag);
  }
  for (int i = 1; i <= 4; ++i) {
    pos[id('x', i)] = line_intersection(pos[id('a', i)], pos[id('c', i + 1)], pos[id('a', i + 1)],
                                        pos[id('c', i)]);
  }
  std::vector<VertexSpec> vertices;
  for (const auto& [v, _] : pos) {
    vertices.push_back({v, v[0] == 'c' ? VertexKind::boundary : VertexKind::interior});
  }
  std::vector<Edge> edges;
  auto link = [&](const std::string& u, const std::string& v) { edges.push_back(make_edge(u, v)); };
  for (int i = 1; i <= 4; ++i) {
    link(id('a', i), id('b', i));
    link(id('b', i), id('a', i + 1));
    link(id('a', i), id('c', i));
    link(id('x', i), id('a', i));
    link(id('x', i), id('a', i + 1));
    link(id('x', i), id('c', i));
    link(id('x', i), id('c', i + 1));
    link(id('x', i), id('b', i));
    link(id('x', i), id('d', i));
    link(id('d', i), id('c', i));
    link(id('d', i), id('c', i + 1));
  }
  return {NetTopology(std::move(vertices), std::move(edges)), std::move(pos), false};
}

// Extrapolation of the T2/T3 pattern to a ring of 4n corners: each side carries
// a chain a_i_1 .. a_i_(n-1) joined to the boundary d_i, consecutive chain
// corners meet the centre through a Fermat vertex f_i_j, and c_i / e_i sit
// between neighbouring sides as in the 25-vertex net.
TopologyTemplate ring_template(int n) {
  const int chain = n - 1;
  auto a = [](int i, int j) { return "a" + std::to_string(cyc(i)) + "_" + std::to_string(j); };
  auto f = [](int i, int j) { return "f" + std::to_string(cyc(i)) + "_" + std::to_string(j); };

  // Seed polygon: unit sides, interior angle 2pi/3 at each b, equal angles at the a's.
  const double a_interior = ((4.0 * n - 2.0) * kPi - 4.0 * (2.0 * kPi / 3.0)) / (4.0 * chain);
  std::vector<PolygonStep> steps;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= chain; ++j) {
      const bool last = j == chain;
      steps.push_back({a(i, j), 1.0, kPi - (last ? 2.0 * kPi / 3.0 : a_interior)});
    }
    steps.push_back({vid('b', i + 1), 1.0, kPi - a_interior});
  }
  double closure = 0.0;
  const std::vector<Point> pts = walk(steps, &closure);
  PointMap pos;
  Point centre{};
  for (std::size_t k = 0; k < steps.size(); ++k) {
    pos[steps[k].role] = pts[k];
    centre += pts[k];
  }
  centre = centre / static_cast<double>(pts.size());
  pos["p"] = centre;

  double radius = 0.0;
  for (const Point& q : pts) radius = std::max(radius, distance(q, centre));
  for (int i = 1; i <= 4; ++i) {
    const Point first = pos[a(i, 1)], last = pos[a(i, chain)];
    const Point mid = 0.5 * (first + last);
    pos[vid('d', i)] = mid + 3.0 * radius * outward_normal(first, last);
    for (int j = 1; j + 1 <= chain; ++j) {
      const Point u = pos[a(i, j)], v = pos[a(i, j + 1)];
      try {
        pos[f(i, j)] = fermat_point(Triangle{{u, v, centre}});
      } catch (const Error&) {
        pos[f(i, j)] = (u + v + centre) / 3.0;
      }
    }
  }
  for (int i = 1; i <= 4; ++i) {
    const Point b = pos[vid('b', i)];
    try {
      pos[vid('c', i)] = line_intersection(pos[a(i - 1, chain)], pos[vid('d', i)], pos[a(i, 1)],
                                           pos[vid('d', i - 1)]);
    } catch (const Error&) {
      pos[vid('c', i)] = centre + 1.05 * (b - centre);
    }
    if (distance(pos[vid('c', i)], b) < 1e-3 * radius) pos[vid('c', i)] = centre + 1.05 * (b - centre);
  }
  for (int i = 1; i <= 4; ++i) {
    const Point c = pos[vid('c', i)], d1 = pos[vid('d', i)], d0 = pos[vid('d', i - 1)];
    try {
      pos[vid('e', i)] = fermat_point(Triangle{{c, d1, d0}});
    } catch (const Error&) {
      pos[vid('e', i)] = (c + d1 + d0) / 3.0;
    }
  }

  std::vector<VertexSpec> vertices;
  for (const auto& [v, _] : pos) {
    vertices.push_back({v, v[0] == 'd' ? VertexKind::boundary : VertexKind::interior});
  }
  std::vector<Edge> edges;
  auto link = [&](const std::string& u, const std::string& v) { edges.push_back(make_edge(u, v)); };
  for (std::size_t k = 0; k < steps.size(); ++k) {
    link(steps[k].role, steps[(k + 1) % steps.size()].role);
  }
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= chain; ++j) link(a(i, j), vid('d', i));
    for (int j = 1; j + 1 <= chain; ++j) {
      link(f(i, j), a(i, j));
      link(f(i, j), a(i, j + 1));
      link(f(i, j), "p");
    }
    for (const std::string& other :
         {a(i - 1, chain), a(i, 1), vid('d', i), vid('d', i - 1), vid('b', i), vid('e', i)}) {
      link(vid('c', i), other);
    }
    link(vid('e', i), vid('d', i));
    link(vid('e', i), vid('d', i - 1));
  }
  return {NetTopology(std::move(vertices), std::move(edges)), std::move(pos), true};
}

}  // namespace

TopologyTemplate topology_template(NetFamily family) {
  if (family.n < 2) throw Error(Errc::invalid_argument, "ring order n must be >= 2");
  switch (family.family) {
    case Family::t3_dodecagon:
      return t3_template();
    case Family::t2_octagon:
      return t2_template();
    case Family::ring_experimental:
      if (family.n < 4) {
        throw Error(Errc::unsupported_family, "ring_experimental needs n >= 4 (use t2 for n = 2, t3 for n = 3)");
      }
      return ring_template(family.n);
  }
  throw Error(Errc::unsupported_family, "unknown family");
}

}  // namespace geonet
