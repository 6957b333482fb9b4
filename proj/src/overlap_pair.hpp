#pragma once

#include <algorithm>
#include <optional>

#include "geonet/geom.hpp"
#include "geonet/net.hpp"

namespace geonet::detail {

// Length along base (p1, p2) shared with the segment (q1, q2) when both q's lie
// within tol of the base line; nullopt otherwise.
inline std::optional<double> collinear_overlap(Point p1, Point p2, Point q1, Point q2, double tol) {
  if (distance_to_line(p1, p2, q1) > tol || distance_to_line(p1, p2, q2) > tol) return std::nullopt;
  const double len = distance(p1, p2);
  const Point u = (p2 - p1) / len;
  const double s1 = dot(q1 - p1, u);
  const double s2 = dot(q2 - p1, u);
  return std::min(std::max(s1, s2), len) - std::max(std::min(s1, s2), 0.0);
}

inline std::optional<OverlapFinding> edge_pair_finding(const EmbeddedNet& net, std::size_t i,
                                                       std::size_t j, double tol) {
  const NetTopology& topo = net.topology();
  const IndexEdge ei = topo.edges()[i];
  const IndexEdge ej = topo.edges()[j];
  const Point p1 = net.position(ei.u), p2 = net.position(ei.v);
  const Point q1 = net.position(ej.u), q2 = net.position(ej.v);

  const double straight = std::max(distance(p1, q1), distance(p2, q2));
  const double swapped = std::max(distance(p1, q2), distance(p2, q1));
  const double dev = std::min(straight, swapped);
  if (dev <= tol) {
    return OverlapFinding{OverlapFinding::Kind::coincident_edges, topo.edge(i), topo.edge(j), dev};
  }
  double shared = 0.0;
  if (auto s = collinear_overlap(p1, p2, q1, q2, tol)) shared = std::max(shared, *s);
  if (auto s = collinear_overlap(q1, q2, p1, p2, tol)) shared = std::max(shared, *s);
  if (shared > tol) {
    return OverlapFinding{OverlapFinding::Kind::collinear_overlap, topo.edge(i), topo.edge(j),
                          shared};
  }
  return std::nullopt;
}

inline std::optional<OverlapFinding> vertex_pair_finding(const EmbeddedNet& net, std::size_t a,
                                                         std::size_t b, double tol) {
  const double d = distance(net.position(a), net.position(b));
  if (d > tol) return std::nullopt;
  const NetTopology& topo = net.topology();
  return OverlapFinding{OverlapFinding::Kind::close_vertices, {topo.id(a), topo.id(b)}, {}, d};
}

}  // namespace geonet::detail
