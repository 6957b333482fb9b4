#pragma once

// Shared fixtures for the test binaries.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "geonet/builder.hpp"
#include "geonet/geom.hpp"
#include "geonet/net.hpp"

namespace geonet::testing {

// Vertex coordinates of the 25-vertex net as drawn in the reference figure.
inline PointMap figure_coordinates() {
  return {
      {"a11", {0, 0}},
      {"a12", {0.753334985772626, 0}},
      {"b2", {1.7192608120616921, 0.2588190451025174}},
      {"a21", {1.9780798571642149, 1.2247448713915854}},
      {"a22", {1.9780798571642162, 1.9780798571642115}},
      {"b3", {1.7192608120616968, 2.9440056834532804}},
      {"a31", {0.7533349857726285, 3.2028247285558025}},
      {"a32", {0, 3.2028247285558034}},
      {"b4", {-0.9659258262890664, 2.9440056834532835}},
      {"a41", {-1.224744871391588, 1.9780798571642153}},
      {"a42", {-1.2247448713915885, 1.2247448713915894}},
      {"b1", {-0.9659258262890682, 0.258819045102521}},
      {"p", {0.3766674928863143, 1.6014123642779008}},
      {"f1", {0.376667492886313, 0.21746907841289428}},
      {"f2", {1.7606107787513212, 1.6014123642778983}},
      {"f3", {0.37666749288631535, 2.9853556501429086}},
      {"f4", {-1.0072757929786942, 1.6014123642779021}},
      {"d1", {0.376667492886313, -5.291460857506463}},
      {"d2", {7.269540714670677, 1.6014123642778986}},
      {"d3", {0.3766674928863153, 8.494285586062267}},
      {"d4", {-6.516205728898051, 1.6014123642779023}},
      {"c1", {-0.9831319305486067, 0.24161294084298168}},
      {"c2", {1.7364669163212336, 0.24161294084298132}},
      {"c3", {1.7364669163212336, 2.961211787712821}},
      {"c4", {-0.9831319305486066, 2.9612117877128212}},
      {"e1", {-1.0799680129622857, 0.14477685842930255}},
      {"e2", {1.8333029987349128, 0.14477685842930033}},
      {"e3", {1.8333029987349136, 3.0580478701265}},
      {"e4", {-1.079968012962285, 3.0580478701265017}},
  };
}

inline const ConstructionResult& net25() {
  static const ConstructionResult built = build_net25(solve_angles());
  return built;
}

// Four square corners joined to a centre vertex.
inline EmbeddedNet x_net(Point centre = {0, 0}) {
  std::vector<VertexSpec> v{{"o", VertexKind::interior},
                            {"s1", VertexKind::boundary},
                            {"s2", VertexKind::boundary},
                            {"s3", VertexKind::boundary},
                            {"s4", VertexKind::boundary}};
  std::vector<Edge> e{make_edge("o", "s1"), make_edge("o", "s2"), make_edge("o", "s3"), make_edge("o", "s4")};
  PointMap pos{{"o", centre}, {"s1", {1, 1}}, {"s2", {-1, 1}}, {"s3", {-1, -1}}, {"s4", {1, -1}}};
  return EmbeddedNet(NetTopology(std::move(v), std::move(e)), pos);
}

// The two full Steiner trees on the corners of the unit square, sharing the
// four boundary vertices; every Steiner point is a Fermat point.
inline EmbeddedNet two_tree_net() {
  const double t = 0.5 / std::sqrt(3.0);  // offset of the Steiner points from the midline
  std::vector<VertexSpec> v{{"s1", VertexKind::boundary}, {"s2", VertexKind::boundary},
                            {"s3", VertexKind::boundary}, {"s4", VertexKind::boundary},
                            {"h1", VertexKind::interior}, {"h2", VertexKind::interior},
                            {"v1", VertexKind::interior}, {"v2", VertexKind::interior}};
  PointMap pos{{"s1", {0, 0}}, {"s2", {1, 0}}, {"s3", {1, 1}}, {"s4", {0, 1}},
               {"h1", {t, 0.5}}, {"h2", {1 - t, 0.5}}, {"v1", {0.5, t}}, {"v2", {0.5, 1 - t}}};
  std::vector<Edge> e{make_edge("h1", "s1"), make_edge("h1", "s4"), make_edge("h1", "h2"),
                      make_edge("h2", "s2"), make_edge("h2", "s3"), make_edge("v1", "s1"),
                      make_edge("v1", "s2"), make_edge("v1", "v2"), make_edge("v2", "s3"),
                      make_edge("v2", "s4")};
  return EmbeddedNet(NetTopology(std::move(v), std::move(e)), pos);
}

// One interior vertex joined to the corners of the unit equilateral triangle.
inline EmbeddedNet tripod(Point centre) {
  std::vector<VertexSpec> v{{"v", VertexKind::interior},
                            {"t1", VertexKind::boundary},
                            {"t2", VertexKind::boundary},
                            {"t3", VertexKind::boundary}};
  std::vector<Edge> e{make_edge("v", "t1"), make_edge("v", "t2"), make_edge("v", "t3")};
  PointMap pos{{"v", centre}, {"t1", {0, 0}}, {"t2", {1, 0}}, {"t3", {0.5, std::sqrt(3.0) / 2.0}}};
  return EmbeddedNet(NetTopology(std::move(v), std::move(e)), pos);
}

// side x side grid with the rim pinned and interior positions perturbed.
inline EmbeddedNet grid_net(int side, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-0.2, 0.2);
  std::vector<VertexSpec> verts;
  std::vector<Edge> edges;
  PointMap pos;
  auto name = [](int i, int j) { return "g" + std::to_string(i) + "_" + std::to_string(j); };
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const bool rim = i == 0 || j == 0 || i == side - 1 || j == side - 1;
      verts.push_back({name(i, j), rim ? VertexKind::boundary : VertexKind::interior});
      pos[name(i, j)] = rim ? Point{double(j), double(i)} : Point{j + noise(rng), i + noise(rng)};
      if (i + 1 < side) edges.push_back(make_edge(name(i, j), name(i + 1, j)));
      if (j + 1 < side) edges.push_back(make_edge(name(i, j), name(i, j + 1)));
    }
  }
  return EmbeddedNet(NetTopology(std::move(verts), std::move(edges)), pos);
}

// Random net: interior vertices in [-1, 1]^2 on a cycle with chords, each tied
// to a boundary vertex on a circle of radius 3.
inline EmbeddedNet random_net(std::uint64_t seed, int interior = 6, int boundary = 5) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<VertexSpec> verts;
  PointMap pos;
  std::vector<std::string> in, out;
  for (int k = 0; k < interior; ++k) {
    in.push_back("i" + std::to_string(k));
    verts.push_back({in.back(), VertexKind::interior});
    pos[in.back()] = {u(rng), u(rng)};
  }
  for (int k = 0; k < boundary; ++k) {
    out.push_back("z" + std::to_string(k));
    verts.push_back({out.back(), VertexKind::boundary});
    pos[out.back()] = polar(3.0, kTwoPi * k / boundary + 0.3 * u(rng));
  }
  std::vector<Edge> edges;
  for (int k = 0; k < interior; ++k) {
    edges.push_back(make_edge(in[k], in[(k + 1) % interior]));
    edges.push_back(make_edge(in[k], out[k % boundary]));
    if (interior > 3 && (k + 2) % interior != (k + interior - 1) % interior && k < (k + 2) % interior) {
      edges.push_back(make_edge(in[k], in[(k + 2) % interior]));
    }
  }
  for (int k = interior; k < boundary; ++k) edges.push_back(make_edge(in[k % interior], out[k]));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return EmbeddedNet(NetTopology(std::move(verts), std::move(edges), DegreeRule::permissive), pos);
}

}  // namespace geonet::testing
