#pragma once

// Exact construction of the 25-balanced-vertex net and topology templates for
// the relaxer.
//
// Labels of the 25-vertex net (indices i = 1..4 taken cyclically):
//   b_i, a_i1, a_i2   dodecagon corners, traversed b1 a11 a12 b2 a21 ... a42
//   p                 dodecagon centre
//   f_i               Fermat point of a_i1 a_i2 p
//   d_i               boundary apex of the isosceles triangle on a_i1 a_i2 (base angles beta)
//   c_i               intersection of a_(i-1)2 d_i with a_i1 d_(i-1)
//   e_i               Fermat point of c_i d_i d_(i-1)
// Vertex ids are the labels written without separators: "a32", "c4", "p".

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geonet/angles.hpp"
#include "geonet/geom.hpp"
#include "geonet/net.hpp"

namespace geonet {

enum class Family { t3_dodecagon, t2_octagon, ring_experimental };

struct NetFamily {
  Family family = Family::t3_dodecagon;
  int n = 3;
};

struct LabeledPoint {
  std::string role;
  Point position;
};

struct ConstructionResult {
  EmbeddedNet net;
  ConstructionParams params;
  std::map<std::string, std::string> landmarks;  // role -> vertex id
};

struct TopologyTemplate {
  NetTopology topology;
  PointMap initial_positions;
  bool experimental = false;

  EmbeddedNet seed() const { return EmbeddedNet(topology, initial_positions); }
};

/// The 12 dodecagon corners in order b1, a11, a12, b2, ..., a42, placed with
/// a11 at the origin, a12 on +x and the interior in the upper half-plane.
/// Throws Errc::closure_failure if the traversal does not close within 1e-9.
std::vector<LabeledPoint> build_dodecagon(const ConstructionParams& params);

/// Throws Errc::invalid_argument for an out-of-range solution, and propagates
/// no_fermat_point / parallel_lines / closure_failure from the construction.
ConstructionResult build_net25(const AngleSolution& sol);
ConstructionResult build_net25(const ConstructionParams& params);

/// Throws Errc::unsupported_family (ring_experimental needs n >= 4) or
/// Errc::invalid_argument for n < 2.
TopologyTemplate topology_template(NetFamily family);

/// Vertex id helpers for the 25-vertex net; index is reduced cyclically into 1..4.
std::string vid(char kind, int i);
std::string vid(char kind, int i, int j);
int cyc(int i);

}  // namespace geonet
