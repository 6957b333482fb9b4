#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an OpenMP
// variant; the two must agree bit for bit, which the kernel tests check.

#include <cstddef>
#include <span>
#include <vector>

#include "geonet/geom.hpp"
#include "geonet/net.hpp"

namespace geonet::kernels {

/// Below this many work items the OpenMP variants run on one thread.
inline constexpr std::size_t kParallelThreshold = 256;

/// out[k] = sum of unit vectors from pos[targets[k]] toward its neighbours.
/// Returns the position in `targets` of the first vertex with an incident edge
/// no longer than eps, or targets.size() when every edge is valid.
std::size_t unit_sums_serial(const NetTopology& topo, std::span<const Point> pos,
                             std::span<const std::size_t> targets, std::span<Point> out,
                             double eps);
std::size_t unit_sums_omp(const NetTopology& topo, std::span<const Point> pos,
                          std::span<const std::size_t> targets, std::span<Point> out, double eps);

/// Raw pairwise overlap findings (i < j over edge indices, then vertex pairs),
/// in a fixed order independent of thread count.
std::vector<OverlapFinding> overlap_scan_serial(const EmbeddedNet& net, double tol);
std::vector<OverlapFinding> overlap_scan_omp(const EmbeddedNet& net, double tol);

/// Threads the OpenMP variants would use (1 when built without OpenMP).
int max_threads();

}  // namespace geonet::kernels
