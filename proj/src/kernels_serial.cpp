#include "geonet/kernels.hpp"

#include "overlap_pair.hpp"

namespace geonet::kernels {

std::size_t unit_sums_serial(const NetTopology& topo, std::span<const Point> pos,
                             std::span<const std::size_t> targets, std::span<Point> out,
                             double eps) {
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const std::size_t v = targets[k];
    const Point origin = pos[v];
    Point sum{};
    for (const Incidence& inc : topo.incident(v)) {
      const Point d = pos[inc.neighbor] - origin;
      const double len = norm(d);
      if (!(len > eps)) return k;
      sum += d / len;
    }
    out[k] = sum;
  }
  return targets.size();
}

std::vector<OverlapFinding> overlap_scan_serial(const EmbeddedNet& net, double tol) {
  std::vector<OverlapFinding> found;
  const std::size_t ne = net.topology().edge_count();
  for (std::size_t i = 0; i < ne; ++i) {
    for (std::size_t j = i + 1; j < ne; ++j) {
      if (auto f = detail::edge_pair_finding(net, i, j, tol)) found.push_back(std::move(*f));
    }
  }
  const std::size_t nv = net.topology().vertex_count();
  for (std::size_t a = 0; a < nv; ++a) {
    for (std::size_t b = a + 1; b < nv; ++b) {
      if (auto f = detail::vertex_pair_finding(net, a, b, tol)) found.push_back(std::move(*f));
    }
  }
  return found;
}

}  // namespace geonet::kernels
