#include "geonet/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "overlap_pair.hpp"

namespace geonet::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::size_t unit_sums_omp(const NetTopology& topo, std::span<const Point> pos,
                          std::span<const std::size_t> targets, std::span<Point> out, double eps) {
  const auto n = static_cast<std::ptrdiff_t>(targets.size());
  std::ptrdiff_t first_bad = n;
  // Same per-vertex summation order as the serial kernel, so results match bitwise.
#pragma omp parallel for schedule(static) reduction(min : first_bad) \
    if (targets.size() >= kParallelThreshold)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const std::size_t v = targets[k];
    const Point origin = pos[v];
    Point sum{};
    bool ok = true;
    for (const Incidence& inc : topo.incident(v)) {
      const Point d = pos[inc.neighbor] - origin;
      const double len = norm(d);
      if (!(len > eps)) {
        ok = false;
        break;
      }
      sum += d / len;
    }
    if (ok) {
      out[k] = sum;
    } else {
      first_bad = std::min(first_bad, k);
    }
  }
  return static_cast<std::size_t>(first_bad);
}

std::vector<OverlapFinding> overlap_scan_omp(const EmbeddedNet& net, double tol) {
  const auto ne = static_cast<std::ptrdiff_t>(net.topology().edge_count());
  const auto nv = static_cast<std::ptrdiff_t>(net.topology().vertex_count());
  std::vector<std::vector<OverlapFinding>> edge_rows(ne);
  std::vector<std::vector<OverlapFinding>> vertex_rows(nv);

#pragma omp parallel if (static_cast<std::size_t>(ne) >= kParallelThreshold)
  {
#pragma omp for schedule(dynamic, 8) nowait
    for (std::ptrdiff_t i = 0; i < ne; ++i) {
      for (std::ptrdiff_t j = i + 1; j < ne; ++j) {
        if (auto f = detail::edge_pair_finding(net, i, j, tol)) edge_rows[i].push_back(std::move(*f));
      }
    }
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t a = 0; a < nv; ++a) {
      for (std::ptrdiff_t b = a + 1; b < nv; ++b) {
        if (auto f = detail::vertex_pair_finding(net, a, b, tol)) vertex_rows[a].push_back(std::move(*f));
      }
    }
  }

  std::vector<OverlapFinding> found;
  for (auto& row : edge_rows) std::move(row.begin(), row.end(), std::back_inserter(found));
  for (auto& row : vertex_rows) std::move(row.begin(), row.end(), std::back_inserter(found));
  return found;
}

}  // namespace geonet::kernels
