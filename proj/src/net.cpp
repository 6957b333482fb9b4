#include "geonet/net.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "geonet/error.hpp"
#include "geonet/kernels.hpp"

namespace geonet {

Edge make_edge(std::string_view u, std::string_view v) {
  if (u <= v) return {std::string(u), std::string(v)};
  return {std::string(v), std::string(u)};
}

NetTopology::NetTopology(std::vector<VertexSpec> vertices, std::vector<Edge> edges, DegreeRule rule)
    : vertices_(std::move(vertices)), rule_(rule) {
  if (vertices_.empty()) throw Error(Errc::invariant_violation, "net has no vertices");
  std::sort(vertices_.begin(), vertices_.end(),
            [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id.empty()) throw Error(Errc::invariant_violation, "empty vertex id");
    if (!index_.emplace(vertices_[i].id, i).second) {
      throw Error(Errc::invariant_violation, "duplicate vertex id '" + vertices_[i].id + "'");
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& raw : edges) {
    const auto iu = find(raw.a);
    const auto iv = find(raw.b);
    if (!iu || !iv) {
      throw Error(Errc::invariant_violation,
                  "edge " + raw.a + "-" + raw.b + " references an unknown vertex");
    }
    if (*iu == *iv) throw Error(Errc::invariant_violation, "self-loop at '" + raw.a + "'");
    const auto key = std::minmax(*iu, *iv);
    if (!seen.emplace(key.first, key.second).second) {
      const Edge e = make_edge(raw.a, raw.b);
      throw Error(Errc::invariant_violation, "duplicate edge " + e.a + "-" + e.b);
    }
  }
  edges_.reserve(seen.size());
  for (const auto& [u, v] : seen) edges_.push_back({u, v});

  adjacency_.resize(vertices_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    adjacency_[edges_[k].u].push_back({edges_[k].v, k});
    adjacency_[edges_[k].v].push_back({edges_[k].u, k});
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end(),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
  }

  std::vector<char> reached(vertices_.size(), 0);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  reached[0] = 1;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop();
    for (const Incidence& inc : adjacency_[v]) {
      if (!reached[inc.neighbor]) {
        reached[inc.neighbor] = 1;
        ++count;
        frontier.push(inc.neighbor);
      }
    }
  }
  if (count != vertices_.size()) {
    const auto it = std::find(reached.begin(), reached.end(), 0);
    throw Error(Errc::invariant_violation,
                "graph is disconnected ('" + vertices_[it - reached.begin()].id +
                    "' unreachable from '" + vertices_[0].id + "')");
  }

  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (is_boundary(v)) continue;
    interior_.push_back(v);
    if (rule_ == DegreeRule::geodesic && degree(v) < 3) {
      throw Error(Errc::invariant_violation, "interior vertex '" + vertices_[v].id +
                                                 "' has degree " + std::to_string(degree(v)) +
                                                 " (balanced vertices need degree >= 3)");
    }
  }
}

Edge NetTopology::edge(std::size_t e) const {
  return {vertices_[edges_[e].u].id, vertices_[edges_[e].v].id};
}

std::optional<std::size_t> NetTopology::find(std::string_view id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t NetTopology::index_of(std::string_view id) const {
  const auto found = find(id);
  if (!found) throw Error(Errc::unknown_vertex, "no vertex '" + std::string(id) + "'");
  return *found;
}

std::vector<std::size_t> NetTopology::boundary() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (is_boundary(v)) out.push_back(v);
  }
  return out;
}

EmbeddedNet::EmbeddedNet(std::shared_ptr<const NetTopology> topology, std::vector<Point> positions)
    : topology_(std::move(topology)), positions_(std::move(positions)) {
  validate();
}

EmbeddedNet::EmbeddedNet(NetTopology topology, const PointMap& positions)
    : topology_(std::make_shared<const NetTopology>(std::move(topology))) {
  positions_.reserve(topology_->vertex_count());
  for (const VertexSpec& v : topology_->vertices()) {
    const auto it = positions.find(v.id);
    if (it == positions.end()) {
      throw Error(Errc::invariant_violation, "vertex '" + v.id + "' has no position");
    }
    positions_.push_back(it->second);
  }
  validate();
}

PointMap EmbeddedNet::position_map() const {
  PointMap out;
  for (std::size_t v = 0; v < positions_.size(); ++v) out.emplace(topology_->id(v), positions_[v]);
  return out;
}

EmbeddedNet EmbeddedNet::with_positions(std::vector<Point> positions) const {
  return EmbeddedNet(topology_, std::move(positions));
}

double EmbeddedNet::degeneracy_eps() const {
  const double diag = bounds().diagonal();
  return diag > 0.0 ? kDegenerateEps * diag : kDegenerateEps;
}

void EmbeddedNet::validate() const {
  if (!topology_) throw Error(Errc::invariant_violation, "net without topology");
  if (positions_.size() != topology_->vertex_count()) {
    throw Error(Errc::invariant_violation, "expected " + std::to_string(topology_->vertex_count()) +
                                               " positions, got " +
                                               std::to_string(positions_.size()));
  }
  for (std::size_t v = 0; v < positions_.size(); ++v) {
    if (!is_finite(positions_[v])) {
      throw Error(Errc::invariant_violation,
                  "vertex '" + topology_->id(v) + "' has a non-finite position");
    }
  }
  const double eps = degeneracy_eps();
  for (const IndexEdge& e : topology_->edges()) {
    if (!(distance(positions_[e.u], positions_[e.v]) > eps)) {
      throw Error(Errc::degenerate_edge,
                  "edge " + topology_->id(e.u) + "-" + topology_->id(e.v) + " has zero length");
    }
  }
}

VertexImbalance imbalance(const EmbeddedNet& net, std::string_view id) {
  return imbalance(net, net.topology().index_of(id));
}

VertexImbalance imbalance(const EmbeddedNet& net, std::size_t v) {
  const NetTopology& topo = net.topology();
  const Point origin = net.position(v);
  const double eps = net.degeneracy_eps();
  VertexImbalance out;
  for (const Incidence& inc : topo.incident(v)) {
    const Point q = net.position(inc.neighbor);
    if (!(distance(origin, q) > eps)) {
      throw Error(Errc::degenerate_edge, "at vertex '" + topo.id(v) + "': edge to '" +
                                             topo.id(inc.neighbor) + "' has zero length");
    }
    out.vector += unit_toward(origin, q, eps).as_point();
  }
  out.norm = norm(out.vector);
  return out;
}

ImbalanceReport total_report(const EmbeddedNet& net, Backend backend) {
  const NetTopology& topo = net.topology();
  const auto& targets = topo.interior();
  std::vector<Point> sums(targets.size());
  const std::size_t bad =
      backend == Backend::openmp
          ? kernels::unit_sums_omp(topo, net.positions(), targets, sums, net.degeneracy_eps())
          : kernels::unit_sums_serial(topo, net.positions(), targets, sums, net.degeneracy_eps());
  if (bad != targets.size()) {
    throw Error(Errc::degenerate_edge,
                "at vertex '" + topo.id(targets[bad]) + "': incident edge has zero length");
  }
  ImbalanceReport report;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const VertexImbalance vi{sums[k], norm(sums[k])};
    report.total_loss += vi.norm;
    report.max_norm = std::max(report.max_norm, vi.norm);
    report.per_vertex.emplace(topo.id(targets[k]), vi);
  }
  return report;
}

double max_imbalance(const EmbeddedNet& net) {
  double worst = 0.0;
  for (std::size_t v : net.topology().interior()) worst = std::max(worst, imbalance(net, v).norm);
  return worst;
}

std::string OverlapFinding::describe() const {
  std::ostringstream os;
  os.precision(6);
  switch (kind) {
    case Kind::coincident_edges:
      os << "edges " << first.a << '-' << first.b << " and " << second.a << '-' << second.b
         << " coincide";
      break;
    case Kind::collinear_overlap:
      os << "edges " << first.a << '-' << first.b << " and " << second.a << '-' << second.b
         << " overlap along " << measure;
      break;
    case Kind::close_vertices:
      os << "vertices " << first.a << " and " << first.b << " are " << measure << " apart";
      break;
  }
  return os.str();
}

double default_overlap_tol(const EmbeddedNet& net) {
  const double diag = net.bounds().diagonal();
  return diag > 0.0 ? kOverlapTolFraction * diag : kOverlapTolFraction;
}

std::vector<OverlapFinding> detect_overlaps(const EmbeddedNet& net, double tol_overlap,
                                            Backend backend) {
  return backend == Backend::openmp ? kernels::overlap_scan_omp(net, tol_overlap)
                                    : kernels::overlap_scan_serial(net, tol_overlap);
}

}  // namespace geonet
