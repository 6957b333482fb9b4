#pragma once

// Net data model: combinatorial topology, planar embedding, imbalance and
// edge-overlap detection.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geonet/geom.hpp"

namespace geonet {

/// Default threshold for "balanced" verdicts on imbalance norms.
inline constexpr double kBalanceTol = 1e-9;
/// Default overlap tolerance as a fraction of the bounding-box diagonal.
inline constexpr double kOverlapTolFraction = 1e-6;

enum class VertexKind { boundary, interior };

struct VertexSpec {
  std::string id;
  VertexKind kind = VertexKind::interior;
};

/// Unordered edge stored canonically with a < b.
struct Edge {
  std::string a;
  std::string b;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};
Edge make_edge(std::string_view u, std::string_view v);

/// geodesic: interior vertices need degree >= 3 (candidate nets).
/// permissive: lower-degree interior vertices allowed (subnets, fixtures).
enum class DegreeRule { geodesic, permissive };

struct Incidence {
  std::size_t neighbor;
  std::size_t edge;
};

struct IndexEdge {
  std::size_t u;
  std::size_t v;
};

/// Immutable combinatorial graph. Vertices are stored in ascending id order, so
/// vertex indices follow id order; edges are sorted by (u, v) with u < v.
class NetTopology {
 public:
  /// Throws Errc::invariant_violation describing the first broken invariant.
  NetTopology(std::vector<VertexSpec> vertices, std::vector<Edge> edges,
              DegreeRule rule = DegreeRule::geodesic);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<VertexSpec>& vertices() const { return vertices_; }
  const std::string& id(std::size_t v) const { return vertices_[v].id; }
  bool is_boundary(std::size_t v) const { return vertices_[v].kind == VertexKind::boundary; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  std::span<const Incidence> incident(std::size_t v) const { return adjacency_[v]; }

  const std::vector<IndexEdge>& edges() const { return edges_; }
  Edge edge(std::size_t e) const;

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws Errc::unknown_vertex.
  std::size_t index_of(std::string_view id) const;

  /// Interior vertex indices in ascending id order.
  const std::vector<std::size_t>& interior() const { return interior_; }
  std::vector<std::size_t> boundary() const;

  DegreeRule degree_rule() const { return rule_; }

 private:
  std::vector<VertexSpec> vertices_;
  std::vector<IndexEdge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<std::size_t> interior_;
  std::map<std::string, std::size_t, std::less<>> index_;
  DegreeRule rule_;
};

/// A topology together with a position for every vertex. Immutable once built;
/// copies share the topology.
class EmbeddedNet {
 public:
  /// Positions are indexed like topology->vertices().
  EmbeddedNet(std::shared_ptr<const NetTopology> topology, std::vector<Point> positions);
  EmbeddedNet(NetTopology topology, const PointMap& positions);

  const NetTopology& topology() const { return *topology_; }
  const std::shared_ptr<const NetTopology>& shared_topology() const { return topology_; }
  std::span<const Point> positions() const { return positions_; }
  Point position(std::size_t v) const { return positions_[v]; }
  Point position(std::string_view id) const { return positions_[topology_->index_of(id)]; }
  PointMap position_map() const;

  /// Same topology, new positions (validated).
  EmbeddedNet with_positions(std::vector<Point> positions) const;

  BoundingBox bounds() const { return bounding_box(positions_); }
  /// 1e-12 times the bounding-box diagonal, or 1e-12 for a point-sized net.
  double degeneracy_eps() const;

 private:
  void validate() const;

  std::shared_ptr<const NetTopology> topology_;
  std::vector<Point> positions_;
};

struct VertexImbalance {
  Point vector{};
  double norm = 0.0;
};

struct ImbalanceReport {
  std::map<std::string, VertexImbalance> per_vertex;
  double total_loss = 0.0;
  double max_norm = 0.0;
};

enum class Backend { serial, openmp };

/// Sum of the unit vectors from v toward each neighbour, and its norm.
/// Throws Errc::unknown_vertex or Errc::degenerate_edge.
VertexImbalance imbalance(const EmbeddedNet& net, std::string_view id);
VertexImbalance imbalance(const EmbeddedNet& net, std::size_t v);

/// Imbalance over all interior vertices; boundary vertices are excluded.
/// Both backends produce bit-identical reports.
ImbalanceReport total_report(const EmbeddedNet& net, Backend backend = Backend::openmp);

/// Largest imbalance norm over interior vertices (0 when there are none).
double max_imbalance(const EmbeddedNet& net);

struct OverlapFinding {
  enum class Kind { coincident_edges, collinear_overlap, close_vertices };
  Kind kind;
  Edge first;   // edges for edge findings; {id, id} pair of vertices otherwise
  Edge second;
  double measure = 0.0;  // overlap length or vertex separation

  std::string describe() const;
};

double default_overlap_tol(const EmbeddedNet& net);

/// Edge pairs that coincide or overlap collinearly along a positive length, and
/// distinct vertices closer than tol_overlap. Empty result means every edge has weight one.
std::vector<OverlapFinding> detect_overlaps(const EmbeddedNet& net, double tol_overlap,
                                            Backend backend = Backend::openmp);

}  // namespace geonet
