#include <algorithm>
#include <array>
#include <deque>

#include "geonet/error.hpp"
#include "geonet/verify.hpp"

namespace geonet {

SubnetConstraints::SubnetConstraints(const EmbeddedNet& net, double subset_tol)
    : topology_(net.shared_topology()), allowed_(net.topology().vertex_count()) {
  const NetTopology& topo = *topology_;
  for (std::size_t v : topo.interior()) {
    if (topo.degree(v) > kMaxSubsetDirections) {
      throw Error(Errc::invalid_argument,
                  "vertex '" + topo.id(v) + "' has degree above 16; subset tables would be too large");
    }
    std::vector<UnitVector> dirs;
    for (const Incidence& inc : topo.incident(v)) {
      dirs.push_back(unit_toward(net.position(v), net.position(inc.neighbor)));
    }
    allowed_[v] = balanced_subsets(dirs, subset_tol);
  }
}

bool SubnetConstraints::propagate(Assignment& a, std::span<const std::size_t> start) const {
  const NetTopology& topo = *topology_;
  std::deque<std::size_t> queue;
  std::vector<char> queued(topo.vertex_count(), 0);
  auto push = [&](std::size_t v) {
    if (!queued[v] && !topo.is_boundary(v)) {
      queued[v] = 1;
      queue.push_back(v);
    }
  };
  if (start.empty()) {
    for (std::size_t v : topo.interior()) push(v);
  } else {
    for (std::size_t v : start) push(v);
  }

  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    queued[v] = 0;
    const auto inc = topo.incident(v);
    SubsetMask ones = 0, zeros = 0;
    for (std::size_t k = 0; k < inc.size(); ++k) {
      const Value val = a[inc[k].edge];
      if (val == Value::included) ones |= SubsetMask{1} << k;
      if (val == Value::excluded) zeros |= SubsetMask{1} << k;
    }
    SubsetMask all = ~SubsetMask{0}, any = 0;
    bool consistent = false;
    for (SubsetMask m : allowed_[v]) {
      if ((m & ones) != ones || (m & zeros) != 0) continue;
      consistent = true;
      all &= m;
      any |= m;
    }
    if (!consistent) return false;
    for (std::size_t k = 0; k < inc.size(); ++k) {
      const SubsetMask bit = SubsetMask{1} << k;
      if ((ones | zeros) & bit) continue;
      if (all & bit) {
        a[inc[k].edge] = Value::included;
      } else if (!(any & bit)) {
        a[inc[k].edge] = Value::excluded;
      } else {
        continue;
      }
      push(inc[k].neighbor);
    }
  }
  return true;
}

namespace {

using Value = SubnetConstraints::Value;
using Assignment = SubnetConstraints::Assignment;

class Searcher {
 public:
  Searcher(const SubnetConstraints& c, std::uint64_t limit) : c_(c), limit_(limit) {}

  std::optional<Assignment> run(std::size_t cap) {
    cap_ = cap;
    Assignment a = c_.unassigned();
    if (!c_.propagate(a)) return std::nullopt;
    std::optional<Assignment> found;
    dfs(a, found);
    return found;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool dfs(const Assignment& a, std::optional<Assignment>& found) {
    if (++nodes_ > limit_) {
      throw Error(Errc::search_budget_exceeded,
                  "subnet search exceeded " + std::to_string(limit_) + " nodes");
    }
    std::size_t ones = 0;
    std::optional<std::size_t> next;
    for (std::size_t e = 0; e < a.size(); ++e) {
      if (a[e] == Value::included) ++ones;
      if (a[e] == Value::unknown && !next) next = e;
    }
    if (ones > cap_) return false;
    if (!next) {
      if (ones > 0 && ones < a.size()) {
        found = a;
        return true;
      }
      return false;
    }
    const IndexEdge& edge = c_.topology().edges()[*next];
    const std::array<std::size_t, 2> ends{edge.u, edge.v};
    for (Value val : {Value::included, Value::excluded}) {
      Assignment b = a;
      b[*next] = val;
      if (c_.propagate(b, ends) && dfs(b, found)) return true;
    }
    return false;
  }

  const SubnetConstraints& c_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  std::size_t cap_ = 0;
};

// Connected component of the lowest included edge, with its unbalanced vertices.
Subnet extract_witness(const EmbeddedNet& net, const Assignment& a, double tol) {
  const NetTopology& topo = net.topology();
  const auto first = static_cast<std::size_t>(
      std::find(a.begin(), a.end(), Value::included) - a.begin());
  std::vector<char> seen(topo.vertex_count(), 0);
  std::vector<std::size_t> stack{topo.edges()[first].u};
  seen[stack.back()] = 1;
  std::vector<std::size_t> verts;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    verts.push_back(v);
    for (const Incidence& inc : topo.incident(v)) {
      if (a[inc.edge] == Value::included && !seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        stack.push_back(inc.neighbor);
      }
    }
  }
  std::sort(verts.begin(), verts.end());

  Subnet w;
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (a[e] == Value::included && seen[topo.edges()[e].u]) w.edges.push_back(topo.edge(e));
  }
  std::sort(w.edges.begin(), w.edges.end());
  for (std::size_t v : verts) {
    w.vertices.push_back(topo.id(v));
    if (!topo.is_boundary(v)) continue;
    Point s{};
    for (const Incidence& inc : topo.incident(v)) {
      if (a[inc.edge] == Value::included) s += unit_toward(net.position(v), net.position(inc.neighbor)).as_point();
    }
    if (norm(s) > tol) w.boundary.push_back(topo.id(v));
  }
  return w;
}

}  // namespace

EmbeddedNet witness_net(const EmbeddedNet& parent, const Subnet& witness) {
  std::vector<VertexSpec> specs;
  PointMap pos;
  for (const std::string& id : witness.vertices) {
    const bool b = std::binary_search(witness.boundary.begin(), witness.boundary.end(), id);
    specs.push_back({id, b ? VertexKind::boundary : VertexKind::interior});
    pos[id] = parent.position(id);
  }
  return EmbeddedNet(NetTopology(std::move(specs), witness.edges, DegreeRule::permissive), pos);
}

bool witness_reverifies(const EmbeddedNet& parent, const Subnet& witness, double tol) {
  if (witness.edges.empty() || witness.edges.size() >= parent.topology().edge_count()) return false;
  const NetTopology& ptopo = parent.topology();
  for (const std::string& id : witness.boundary) {
    if (!ptopo.is_boundary(ptopo.index_of(id))) return false;
  }
  for (const Edge& e : witness.edges) {
    const auto u = ptopo.find(e.a), v = ptopo.find(e.b);
    if (!u || !v) return false;
    const auto inc = ptopo.incident(*u);
    if (std::none_of(inc.begin(), inc.end(), [&](const Incidence& i) { return i.neighbor == *v; })) {
      return false;
    }
  }
  const EmbeddedNet sub = witness_net(parent, witness);
  const VerificationReport rep = verify_geodesic_net(sub, tol);
  return rep.balance_pass && rep.overlap_pass;
}

IrreducibilityResult is_irreducible(const EmbeddedNet& net, const IrreducibilityOptions& options) {
  const SubnetConstraints constraints(net, options.subset_tol);
  Searcher search(constraints, options.node_limit);
  const std::size_t edges = net.topology().edge_count();

  std::optional<Assignment> found;
  if (options.minimal) {
    for (std::size_t cap = 1; cap < edges && !found; ++cap) found = search.run(cap);
  } else {
    found = search.run(edges);
  }

  IrreducibilityResult out;
  out.nodes = search.nodes();
  if (!found) {
    out.verdict = Irreducibility::yes;
    return out;
  }
  Subnet w = extract_witness(net, *found, options.subset_tol);
  // Slack for rounding between the subset tables and the standalone imbalance.
  if (!witness_reverifies(net, w, options.subset_tol + 1e-12)) {
    throw Error(Errc::invariant_violation, "subnet witness failed re-verification");
  }
  out.verdict = Irreducibility::no;
  out.witness = std::move(w);
  return out;
}

}  // namespace geonet
