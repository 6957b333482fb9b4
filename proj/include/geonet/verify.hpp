#pragma once

// Geodesic-net verification: balance, overlaps, degrees, the lemma battery of
// the 25-vertex construction, and irreducibility search with witnesses.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geonet/angles.hpp"
#include "geonet/builder.hpp"
#include "geonet/net.hpp"

namespace geonet {

/// Bit k set means dirs[k] (or the k-th incident edge) is retained.
using SubsetMask = std::uint32_t;

inline constexpr double kSubsetTol = 1e-7;
inline constexpr std::uint64_t kDefaultNodeLimit = 100'000'000;
inline constexpr std::size_t kMaxSubsetDirections = 16;

/// Every subset whose unit vectors sum to norm <= tol, as ascending masks.
/// Singletons never qualify; the empty set is always first.
/// Throws Errc::invalid_argument unless 1 <= dirs.size() <= 16.
std::vector<SubsetMask> balanced_subsets(std::span<const UnitVector> dirs, double tol = kSubsetTol);
/// Reference enumeration: plain in-order summation for every mask.
std::vector<SubsetMask> balanced_subsets_naive(std::span<const UnitVector> dirs, double tol = kSubsetTol);

std::vector<std::size_t> mask_indices(SubsetMask mask);

struct LemmaCheck {
  std::string name;
  bool pass = false;
  double max_deviation = 0.0;  // 0 for satisfied inequalities, else the violation
};

struct Subnet {
  std::vector<Edge> edges;            // sorted
  std::vector<std::string> vertices;  // sorted
  std::vector<std::string> boundary;  // vertices left unbalanced, all boundary in the parent
};

enum class Irreducibility { yes, no, not_checked };
std::string_view to_string(Irreducibility verdict);

struct VertexNorm {
  std::string id;
  double norm = 0.0;
};

struct VerificationReport {
  bool balance_pass = false;
  std::vector<VertexNorm> unbalanced;
  bool overlap_pass = false;
  std::vector<OverlapFinding> overlaps;
  bool degree_pass = false;
  std::vector<std::string> low_degree;
  std::vector<LemmaCheck> lemma_checks;
  Irreducibility irreducible = Irreducibility::not_checked;
  std::optional<Subnet> witness;

  /// Everything checked passed; an irreducibility verdict of "no" counts as failure.
  bool passed() const;
};

/// Balance (each interior imbalance <= tol), overlaps and interior degree >= 3.
/// Never throws for a valid net; failures are report entries.
VerificationReport verify_geodesic_net(const EmbeddedNet& net, double tol = kBalanceTol);

/// Per-vertex allowed edge subsets and unit propagation over edge inclusion
/// variables. A subnet H corresponds to an assignment where every interior
/// vertex of the parent keeps one of its allowed subsets; parent boundary
/// vertices are unconstrained.
class SubnetConstraints {
 public:
  enum class Value : std::int8_t { unknown = -1, excluded = 0, included = 1 };
  using Assignment = std::vector<Value>;

  /// Throws Errc::invalid_argument for an interior vertex of degree > 16.
  SubnetConstraints(const EmbeddedNet& net, double subset_tol = kSubsetTol);

  const NetTopology& topology() const { return *topology_; }
  std::size_t edge_count() const { return topology_->edge_count(); }
  /// Allowed masks over incident(v), in adjacency order. Empty for boundary vertices.
  const std::vector<SubsetMask>& allowed(std::size_t v) const { return allowed_[v]; }

  Assignment unassigned() const { return Assignment(edge_count(), Value::unknown); }

  /// Forces every edge value implied by the vertex tables, starting from the
  /// given vertices (all vertices when empty). Returns false on a conflict.
  bool propagate(Assignment& a, std::span<const std::size_t> start = {}) const;

 private:
  std::shared_ptr<const NetTopology> topology_;
  std::vector<std::vector<SubsetMask>> allowed_;
};

struct IrreducibilityOptions {
  double subset_tol = kSubsetTol;
  std::uint64_t node_limit = kDefaultNodeLimit;
  bool minimal = false;  // iterative deepening on the witness edge count
};

struct IrreducibilityResult {
  Irreducibility verdict = Irreducibility::not_checked;
  std::optional<Subnet> witness;
  std::uint64_t nodes = 0;
};

/// Backtracking search for a proper non-trivial subnet. Deterministic; the
/// first witness in edge order wins unless options.minimal is set.
/// Throws Errc::search_budget_exceeded when node_limit is hit, and
/// Errc::invariant_violation if a found witness fails re-verification.
IrreducibilityResult is_irreducible(const EmbeddedNet& net, const IrreducibilityOptions& options = {});

/// The witness as a standalone net (degree rule permissive), positions taken from parent.
EmbeddedNet witness_net(const EmbeddedNet& parent, const Subnet& witness);

/// Balance and overlap checks on the standalone witness net. Degree-2
/// collinear vertices are legitimate inside subnets, so degree is not checked.
bool witness_reverifies(const EmbeddedNet& parent, const Subnet& witness, double tol = kSubsetTol);

struct LemmaReport {
  double reflex_angle_deviation = 0.0;     // max |angle at a_i1 - alpha|
  double max_triangle_angle = 0.0;         // over all c_i d_i d_(i-1)
  double min_apex_angle = 0.0;             // smallest angle at c_i
  std::array<double, 5> a32_directions{};  // measured, ascending, relative to the a31 edge
  double a32_direction_deviation = 0.0;
  // Distances in the local structure around a21 a22 a31 a12 d2:
  //   intercept ratio, side length L, extended side L + sqrt6 cot(beta),
  //   d(a31, a22') and d(a31', a22), in that order.
  std::array<double, 5> identity_deviations{};
  double sqrt3_deviation = 0.0;            // |d(a31, a22) - sqrt3|
  double alpha_prime = 0.0;                // measured reflex angle c2 a21 a22
  double M = 0.0;                          // d(a22'', a22')
  double N = 0.0;                          // d(a31, a31'')
  double M_deviation = 0.0;                // |M - (sqrt6/2) cot(beta)|
  double N_deviation = 0.0;                // |N - (sqrt6/2) cot(3pi/2 - alpha')|
  double min_centre_margin = 0.0;          // min over i of d(c_i, p) - d(b_i, p)
  std::vector<LemmaCheck> checks;

  bool all_pass() const;
};

inline constexpr double kLemmaTol = 1e-9;

/// Numerical check of the construction's lemmas at tolerance tol.
/// Throws Errc::unknown_vertex when the net lacks the 25-vertex labels.
LemmaReport check_lemmas(const ConstructionResult& result, const AngleSolution& sol,
                         double tol = kLemmaTol);

}  // namespace geonet
