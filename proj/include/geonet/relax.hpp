#pragma once

// Gradient-descent relaxation with pinned boundary vertices.
//
// Each interior vertex moves along s(v), the sum of unit vectors toward its
// neighbours. s(v) is the negative gradient of the total edge length with
// respect to pos(v), so this is plain descent on length; the total imbalance
// L = sum |s(v)| is only tracked as a convergence metric.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "geonet/net.hpp"

namespace geonet {

enum class UpdateMode {
  sequential,   // in-place cyclic sweep in ascending id order
  synchronous,  // all s(v) from one snapshot, then one joint update
};

struct RelaxConfig {
  double step = 0.025;
  std::int64_t max_iters = 1'000'000;
  double tol_balance = 1e-10;
  double guard = 1e-9;
  std::int64_t trace_every = 0;  // 0 disables the trace
  bool keep_snapshots = true;    // store positions at every trace point
  UpdateMode mode = UpdateMode::sequential;
  Backend backend = Backend::openmp;  // synchronous mode only

  /// Throws Errc::invalid_argument.
  void validate() const;
};

enum class RelaxStatus { converged, max_iters_reached, degenerated };
std::string_view to_string(RelaxStatus status);

struct TracePoint {
  std::int64_t iteration = 0;
  double total_loss = 0.0;
  double max_norm = 0.0;
};

struct RelaxOutcome {
  EmbeddedNet net;
  RelaxStatus status = RelaxStatus::max_iters_reached;
  std::int64_t iterations = 0;
  double final_max_norm = 0.0;
  double final_total_loss = 0.0;
  std::string degenerate_vertex;  // set when status == degenerated
  std::vector<TracePoint> trace;
  std::vector<std::vector<Point>> snapshots;  // parallel to trace when kept
};

/// One pass over the interior vertices. Throws Errc::degenerated naming the
/// vertex when an incident edge falls below cfg.guard.
EmbeddedNet relax_sweep(const EmbeddedNet& net, const RelaxConfig& cfg);

/// Sweeps until max imbalance <= tol_balance, max_iters sweeps, or degeneracy.
RelaxOutcome relax(const EmbeddedNet& net, const RelaxConfig& cfg);

/// Snapshots as nets, in trace order. Throws Errc::no_trace.
std::vector<EmbeddedNet> export_trace_frames(const RelaxOutcome& outcome);

/// Independent relaxations; runs are spread over OpenMP threads for the openmp
/// backend. Each run is deterministic, so both backends give identical outcomes.
std::vector<RelaxOutcome> relax_batch(std::span<const EmbeddedNet> nets, const RelaxConfig& cfg,
                                      Backend backend = Backend::openmp);

/// Copy of `net` with every interior coordinate displaced by uniform noise in
/// [-amplitude, amplitude], drawn from a seeded mt19937_64.
EmbeddedNet jitter_interior(const EmbeddedNet& net, double amplitude, std::uint64_t seed);

}  // namespace geonet
