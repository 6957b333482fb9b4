#include "geonet/relax.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "geonet/error.hpp"
#include "geonet/kernels.hpp"

namespace geonet {

std::string_view to_string(RelaxStatus status) {
  switch (status) {
    case RelaxStatus::converged: return "converged";
    case RelaxStatus::max_iters_reached: return "max_iters_reached";
    case RelaxStatus::degenerated: return "degenerated";
  }
  return "unknown";
}

void RelaxConfig::validate() const {
  if (!(step > 0.0)) throw Error(Errc::invalid_argument, "step must be positive");
  if (!(tol_balance > 0.0)) throw Error(Errc::invalid_argument, "tol_balance must be positive");
  if (!(guard >= kDegenerateEps)) throw Error(Errc::invalid_argument, "guard must be >= 1e-12");
  if (max_iters < 0) throw Error(Errc::invalid_argument, "max_iters must be >= 0");
  if (trace_every < 0) throw Error(Errc::invalid_argument, "trace_every must be >= 0");
}

namespace {

[[noreturn]] void throw_degenerated(const NetTopology& topo, std::size_t v, std::size_t w) {
  throw Error(Errc::degenerated,
              "edge " + topo.id(v) + "-" + topo.id(w) + " collapsed below the guard at '" + topo.id(v) + "'");
}

void check_incident(const NetTopology& topo, std::span<const Point> pos, std::size_t v, double guard) {
  for (const Incidence& inc : topo.incident(v)) {
    if (!(distance(pos[v], pos[inc.neighbor]) >= guard)) throw_degenerated(topo, v, inc.neighbor);
  }
}

void sweep_sequential(const NetTopology& topo, std::vector<Point>& pos, const RelaxConfig& cfg) {
  for (std::size_t v : topo.interior()) {
    const Point origin = pos[v];
    Point s{};
    for (const Incidence& inc : topo.incident(v)) {
      const Point d = pos[inc.neighbor] - origin;
      const double len = norm(d);
      if (!(len >= cfg.guard)) throw_degenerated(topo, v, inc.neighbor);
      s += d / len;
    }
    pos[v] = origin + cfg.step * s;
    check_incident(topo, pos, v, cfg.guard);
  }
}

void sweep_synchronous(const NetTopology& topo, std::vector<Point>& pos, const RelaxConfig& cfg) {
  const auto& targets = topo.interior();
  std::vector<Point> sums(targets.size());
  const std::size_t bad =
      cfg.backend == Backend::openmp
          ? kernels::unit_sums_omp(topo, pos, targets, sums, cfg.guard)
          : kernels::unit_sums_serial(topo, pos, targets, sums, cfg.guard);
  if (bad != targets.size()) {
    const std::size_t v = targets[bad];
    for (const Incidence& inc : topo.incident(v)) {
      if (!(distance(pos[v], pos[inc.neighbor]) > cfg.guard)) throw_degenerated(topo, v, inc.neighbor);
    }
    throw_degenerated(topo, v, v);
  }
  for (std::size_t k = 0; k < targets.size(); ++k) pos[targets[k]] += cfg.step * sums[k];
  for (std::size_t v : targets) check_incident(topo, pos, v, cfg.guard);
}

void sweep(const NetTopology& topo, std::vector<Point>& pos, const RelaxConfig& cfg) {
  if (cfg.mode == UpdateMode::sequential) {
    sweep_sequential(topo, pos, cfg);
  } else {
    sweep_synchronous(topo, pos, cfg);
  }
}

struct Metrics {
  double total = 0.0;
  double max = 0.0;
};

// Nullopt when some edge is shorter than eps.
std::optional<Metrics> metrics(const NetTopology& topo, std::span<const Point> pos, double eps) {
  Metrics m;
  for (std::size_t v : topo.interior()) {
    Point s{};
    for (const Incidence& inc : topo.incident(v)) {
      const Point d = pos[inc.neighbor] - pos[v];
      const double len = norm(d);
      if (!(len > eps)) return std::nullopt;
      s += d / len;
    }
    const double n = norm(s);
    m.total += n;
    m.max = std::max(m.max, n);
  }
  return m;
}

std::string degenerate_vertex_of(const Error& e) {
  const std::string what = e.what();
  const auto open = what.rfind('\'');
  if (open == std::string::npos || open == 0) return {};
  const auto start = what.rfind('\'', open - 1);
  if (start == std::string::npos) return {};
  return what.substr(start + 1, open - start - 1);
}

}  // namespace

EmbeddedNet relax_sweep(const EmbeddedNet& net, const RelaxConfig& cfg) {
  cfg.validate();
  std::vector<Point> pos(net.positions().begin(), net.positions().end());
  sweep(net.topology(), pos, cfg);
  return net.with_positions(std::move(pos));
}

RelaxOutcome relax(const EmbeddedNet& net, const RelaxConfig& cfg) {
  cfg.validate();
  const NetTopology& topo = net.topology();
  std::vector<Point> pos(net.positions().begin(), net.positions().end());
  std::vector<Point> next;

  RelaxOutcome out{net, RelaxStatus::max_iters_reached, 0, 0.0, 0.0, {}, {}, {}};
  auto record = [&](std::int64_t iter, const Metrics& m) {
    out.trace.push_back({iter, m.total, m.max});
    if (cfg.keep_snapshots) out.snapshots.push_back(pos);
  };

  auto current = metrics(topo, pos, cfg.guard);
  if (!current) {
    out.status = RelaxStatus::degenerated;
    return out;
  }
  std::int64_t iter = 0;
  if (cfg.trace_every > 0) record(0, *current);

  while (true) {
    if (current->max <= cfg.tol_balance) {
      out.status = RelaxStatus::converged;
      break;
    }
    if (iter >= cfg.max_iters) {
      out.status = RelaxStatus::max_iters_reached;
      break;
    }
    next = pos;
    try {
      sweep(topo, next, cfg);
    } catch (const Error& e) {
      if (e.code() != Errc::degenerated) throw;
      out.status = RelaxStatus::degenerated;
      out.degenerate_vertex = degenerate_vertex_of(e);
      break;
    }
    auto m = metrics(topo, next, cfg.guard);
    if (!m) {
      out.status = RelaxStatus::degenerated;
      break;
    }
    pos.swap(next);
    current = m;
    ++iter;
    if (cfg.trace_every > 0 && iter % cfg.trace_every == 0) record(iter, *current);
  }
  if (cfg.trace_every > 0 && out.trace.back().iteration != iter) record(iter, *current);

  out.iterations = iter;
  out.final_max_norm = current->max;
  out.final_total_loss = current->total;
  out.net = net.with_positions(std::move(pos));
  return out;
}

std::vector<EmbeddedNet> export_trace_frames(const RelaxOutcome& outcome) {
  if (outcome.snapshots.empty()) {
    throw Error(Errc::no_trace, "relaxation recorded no position snapshots (trace_every was 0)");
  }
  std::vector<EmbeddedNet> frames;
  frames.reserve(outcome.snapshots.size());
  for (const auto& snap : outcome.snapshots) frames.push_back(outcome.net.with_positions(snap));
  return frames;
}

std::vector<RelaxOutcome> relax_batch(std::span<const EmbeddedNet> nets, const RelaxConfig& cfg,
                                      Backend backend) {
  cfg.validate();
  std::vector<std::optional<RelaxOutcome>> slots(nets.size());
  const auto n = static_cast<std::ptrdiff_t>(nets.size());
  RelaxConfig inner = cfg;
  inner.backend = Backend::serial;  // no nested parallelism
  if (backend == Backend::openmp) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < n; ++k) slots[k].emplace(relax(nets[k], inner));
  } else {
    for (std::ptrdiff_t k = 0; k < n; ++k) slots[k].emplace(relax(nets[k], inner));
  }
  std::vector<RelaxOutcome> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

EmbeddedNet jitter_interior(const EmbeddedNet& net, double amplitude, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-amplitude, amplitude);
  std::vector<Point> pos(net.positions().begin(), net.positions().end());
  for (std::size_t v : net.topology().interior()) {
    pos[v].x += noise(rng);
    pos[v].y += noise(rng);
  }
  return net.with_positions(std::move(pos));
}

}  // namespace geonet
