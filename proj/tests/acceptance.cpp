// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>

#include "geonet/angles.hpp"
#include "geonet/builder.hpp"
#include "geonet/io.hpp"
#include "geonet/relax.hpp"
#include "geonet/verify.hpp"
#include "support.hpp"

using namespace geonet;
using namespace geonet::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome angle_system() {
  const auto t0 = Clock::now();
  const double h_pi = f_g_h(kPi).h, h_K = f_g_h(compute_K()).h;
  const AngleSolution sol = solve_angles();
  const double dt = seconds_since(t0);
  const bool pass = std::abs(h_pi - 0.6092) <= 5e-4 && std::abs(h_K + 0.0704) <= 5e-4 &&
                    std::abs(sol.residual_cos) < 1e-12 && std::abs(sol.residual_sin) < 1e-12 && sol.alpha > kPi &&
                    sol.alpha < 13 * kPi / 12 && sol.beta > 0 && sol.beta < kPi / 2 && dt < 1.0;
  return {pass, fmt("h(pi)=%.6f h(K)=%.6f alpha=%.15f beta=%.15f residuals=%.1e,%.1e time=%.3fs", h_pi, h_K,
                    sol.alpha, sol.beta, sol.residual_cos, sol.residual_sin, dt)};
}

Outcome side_length() {
  const AngleSolution sol = solve_angles();
  const double L = side_long(sol.alpha, sol.beta);
  return {std::abs(L - 0.7533) <= 5e-4 && std::abs(L - 0.753334985772626) < 1e-6, fmt("L=%.15f", L)};
}

Outcome main_construction() {
  const auto t0 = Clock::now();
  const ConstructionResult r = build_net25(solve_angles());
  const VerificationReport rep = verify_geodesic_net(r.net);
  const double dt = seconds_since(t0);
  const auto& topo = r.net.topology();
  const double imb = max_imbalance(r.net);
  const bool overlaps_empty = detect_overlaps(r.net, default_overlap_tol(r.net)).empty();
  const bool pass = topo.boundary().size() == 4 && topo.interior().size() == 25 && topo.edge_count() == 64 &&
                    imb < 1e-9 && overlaps_empty && rep.passed() && dt < 1.0;
  return {pass, fmt("boundary=%zu interior=%zu edges=%zu max_imbalance=%.2e overlaps=%s verify=%s time=%.3fs",
                    topo.boundary().size(), topo.interior().size(), topo.edge_count(), imb,
                    overlaps_empty ? "none" : "found", rep.passed() ? "pass" : "fail", dt)};
}

Outcome figure_congruence() {
  const double rmsd = align_rigid(figure_coordinates(), net25().net.position_map()).rmsd;
  return {rmsd < 1e-6, fmt("rmsd=%.2e", rmsd)};
}

Outcome lemma_battery() {
  const LemmaReport r = check_lemmas(net25(), solve_angles(), 1e-9);
  double worst = 0.0;
  std::string worst_name;
  for (const LemmaCheck& c : r.checks) {
    if (c.max_deviation >= worst) {
      worst = c.max_deviation;
      worst_name = c.name;
    }
  }
  const bool pass = r.all_pass() && worst < 1e-9 && r.sqrt3_deviation < 1e-9 && r.max_triangle_angle < 2 * kPi / 3 &&
                    r.a32_direction_deviation < 1e-9;
  return {pass, fmt("checks=%zu worst=%s (%.2e) sqrt3=%.2e max_triangle_angle=%.6f a32_dirs=%.2e", r.checks.size(),
                    worst_name.c_str(), worst, r.sqrt3_deviation, r.max_triangle_angle, r.a32_direction_deviation)};
}

Outcome irreducibility() {
  const auto t0 = Clock::now();
  const IrreducibilityResult main = is_irreducible(net25().net);
  const double dt = seconds_since(t0);
  const EmbeddedNet x = x_net();
  const IrreducibilityResult xr = is_irreducible(x);
  const bool x_ok = xr.verdict == Irreducibility::no && xr.witness && witness_reverifies(x, *xr.witness);
  bool subsets_ok = true;
  const auto& topo = net25().net.topology();
  for (std::size_t v = 0; v < topo.vertex_count(); ++v) {
    std::vector<UnitVector> dirs;
    for (const Incidence& inc : topo.incident(v)) {
      dirs.push_back(unit_toward(net25().net.position(v), net25().net.position(inc.neighbor)));
    }
    subsets_ok = subsets_ok && balanced_subsets(dirs) == balanced_subsets_naive(dirs);
  }
  const bool pass = main.verdict == Irreducibility::yes && dt < 60.0 && x_ok && subsets_ok;
  return {pass, fmt("25-net=%s nodes=%llu time=%.3fs x-net=%s witness_edges=%zu subsets=%s",
                    std::string(to_string(main.verdict)).c_str(), static_cast<unsigned long long>(main.nodes), dt,
                    std::string(to_string(xr.verdict)).c_str(), xr.witness ? xr.witness->edges.size() : 0,
                    subsets_ok ? "match" : "mismatch")};
}

Outcome relaxation_robustness() {
  const RelaxConfig cfg;
  int good = 0;
  double slowest = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const EmbeddedNet start = jitter_interior(net25().net, 0.05, seed);
    const auto t0 = Clock::now();
    const RelaxOutcome out = relax(start, cfg);
    const double dt = seconds_since(t0);
    slowest = std::max(slowest, dt);
    const bool ok = out.status == RelaxStatus::converged && max_imbalance(out.net) < 1e-8 &&
                    align_rigid(net25().net.position_map(), out.net.position_map()).rmsd < 1e-6 && dt < 10.0;
    good += ok;
  }
  return {good >= 95, fmt("converged=%d/100 step=%g slowest=%.3fs", good, cfg.step, slowest)};
}

Outcome gradient_check() {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const EmbeddedNet n = random_net(seed);
    for (std::size_t v : n.topology().interior()) {
      auto length_at = [&](Point at) {
        double sum = 0.0;
        for (const Incidence& inc : n.topology().incident(v)) sum += distance(at, n.position(inc.neighbor));
        return sum;
      };
      const Point x = n.position(v);
      const double h = 1e-6;
      const Point fd{-(length_at(x + Point{h, 0}) - length_at(x - Point{h, 0})) / (2 * h),
                     -(length_at(x + Point{0, h}) - length_at(x - Point{0, h})) / (2 * h)};
      worst = std::max(worst, distance(imbalance(n, v).vector, fd));
    }
  }
  return {worst < 1e-6, fmt("max_deviation=%.2e over 100 nets", worst)};
}

Outcome t2_exploration() {
  const TopologyTemplate t = topology_template({Family::t2_octagon, 2});
  const RelaxOutcome out = relax(t.seed(), RelaxConfig{});
  const std::size_t balanced = out.net.topology().interior().size();
  const double imb = max_imbalance(out.net);
  const bool no_overlaps = detect_overlaps(out.net, default_overlap_tol(out.net)).empty();
  const bool pass = out.status == RelaxStatus::converged && balanced == 16 && imb < 1e-8 && no_overlaps;
  return {pass, fmt("status=%s iterations=%lld interior=%zu max_imbalance=%.2e overlaps=%s",
                    std::string(to_string(out.status)).c_str(), static_cast<long long>(out.iterations), balanced, imb,
                    no_overlaps ? "none" : "found")};
}

Outcome round_trip() {
  const auto dir = std::filesystem::temp_directory_path() / "geonet_acceptance";
  std::filesystem::create_directories(dir);
  save_net(net25().net, dir / "net.json");
  const EmbeddedNet back = load_net(dir / "net.json");
  bool exact = back.topology().vertex_count() == net25().net.topology().vertex_count();
  for (std::size_t v = 0; exact && v < back.topology().vertex_count(); ++v) {
    exact = back.position(v) == net25().net.position(v) && back.topology().id(v) == net25().net.topology().id(v);
  }
  export_svg(net25().net, dir / "a.svg");
  export_svg(build_net25(solve_angles()).net, dir / "b.svg");
  const bool same_svg = read_text(dir / "a.svg") == read_text(dir / "b.svg");
  return {exact && same_svg, fmt("positions=%s svg=%s", exact ? "bit-exact" : "differ", same_svg ? "identical" : "differ")};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"angle system", angle_system},
      {"side length", side_length},
      {"25-vertex net", main_construction},
      {"figure congruence", figure_congruence},
      {"lemma battery", lemma_battery},
      {"irreducibility", irreducibility},
      {"relaxation robustness", relaxation_robustness},
      {"gradient check", gradient_check},
      {"T2 exploration", t2_exploration},
      {"round trip and determinism", round_trip},
  };
  int failures = 0;
  int k = 0;
  for (const auto& [name, fn] : criteria) {
    ++k;
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%-4s criterion %2d %-28s %s\n", o.pass ? "PASS" : "FAIL", k, name, o.detail.c_str());
  }
  std::printf("%d of %d criteria passed\n", k - failures, k);
  return failures == 0 ? 0 : 1;
}
