#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "geonet/angles.hpp"
#include "geonet/builder.hpp"
#include "geonet/error.hpp"
#include "geonet/io.hpp"
#include "geonet/relax.hpp"
#include "geonet/verify.hpp"

namespace geonet {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Input-side failures map to the usage exit code; everything else is a failed run.
int exit_code_for(Errc code) {
  switch (code) {
    case Errc::parse_error:
    case Errc::io_error:
    case Errc::invariant_violation:
    case Errc::invalid_argument:
    case Errc::unknown_vertex:
    case Errc::degenerate_edge:
    case Errc::unsupported_family:
    case Errc::no_trace:
      return kUsage;
    default:
      return kFailed;
  }
}

ReportFormat format_for(const std::filesystem::path& path) {
  return path.extension() == ".json" ? ReportFormat::json : ReportFormat::csv;
}

struct SolveArgs {
  double tol = 1e-14;
};

struct ConstructArgs {
  std::string family = "t3";
  std::optional<int> n;
  std::string out;
};

struct RelaxArgs {
  std::string in;
  std::string out;
  RelaxConfig cfg;
  std::string frames;
  bool sync = false;
};

struct VerifyArgs {
  std::string in;
  bool irreducibility = false;
  bool lemmas = false;
  bool minimal = false;
  double tol = kBalanceTol;
  double subset_tol = kSubsetTol;
  std::uint64_t node_limit = kDefaultNodeLimit;
  std::string report;
};

struct SvgArgs {
  std::string in;
  std::string out;
  SvgStyle style;
};

struct ImbalanceArgs {
  std::string in;
  std::string report;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const AngleSolution sol = solve_angles(a.tol);
  const ConstructionParams params = make_construction_params(sol);
  out << "alpha        " << fmt17(sol.alpha) << "\n"
      << "beta         " << fmt17(sol.beta) << "\n"
      << "K            " << fmt17(sol.K) << "\n"
      << "residual_cos " << fmt17(sol.residual_cos) << "\n"
      << "residual_sin " << fmt17(sol.residual_sin) << "\n"
      << "side_long    " << fmt17(params.side_long) << "\n"
      << "boundary_leg " << fmt17(params.boundary_leg) << "\n";
  return kOk;
}

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<EmbeddedNet> net;
  if (a.family == "t3") {
    if (a.n && *a.n != 3) {
      err << "error: family t3 has n = 3\n";
      return kUsage;
    }
    net = build_net25(solve_angles()).net;
  } else if (a.family == "t2") {
    if (a.n && *a.n != 2) {
      err << "error: family t2 has n = 2\n";
      return kUsage;
    }
    net = topology_template({Family::t2_octagon, 2}).seed();
  } else {
    if (!a.n) {
      err << "error: --family ring needs --n\n";
      return kUsage;
    }
    if (*a.n == 3) {
      err << "error: the n = 3 ring is the exact construction; use --family t3\n";
      return kUsage;
    }
    net = topology_template({Family::ring_experimental, *a.n}).seed();
    err << "note: ring family is experimental; positions are relaxer seeds\n";
  }
  const NetTopology& topo = net->topology();
  if (a.out.empty()) {
    out << net_to_json(*net);
  } else {
    save_net(*net, a.out);
    out << "wrote " << a.out << ": " << topo.interior().size() << " interior, "
        << topo.vertex_count() - topo.interior().size() << " boundary, " << topo.edge_count() << " edges\n";
  }
  return kOk;
}

int cmd_relax(RelaxArgs a, std::ostream& out, std::ostream& err) {
  if (!a.frames.empty() && a.cfg.trace_every == 0) {
    err << "error: --frames needs --trace-every > 0\n";
    return kUsage;
  }
  a.cfg.mode = a.sync ? UpdateMode::synchronous : UpdateMode::sequential;
  a.cfg.keep_snapshots = !a.frames.empty();
  const EmbeddedNet net = load_net(a.in);
  const RelaxOutcome res = relax(net, a.cfg);
  out << "status     " << to_string(res.status) << "\n"
      << "iterations " << res.iterations << "\n"
      << "max_norm   " << fmt17(res.final_max_norm) << "\n"
      << "total_loss " << fmt17(res.final_total_loss) << "\n";
  if (!res.degenerate_vertex.empty()) out << "degenerate " << res.degenerate_vertex << "\n";
  if (!a.out.empty()) save_net(res.net, a.out);
  if (!a.frames.empty()) {
    std::filesystem::create_directories(a.frames);
    const auto frames = export_trace_frames(res);
    for (std::size_t k = 0; k < frames.size(); ++k) {
      char name[32];
      std::snprintf(name, sizeof name, "frame_%05zu.svg", k);
      export_svg(frames[k], std::filesystem::path(a.frames) / name);
    }
    out << "frames     " << frames.size() << " in " << a.frames << "\n";
  }
  return res.status == RelaxStatus::converged ? kOk : kFailed;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const EmbeddedNet net = load_net(a.in);
  VerificationReport rep = verify_geodesic_net(net, a.tol);
  out << "balance      " << (rep.balance_pass ? "pass" : "FAIL") << "\n";
  for (const VertexNorm& u : rep.unbalanced) out << "  unbalanced " << u.id << " " << fmt3(u.norm) << "\n";
  out << "overlaps     " << (rep.overlap_pass ? "pass" : "FAIL") << "\n";
  for (const OverlapFinding& f : rep.overlaps) out << "  " << f.describe() << "\n";
  out << "degree       " << (rep.degree_pass ? "pass" : "FAIL") << "\n";
  for (const std::string& id : rep.low_degree) out << "  low degree " << id << "\n";

  if (a.lemmas) {
    const AngleSolution sol = solve_angles();
    const ConstructionResult cr{net, make_construction_params(sol), {}};
    LemmaReport lr;
    try {
      lr = check_lemmas(cr, sol);
    } catch (const Error& e) {
      if (e.code() != Errc::unknown_vertex) throw;
      err << "error: lemma checks need the 25-vertex labelling (" << e.what() << ")\n";
      return kUsage;
    }
    rep.lemma_checks = lr.checks;
    out << "lemmas       " << (lr.all_pass() ? "pass" : "FAIL") << "\n";
    for (const LemmaCheck& c : lr.checks) {
      out << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << " " << fmt3(c.max_deviation) << "\n";
    }
  }
  if (a.irreducibility) {
    IrreducibilityOptions opt;
    opt.subset_tol = a.subset_tol;
    opt.node_limit = a.node_limit;
    opt.minimal = a.minimal;
    const IrreducibilityResult ir = is_irreducible(net, opt);
    rep.irreducible = ir.verdict;
    rep.witness = ir.witness;
    out << "irreducible  " << to_string(ir.verdict) << " (" << ir.nodes << " nodes)\n";
    if (ir.witness) {
      out << "  witness " << ir.witness->edges.size() << " edges:";
      for (const Edge& e : ir.witness->edges) out << " " << e.a << "-" << e.b;
      out << "\n";
    }
  }
  if (!a.report.empty()) export_report(rep, a.report, format_for(a.report));
  out << "result       " << (rep.passed() ? "pass" : "FAIL") << "\n";
  return rep.passed() ? kOk : kFailed;
}

int cmd_svg(const SvgArgs& a, std::ostream& out) {
  export_svg(load_net(a.in), a.out, a.style);
  out << "wrote " << a.out << "\n";
  return kOk;
}

int cmd_imbalance(const ImbalanceArgs& a, std::ostream& out) {
  const ImbalanceReport rep = total_report(load_net(a.in));
  if (a.report.empty()) {
    out << render_report(rep, ReportFormat::csv);
  } else {
    export_report(rep, a.report, format_for(a.report));
  }
  out << "max_norm " << fmt17(rep.max_norm) << " total_loss " << fmt17(rep.total_loss) << "\n";
  return kOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geodesic nets: exact construction, relaxation and verification", "geonet"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve-angles", "Solve for alpha and beta and print the construction parameters");
  s->add_option("--tol", solve.tol, "Root bracket width")->check(CLI::PositiveNumber);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build a net (exact for t3, seed positions otherwise)");
  c->add_option("--family", construct.family, "t3, t2 or ring")->check(CLI::IsMember({"t3", "t2", "ring"}));
  c->add_option("--n", construct.n, "Ring order");
  c->add_option("--out", construct.out, "Output net file (stdout when omitted)");

  RelaxArgs rel;
  auto* r = app.add_subcommand("relax", "Gradient descent on total edge length with pinned boundary");
  r->add_option("--in", rel.in, "Input net file")->required();
  r->add_option("--out", rel.out, "Output net file");
  r->add_option("--step", rel.cfg.step, "Step size")->capture_default_str();
  r->add_option("--max-iters", rel.cfg.max_iters, "Sweep limit")->capture_default_str();
  r->add_option("--tol", rel.cfg.tol_balance, "Max imbalance at convergence")->capture_default_str();
  r->add_option("--guard", rel.cfg.guard, "Minimum edge length")->capture_default_str();
  r->add_option("--trace-every", rel.cfg.trace_every, "Trace cadence in sweeps (0 = off)");
  r->add_option("--frames", rel.frames, "Directory for frame_NNNNN.svg snapshots");
  r->add_flag("--sync", rel.sync, "Synchronous updates instead of the in-place sweep");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check balance, overlaps, degrees, lemmas and irreducibility");
  v->add_option("--in", ver.in, "Input net file")->required();
  v->add_flag("--irreducibility", ver.irreducibility, "Search for a proper subnet");
  v->add_flag("--lemmas", ver.lemmas, "Run the lemma battery (25-vertex labelling)");
  v->add_flag("--minimal", ver.minimal, "Seek a witness with the fewest edges");
  v->add_option("--tol", ver.tol, "Balance tolerance")->capture_default_str();
  v->add_option("--subset-tol", ver.subset_tol, "Subnet balance tolerance")->capture_default_str();
  v->add_option("--node-limit", ver.node_limit, "Search node budget")->capture_default_str();
  v->add_option("--report", ver.report, "Report file (.json or .csv)");

  SvgArgs svg;
  auto* g = app.add_subcommand("export-svg", "Render a net as SVG");
  g->add_option("--in", svg.in, "Input net file")->required();
  g->add_option("--out", svg.out, "Output SVG")->required();
  g->add_option("--stroke-width", svg.style.stroke_width, "Fraction of the diagonal")->capture_default_str();
  g->add_option("--vertex-radius", svg.style.balanced_radius, "Fraction of the diagonal")->capture_default_str();
  g->add_option("--boundary-radius", svg.style.boundary_radius, "Fraction of the diagonal")->capture_default_str();
  g->add_option("--margin", svg.style.margin_fraction, "Fraction of the diagonal")->capture_default_str();

  ImbalanceArgs imb;
  auto* m = app.add_subcommand("imbalance", "Per-vertex imbalance report");
  m->add_option("--in", imb.in, "Input net file")->required();
  m->add_option("--report", imb.report, "Report file (.json or .csv; stdout CSV when omitted)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*s) return cmd_solve(solve, out);
    if (*c) return cmd_construct(construct, out, err);
    if (*r) return cmd_relax(rel, out, err);
    if (*v) return cmd_verify(ver, out, err);
    if (*g) return cmd_svg(svg, out);
    if (*m) return cmd_imbalance(imb, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace geonet
