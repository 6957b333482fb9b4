#include "geonet/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "geonet/error.hpp"

namespace geonet {

namespace {

// Bound on the drift of the Gray-code running sum over at most 2^16 updates;
// candidates inside tol + slack are re-summed directly before acceptance.
constexpr double kGraySlack = 1e-9;

void check_dirs(std::span<const UnitVector> dirs) {
  if (dirs.empty() || dirs.size() > kMaxSubsetDirections) {
    throw Error(Errc::invalid_argument, "balanced_subsets needs 1 to 16 directions, got " +
                                            std::to_string(dirs.size()));
  }
}

Point direct_sum(std::span<const UnitVector> dirs, SubsetMask mask) {
  Point s{};
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    if (mask & (SubsetMask{1} << k)) s += dirs[k].as_point();
  }
  return s;
}

}  // namespace

std::vector<SubsetMask> balanced_subsets_naive(std::span<const UnitVector> dirs, double tol) {
  check_dirs(dirs);
  std::vector<SubsetMask> out;
  const SubsetMask end = SubsetMask{1} << dirs.size();
  for (SubsetMask mask = 0; mask < end; ++mask) {
    if (std::popcount(mask) == 1) continue;
    if (norm(direct_sum(dirs, mask)) <= tol) out.push_back(mask);
  }
  return out;
}

std::vector<SubsetMask> balanced_subsets(std::span<const UnitVector> dirs, double tol) {
  check_dirs(dirs);
  std::vector<SubsetMask> out{0};
  const SubsetMask end = SubsetMask{1} << dirs.size();
  SubsetMask gray = 0;
  Point run{};
  for (SubsetMask i = 1; i < end; ++i) {
    const int bit = std::countr_zero(i);
    const SubsetMask flip = SubsetMask{1} << bit;
    gray ^= flip;
    if (gray & flip) {
      run += dirs[bit].as_point();
    } else {
      run -= dirs[bit].as_point();
    }
    if (std::popcount(gray) < 2 || norm(run) > tol + kGraySlack) continue;
    if (norm(direct_sum(dirs, gray)) <= tol) out.push_back(gray);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> mask_indices(SubsetMask mask) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; mask != 0; ++k, mask >>= 1) {
    if (mask & 1) out.push_back(k);
  }
  return out;
}

std::string_view to_string(Irreducibility verdict) {
  switch (verdict) {
    case Irreducibility::yes: return "yes";
    case Irreducibility::no: return "no";
    case Irreducibility::not_checked: return "not_checked";
  }
  return "unknown";
}

bool VerificationReport::passed() const {
  const bool lemmas = std::all_of(lemma_checks.begin(), lemma_checks.end(),
                                  [](const LemmaCheck& c) { return c.pass; });
  return balance_pass && overlap_pass && degree_pass && lemmas && irreducible != Irreducibility::no;
}

VerificationReport verify_geodesic_net(const EmbeddedNet& net, double tol) {
  VerificationReport rep;
  const NetTopology& topo = net.topology();
  for (std::size_t v : topo.interior()) {
    const double n = imbalance(net, v).norm;
    if (!(n <= tol)) rep.unbalanced.push_back({topo.id(v), n});
    if (topo.degree(v) < 3) rep.low_degree.push_back(topo.id(v));
  }
  rep.overlaps = detect_overlaps(net, default_overlap_tol(net));
  rep.balance_pass = rep.unbalanced.empty();
  rep.degree_pass = rep.low_degree.empty();
  rep.overlap_pass = rep.overlaps.empty();
  return rep;
}

// ---------------------------------------------------------------------------
// Lemma battery

bool LemmaReport::all_pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.pass; });
}

namespace {

double reflex_between(Point v, Point p, Point q) {
  const double t = angle_ccw(v, p, q);
  return std::max(t, kTwoPi - t);
}

double cot(double x) { return 1.0 / std::tan(x); }

void add_equality(LemmaReport& rep, std::string name, double deviation, double tol) {
  rep.checks.push_back({std::move(name), deviation < tol, deviation});
}

}  // namespace

LemmaReport check_lemmas(const ConstructionResult& result, const AngleSolution& sol, double tol) {
  const EmbeddedNet& net = result.net;
  auto at = [&](std::string_view id) { return net.position(id); };
  const double alpha = sol.alpha;
  const double beta = sol.beta;
  const double half_root6 = std::sqrt(6.0) / 2.0;
  LemmaReport rep;

  // Reflex angle at each a_i1 between the edges to c_i and a_i2.
  for (int i = 1; i <= 4; ++i) {
    const double a = reflex_between(at(vid('a', i, 1)), at(vid('c', i)), at(vid('a', i, 2)));
    rep.reflex_angle_deviation = std::max(rep.reflex_angle_deviation, std::abs(a - alpha));
  }
  add_equality(rep, "reflex_angle_at_a_i1", rep.reflex_angle_deviation, tol);

  // Triangles c_i d_i d_(i-1): acute enough for a Fermat point, obtuse at c_i.
  rep.min_apex_angle = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 4; ++i) {
    const auto ang = interior_angles(Triangle{{at(vid('c', i)), at(vid('d', i)), at(vid('d', i - 1))}});
    rep.max_triangle_angle = std::max({rep.max_triangle_angle, ang[0], ang[1], ang[2]});
    rep.min_apex_angle = std::min(rep.min_apex_angle, ang[0]);
  }
  const double limit = 2.0 * kPi / 3.0;
  rep.checks.push_back({"triangle_angles_below_2pi_3", rep.max_triangle_angle < limit,
                        std::max(0.0, rep.max_triangle_angle - limit)});
  rep.checks.push_back({"triangle_apex_obtuse", rep.min_apex_angle > kPi / 2.0,
                        std::max(0.0, kPi / 2.0 - rep.min_apex_angle)});

  // Edge directions at a32 measured counterclockwise from the a31 edge.
  {
    const NetTopology& topo = net.topology();
    const std::size_t v = topo.index_of("a32");
    const Point origin = net.position(v);
    const Point ref = at("a31");
    std::vector<double> measured;
    for (const Incidence& inc : topo.incident(v)) {
      measured.push_back(angle_ccw(origin, ref, net.position(inc.neighbor)));
    }
    std::array<double, 5> expected{0.0, beta, alpha, 13.0 * kPi / 12.0, 11.0 * kPi / 6.0};
    std::sort(expected.begin(), expected.end());
    if (measured.size() == expected.size()) {
      // Angles just below 2pi belong with 0.
      for (double& m : measured) {
        if (m > kTwoPi - 1e-6) m -= kTwoPi;
      }
      std::sort(measured.begin(), measured.end());
      for (std::size_t k = 0; k < expected.size(); ++k) {
        rep.a32_directions[k] = measured[k];
        rep.a32_direction_deviation =
            std::max(rep.a32_direction_deviation, circular_distance(measured[k], expected[k]));
      }
    } else {
      rep.a32_direction_deviation = std::numeric_limits<double>::infinity();
    }
    add_equality(rep, "directions_at_a32", rep.a32_direction_deviation, tol);
  }

  // Local structure between the parallel segments a31 a12 and a22 a21.
  {
    const Point a31 = at("a31"), a12 = at("a12"), a21 = at("a21"), a22 = at("a22");
    const Point d2 = at("d2"), c2 = at("c2");
    const Point a22p = line_intersection(d2, a22, a31, a12);
    const Point a21p = line_intersection(d2, a21, a31, a12);
    const Point a31p = line_intersection(a22, a21, a31, d2);
    const Point a22pp = project_onto_line(a31, a12, a22);
    const Point a31pp = project_onto_line(a31, a12, a31p);
    rep.alpha_prime = reflex_between(a21, c2, a22);
    const double L = side_long(alpha, beta);
    const double cot_alpha_prime = cot(1.5 * kPi - rep.alpha_prime);

    rep.identity_deviations = {
        std::abs(distance(a31p, a22) / distance(a31, a22p) - distance(a21, a22) / distance(a21p, a22p)),
        std::abs(distance(a21, a22) - L),
        std::abs(distance(a21p, a22p) - (L + std::sqrt(6.0) * cot(beta))),
        std::abs(distance(a31, a22p) - half_root6 * (1.0 - cot(beta))),
        std::abs(distance(a31p, a22) - half_root6 * (1.0 - cot_alpha_prime)),
    };
    static constexpr std::array<const char*, 5> kNames{
        "intercept_ratio", "side_length_L", "extended_side", "a31_to_a22_prime", "a31_prime_to_a22"};
    for (std::size_t k = 0; k < kNames.size(); ++k) {
      add_equality(rep, kNames[k], rep.identity_deviations[k], tol);
    }
    rep.sqrt3_deviation = std::abs(distance(a31, a22) - std::sqrt(3.0));
    add_equality(rep, "a31_a22_is_sqrt3", rep.sqrt3_deviation, tol);
    rep.M = distance(a22pp, a22p);
    rep.N = distance(a31, a31pp);
    rep.M_deviation = std::abs(rep.M - half_root6 * cot(beta));
    rep.N_deviation = std::abs(rep.N - half_root6 * cot_alpha_prime);
    add_equality(rep, "M_formula", rep.M_deviation, tol);
    add_equality(rep, "N_formula", rep.N_deviation, tol);
    add_equality(rep, "alpha_prime_equals_alpha", std::abs(rep.alpha_prime - alpha), tol);
  }

  // c_i lies farther from the centre than b_i.
  {
    const Point p = at("p");
    rep.min_centre_margin = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 4; ++i) {
      rep.min_centre_margin = std::min(
          rep.min_centre_margin, distance(at(vid('c', i)), p) - distance(at(vid('b', i)), p));
    }
    rep.checks.push_back(
        {"c_beyond_b", rep.min_centre_margin > 0.0, std::max(0.0, -rep.min_centre_margin)});
  }
  return rep;
}

}  // namespace geonet
