#include "geonet/geom.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

#include "geonet/error.hpp"

namespace geonet {

namespace {

std::string fmt_point(Point p) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << p.x << ", " << p.y << ')';
  return os.str();
}

// Apex of the equilateral triangle erected on segment (a, b) on the side away from `opposite`.
Point outward_apex(Point a, Point b, Point opposite) {
  const Point plus = rotate_about(b, a, kPi / 3.0);
  const Point minus = rotate_about(b, a, -kPi / 3.0);
  const double side_opp = cross(b - a, opposite - a);
  const double side_plus = cross(b - a, plus - a);
  return (side_opp > 0.0) == (side_plus > 0.0) ? minus : plus;
}

}  // namespace

double UnitVector::angle() const { return canonical_angle(std::atan2(dy, dx)); }

UnitVector unit_toward(Point p, Point q, double eps) {
  const Point d = q - p;
  const double len = norm(d);
  if (!(len > eps)) {
    throw Error(Errc::degenerate_edge,
                "zero-length direction from " + fmt_point(p) + " to " + fmt_point(q));
  }
  return {d.x / len, d.y / len};
}

double canonical_angle(double radians) {
  double a = std::fmod(radians, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi
  if (a >= kTwoPi) a = 0.0;
  return a;
}

double circular_distance(double a, double b) {
  const double d = canonical_angle(a - b);
  return std::min(d, kTwoPi - d);
}

double angle_ccw(Point v, Point p, Point q, double eps) {
  const UnitVector u = unit_toward(v, p, eps);
  const UnitVector w = unit_toward(v, q, eps);
  const double c = u.dx * w.dx + u.dy * w.dy;
  const double s = u.dx * w.dy - u.dy * w.dx;
  return canonical_angle(std::atan2(s, c));
}

std::array<double, 3> interior_angles(const Triangle& t, double eps) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const Point v = t.corners[i];
    const Point p = t.corners[(i + 1) % 3];
    const Point q = t.corners[(i + 2) % 3];
    const double a = angle_ccw(v, p, q, eps);
    out[i] = std::min(a, kTwoPi - a);
  }
  return out;
}

Point fermat_point(const Triangle& t) {
  const auto& [a, b, c] = t.corners;
  const auto angles = interior_angles(t);
  for (int i = 0; i < 3; ++i) {
    if (angles[i] >= 2.0 * kPi / 3.0 - kFermatAngleTol) {
      std::ostringstream os;
      os << "interior angle " << angles[i] << " at corner " << i << " is not below 2pi/3";
      throw Error(Errc::no_fermat_point, os.str());
    }
  }
  const Point apex_a = outward_apex(b, c, a);
  const Point apex_b = outward_apex(c, a, b);
  const Point apex_c = outward_apex(a, b, c);
  const Point x = line_intersection(a, apex_a, b, apex_b);

  const double scale = std::max({distance(a, b), distance(b, c), distance(c, a)});
  if (distance_to_line(c, apex_c, x) > 1e-9 * scale) {
    throw Error(Errc::degenerate_configuration,
                "isogonic lines are not concurrent at " + fmt_point(x));
  }
  return x;
}

Point line_intersection(Point a1, Point a2, Point b1, Point b2, double eps_par) {
  const Point da = a2 - a1;
  const Point db = b2 - b1;
  const double la = norm(da), lb = norm(db);
  if (!(la > kDegenerateEps) || !(lb > kDegenerateEps)) {
    throw Error(Errc::degenerate_edge, "line defined by coincident points");
  }
  const double denom = cross(da, db);
  if (std::abs(denom) / (la * lb) <= eps_par) {
    throw Error(Errc::parallel_lines,
                "lines through " + fmt_point(a1) + " and " + fmt_point(b1) + " are parallel");
  }
  const double t = cross(b1 - a1, db) / denom;
  return a1 + t * da;
}

double projection_parameter(Point a, Point b, Point q) {
  const Point d = b - a;
  return dot(q - a, d) / dot(d, d);
}

Point project_onto_line(Point a, Point b, Point q) {
  return a + projection_parameter(a, b, q) * (b - a);
}

double distance_to_line(Point a, Point b, Point q) {
  const Point d = b - a;
  return std::abs(cross(d, q - a)) / norm(d);
}

BoundingBox bounding_box(std::span<const Point> points) {
  if (points.empty()) return {};
  BoundingBox box{points.front(), points.front()};
  for (const Point& p : points) {
    box.min.x = std::min(box.min.x, p.x);
    box.min.y = std::min(box.min.y, p.y);
    box.max.x = std::max(box.max.x, p.x);
    box.max.y = std::max(box.max.y, p.y);
  }
  return box;
}

namespace {

struct Pairs {
  std::vector<Point> ref;
  std::vector<Point> cand;
};

Pairs matched_pairs(const PointMap& reference, const PointMap& candidate) {
  if (reference.size() != candidate.size()) {
    throw Error(Errc::id_mismatch, "reference has " + std::to_string(reference.size()) +
                                       " ids, candidate has " + std::to_string(candidate.size()));
  }
  Pairs out;
  for (const auto& [id, p] : reference) {
    const auto it = candidate.find(id);
    if (it == candidate.end()) throw Error(Errc::id_mismatch, "id '" + id + "' missing from candidate");
    out.ref.push_back(p);
    out.cand.push_back(it->second);
  }
  return out;
}

Point centroid(const std::vector<Point>& pts) {
  Point c{};
  for (const Point& p : pts) c += p;
  return c / static_cast<double>(pts.size());
}

Alignment fit(const std::vector<Point>& ref, std::vector<Point> cand, bool reflected) {
  if (reflected) {
    for (Point& p : cand) p.y = -p.y;
  }
  const Point cr = centroid(ref);
  const Point cc = centroid(cand);
  double s = 0.0, c = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const Point r = ref[i] - cr;
    const Point q = cand[i] - cc;
    c += dot(q, r);
    s += cross(q, r);
  }
  Alignment out;
  out.transform.rotation = std::atan2(s, c);
  out.transform.translation = cr - rotate(cc, out.transform.rotation);
  out.transform.reflected = reflected;
  double sq = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const Point moved = rotate(cand[i], out.transform.rotation) + out.transform.translation;
    const Point d = moved - ref[i];
    sq += dot(d, d);
  }
  out.rmsd = std::sqrt(sq / static_cast<double>(ref.size()));
  return out;
}

}  // namespace

Alignment align_rigid(const PointMap& reference, const PointMap& candidate, bool allow_reflection) {
  const Pairs pairs = matched_pairs(reference, candidate);
  if (pairs.ref.size() < 3) {
    throw Error(Errc::degenerate_configuration, "alignment needs at least 3 points");
  }
  // Collinearity: smallest principal extent relative to the largest (rounding noise sits near 1e-8).
  const Point cr = centroid(pairs.ref);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (const Point& p : pairs.ref) {
    const Point d = p - cr;
    sxx += d.x * d.x;
    syy += d.y * d.y;
    sxy += d.x * d.y;
  }
  const double mean = 0.5 * (sxx + syy);
  const double spread = std::hypot(0.5 * (sxx - syy), sxy);
  const double lmax = mean + spread;
  const double lmin = std::max(0.0, mean - spread);
  if (!(lmax > 0.0) || lmin / lmax <= 1e-12) {
    throw Error(Errc::degenerate_configuration, "reference points are collinear");
  }

  Alignment best = fit(pairs.ref, pairs.cand, false);
  if (allow_reflection) {
    Alignment mirrored = fit(pairs.ref, pairs.cand, true);
    if (mirrored.rmsd < best.rmsd) best = mirrored;
  }
  return best;
}

double rmsd_direct(const PointMap& reference, const PointMap& candidate) {
  const Pairs pairs = matched_pairs(reference, candidate);
  if (pairs.ref.empty()) return 0.0;
  double sq = 0.0;
  for (std::size_t i = 0; i < pairs.ref.size(); ++i) {
    const Point d = pairs.cand[i] - pairs.ref[i];
    sq += dot(d, d);
  }
  return std::sqrt(sq / static_cast<double>(pairs.ref.size()));
}

}  // namespace geonet
