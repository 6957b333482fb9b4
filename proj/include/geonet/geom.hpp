#pragma once

// Plane geometry primitives shared by the net model, the construction and the
// verifiers. Everything here is a pure function of its arguments.

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <span>
#include <string>

namespace geonet {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Absolute degeneracy guard used when no coordinate scale is known.
inline constexpr double kDegenerateEps = 1e-12;
/// Threshold on the normalized cross product below which two lines are parallel.
inline constexpr double kParallelEps = 1e-12;
/// Slack on interior angles when deciding whether a Fermat point exists.
inline constexpr double kFermatAngleTol = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
  Point& operator+=(Point b) {
    x += b.x;
    y += b.y;
    return *this;
  }
  Point& operator-=(Point b) {
    x -= b.x;
    y -= b.y;
    return *this;
  }
  friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
/// Counterclockwise rotation by `angle` radians about the origin.
inline Point rotate(Point a, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}
inline Point rotate_about(Point a, Point center, double angle) {
  return center + rotate(a - center, angle);
}
inline Point polar(double radius, double angle) {
  return {radius * std::cos(angle), radius * std::sin(angle)};
}
inline bool is_finite(Point a) { return std::isfinite(a.x) && std::isfinite(a.y); }

struct UnitVector {
  double dx = 1.0;
  double dy = 0.0;

  Point as_point() const { return {dx, dy}; }
  /// Polar angle in [0, 2pi).
  double angle() const;
};

struct Triangle {
  std::array<Point, 3> corners;
};

/// Unit direction from p toward q. Throws Errc::degenerate_edge when d(p, q) <= eps.
UnitVector unit_toward(Point p, Point q, double eps = kDegenerateEps);

/// Map any angle into [0, 2pi).
double canonical_angle(double radians);
/// Shortest distance between two angles on the circle, in [0, pi].
double circular_distance(double a, double b);

/// Counterclockwise angle at v from the direction toward p to the direction toward q, in [0, 2pi).
double angle_ccw(Point v, Point p, Point q, double eps = kDegenerateEps);

/// Interior angles of a triangle, in corner order.
std::array<double, 3> interior_angles(const Triangle& t, double eps = kDegenerateEps);

/// Isogonic (Fermat) point via the outward-equilateral construction.
/// Throws Errc::no_fermat_point if some interior angle is >= 2pi/3 - kFermatAngleTol.
Point fermat_point(const Triangle& t);

/// Intersection of the infinite lines through (a1, a2) and (b1, b2).
Point line_intersection(Point a1, Point a2, Point b1, Point b2, double eps_par = kParallelEps);

/// Parameter t of the orthogonal projection of q onto the line a + t (b - a).
double projection_parameter(Point a, Point b, Point q);
Point project_onto_line(Point a, Point b, Point q);
double distance_to_line(Point a, Point b, Point q);

struct BoundingBox {
  Point min{};
  Point max{};
  double diagonal() const { return distance(min, max); }
};
BoundingBox bounding_box(std::span<const Point> points);

/// Proper rigid motion, optionally preceded by the reflection (x, y) -> (x, -y).
struct RigidTransform {
  double rotation = 0.0;
  Point translation{};
  bool reflected = false;

  Point apply(Point p) const {
    if (reflected) p.y = -p.y;
    return rotate(p, rotation) + translation;
  }
};

struct Alignment {
  RigidTransform transform;  // maps candidate onto reference
  double rmsd = 0.0;
};

using PointMap = std::map<std::string, Point>;

/// Least-squares rigid alignment of `candidate` onto `reference` over matching ids.
/// With allow_reflection the mirrored fit is also tried and kept when strictly better.
/// Throws Errc::id_mismatch or Errc::degenerate_configuration.
Alignment align_rigid(const PointMap& reference, const PointMap& candidate,
                      bool allow_reflection = false);

/// Root-mean-square distance over matching ids, without any alignment.
double rmsd_direct(const PointMap& reference, const PointMap& candidate);

}  // namespace geonet
