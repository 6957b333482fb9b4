#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "geonet/error.hpp"
#include "geonet/geom.hpp"

using namespace geonet;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a geonet::Error");
  return Errc::invalid_argument;
}

// Geometric median by fixed-point reweighting; independent of the isogonic construction.
Point weiszfeld(const Triangle& t) {
  Point x = (t.corners[0] + t.corners[1] + t.corners[2]) / 3.0;
  for (int it = 0; it < 200000; ++it) {
    Point num{};
    double den = 0.0;
    for (const Point& c : t.corners) {
      const double d = distance(x, c);
      num += c / d;
      den += 1.0 / d;
    }
    const Point next = num / den;
    if (distance(next, x) < 1e-16) return next;
    x = next;
  }
  return x;
}

}  // namespace

TEST_CASE("unit_toward") {
  const UnitVector a = unit_toward({0, 0}, {2, 0});
  CHECK(a.dx == 1.0);
  CHECK(a.dy == 0.0);
  const UnitVector b = unit_toward({0, 0}, {1, 1});
  CHECK(b.dx == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
  CHECK(b.dy == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
  CHECK(code_of([] { unit_toward({0, 0}, {0, 0}); }) == Errc::degenerate_edge);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int k = 0; k < 200; ++k) {
    const Point p{u(rng), u(rng)}, q{u(rng), u(rng)};
    const UnitVector f = unit_toward(p, q), r = unit_toward(q, p);
    CHECK(f.dx == -r.dx);
    CHECK(f.dy == -r.dy);
    CHECK(std::abs(std::hypot(f.dx, f.dy) - 1.0) < 1e-12);
  }
}

TEST_CASE("angle_ccw and canonical angles") {
  CHECK(angle_ccw({0, 0}, {1, 0}, {0, 1}) == doctest::Approx(kPi / 2));
  CHECK(angle_ccw({0, 0}, {0, 1}, {1, 0}) == doctest::Approx(3 * kPi / 2));
  CHECK(angle_ccw({0, 0}, {1, 0}, {1, 0}) == 0.0);
  CHECK(code_of([] { angle_ccw({0, 0}, {0, 0}, {1, 0}); }) == Errc::degenerate_edge);
  CHECK(canonical_angle(-kPi / 2) == doctest::Approx(3 * kPi / 2));
  CHECK(canonical_angle(5 * kPi) == doctest::Approx(kPi));
  CHECK(circular_distance(0.1, kTwoPi - 0.1) == doctest::Approx(0.2));
}

TEST_CASE("fermat_point") {
  SUBCASE("equilateral triangle gives the centroid") {
    const Point x = fermat_point(Triangle{{Point{0, 0}, Point{1, 0}, Point{0.5, std::sqrt(3.0) / 2}}});
    CHECK(x.x == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(x.y == doctest::Approx(std::sqrt(3.0) / 6).epsilon(1e-14));
  }
  SUBCASE("figure triangle a21 a22 p") {
    const Point x = fermat_point(Triangle{{Point{1.9780798571642149, 1.2247448713915854},
                                           Point{1.9780798571642162, 1.9780798571642115},
                                           Point{0.3766674928863143, 1.6014123642779008}}});
    CHECK(distance(x, {1.7606107787513212, 1.6014123642778983}) < 1e-9);
  }
  SUBCASE("150 degree corner has no Fermat point") {
    const Point apex{0, 0};
    const Triangle t{{apex, polar(1.0, 0.0), polar(1.0, 150.0 * kPi / 180.0)}};
    CHECK(code_of([&] { fermat_point(t); }) == Errc::no_fermat_point);
  }
  SUBCASE("corner directions are 2pi/3 apart, permutation invariant") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1, 1);
    int tested = 0;
    while (tested < 200) {
      const Triangle t{{Point{u(rng), u(rng)}, Point{u(rng), u(rng)}, Point{u(rng), u(rng)}}};
      const auto ang = interior_angles(t);
      if (*std::max_element(ang.begin(), ang.end()) > 2 * kPi / 3 - 0.05 ||
          *std::min_element(ang.begin(), ang.end()) < 0.05) {
        continue;
      }
      ++tested;
      const Point x = fermat_point(t);
      for (int k = 0; k < 3; ++k) {
        const double a = angle_ccw(x, t.corners[k], t.corners[(k + 1) % 3]);
        CHECK(circular_distance(std::min(a, kTwoPi - a), 2 * kPi / 3) < 1e-10);
      }
      const Point y = fermat_point(Triangle{{t.corners[2], t.corners[0], t.corners[1]}});
      CHECK(distance(x, y) < 1e-10);
    }
  }
}

TEST_CASE("fermat_point agrees with a geometric-median minimizer on random triangles") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-1, 1);
  int tested = 0;
  double worst = 0.0;
  while (tested < 1000) {
    const Triangle t{{Point{u(rng), u(rng)}, Point{u(rng), u(rng)}, Point{u(rng), u(rng)}}};
    const auto ang = interior_angles(t);
    if (*std::max_element(ang.begin(), ang.end()) > 2 * kPi / 3 - 0.05 ||
        *std::min_element(ang.begin(), ang.end()) < 0.05) {
      continue;
    }
    ++tested;
    worst = std::max(worst, distance(fermat_point(t), weiszfeld(t)));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("line_intersection") {
  const Point x = line_intersection({0, 0}, {1, 1}, {0, 1}, {1, 0});
  CHECK(x.x == doctest::Approx(0.5));
  CHECK(x.y == doctest::Approx(0.5));
  CHECK(code_of([] { line_intersection({0, 0}, {1, 0}, {0, 1}, {1, 1}); }) == Errc::parallel_lines);

  const Point c = line_intersection({0.753334985772626, 0}, {7.269540714670677, 1.6014123642778986},
                                    {1.9780798571642149, 1.2247448713915854}, {0.376667492886313, -5.291460857506463});
  CHECK(distance(c, {1.7364669163212336, 0.24161294084298132}) < 1e-9);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-100, 100);
  for (int k = 0; k < 200; ++k) {
    const Point a1{u(rng), u(rng)}, a2{u(rng), u(rng)}, b1{u(rng), u(rng)}, b2{u(rng), u(rng)};
    const Point p = line_intersection(a1, a2, b1, b2);
    const double scale = std::max({1.0, std::abs(p.x), std::abs(p.y)});
    CHECK(distance_to_line(a1, a2, p) < 1e-10 * scale);
    CHECK(distance_to_line(b1, b2, p) < 1e-10 * scale);
  }
}

TEST_CASE("align_rigid") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5, 5);
  PointMap ref;
  for (int k = 0; k < 12; ++k) ref["v" + std::to_string(k)] = {u(rng), u(rng)};

  SUBCASE("identical maps") { CHECK(align_rigid(ref, ref).rmsd == 0.0); }

  SUBCASE("rotation by pi/3 plus translation") {
    PointMap moved;
    for (const auto& [id, p] : ref) moved[id] = rotate(p, kPi / 3) + Point{2.5, -1.0};
    const Alignment a = align_rigid(ref, moved);
    CHECK(a.rmsd < 1e-12);
    CHECK_FALSE(a.transform.reflected);
  }

  SUBCASE("random rigid motions") {
    for (int trial = 0; trial < 50; ++trial) {
      const double theta = u(rng);
      const Point shift{u(rng), u(rng)};
      PointMap moved;
      for (const auto& [id, p] : ref) moved[id] = rotate(p, theta) + shift;
      CHECK(align_rigid(ref, moved).rmsd < 1e-12);
    }
  }

  SUBCASE("jitter of at most 1e-3 gives rmsd at most 1e-3") {
    std::uniform_real_distribution<double> j(-1e-3 / std::sqrt(2.0), 1e-3 / std::sqrt(2.0));
    PointMap moved;
    for (const auto& [id, p] : ref) moved[id] = p + Point{j(rng), j(rng)};
    const double direct = rmsd_direct(ref, moved);
    const double fitted = align_rigid(ref, moved).rmsd;
    CHECK(direct <= 1e-3);
    CHECK(fitted <= direct + 1e-15);
  }

  SUBCASE("mirror image needs the reflection flag") {
    PointMap mirrored;
    for (const auto& [id, p] : ref) mirrored[id] = {p.x, -p.y};
    CHECK(align_rigid(ref, mirrored).rmsd > 1e-3);
    const Alignment a = align_rigid(ref, mirrored, true);
    CHECK(a.rmsd < 1e-12);
    CHECK(a.transform.reflected);
  }

  SUBCASE("errors") {
    PointMap other = ref;
    other.erase(other.begin());
    CHECK(code_of([&] { align_rigid(ref, other); }) == Errc::id_mismatch);
    const PointMap line{{"a", {0, 0}}, {"b", {1, 1}}, {"c", {2, 2}}};
    CHECK(code_of([&] { align_rigid(line, line); }) == Errc::degenerate_configuration);
    const PointMap two{{"a", {0, 0}}, {"b", {1, 1}}};
    CHECK(code_of([&] { align_rigid(two, two); }) == Errc::degenerate_configuration);
  }
}
