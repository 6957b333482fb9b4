#include "geonet/angles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "geonet/error.hpp"
#include "geonet/geom.hpp"

namespace geonet {

namespace {

constexpr double kDomainSlack = 1e-12;
constexpr double kNewtonBracket = 1e-12;
constexpr int kMaxNewtonSteps = 5;

// Contributions of the two fixed directions 13pi/12 and 11pi/6.
struct FixedTerms {
  double cos_sum;
  double sin_sum;
};

const FixedTerms& fixed_terms() {
  static const FixedTerms terms{std::cos(13.0 * kPi / 12.0) + std::cos(11.0 * kPi / 6.0),
                                std::sin(13.0 * kPi / 12.0) + std::sin(11.0 * kPi / 6.0)};
  return terms;
}

double arccos_arg(double alpha) { return -1.0 - std::cos(alpha) - fixed_terms().cos_sum; }
double arcsin_arg(double alpha) { return -std::sin(alpha) - fixed_terms().sin_sum; }

double clamp_unit(double x, const char* what, double alpha) {
  if (std::abs(x) > 1.0 + kDomainSlack || std::isnan(x)) {
    std::ostringstream os;
    os.precision(17);
    os << what << " argument " << x << " outside [-1, 1] at alpha = " << alpha;
    throw Error(Errc::domain_error, os.str());
  }
  return std::clamp(x, -1.0, 1.0);
}

}  // namespace

FGH f_g_h(double alpha) {
  const double u = clamp_unit(arccos_arg(alpha), "arccos", alpha);
  const double w = clamp_unit(arcsin_arg(alpha), "arcsin", alpha);
  FGH out;
  out.f = std::acos(u);
  out.g = std::asin(w);
  out.h = out.f - out.g;
  return out;
}

double h_prime(double alpha) {
  const double u = arccos_arg(alpha);
  const double w = arcsin_arg(alpha);
  // d/da arccos(u) = -u'/sqrt(1-u^2) with u' = sin a; d/da arcsin(w) = w'/sqrt(1-w^2) with w' = -cos a
  return -std::sin(alpha) / std::sqrt(1.0 - u * u) + std::cos(alpha) / std::sqrt(1.0 - w * w);
}

double compute_K() { return kPi - std::asin(-1.0 - fixed_terms().sin_sum); }

double residual_cos(double alpha, double beta) {
  return 1.0 + std::cos(beta) + std::cos(alpha) + fixed_terms().cos_sum;
}

double residual_sin(double alpha, double beta) {
  return std::sin(beta) + std::sin(alpha) + fixed_terms().sin_sum;
}

AngleSolution solve_angles(double tol_root) {
  if (!(tol_root >= 1e-14)) {
    throw Error(Errc::invalid_argument, "tol_root must be >= 1e-14");
  }
  AngleSolution sol;
  sol.K = compute_K();

  double lo = kPi, hi = sol.K;
  const double h_lo = f_g_h(lo).h;
  const double h_hi = f_g_h(hi).h;
  if ((h_lo > 0.0) == (h_hi > 0.0)) {
    std::ostringstream os;
    os << "h(pi) = " << h_lo << " and h(K) = " << h_hi << " have the same sign";
    throw Error(Errc::bracket_failure, os.str());
  }
  const bool decreasing = h_lo > 0.0;
  auto bisect_to = [&](double width) {
    while (hi - lo > width) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double hm = f_g_h(mid).h;
      if ((hm > 0.0) == decreasing) {
        lo = mid;
      } else {
        hi = mid;
      }
      ++sol.bisection_steps;
    }
  };

  bisect_to(std::max(kNewtonBracket, tol_root));

  // Newton polish; accepted only if it stays inside the bracket and the result
  // is itself bracketed by a sign change over a tol_root-wide window.
  double x = 0.5 * (lo + hi);
  bool polished = true;
  for (int i = 0; i < kMaxNewtonSteps; ++i) {
    const double hx = f_g_h(x).h;
    if (hx == 0.0) break;
    const double next = x - hx / h_prime(x);
    ++sol.newton_steps;
    if (!(next >= lo && next <= hi)) {
      polished = false;
      break;
    }
    if (next == x) break;
    x = next;
  }
  if (polished) {
    const double half = 0.5 * tol_root;
    const double left = std::max(lo, x - half);
    const double right = std::min(hi, x + half);
    const double h_left = f_g_h(left).h;
    const double h_right = f_g_h(right).h;
    const bool bracketed = h_left == 0.0 || h_right == 0.0 || ((h_left > 0.0) != (h_right > 0.0));
    if (bracketed) {
      lo = left;
      hi = right;
    } else {
      polished = false;
    }
  }
  if (!polished) bisect_to(tol_root);

  sol.alpha = polished ? x : 0.5 * (lo + hi);
  sol.beta = f_g_h(sol.alpha).f;
  sol.residual_cos = residual_cos(sol.alpha, sol.beta);
  sol.residual_sin = residual_sin(sol.alpha, sol.beta);
  return sol;
}

double side_long(double alpha, double beta) {
  const double ta = std::tan(alpha);
  const double denom = ta * std::tan(beta) - 1.0;
  if (std::abs(denom) < 1e-9) {
    throw Error(Errc::singular_denominator, "tan(alpha) tan(beta) is 1");
  }
  return std::sqrt(6.0) * (1.0 - ta) / denom;
}

double boundary_leg(double side_long, double beta) {
  if (!(beta > 0.0 && beta < kPi / 2.0)) {
    throw Error(Errc::domain_error, "beta must lie in (0, pi/2)");
  }
  return 0.5 * side_long / std::cos(beta);
}

ConstructionParams make_construction_params(double alpha, double beta) {
  ConstructionParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.side_short = 1.0;
  p.side_long = side_long(alpha, beta);
  p.boundary_leg = boundary_leg(p.side_long, beta);
  return p;
}

ConstructionParams make_construction_params(const AngleSolution& sol) {
  return make_construction_params(sol.alpha, sol.beta);
}

}  // namespace geonet
