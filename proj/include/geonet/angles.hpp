#pragma once

// The transcendental angle system that balances the irregular degree-5
// vertices of the 25-vertex net, and the lengths derived from its solution.
//
// The pair (alpha, beta) solves
//   1 + cos(beta) + cos(alpha) + cos(13pi/12) + cos(11pi/6) = 0
//       sin(beta) + sin(alpha) + sin(13pi/12) + sin(11pi/6) = 0
// with alpha in (pi, 13pi/12) and beta in (0, pi/2). Eliminating beta gives
// h(alpha) = f(alpha) - g(alpha) = 0 with f from the cosine row (arccos) and g
// from the sine row (arcsin); h is strictly decreasing on [pi, K].

namespace geonet {

struct FGH {
  double f = 0.0;
  double g = 0.0;
  double h = 0.0;
};

struct AngleSolution {
  double alpha = 0.0;
  double beta = 0.0;
  double K = 0.0;
  double residual_cos = 0.0;
  double residual_sin = 0.0;
  int bisection_steps = 0;
  int newton_steps = 0;
};

struct ConstructionParams {
  double alpha = 0.0;
  double beta = 0.0;
  double side_short = 1.0;
  double side_long = 0.0;
  double boundary_leg = 0.0;
};

/// Throws Errc::domain_error when an inverse-trig argument leaves [-1, 1] by more than 1e-12.
FGH f_g_h(double alpha);

/// Analytic derivative of h on (pi, K).
double h_prime(double alpha);

/// Upper end of the interval on which the arcsin argument stays <= 1.
double compute_K();

/// Residuals of the two defining equations at (alpha, beta).
double residual_cos(double alpha, double beta);
double residual_sin(double alpha, double beta);

/// Bisection on h over [pi, K] to a 1e-12 bracket, Newton polish inside the
/// bracket, and a plain bisection fallback down to tol_root.
/// Throws Errc::invalid_argument for tol_root < 1e-14, Errc::bracket_failure if
/// h does not change sign.
AngleSolution solve_angles(double tol_root = 1e-14);

/// d(a_i1, a_i2) = sqrt(6)(1 - tan a) / (tan a tan b - 1).
/// Throws Errc::singular_denominator when |tan a tan b - 1| < 1e-9.
double side_long(double alpha, double beta);

/// Leg of the isosceles boundary triangle with base side_long and base angles beta.
/// Throws Errc::domain_error for beta outside (0, pi/2).
double boundary_leg(double side_long, double beta);

/// Throws whatever side_long/boundary_leg throw.
ConstructionParams make_construction_params(const AngleSolution& sol);
ConstructionParams make_construction_params(double alpha, double beta);

}  // namespace geonet
