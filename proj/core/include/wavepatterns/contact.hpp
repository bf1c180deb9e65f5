#ifndef WAVEPATTERNS_CONTACT_HPP
#define WAVEPATTERNS_CONTACT_HPP

#include <vector>

#include "wavepatterns/fit.hpp"
#include "wavepatterns/gas.hpp"
#include "wavepatterns/wave_eval.hpp"

namespace wavepatterns {

/// Self-similar temperature profile of the contact layer.
///
/// The temperature solves the nonlinear diffusion problem
///     theta_t = a (theta_x / theta)_x,   a = kappa p+ (gamma-1) / (gamma R^2),
/// whose similarity form in xi = x / sqrt(1+t) is the two-point BVP
///     -(xi/2) theta' = a (theta'/theta)',  theta(-inf/+inf) = theta-/theta+.
/// The full wave is then
///     Theta = theta(xi),  V = (R/p+) theta,  U = u- + b theta_x / theta,
/// with b = kappa (gamma-1) / (gamma R), which keeps R*Theta/V = p+ exactly.
struct ContactProfile {
  double theta_minus = 1.0;
  double theta_plus = 1.0;
  double p_plus = 1.0;
  double u_minus = 0.0;
  double a = 0.0;       // diffusion coefficient of the similarity ODE
  double b = 0.0;       // velocity coefficient kappa (gamma-1) / (gamma R)
  double xi_max = 12.0;
  double h = 0.0;       // node spacing of the xi table
  std::vector<double> theta;        // theta(xi_i) on the uniform grid
  std::vector<double> theta_prime;  // d theta / d xi at the nodes

  // solve metadata
  double residual = 0.0;  // max-norm discrete ODE residual at the solution
  int iterations = 0;

  double delta() const { return theta_plus > theta_minus
                                    ? theta_plus - theta_minus
                                    : theta_minus - theta_plus; }
  bool constant_profile() const { return theta_plus == theta_minus; }
  int nodes() const { return static_cast<int>(theta.size()); }
  double xi_at(int i) const { return -xi_max + h * i; }

  /// Cubic Hermite evaluation; constants outside [-xi_max, xi_max].
  double theta_hat(double xi) const;
  double theta_hat_prime(double xi) const;
  /// Second derivative through the ODE identity
  /// theta'' = theta'^2/theta - xi theta'/(2a), exact on the solution.
  double theta_hat_second(double xi) const;
};

/// Solves the similarity BVP by damped Newton iteration on a second-order
/// central discretization of a (ln theta)'' + (xi/2) theta' = 0.
/// Throws SolverError on non-convergence and TruncationError when the
/// profile is not flat at +-xi_max.
ContactProfile solve_selfsimilar(const GasParams& gp, double theta_minus,
                                 double theta_plus, double p_plus,
                                 double xi_max = 12.0, int grid_points = 4001,
                                 double tol = 1e-10, double u_minus = 0.0);

/// Evaluates (V^c, U^c, Theta^c) and derivatives; t >= 0 required.
/// All derivative fields come from the chain rule in xi = x/sqrt(1+t) plus
/// the ODE identity for the second derivative, so the wave's own balance
/// laws hold pointwise to interpolation accuracy.
WaveEval eval_contact(const ContactProfile& profile, const GasParams& gp,
                      double x, double t);

struct EnvelopeFit {
  double C = 0.0;          // prefactor in |f| <= C * delta * exp(-c xi^2)
  double c = 0.0;          // Gaussian decay rate
  double r_squared = 0.0;
  int n = 0;               // samples used
};

/// Gaussian-envelope fits of the profile deviation, slope and curvature on
/// each half-line |xi| > 1.
struct ContactDecayReport {
  bool constant_profile = false;  // identically zero deviation; no fits
  double delta = 0.0;
  EnvelopeFit deviation_left, deviation_right;
  EnvelopeFit slope_left, slope_right;
  EnvelopeFit curvature_left, curvature_right;

  double min_c() const;
  double min_r_squared() const;
  double max_C() const;
};

/// Throws DiagnosticError when a fit is degenerate (fewer than 10 usable
/// tail samples).
ContactDecayReport check_contact_decay(const ContactProfile& profile);

}  // namespace wavepatterns

#endif
