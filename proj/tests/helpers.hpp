#ifndef WAVEPATTERNS_TEST_HELPERS_HPP
#define WAVEPATTERNS_TEST_HELPERS_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "wavepatterns/composite.hpp"
#include "wavepatterns/gas.hpp"
#include "wavepatterns/riemann.hpp"

namespace wavepatterns::testing {

// Adaptive Simpson quadrature, used as the independent oracle for every
// closed-form integral in the library.
inline double adaptive_simpson_rec(const std::function<double(double)>& f,
                                   double a, double b, double fa, double fm,
                                   double fb, double whole, double tol,
                                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol,
                              depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol,
                              depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double tol = 1e-13,
                               int depth = 48) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Explicit finite-difference integrator for theta_t = a (theta_x/theta)_x
// with Dirichlet ends; the independent oracle for the self-similar layer.
inline std::vector<double> integrate_log_diffusion(std::vector<double> theta,
                                                   double a, double dx,
                                                   double t_final) {
  const int n = static_cast<int>(theta.size());
  std::vector<double> next = theta;
  double t = 0.0;
  const double theta_min = *std::min_element(theta.begin(), theta.end());
  const double dt_max = 0.2 * dx * dx * theta_min / a;
  while (t < t_final) {
    const double dt = std::min(dt_max, t_final - t);
    for (int i = 1; i < n - 1; ++i) {
      const double flux_r =
          (theta[i + 1] - theta[i]) / (0.5 * (theta[i + 1] + theta[i]));
      const double flux_l =
          (theta[i] - theta[i - 1]) / (0.5 * (theta[i] + theta[i - 1]));
      next[i] = theta[i] + dt * a * (flux_r - flux_l) / (dx * dx);
    }
    theta.swap(next);
    t += dt;
  }
  return theta;
}

// Reference configuration used across the suites: a mild 1-rarefaction,
// a contact jump, and a mild 3-rarefaction with theta_plus pinned so the
// overall strength |theta_plus - theta_minus| is exact.
struct ReferenceStates {
  GasParams gp;
  ThermoState z_minus, z_plus;
  // forward-construction intermediates, for recovery checks
  double v_minus_m, v_plus_m, u_m, p_m;
};

inline ReferenceStates reference_states(double v1m_factor = 1.05,
                                        double r3_factor = 1.05,
                                        double theta_plus = 1.1) {
  ReferenceStates r;
  r.gp = GasParams{1.0, 5.0 / 3.0, 1.0, 1.0};
  r.z_minus = ThermoState{1.0, 0.0, 1.0};
  const double g1 = r.gp.gamma - 1.0;
  const double s_minus = entropy(r.gp, r.z_minus.v, r.z_minus.theta);

  r.v_minus_m = r.z_minus.v * v1m_factor;
  const double theta_mm = theta_from_entropy(r.gp, r.v_minus_m, s_minus);
  r.p_m = r.gp.R * theta_mm / r.v_minus_m;
  r.u_m = r.z_minus.u - rarefaction_velocity_integral(
                            r.gp, r.z_minus.v, r.v_minus_m, s_minus,
                            Family::k1);

  const double theta_pm = theta_plus * std::pow(r3_factor, -g1);
  r.v_plus_m = r.gp.R * theta_pm / r.p_m;
  const double s_plus = entropy(r.gp, r.v_plus_m, theta_pm);
  r.z_plus.v = r.v_plus_m / r3_factor;
  r.z_plus.theta = theta_from_entropy(r.gp, r.z_plus.v, s_plus);
  r.z_plus.u = r.u_m + rarefaction_velocity_integral(
                           r.gp, r.z_plus.v, r.v_plus_m, s_plus, Family::k3);
  return r;
}

inline ReferenceStates pure_contact_states(double theta_plus = 1.1) {
  ReferenceStates r;
  r.gp = GasParams{1.0, 5.0 / 3.0, 1.0, 1.0};
  r.z_minus = ThermoState{1.0, 0.0, 1.0};
  r.z_plus = ThermoState{theta_plus, 0.0, theta_plus};  // p = 1 on both sides
  r.v_minus_m = r.z_minus.v;
  r.v_plus_m = r.z_plus.v;
  r.u_m = 0.0;
  r.p_m = 1.0;
  return r;
}

}  // namespace wavepatterns::testing

#endif
