#include "wavepatterns/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavepatterns/errors.hpp"

namespace wavepatterns {

bool is_pure_contact(const GasParams& gp, const ThermoState& z_minus,
                     const ThermoState& z_plus) {
  validate(z_minus);
  validate(z_plus);
  const double p_minus = pressure(gp, z_minus.v, z_minus.theta);
  const double p_plus = pressure(gp, z_plus.v, z_plus.theta);
  const double uscale = std::max({1.0, std::abs(z_minus.u), std::abs(z_plus.u)});
  const double pscale = std::max(p_minus, p_plus);
  return std::abs(z_minus.u - z_plus.u) <= 1e-12 * uscale &&
         std::abs(p_minus - p_plus) <= 1e-12 * pscale;
}

namespace {

struct Match {
  double pressure;  // p(v1, s-) - p(v2, s+)
  double velocity;  // u_m from the 1-curve minus u_m from the 3-curve
};

double norm(const Match& m) {
  return std::max(std::abs(m.pressure), std::abs(m.velocity));
}

}  // namespace

WavePattern decompose(const GasParams& gp, const ThermoState& z_minus,
                      const ThermoState& z_plus, double tol) {
  validate(gp);
  validate(z_minus);
  validate(z_plus);

  WavePattern pat;
  pat.z_minus = z_minus;
  pat.z_plus = z_plus;
  pat.s_minus = entropy(gp, z_minus.v, z_minus.theta);
  pat.s_plus = entropy(gp, z_plus.v, z_plus.theta);
  pat.delta = std::abs(z_plus.theta - z_minus.theta);

  auto eval = [&](double v1, double v2) -> Match {
    Match m;
    m.pressure = pressure_isentropic(gp, v1, pat.s_minus) -
                 pressure_isentropic(gp, v2, pat.s_plus);
    const double u_from_1 =
        z_minus.u -
        rarefaction_velocity_integral(gp, z_minus.v, v1, pat.s_minus,
                                      Family::k1);
    const double u_from_3 =
        z_plus.u -
        rarefaction_velocity_integral(gp, z_plus.v, v2, pat.s_plus,
                                      Family::k3);
    m.velocity = u_from_1 - u_from_3;
    return m;
  };

  double v1 = z_minus.v, v2 = z_plus.v;
  const double v_floor = 0.05 * std::min(z_minus.v, z_plus.v);
  Match m = eval(v1, v2);
  double res = norm(m);
  bool converged = res <= tol;

  for (int it = 0; it < 60 && !converged; ++it) {
    // Finite-difference Jacobian.
    const double h1 = 1e-7 * std::max(v1, 1e-2);
    const double h2 = 1e-7 * std::max(v2, 1e-2);
    const Match m1 = eval(v1 + h1, v2);
    const Match m2 = eval(v1, v2 + h2);
    const double j11 = (m1.pressure - m.pressure) / h1;
    const double j12 = (m2.pressure - m.pressure) / h2;
    const double j21 = (m1.velocity - m.velocity) / h1;
    const double j22 = (m2.velocity - m.velocity) / h2;
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det)) break;
    const double d1 = (-m.pressure * j22 + m.velocity * j12) / det;
    const double d2 = (-j11 * m.velocity + j21 * m.pressure) / det;

    double lambda = 1.0;
    bool improved = false;
    for (int back = 0; back < 12; ++back) {
      const double t1 = std::max(v1 + lambda * d1, v_floor);
      const double t2 = std::max(v2 + lambda * d2, v_floor);
      const Match mt = eval(t1, t2);
      if (norm(mt) < (1.0 - 0.25 * lambda) * res || norm(mt) <= tol) {
        v1 = t1;
        v2 = t2;
        m = mt;
        res = norm(m);
        improved = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!improved) break;
    converged = res <= tol;
  }

  if (!converged) {
    // Nested bisection on p_m: the velocity mismatch is monotone in p_m.
    auto mismatch = [&](double p) {
      return eval(volume_from_pressure(gp, p, pat.s_minus),
                  volume_from_pressure(gp, p, pat.s_plus))
          .velocity;
    };
    const double p_minus = pressure(gp, z_minus.v, z_minus.theta);
    const double p_plus = pressure(gp, z_plus.v, z_plus.theta);
    double hi = std::min(p_minus, p_plus);  // expansion lowers the pressure
    double lo = hi;
    double f_hi = mismatch(hi);
    double f_lo = f_hi;
    for (int k = 0; k < 200 && f_lo <= 0.0; ++k) {
      lo *= 0.5;
      f_lo = mismatch(lo);
    }
    for (int k = 0; k < 200 && f_hi >= 0.0; ++k) {
      hi *= 2.0;
      f_hi = mismatch(hi);
    }
    if (!(f_lo > 0.0 && f_hi < 0.0))
      throw SolverError("decompose: failed to bracket the common pressure",
                        res);
    for (int k = 0; k < 200 && (hi - lo) > 1e-16 * hi; ++k) {
      const double mid = 0.5 * (lo + hi);
      (mismatch(mid) > 0.0 ? lo : hi) = mid;
    }
    const double p = 0.5 * (lo + hi);
    v1 = volume_from_pressure(gp, p, pat.s_minus);
    v2 = volume_from_pressure(gp, p, pat.s_plus);
    m = eval(v1, v2);
    res = norm(m);
    if (res > std::max(tol, 1e-11))
      throw SolverError("decompose: bisection fallback did not converge", res);
  }

  pat.p_m = pressure_isentropic(gp, v1, pat.s_minus);
  pat.u_m = z_minus.u - rarefaction_velocity_integral(gp, z_minus.v, v1,
                                                      pat.s_minus, Family::k1);
  pat.z_minus_m = {v1, pat.u_m, theta_from_entropy(gp, v1, pat.s_minus)};
  pat.z_plus_m = {v2, pat.u_m, theta_from_entropy(gp, v2, pat.s_plus)};
  pat.pressure_residual = std::abs(m.pressure);
  pat.velocity_residual = std::abs(m.velocity);

  // Rarefaction ordering certifies the data belong to the supported class;
  // equality is the degenerate zero-strength wave for pure contact data.
  const double slack = 1e-12 * std::max(1.0, std::abs(z_minus.v));
  if (v1 < z_minus.v - slack)
    throw ConfigError(
        "decompose: lambda_1(v_minus_m) > lambda_1(v_minus) violated; data "
        "carry a 1-shock, not a 1-rarefaction");
  if (v2 < z_plus.v - slack)
    throw ConfigError(
        "decompose: lambda_3(v_plus) > lambda_3(v_plus_m) violated; data "
        "carry a 3-shock, not a 3-rarefaction");
  return pat;
}

}  // namespace wavepatterns
