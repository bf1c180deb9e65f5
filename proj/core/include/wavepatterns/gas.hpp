#ifndef WAVEPATTERNS_GAS_HPP
#define WAVEPATTERNS_GAS_HPP

#include "wavepatterns/errors.hpp"

namespace wavepatterns {

/// Constants of the ideal polytropic gas with heat conduction.
/// Pressure obeys p = R*theta/v = A*v^-gamma*exp((gamma-1)*s/R) and
/// internal energy e = R/(gamma-1)*theta.
struct GasParams {
  double R = 1.0;      // gas constant
  double gamma = 5.0 / 3.0;  // adiabatic exponent, > 1
  double A = 1.0;      // entropy normalization
  double kappa = 1.0;  // heat conduction coefficient
};

/// Throws DomainError unless R, A, kappa > 0 and gamma > 1.
void validate(const GasParams& gp);

/// Pointwise gas state in Lagrangian variables.
struct ThermoState {
  double v = 1.0;      // specific volume, > 0
  double u = 0.0;      // velocity
  double theta = 1.0;  // temperature, > 0
};

void validate(const ThermoState& z);

enum class Family : int { k1 = 1, k3 = 3 };

double pressure(const GasParams& gp, double v, double theta);
double internal_energy(const GasParams& gp, double theta);

/// s(v, theta) = R/(gamma-1) * ln(R*theta/A) + R * ln v.
double entropy(const GasParams& gp, double v, double theta);

/// Inverse of entropy() in theta at fixed v.
double theta_from_entropy(const GasParams& gp, double v, double s);

/// Pressure along an isentrope: p = A v^-gamma exp((gamma-1) s / R).
double pressure_isentropic(const GasParams& gp, double v, double s);

/// Specific volume with p(v, s) = p on the isentrope s.
double volume_from_pressure(const GasParams& gp, double p, double s);

/// Characteristic speed lambda_1 = -sqrt(gamma p / v) (family 1) or its
/// mirror lambda_3 = +sqrt(gamma p / v) (family 3), at entropy s.
double char_speed(const GasParams& gp, double v, double s, Family family);

/// d lambda / dv at fixed entropy.
double char_speed_dv(const GasParams& gp, double v, double s, Family family);

/// d^2 lambda / dv^2 at fixed entropy.
double char_speed_dvv(const GasParams& gp, double v, double s, Family family);

/// Specific volume with char_speed(v, s, family) = w. Requires w < 0 for
/// family 1 and w > 0 for family 3.
double volume_from_char_speed(const GasParams& gp, double w, double s,
                              Family family);

/// Closed form of the curve integral  int_{v_from}^{v_to} lambda(eta, s) deta.
/// The integrand is a pure power law in eta, so the antiderivative is exact.
double rarefaction_velocity_integral(const GasParams& gp, double v_from,
                                     double v_to, double s, Family family);

}  // namespace wavepatterns

#endif
