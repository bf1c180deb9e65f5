#include "wavepatterns/gas.hpp"

#include <cmath>
#include <string>

namespace wavepatterns {

void validate(const GasParams& gp) {
  if (!(gp.R > 0.0)) throw DomainError("GasParams: R must be > 0");
  if (!(gp.gamma > 1.0)) throw DomainError("GasParams: gamma must be > 1");
  if (!(gp.A > 0.0)) throw DomainError("GasParams: A must be > 0");
  if (!(gp.kappa > 0.0)) throw DomainError("GasParams: kappa must be > 0");
}

void validate(const ThermoState& z) {
  if (!(z.v > 0.0))
    throw DomainError("ThermoState: v must be > 0, got " + std::to_string(z.v));
  if (!(z.theta > 0.0))
    throw DomainError("ThermoState: theta must be > 0, got " +
                      std::to_string(z.theta));
}

namespace {
void require_positive(double v, double theta) {
  if (!(v > 0.0)) throw DomainError("gas: v must be > 0");
  if (!(theta > 0.0)) throw DomainError("gas: theta must be > 0");
}
}  // namespace

double pressure(const GasParams& gp, double v, double theta) {
  require_positive(v, theta);
  return gp.R * theta / v;
}

double internal_energy(const GasParams& gp, double theta) {
  if (!(theta > 0.0)) throw DomainError("gas: theta must be > 0");
  return gp.R / (gp.gamma - 1.0) * theta;
}

double entropy(const GasParams& gp, double v, double theta) {
  require_positive(v, theta);
  return gp.R / (gp.gamma - 1.0) * std::log(gp.R * theta / gp.A) +
         gp.R * std::log(v);
}

double theta_from_entropy(const GasParams& gp, double v, double s) {
  if (!(v > 0.0)) throw DomainError("gas: v must be > 0");
  const double g1 = gp.gamma - 1.0;
  return gp.A / gp.R * std::exp(g1 * s / gp.R) * std::pow(v, -g1);
}

double pressure_isentropic(const GasParams& gp, double v, double s) {
  if (!(v > 0.0)) throw DomainError("gas: v must be > 0");
  return gp.A * std::pow(v, -gp.gamma) * std::exp((gp.gamma - 1.0) * s / gp.R);
}

double volume_from_pressure(const GasParams& gp, double p, double s) {
  if (!(p > 0.0)) throw DomainError("gas: pressure must be > 0");
  return std::pow(gp.A * std::exp((gp.gamma - 1.0) * s / gp.R) / p,
                  1.0 / gp.gamma);
}

namespace {
// lambda_3(v, s) = K(s) * v^-(gamma+1)/2 with K > 0; lambda_1 = -lambda_3.
double speed_prefactor(const GasParams& gp, double s) {
  return std::sqrt(gp.gamma * gp.A) *
         std::exp((gp.gamma - 1.0) * s / (2.0 * gp.R));
}
}  // namespace

double char_speed(const GasParams& gp, double v, double s, Family family) {
  if (!(v > 0.0)) throw DomainError("gas: v must be > 0");
  const double m = 0.5 * (gp.gamma + 1.0);
  const double lam3 = speed_prefactor(gp, s) * std::pow(v, -m);
  return family == Family::k1 ? -lam3 : lam3;
}

double char_speed_dv(const GasParams& gp, double v, double s, Family family) {
  const double m = 0.5 * (gp.gamma + 1.0);
  return -m / v * char_speed(gp, v, s, family);
}

double char_speed_dvv(const GasParams& gp, double v, double s, Family family) {
  const double m = 0.5 * (gp.gamma + 1.0);
  return m * (m + 1.0) / (v * v) * char_speed(gp, v, s, family);
}

double volume_from_char_speed(const GasParams& gp, double w, double s,
                              Family family) {
  const double mag = family == Family::k1 ? -w : w;
  if (!(mag > 0.0))
    throw DomainError("gas: characteristic speed has the wrong sign for the "
                      "requested family");
  const double m = 0.5 * (gp.gamma + 1.0);
  return std::pow(speed_prefactor(gp, s) / mag, 1.0 / m);
}

double rarefaction_velocity_integral(const GasParams& gp, double v_from,
                                     double v_to, double s, Family family) {
  if (!(v_from > 0.0) || !(v_to > 0.0))
    throw DomainError("gas: integration limits must be > 0");
  // int eta^-(gamma+1)/2 deta = -2/(gamma-1) * eta^-(gamma-1)/2
  const double g1 = gp.gamma - 1.0;
  const double base = speed_prefactor(gp, s) * 2.0 / g1 *
                      (std::pow(v_from, -0.5 * g1) - std::pow(v_to, -0.5 * g1));
  return family == Family::k1 ? -base : base;
}

}  // namespace wavepatterns
