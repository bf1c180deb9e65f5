#ifndef WAVEPATTERNS_RIEMANN_HPP
#define WAVEPATTERNS_RIEMANN_HPP

#include "wavepatterns/gas.hpp"

namespace wavepatterns {

/// 1-rarefaction / contact / 3-rarefaction decomposition of a pair of end
/// states. The intermediate states share pressure p_m and velocity u_m; each
/// lies on the isentrope through its end state.
struct WavePattern {
  ThermoState z_minus, z_plus;
  ThermoState z_minus_m, z_plus_m;
  double p_m = 0.0;
  double u_m = 0.0;
  double s_minus = 0.0, s_plus = 0.0;
  double delta = 0.0;  // wave strength |theta_plus - theta_minus|

  // residuals of the pressure / velocity matching at the solution
  double pressure_residual = 0.0;
  double velocity_residual = 0.0;
};

/// True iff velocities and pressures of the two states agree to 1e-12
/// relative (the data carry a pure contact discontinuity).
bool is_pure_contact(const GasParams& gp, const ThermoState& z_minus,
                     const ThermoState& z_plus);

/// Solves for (v_minus_m, v_plus_m) from the pressure match
/// p(v_minus_m, s_minus) = p(v_plus_m, s_plus) and the velocity match
/// through the two curve integrals; 2-d damped Newton with a
/// finite-difference Jacobian, nested bisection on p_m as fallback.
/// Throws SolverError on non-convergence and ConfigError when the solution
/// violates the rarefaction ordering (data not of the supported class).
WavePattern decompose(const GasParams& gp, const ThermoState& z_minus,
                      const ThermoState& z_plus, double tol = 1e-12);

}  // namespace wavepatterns

#endif
