#ifndef WAVEPATTERNS_RAREFACTION_HPP
#define WAVEPATTERNS_RAREFACTION_HPP

#include "wavepatterns/gas.hpp"
#include "wavepatterns/wave_eval.hpp"

namespace wavepatterns {

/// A smooth rarefaction wave of an extreme family, parametrized by the
/// exact solution w of the Burgers problem
///     w_t + w w_x = 0,  w(x,0) = (w_r+w_l)/2 + (w_r-w_l)/2 tanh(x),
/// through lambda_family(V, s_anchor) = w. Velocity and temperature follow
/// from the isentropic curve through the anchor state.
struct RarefactionSpec {
  Family family = Family::k1;
  ThermoState anchor;      // z- for family 1, z+ for family 3
  double s_anchor = 0.0;
  double w_l = 0.0, w_r = 0.0;  // Burgers end speeds, w_l <= w_r

  bool zero_strength() const { return w_l == w_r; }
  /// Temperature jump across the wave (its strength measure).
  double delta_theta(const GasParams& gp) const;
};

/// Family-1 wave from z_minus down the curve to volume v_minus_m (>= v_minus).
RarefactionSpec make_rarefaction_1(const GasParams& gp,
                                   const ThermoState& z_minus,
                                   double v_minus_m);

/// Family-3 wave reaching z_plus from volume v_plus_m (>= v_plus).
RarefactionSpec make_rarefaction_3(const GasParams& gp,
                                   const ThermoState& z_plus, double v_plus_m);

struct BurgersEval {
  double w = 0.0;
  double wx = 0.0;
  double wxx = 0.0;
  double wt = 0.0;  // = -w wx
};

/// Solves w = w0(x - w t) by safeguarded Newton inside [w_l, w_r];
/// |residual| < 1e-13 always holds for t >= 0.
BurgersEval burgers_eval(const RarefactionSpec& spec, double x, double t);

/// State on the isentropic curve at characteristic speed w in [w_l, w_r].
ThermoState state_at_speed(const RarefactionSpec& spec, const GasParams& gp,
                           double w);

/// Profile and derivatives through the chain rule in (w, w_x, w_xx).
WaveEval eval_rarefaction(const RarefactionSpec& spec, const GasParams& gp,
                          double x, double t);

/// Centered fan of the inviscid problem: constant states outside
/// [w_l, w_r], the curve state at speed xi = x/t inside.
ThermoState exact_fan(const RarefactionSpec& spec, const GasParams& gp,
                      double xi);

/// L^1 / L^2 / L^inf of the pointwise magnitude |(V_x, U_x, Theta_x)|
/// (order 1) or of the second derivatives (order 2) at time t, by composite
/// Simpson / grid max over a window covering the wave.
struct ProfileNorms {
  double l1 = 0.0, l2 = 0.0, linf = 0.0;
};
ProfileNorms rarefaction_derivative_norms(const RarefactionSpec& spec,
                                          const GasParams& gp, double t,
                                          int order, int samples = 8001,
                                          double pad = 40.0);

}  // namespace wavepatterns

#endif
