#include "wavepatterns/rarefaction.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "wavepatterns/errors.hpp"
#include "wavepatterns/quadrature.hpp"

namespace wavepatterns {

double RarefactionSpec::delta_theta(const GasParams& gp) const {
  if (zero_strength()) return 0.0;
  const double v_far = volume_from_char_speed(
      gp, family == Family::k1 ? w_r : w_l, s_anchor, family);
  const double theta_far = theta_from_entropy(gp, v_far, s_anchor);
  return std::abs(theta_far - anchor.theta);
}

RarefactionSpec make_rarefaction_1(const GasParams& gp,
                                   const ThermoState& z_minus,
                                   double v_minus_m) {
  validate(z_minus);
  if (!(v_minus_m >= z_minus.v))
    throw ConfigError("rarefaction: family-1 wave needs v_minus_m >= v_minus");
  RarefactionSpec spec;
  spec.family = Family::k1;
  spec.anchor = z_minus;
  spec.s_anchor = entropy(gp, z_minus.v, z_minus.theta);
  spec.w_l = char_speed(gp, z_minus.v, spec.s_anchor, Family::k1);
  spec.w_r = char_speed(gp, v_minus_m, spec.s_anchor, Family::k1);
  return spec;
}

RarefactionSpec make_rarefaction_3(const GasParams& gp,
                                   const ThermoState& z_plus,
                                   double v_plus_m) {
  validate(z_plus);
  if (!(v_plus_m >= z_plus.v))
    throw ConfigError("rarefaction: family-3 wave needs v_plus_m >= v_plus");
  RarefactionSpec spec;
  spec.family = Family::k3;
  spec.anchor = z_plus;
  spec.s_anchor = entropy(gp, z_plus.v, z_plus.theta);
  spec.w_l = char_speed(gp, v_plus_m, spec.s_anchor, Family::k3);
  spec.w_r = char_speed(gp, z_plus.v, spec.s_anchor, Family::k3);
  return spec;
}

namespace {

// sech^2 without overflow for large arguments.
double sech2(double x) {
  const double e = std::exp(-2.0 * std::abs(x));
  const double den = 1.0 + e;
  return 4.0 * e / (den * den);
}

struct Datum {
  double mean, half;
  double value(double x) const { return mean + half * std::tanh(x); }
  double slope(double x) const { return half * sech2(x); }
  double curvature(double x) const {
    return -2.0 * half * sech2(x) * std::tanh(x);
  }
};

}  // namespace

BurgersEval burgers_eval(const RarefactionSpec& spec, double x, double t) {
  if (t < 0.0) throw DomainError("rarefaction: t must be >= 0");
  if (spec.w_l > spec.w_r)
    throw ConfigError("rarefaction: w_l must not exceed w_r");
  BurgersEval be;
  if (spec.zero_strength()) {
    be.w = spec.w_l;
    return be;
  }
  const Datum w0{0.5 * (spec.w_r + spec.w_l), 0.5 * (spec.w_r - spec.w_l)};

  // F(w) = w - w0(x - w t) is strictly increasing on [w_l, w_r].
  double lo = spec.w_l, hi = spec.w_r;
  double w = w0.value(x - w0.mean * t);
  w = std::clamp(w, lo, hi);
  const double tol = 1e-13;
  double f = w - w0.value(x - w * t);
  for (int it = 0; it < 60 && std::abs(f) > tol; ++it) {
    (f > 0.0 ? hi : lo) = w;
    const double fp = 1.0 + t * w0.slope(x - w * t);
    double next = w - f / fp;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    w = next;
    f = w - w0.value(x - w * t);
  }
  const double x0 = x - w * t;
  const double d = w0.slope(x0);
  const double den = 1.0 + d * t;
  be.w = w;
  be.wx = d / den;
  be.wxx = w0.curvature(x0) / (den * den * den);
  be.wt = -w * be.wx;
  return be;
}

ThermoState state_at_speed(const RarefactionSpec& spec, const GasParams& gp,
                           double w) {
  if (spec.zero_strength()) return spec.anchor;
  ThermoState z;
  z.v = volume_from_char_speed(gp, w, spec.s_anchor, spec.family);
  z.u = spec.anchor.u - rarefaction_velocity_integral(gp, spec.anchor.v, z.v,
                                                      spec.s_anchor,
                                                      spec.family);
  z.theta = theta_from_entropy(gp, z.v, spec.s_anchor);
  return z;
}

WaveEval eval_rarefaction(const RarefactionSpec& spec, const GasParams& gp,
                          double x, double t) {
  WaveEval e{};
  if (spec.zero_strength()) {
    e.V = spec.anchor.v;
    e.U = spec.anchor.u;
    e.Theta = spec.anchor.theta;
    return e;
  }
  const BurgersEval be = burgers_eval(spec, x, t);
  const ThermoState z = state_at_speed(spec, gp, be.w);
  const double lam_v = char_speed_dv(gp, z.v, spec.s_anchor, spec.family);
  const double lam_vv = char_speed_dvv(gp, z.v, spec.s_anchor, spec.family);

  e.V = z.v;
  e.U = z.u;
  e.Theta = z.theta;

  e.Vx = be.wx / lam_v;
  e.Vxx = be.wxx / lam_v - be.wx * lam_vv * e.Vx / (lam_v * lam_v);
  e.Ux = -be.w * e.Vx;  // dU/dV = -lambda along the curve, both families
  e.Uxx = -(be.wx * e.Vx + be.w * e.Vxx);
  const double g1 = gp.gamma - 1.0;
  e.Thetax = -g1 * z.theta / z.v * e.Vx;
  e.Thetaxx = -g1 * ((e.Thetax * e.Vx + z.theta * e.Vxx) / z.v -
                     z.theta * e.Vx * e.Vx / (z.v * z.v));

  e.Vt = e.Ux;           // mass equation, exact for the construction
  e.Ut = be.w * be.w * e.Vx;  // momentum: U_t = -P_x holds exactly
  e.Thetat = -g1 * z.theta / z.v * e.Vt;
  return e;
}

ThermoState exact_fan(const RarefactionSpec& spec, const GasParams& gp,
                      double xi) {
  return state_at_speed(spec, gp, std::clamp(xi, spec.w_l, spec.w_r));
}

ProfileNorms rarefaction_derivative_norms(const RarefactionSpec& spec,
                                          const GasParams& gp, double t,
                                          int order, int samples, double pad) {
  if (order != 1 && order != 2)
    throw DomainError("rarefaction: derivative order must be 1 or 2");
  ProfileNorms out;
  if (spec.zero_strength()) return out;
  const double lo = std::min(spec.w_l * t, spec.w_r * t) - pad;
  const double hi = std::max(spec.w_l * t, spec.w_r * t) + pad;
  const double dx = (hi - lo) / (samples - 1);
  std::vector<double> mag(samples), mag2(samples);
  for (int i = 0; i < samples; ++i) {
    const WaveEval e = eval_rarefaction(spec, gp, lo + i * dx, t);
    const double m =
        order == 1 ? std::sqrt(e.Vx * e.Vx + e.Ux * e.Ux + e.Thetax * e.Thetax)
                   : std::sqrt(e.Vxx * e.Vxx + e.Uxx * e.Uxx +
                               e.Thetaxx * e.Thetaxx);
    mag[i] = m;
    mag2[i] = m * m;
    out.linf = std::max(out.linf, m);
  }
  out.l1 = simpson(mag, dx);
  out.l2 = std::sqrt(simpson(mag2, dx));
  return out;
}

}  // namespace wavepatterns
