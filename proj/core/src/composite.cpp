#include "wavepatterns/composite.hpp"

#include <algorithm>
#include <cmath>

#include "wavepatterns/errors.hpp"

namespace wavepatterns {

CompositeWave build_composite(const GasParams& gp, const WavePattern& pattern,
                              double xi_max, int grid_points, double tol) {
  CompositeWave wave;
  wave.pattern = pattern;
  wave.contact = solve_selfsimilar(gp, pattern.z_minus_m.theta,
                                   pattern.z_plus_m.theta, pattern.p_m, xi_max,
                                   grid_points, tol, pattern.u_m);
  wave.rarefaction_1 =
      make_rarefaction_1(gp, pattern.z_minus, pattern.z_minus_m.v);
  wave.rarefaction_3 =
      make_rarefaction_3(gp, pattern.z_plus, pattern.z_plus_m.v);
  return wave;
}

CompositeWave build_composite(const GasParams& gp, const ThermoState& z_minus,
                              const ThermoState& z_plus, double xi_max,
                              int grid_points, double tol) {
  return build_composite(gp, decompose(gp, z_minus, z_plus), xi_max,
                         grid_points, tol);
}

CompositeEval eval_composite_parts(const CompositeWave& wave,
                                   const GasParams& gp, double x, double t) {
  CompositeEval e;
  e.r1 = eval_rarefaction(wave.rarefaction_1, gp, x, t);
  e.contact = eval_contact(wave.contact, gp, x, t);
  e.r3 = eval_rarefaction(wave.rarefaction_3, gp, x, t);

  const WavePattern& pat = wave.pattern;
  auto& s = e.total;
  s = e.r1;  // start from the first component, add the rest
  s.V += e.contact.V + e.r3.V - pat.z_minus_m.v - pat.z_plus_m.v;
  s.U += e.contact.U + e.r3.U - 2.0 * pat.u_m;
  s.Theta += e.contact.Theta + e.r3.Theta - pat.z_minus_m.theta -
             pat.z_plus_m.theta;
  s.Vx += e.contact.Vx + e.r3.Vx;
  s.Ux += e.contact.Ux + e.r3.Ux;
  s.Thetax += e.contact.Thetax + e.r3.Thetax;
  s.Vxx += e.contact.Vxx + e.r3.Vxx;
  s.Uxx += e.contact.Uxx + e.r3.Uxx;
  s.Thetaxx += e.contact.Thetaxx + e.r3.Thetaxx;
  s.Vt += e.contact.Vt + e.r3.Vt;
  s.Ut += e.contact.Ut + e.r3.Ut;
  s.Thetat += e.contact.Thetat + e.r3.Thetat;
  return e;
}

WaveEval eval_composite(const CompositeWave& wave, const GasParams& gp,
                        double x, double t) {
  return eval_composite_parts(wave, gp, x, t).total;
}

CompositeSample sample_composite(const CompositeWave& wave,
                                 const GasParams& gp,
                                 std::span<const double> xs, double t) {
  CompositeSample s;
  const size_t n = xs.size();
  s.V.resize(n);
  s.U.resize(n);
  s.Theta.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const WaveEval e = eval_composite(wave, gp, xs[i], t);
    s.V[i] = e.V;
    s.U[i] = e.U;
    s.Theta[i] = e.Theta;
  }
  return s;
}

namespace {

struct PressureEval {
  double p, px;
};

PressureEval pressure_of(const GasParams& gp, const WaveEval& e) {
  const double p = gp.R * e.Theta / e.V;
  const double px = gp.R * (e.Thetax * e.V - e.Theta * e.Vx) / (e.V * e.V);
  return {p, px};
}

double heat_flux_div(const GasParams& gp, const WaveEval& e) {
  // (Theta_x / V)_x
  return e.Thetaxx / e.V - e.Thetax * e.Vx / (e.V * e.V);
}

}  // namespace

Residuals residuals(const CompositeWave& wave, const GasParams& gp, double x,
                    double t) {
  const CompositeEval e = eval_composite_parts(wave, gp, x, t);
  const PressureEval P = pressure_of(gp, e.total);
  const PressureEval P1 = pressure_of(gp, e.r1);
  const PressureEval P3 = pressure_of(gp, e.r3);
  const double p_m = wave.pattern.p_m;

  Residuals r;
  // Sign convention fixed by U_t + P_x = -r1 holding identically.
  r.r1_gradient = -(P.px - P1.px - P3.px);
  r.r1_contact = -e.contact.Ut;
  r.r1 = r.r1_gradient + r.r1_contact;

  r.r2_work = (p_m - P.p) * e.contact.Ux + (P1.p - P.p) * e.r1.Ux +
              (P3.p - P.p) * e.r3.Ux;
  r.r2_heat =
      gp.kappa * (heat_flux_div(gp, e.total) - heat_flux_div(gp, e.contact));
  r.r2 = r.r2_work + r.r2_heat;
  return r;
}

Region region_of(const WavePattern& pattern, const GasParams& gp, double x,
                 double t) {
  if (t < 0.0) throw DomainError("region_of: t must be >= 0");
  const double lam1 =
      char_speed(gp, pattern.z_minus_m.v, pattern.s_minus, Family::k1);
  const double lam3 =
      char_speed(gp, pattern.z_plus_m.v, pattern.s_plus, Family::k3);
  if (2.0 * x < lam1 * t) return Region::omega_1;
  if (2.0 * x > lam3 * t) return Region::omega_3;
  return Region::omega_c;
}

namespace {

double state_distance(const WaveEval& e, const ThermoState& z) {
  const double dv = e.V - z.v, du = e.U - z.u, dth = e.Theta - z.theta;
  return std::sqrt(dv * dv + du * du + dth * dth);
}

double slope_magnitude(const WaveEval& e) {
  return std::sqrt(e.Vx * e.Vx + e.Ux * e.Ux + e.Thetax * e.Thetax);
}

}  // namespace

CrossRegionReport check_cross_region_smallness(const CompositeWave& wave,
                                               const GasParams& gp,
                                               std::span<const double> t_list,
                                               int samples_per_region) {
  const WavePattern& pat = wave.pattern;
  const double lam1_m = wave.rarefaction_1.w_r;  // lambda_1(v_minus_m, s_minus)
  const double lam3_m = wave.rarefaction_3.w_l;  // lambda_3(v_plus_m, s_plus)

  CrossRegionReport rep;
  rep.rarefaction_identically_zero = wave.rarefaction_1.zero_strength() &&
                                     wave.rarefaction_3.zero_strength();
  for (double t : t_list) {
    if (!(t > 0.0))
      throw DomainError("cross-region check: needs strictly positive times");
    double sup_rar = 0.0;
    {  // rarefaction deviations inside Omega_c
      const double lo = 0.5 * lam1_m * t, hi = 0.5 * lam3_m * t;
      for (int i = 0; i <= samples_per_region; ++i) {
        const double x = lo + (hi - lo) * i / samples_per_region;
        const WaveEval r1 = eval_rarefaction(wave.rarefaction_1, gp, x, t);
        const WaveEval r3 = eval_rarefaction(wave.rarefaction_3, gp, x, t);
        const double d = slope_magnitude(r1) + slope_magnitude(r3) +
                         state_distance(r1, pat.z_minus_m) +
                         state_distance(r3, pat.z_plus_m);
        sup_rar = std::max(sup_rar, d);
      }
    }
    double sup_con = 0.0;
    {  // contact deviations inside Omega_1 and Omega_3
      const double span = 30.0 * std::sqrt(1.0 + t);
      for (int i = 0; i <= samples_per_region; ++i) {
        const double x1 =
            0.5 * lam1_m * t - span * i / samples_per_region;
        const WaveEval c1 = eval_contact(wave.contact, gp, x1, t);
        sup_con = std::max(sup_con, slope_magnitude(c1) +
                                        state_distance(c1, pat.z_minus_m));
        const double x3 = 0.5 * lam3_m * t + span * i / samples_per_region;
        const WaveEval c3 = eval_contact(wave.contact, gp, x3, t);
        sup_con = std::max(sup_con, slope_magnitude(c3) +
                                        state_distance(c3, pat.z_plus_m));
      }
    }
    rep.times.push_back(t);
    rep.rarefaction_in_contact.push_back(sup_rar);
    rep.contact_in_rarefaction.push_back(sup_con);
  }
  const double lo = *std::min_element(rep.times.begin(), rep.times.end());
  const double hi = *std::max_element(rep.times.begin(), rep.times.end());
  if (!rep.rarefaction_identically_zero)
    rep.rarefaction_fit = fit_exponential(rep.times, rep.rarefaction_in_contact,
                                          lo, hi, 3);
  rep.contact_fit =
      fit_exponential(rep.times, rep.contact_in_rarefaction, lo, hi, 3);
  return rep;
}

ResidualSups residual_sup(const CompositeWave& wave, const GasParams& gp,
                          double t, int samples, double fd_h) {
  const double pad = 30.0 * std::sqrt(1.0 + t) + 20.0;
  const double lo = std::min(wave.rarefaction_1.w_l * t, 0.0) - pad;
  const double hi = std::max(wave.rarefaction_3.w_r * t, 0.0) + pad;
  const double dx = (hi - lo) / (samples - 1);

  ResidualSups s;
  for (int i = 0; i < samples; ++i) {
    const double x = lo + i * dx;
    const Residuals r = residuals(wave, gp, x, t);
    s.r1 = std::max(s.r1, std::abs(r.r1));
    s.r1_gradient = std::max(s.r1_gradient, std::abs(r.r1_gradient));
    s.r1_contact = std::max(s.r1_contact, std::abs(r.r1_contact));
    s.r2 = std::max(s.r2, std::abs(r.r2));

    const Residuals rp = residuals(wave, gp, x + fd_h, t);
    const Residuals rm = residuals(wave, gp, x - fd_h, t);
    s.r1x = std::max(s.r1x, std::abs(rp.r1 - rm.r1) / (2.0 * fd_h));
    s.r2x = std::max(s.r2x, std::abs(rp.r2 - rm.r2) / (2.0 * fd_h));
    s.r1xx = std::max(
        s.r1xx, std::abs(rp.r1 - 2.0 * r.r1 + rm.r1) / (fd_h * fd_h));
    s.r2xx = std::max(
        s.r2xx, std::abs(rp.r2 - 2.0 * r.r2 + rm.r2) / (fd_h * fd_h));
  }
  return s;
}

}  // namespace wavepatterns
