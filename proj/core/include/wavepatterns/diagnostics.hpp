#ifndef WAVEPATTERNS_DIAGNOSTICS_HPP
#define WAVEPATTERNS_DIAGNOSTICS_HPP

#include <span>
#include <vector>

#include "wavepatterns/composite.hpp"
#include "wavepatterns/grid.hpp"

namespace wavepatterns {

/// Second-order derivative of uniformly spaced samples: central stencil in
/// the interior, one-sided second-order at the two boundary nodes. This is
/// the module-wide convention; all Sobolev norms use it.
std::vector<double> derivative(std::span<const double> f, double dx);

/// Perturbation fields (phi, psi, xi) = (v, u, theta) - (V, U, Theta) and
/// their discrete derivatives up to second order.
struct PerturbationSnapshot {
  double t = 0.0;
  double dx = 0.0;
  double x0 = 0.0;  // position of the first node
  std::vector<double> phi, psi, xi;
  std::vector<double> phi_x, psi_x, xi_x;
  std::vector<double> phi_xx, psi_xx, xi_xx;

  int nodes() const { return static_cast<int>(phi.size()); }
};

PerturbationSnapshot perturbation(const FieldState& state,
                                  const CompositeWave& wave,
                                  const GasParams& gp, const Grid& grid);

/// Sobolev norms of the perturbation triple at one instant, plus the
/// dissipation integrands and (when accumulated) their running time
/// integrals and the running sup N(t) of the H2 norm.
struct NormRecord {
  double t = 0.0;
  double l2 = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
  double sup = 0.0;
  double dis_hyp = 0.0;   // ||(phi_x, psi_x)||_{H1}^2
  double dis_heat = 0.0;  // ||xi_x||_{H2}^2
  double int_dis_hyp = 0.0;
  double int_dis_heat = 0.0;
  double n_sup = 0.0;  // N(t): running max of h2
};

/// Instantaneous norms (running fields left zero).
NormRecord norms(const PerturbationSnapshot& snap);

/// Relative-entropy functional
///   int R Theta Phi(v/V) + psi^2/2 + R Theta/(gamma-1) Phi(theta/Theta) dx,
/// Phi(s) = s - 1 - ln s. Non-negative, zero iff the state matches the wave.
double relative_entropy(const FieldState& state, const CompositeWave& wave,
                        const GasParams& gp, const Grid& grid);

/// Gaussian weight omega = (1+t)^{-1/2} exp(-alpha x^2/(1+t)) and its
/// primitive g = int_{-inf}^x omega dy, in closed form. The primitive
/// satisfies 4 alpha g_t = g_xx and sup_x g = sqrt(pi/alpha) for every t.
struct HeatKernelWeight {
  double alpha = 1.0;

  double omega(double x, double t) const;
  double g(double x, double t) const;
  double g_sup() const;
  /// Integral of the unnormalized kernel exp(-alpha y^2/(1+t)) over the
  /// line, sqrt(pi (1+t)/alpha); kept alongside g_sup() because the two
  /// normalizations differ exactly by the (1+t)^{-1/2} prefactor of omega.
  double plain_gaussian_integral(double t) const;
};

struct WeightEval {
  double omega = 0.0, g = 0.0;
};
WeightEval weight_eval(const HeatKernelWeight& w, double x, double t);

/// The three localized integrals driving the weighted estimates:
///   basic   = int omega^2 (phi^2 + psi^2 + xi^2) dx
///   sound   = int omega^2 ((R xi - P phi)^2 + psi^2) dx
///   thermo  = int omega^2 (R xi + (gamma-1) P phi)^2 dx
/// with P the local pressure of the underlying wave.
struct WeightedIntegrals {
  double basic = 0.0, sound = 0.0, thermo = 0.0;
};

WeightedIntegrals weighted_norms(const PerturbationSnapshot& snap,
                                 const HeatKernelWeight& w,
                                 const GasParams& gp,
                                 std::span<const double> pressure_field);

/// Slope of log(value) against log(1+t) inside [window_lo, window_hi].
/// Throws DiagnosticError for fewer than 8 windowed points or non-positive
/// values.
LineFit decay_fit(std::span<const double> t, std::span<const double> value,
                  double window_lo, double window_hi);

struct DiagnosticsConfig {
  double alpha = 1.0;
  double ratio_bound = 50.0;
  double tail_fraction = 0.25;   // final fraction of records checked for decay
  double monotone_slack = 0.05;  // allowed relative uptick inside the tail
  double fit_window_lo = 20.0;
  double fit_window_hi = 200.0;
};

/// One diagnostics row of a run.
struct DiagRecord {
  NormRecord norm;
  double rel_entropy = 0.0;
  WeightedIntegrals weighted;
  double int_w_basic = 0.0, int_w_sound = 0.0, int_w_thermo = 0.0;
  double ratio = 0.0;  // NaN when the denominator vanishes
  bool ratio_flagged = false;
};

/// A-priori-estimate ratio series
///   [N(t)^2 + int_0^t dissipation] / [ ||(phi0,psi0,xi0)||_2^2 + delta ]
/// from an accumulated record sequence; NaN entries when the denominator
/// is zero.
std::vector<double> apriori_ratio(std::span<const NormRecord> records,
                                  double delta);

/// Single-writer accumulator owning the running integrals of one run.
class DiagnosticsAccumulator {
 public:
  DiagnosticsAccumulator(const CompositeWave& wave, const GasParams& gp,
                         const Grid& grid, const DiagnosticsConfig& cfg);

  const DiagRecord& push(const FieldState& state);
  const std::vector<DiagRecord>& records() const { return records_; }
  double delta() const { return delta_; }

 private:
  const CompositeWave& wave_;
  GasParams gp_;
  Grid grid_;
  DiagnosticsConfig cfg_;
  double delta_;
  double init_h2_sq_ = -1.0;
  double n_sup_ = 0.0;
  bool have_prev_ = false;
  double prev_t_ = 0.0;
  double prev_dis_hyp_ = 0.0, prev_dis_heat_ = 0.0;
  WeightedIntegrals prev_w_;
  long double int_dis_hyp_ = 0.0, int_dis_heat_ = 0.0;
  long double int_w_basic_ = 0.0, int_w_sound_ = 0.0, int_w_thermo_ = 0.0;
  std::vector<DiagRecord> records_;
};

}  // namespace wavepatterns

#endif
