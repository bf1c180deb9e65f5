#ifndef WAVEPATTERNS_COMPOSITE_HPP
#define WAVEPATTERNS_COMPOSITE_HPP

#include <span>
#include <vector>

#include "wavepatterns/contact.hpp"
#include "wavepatterns/fit.hpp"
#include "wavepatterns/rarefaction.hpp"
#include "wavepatterns/riemann.hpp"

namespace wavepatterns {

/// Superposition of the 1-rarefaction, contact layer and 3-rarefaction:
///     V = V1 + Vc + V3 - v_minus_m - v_plus_m,
///     U = U1 + Uc + U3 - 2 u_m,
///     Theta = Theta1 + Thetac + Theta3 - theta_minus_m - theta_plus_m.
/// The contact layer connects the two intermediate states at pressure p_m.
struct CompositeWave {
  WavePattern pattern;
  ContactProfile contact;
  RarefactionSpec rarefaction_1, rarefaction_3;
};

CompositeWave build_composite(const GasParams& gp, const WavePattern& pattern,
                              double xi_max = 12.0, int grid_points = 4001,
                              double tol = 1e-10);

/// Convenience: decompose + build.
CompositeWave build_composite(const GasParams& gp, const ThermoState& z_minus,
                              const ThermoState& z_plus, double xi_max = 12.0,
                              int grid_points = 4001, double tol = 1e-10);

struct CompositeEval {
  WaveEval total;
  WaveEval r1, contact, r3;  // the three superposed profiles
};

CompositeEval eval_composite_parts(const CompositeWave& wave,
                                   const GasParams& gp, double x, double t);

WaveEval eval_composite(const CompositeWave& wave, const GasParams& gp,
                        double x, double t);

/// Wave values sampled over a set of positions at one time.
struct CompositeSample {
  std::vector<double> V, U, Theta;
};

CompositeSample sample_composite(const CompositeWave& wave,
                                 const GasParams& gp,
                                 std::span<const double> xs, double t);

/// Defect of the superposition against the balance laws. The momentum defect
/// is split into the pressure-mismatch gradient and the contact acceleration,
/// the energy defect into pressure work and heat-flux mismatch.
struct Residuals {
  double r1 = 0.0;           // total momentum defect: U_t + P_x = -r1
  double r1_gradient = 0.0;  // -(P - P1 - P3 - p_m)_x
  double r1_contact = 0.0;   // -U^c_t
  double r2 = 0.0;           // total energy defect
  double r2_work = 0.0;      // (p_m - P)Ucx + (P1 - P)U1x + (P3 - P)U3x
  double r2_heat = 0.0;      // kappa [ (Theta_x/V)_x - (Theta^c_x/V^c)_x ]
};

Residuals residuals(const CompositeWave& wave, const GasParams& gp, double x,
                    double t);

enum class Region { omega_1, omega_c, omega_3 };

/// Classification by 2x vs lambda_1(v_minus_m) t and lambda_3(v_plus_m) t;
/// boundary points belong to the contact region.
Region region_of(const WavePattern& pattern, const GasParams& gp, double x,
                 double t);

/// Exponential-in-time smallness of each wave family outside its own region.
struct CrossRegionReport {
  std::vector<double> times;
  std::vector<double> rarefaction_in_contact;  // sup over Omega_c
  std::vector<double> contact_in_rarefaction;  // sup over Omega_1 u Omega_3
  LineFit rarefaction_fit;  // log sup against t; rate = -slope
  LineFit contact_fit;
  bool rarefaction_identically_zero = false;
};

CrossRegionReport check_cross_region_smallness(const CompositeWave& wave,
                                               const GasParams& gp,
                                               std::span<const double> t_list,
                                               int samples_per_region = 2000);

/// Sup norms over x of the defect fields and their x-derivatives
/// (derivatives by central differences of the assembled residuals).
struct ResidualSups {
  double r1 = 0.0, r1_gradient = 0.0, r1_contact = 0.0, r2 = 0.0;
  double r1x = 0.0, r1xx = 0.0, r2x = 0.0, r2xx = 0.0;
};

ResidualSups residual_sup(const CompositeWave& wave, const GasParams& gp,
                          double t, int samples = 4001, double fd_h = 1e-3);

}  // namespace wavepatterns

#endif
