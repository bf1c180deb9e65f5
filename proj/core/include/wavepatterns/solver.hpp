#ifndef WAVEPATTERNS_SOLVER_HPP
#define WAVEPATTERNS_SOLVER_HPP

#include <array>
#include <string>
#include <vector>

#include "wavepatterns/composite.hpp"
#include "wavepatterns/diagnostics.hpp"
#include "wavepatterns/grid.hpp"

namespace wavepatterns {

/// Composite wave at t = 0 plus the perturbation fields. Throws ConfigError
/// when the perturbed state loses positivity or the perturbation does not
/// vanish at the domain ends.
FieldState initialize(const CompositeWave& wave, const GasParams& gp,
                      const Grid& grid, const PerturbationSpec& pert);

/// Largest stable step: acoustic limit dx / sqrt(gamma p / v), heat-diffusion
/// limit dx^2 R v / (2 kappa (gamma-1)), and the artificial-viscosity limit
/// dx^2 / (2 nu) with nu = art_visc * dx, scaled by the Courant factor.
double stable_dt(const FieldState& state, const GasParams& gp,
                 const Grid& grid, const SolverConfig& config);

/// Net boundary-flux integrals of the conservative update, accumulated with
/// the exact stage weights of the time stepper, so interior totals change by
/// these values up to roundoff.
struct ConservationLedger {
  long double flux_v = 0.0L, flux_u = 0.0L, flux_E = 0.0L;
  long double scale_v = 0.0L, scale_u = 0.0L, scale_E = 0.0L;
};

/// Method-of-lines integrator: local Lax-Friedrichs flux for the inviscid
/// part (-u, p, pu) of the conservative system in (v, u, E), second-order
/// central heat conduction kappa (theta_x / v)_x, optional grid-scaled
/// artificial viscosity in the momentum row, Dirichlet far fields, and
/// three-stage strong-stability-preserving Runge-Kutta in time.
class TimeIntegrator {
 public:
  TimeIntegrator(const GasParams& gp, const Grid& grid,
                 const SolverConfig& config);

  /// Advances the state by dt in place. Throws RunAbort on positivity loss
  /// or non-finite values.
  void step(FieldState& state, double dt);

  const ConservationLedger& ledger() const { return ledger_; }
  long steps_taken() const { return steps_; }

  /// Interior totals (sum over nodes 1..N-1 of y dx) of v, u and E.
  std::array<long double, 3> interior_integrals(const FieldState& state) const;

 private:
  void compute_fluxes(const std::vector<double>& v, const std::vector<double>& u,
                      const std::vector<double>& E);

  GasParams gp_;
  Grid grid_;
  SolverConfig cfg_;
  int n_;
  double dx_;
  ConservationLedger ledger_;
  long steps_ = 0;
  // stage and flux workspaces
  std::vector<double> E0_, v1_, u1_, E1_, v2_, u2_, E2_;
  std::vector<double> theta_, p_, c_;
  std::vector<double> fv_, fu_, fE_;
};

/// One step as a pure function (convenience wrapper around TimeIntegrator).
FieldState step(const FieldState& state, const GasParams& gp, const Grid& grid,
                const SolverConfig& config, double dt);

struct RunRecord {
  std::vector<FieldState> snapshots;
  std::vector<DiagRecord> diagnostics;
  double delta = 0.0;          // wave strength of the underlying pattern
  double initial_h2 = 0.0;     // H2 norm of (phi0, psi0, xi0)
  ConservationLedger ledger;
  std::array<double, 3> initial_integrals{}, final_integrals{};
  long steps = 0;
  double wall_seconds = 0.0;
  bool valid = true;
  std::string invalid_reason;
};

/// Integrates the perturbed composite to t_end, collecting snapshots, the
/// diagnostics series and the conservation ledger. Flags the record invalid
/// if the far fields of the last 10 cells drift by more than 1e-8.
RunRecord run(const CompositeWave& wave, const GasParams& gp, const Grid& grid,
              const PerturbationSpec& pert, const SolverConfig& config,
              const DiagnosticsConfig& diag_config);

/// Relative conservation defect per component: |interior change - ledger|
/// normalized by max(1, accumulated |flux|).
struct ConservationCheck {
  double err_v = 0.0, err_u = 0.0, err_E = 0.0;
  double worst() const;
};

ConservationCheck conservation_error(const RunRecord& record);

}  // namespace wavepatterns

#endif
