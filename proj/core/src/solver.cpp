#include "wavepatterns/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "wavepatterns/errors.hpp"

namespace wavepatterns {

PerturbationFields sample_perturbation(const PerturbationSpec& pert,
                                       const Grid& grid) {
  const int n = grid.nodes();
  PerturbationFields f;
  f.phi.assign(n, 0.0);
  f.psi.assign(n, 0.0);
  f.xi.assign(n, 0.0);

  if (pert.mode == PerturbationMode::gaussian_bumps) {
    const double w = pert.width;
    if (!(w > 0.0)) throw DomainError("perturbation: width must be > 0");
    for (int i = 0; i < n; ++i) {
      const double r = (grid.x(i) - pert.center) / w;
      const double bump = std::exp(-r * r);
      f.phi[i] = pert.eps_v * bump;
      f.psi[i] = pert.eps_u * bump;
      f.xi[i] = pert.eps_theta * bump;
    }
  } else {
    const int m = std::max(1, pert.fourier_modes);
    const double envelope_w = 10.0 * pert.width;
    std::mt19937 rng(pert.seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> amp(0.5, 1.0);
    std::vector<double> phases(3 * m), amps(3 * m);
    for (auto& p : phases) p = phase(rng);
    for (auto& a : amps) a = amp(rng);
    const double norml = 1.0 / std::sqrt(static_cast<double>(m));
    for (int i = 0; i < n; ++i) {
      const double x = grid.x(i) - pert.center;
      const double env = std::exp(-(x / envelope_w) * (x / envelope_w));
      double sv = 0.0, su = 0.0, sth = 0.0;
      for (int k = 1; k <= m; ++k) {
        const double kx = pert.fourier_k0 * k * x;
        sv += amps[k - 1] * std::cos(kx + phases[k - 1]);
        su += amps[m + k - 1] * std::cos(kx + phases[m + k - 1]);
        sth += amps[2 * m + k - 1] * std::cos(kx + phases[2 * m + k - 1]);
      }
      f.phi[i] = pert.eps_v * norml * env * sv;
      f.psi[i] = pert.eps_u * norml * env * su;
      f.xi[i] = pert.eps_theta * norml * env * sth;
    }
  }

  const double end_mag =
      std::max({std::abs(f.phi.front()), std::abs(f.psi.front()),
                std::abs(f.xi.front()), std::abs(f.phi.back()),
                std::abs(f.psi.back()), std::abs(f.xi.back())});
  if (end_mag > 1e-12)
    throw ConfigError(
        "perturbation: fields do not vanish at the domain ends; widen the "
        "grid or narrow the perturbation");
  return f;
}

FieldState initialize(const CompositeWave& wave, const GasParams& gp,
                      const Grid& grid, const PerturbationSpec& pert) {
  validate(grid);
  const int n = grid.nodes();
  const PerturbationFields f = sample_perturbation(pert, grid);

  FieldState state;
  state.t = 0.0;
  state.v.resize(n);
  state.u.resize(n);
  state.theta.resize(n);
  for (int i = 0; i < n; ++i) {
    const WaveEval e = eval_composite(wave, gp, grid.x(i), 0.0);
    state.v[i] = e.V + f.phi[i];
    state.u[i] = e.U + f.psi[i];
    state.theta[i] = e.Theta + f.xi[i];
    if (!(state.v[i] > 0.0) || !(state.theta[i] > 0.0))
      throw ConfigError("initialize: perturbation destroys positivity at x = " +
                        std::to_string(grid.x(i)));
  }
  return state;
}

double stable_dt(const FieldState& state, const GasParams& gp,
                 const Grid& grid, const SolverConfig& config) {
  const double dx = grid.dx();
  double dt = std::numeric_limits<double>::infinity();
  const double g1 = gp.gamma - 1.0;
  for (int i = 0; i < state.nodes(); ++i) {
    const double p = gp.R * state.theta[i] / state.v[i];
    const double c = std::sqrt(gp.gamma * p / state.v[i]);
    dt = std::min(dt, dx / c);
    if (gp.kappa > 0.0)
      dt = std::min(dt, dx * dx * gp.R * state.v[i] / (2.0 * gp.kappa * g1));
  }
  if (config.art_visc > 0.0) {
    const double nu = config.art_visc * dx;
    dt = std::min(dt, dx * dx / (2.0 * nu));
  }
  return config.cfl * dt;
}

TimeIntegrator::TimeIntegrator(const GasParams& gp, const Grid& grid,
                               const SolverConfig& config)
    : gp_(gp), grid_(grid), cfg_(config), n_(grid.nodes()), dx_(grid.dx()) {
  E0_.resize(n_);
  v1_.resize(n_);
  u1_.resize(n_);
  E1_.resize(n_);
  v2_.resize(n_);
  u2_.resize(n_);
  E2_.resize(n_);
  theta_.resize(n_);
  p_.resize(n_);
  c_.resize(n_);
  fv_.resize(n_ - 1);
  fu_.resize(n_ - 1);
  fE_.resize(n_ - 1);
}

void TimeIntegrator::compute_fluxes(const std::vector<double>& v,
                                    const std::vector<double>& u,
                                    const std::vector<double>& E) {
  const double g1 = gp_.gamma - 1.0;
  for (int i = 0; i < n_; ++i) {
    const double th = g1 * (E[i] - 0.5 * u[i] * u[i]) / gp_.R;
    if (!(v[i] > 0.0) || !(th > 0.0) || !std::isfinite(th) ||
        !std::isfinite(v[i]) || !std::isfinite(u[i]))
      throw RunAbort("step: positivity lost or non-finite state at node " +
                         std::to_string(i),
                     steps_);
    theta_[i] = th;
    p_[i] = gp_.R * th / v[i];
    c_[i] = std::sqrt(gp_.gamma * p_[i] / v[i]);
  }
  const double nu = cfg_.art_visc * dx_;
  for (int i = 0; i < n_ - 1; ++i) {
    const double alpha = std::max(c_[i], c_[i + 1]);
    fv_[i] = -0.5 * (u[i] + u[i + 1]) - 0.5 * alpha * (v[i + 1] - v[i]);
    fu_[i] = 0.5 * (p_[i] + p_[i + 1]) - 0.5 * alpha * (u[i + 1] - u[i]) -
             nu * (u[i + 1] - u[i]) / dx_;
    const double v_mid = 0.5 * (v[i] + v[i + 1]);
    fE_[i] = 0.5 * (p_[i] * u[i] + p_[i + 1] * u[i + 1]) -
             0.5 * alpha * (E[i + 1] - E[i]) -
             gp_.kappa * (theta_[i + 1] - theta_[i]) / (dx_ * v_mid);
  }
}

void TimeIntegrator::step(FieldState& state, double dt) {
  if (!(dt > 0.0)) throw DomainError("step: dt must be > 0");
  const double g1 = gp_.gamma - 1.0;
  auto& v0 = state.v;
  auto& u0 = state.u;
  for (int i = 0; i < n_; ++i)
    E0_[i] = gp_.R / g1 * state.theta[i] + 0.5 * u0[i] * u0[i];

  auto ledger_add = [&](double weight) {
    const double w = weight * dt;
    ledger_.flux_v += w * (fv_.front() - fv_.back());
    ledger_.flux_u += w * (fu_.front() - fu_.back());
    ledger_.flux_E += w * (fE_.front() - fE_.back());
    ledger_.scale_v += std::abs(w) * (std::abs(fv_.front()) + std::abs(fv_.back()));
    ledger_.scale_u += std::abs(w) * (std::abs(fu_.front()) + std::abs(fu_.back()));
    ledger_.scale_E += std::abs(w) * (std::abs(fE_.front()) + std::abs(fE_.back()));
  };
  const double r = dt / dx_;

  // Stage 1: y1 = y0 + dt L(y0)
  compute_fluxes(v0, u0, E0_);
  ledger_add(1.0 / 6.0);
  v1_[0] = v0[0]; u1_[0] = u0[0]; E1_[0] = E0_[0];
  v1_[n_ - 1] = v0[n_ - 1]; u1_[n_ - 1] = u0[n_ - 1]; E1_[n_ - 1] = E0_[n_ - 1];
  for (int i = 1; i < n_ - 1; ++i) {
    v1_[i] = v0[i] - r * (fv_[i] - fv_[i - 1]);
    u1_[i] = u0[i] - r * (fu_[i] - fu_[i - 1]);
    E1_[i] = E0_[i] - r * (fE_[i] - fE_[i - 1]);
  }

  // Stage 2: y2 = 3/4 y0 + 1/4 (y1 + dt L(y1))
  compute_fluxes(v1_, u1_, E1_);
  ledger_add(1.0 / 6.0);
  v2_[0] = v0[0]; u2_[0] = u0[0]; E2_[0] = E0_[0];
  v2_[n_ - 1] = v0[n_ - 1]; u2_[n_ - 1] = u0[n_ - 1]; E2_[n_ - 1] = E0_[n_ - 1];
  for (int i = 1; i < n_ - 1; ++i) {
    v2_[i] = 0.75 * v0[i] + 0.25 * (v1_[i] - r * (fv_[i] - fv_[i - 1]));
    u2_[i] = 0.75 * u0[i] + 0.25 * (u1_[i] - r * (fu_[i] - fu_[i - 1]));
    E2_[i] = 0.75 * E0_[i] + 0.25 * (E1_[i] - r * (fE_[i] - fE_[i - 1]));
  }

  // Stage 3: y = 1/3 y0 + 2/3 (y2 + dt L(y2))
  compute_fluxes(v2_, u2_, E2_);
  ledger_add(2.0 / 3.0);
  const double c1 = 1.0 / 3.0, c2 = 2.0 / 3.0;
  for (int i = 1; i < n_ - 1; ++i) {
    v0[i] = c1 * v0[i] + c2 * (v2_[i] - r * (fv_[i] - fv_[i - 1]));
    u0[i] = c1 * u0[i] + c2 * (u2_[i] - r * (fu_[i] - fu_[i - 1]));
    E0_[i] = c1 * E0_[i] + c2 * (E2_[i] - r * (fE_[i] - fE_[i - 1]));
    state.theta[i] = g1 * (E0_[i] - 0.5 * u0[i] * u0[i]) / gp_.R;
    if (!(v0[i] > 0.0) || !(state.theta[i] > 0.0))
      throw RunAbort("step: positivity lost after update at node " +
                         std::to_string(i),
                     steps_);
  }
  state.t += dt;
  ++steps_;
}

std::array<long double, 3> TimeIntegrator::interior_integrals(
    const FieldState& state) const {
  const double g1 = gp_.gamma - 1.0;
  long double sv = 0.0L, su = 0.0L, sE = 0.0L;
  for (int i = 1; i < n_ - 1; ++i) {
    sv += state.v[i];
    su += state.u[i];
    sE += gp_.R / g1 * state.theta[i] + 0.5 * state.u[i] * state.u[i];
  }
  return {sv * dx_, su * dx_, sE * dx_};
}

FieldState step(const FieldState& state, const GasParams& gp, const Grid& grid,
                const SolverConfig& config, double dt) {
  TimeIntegrator integ(gp, grid, config);
  FieldState out = state;
  integ.step(out, dt);
  return out;
}

double ConservationCheck::worst() const {
  return std::max({err_v, err_u, err_E});
}

ConservationCheck conservation_error(const RunRecord& rec) {
  auto rel = [](double delta, long double flux, long double scale) {
    const double denom = std::max(1.0L, scale ? scale : 0.0L);
    return static_cast<double>(std::abs(delta - static_cast<double>(flux)) /
                               denom);
  };
  ConservationCheck c;
  c.err_v = rel(rec.final_integrals[0] - rec.initial_integrals[0],
                rec.ledger.flux_v, rec.ledger.scale_v);
  c.err_u = rel(rec.final_integrals[1] - rec.initial_integrals[1],
                rec.ledger.flux_u, rec.ledger.scale_u);
  c.err_E = rel(rec.final_integrals[2] - rec.initial_integrals[2],
                rec.ledger.flux_E, rec.ledger.scale_E);
  return c;
}

namespace {

double max_wave_speed(const GasParams& gp, const WavePattern& pat) {
  double m = 0.0;
  for (const ThermoState* z :
       {&pat.z_minus, &pat.z_plus, &pat.z_minus_m, &pat.z_plus_m}) {
    const double p = gp.R * z->theta / z->v;
    m = std::max(m, std::sqrt(gp.gamma * p / z->v) + std::abs(z->u));
  }
  return m;
}

bool far_field_ok(const FieldState& state, const WavePattern& pat,
                  int guard_cells, double tol) {
  const int n = state.nodes();
  for (int i = 0; i < guard_cells; ++i) {
    if (std::abs(state.v[i] - pat.z_minus.v) > tol ||
        std::abs(state.u[i] - pat.z_minus.u) > tol ||
        std::abs(state.theta[i] - pat.z_minus.theta) > tol)
      return false;
    const int j = n - 1 - i;
    if (std::abs(state.v[j] - pat.z_plus.v) > tol ||
        std::abs(state.u[j] - pat.z_plus.u) > tol ||
        std::abs(state.theta[j] - pat.z_plus.theta) > tol)
      return false;
  }
  return true;
}

}  // namespace

RunRecord run(const CompositeWave& wave, const GasParams& gp, const Grid& grid,
              const PerturbationSpec& pert, const SolverConfig& config,
              const DiagnosticsConfig& diag_config) {
  validate(gp);
  validate(grid);
  validate(config);
  if (max_wave_speed(gp, wave.pattern) * config.t_end + 5.0 >= grid.half_width)
    throw ConfigError(
        "run: domain too small; waves would reach the boundary before t_end");

  const auto wall_start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.delta = wave.pattern.delta;

  FieldState state = initialize(wave, gp, grid, pert);
  TimeIntegrator integ(gp, grid, config);
  DiagnosticsAccumulator diag(wave, gp, grid, diag_config);

  const auto init_int = integ.interior_integrals(state);
  rec.initial_integrals = {static_cast<double>(init_int[0]),
                           static_cast<double>(init_int[1]),
                           static_cast<double>(init_int[2])};

  auto take_snapshot = [&]() {
    rec.snapshots.push_back(state);
    if (rec.valid && !far_field_ok(state, wave.pattern, 10, 1e-8)) {
      rec.valid = false;
      rec.invalid_reason = "far-field drift above 1e-8 in the guard cells at t = " +
                           std::to_string(state.t);
    }
  };

  rec.initial_h2 = diag.push(state).norm.h2;
  take_snapshot();

  const double t_end = config.t_end;
  double next_diag = config.diag_interval > 0.0
                         ? std::min(config.diag_interval, t_end)
                         : t_end;
  double next_snap = config.snapshot_interval > 0.0
                         ? std::min(config.snapshot_interval, t_end)
                         : t_end;
  const long max_steps = 200'000'000L;
  while (state.t < t_end * (1.0 - 1e-14) && integ.steps_taken() < max_steps) {
    const double t_event = std::min({next_diag, next_snap, t_end});
    double dt = stable_dt(state, gp, grid, config);
    dt = std::min(dt, t_event - state.t);
    integ.step(state, dt);

    const double tol = 1e-9 * (1.0 + state.t);
    if (state.t >= next_diag - tol) {
      diag.push(state);
      next_diag = std::min(next_diag + config.diag_interval, t_end);
      if (next_diag <= state.t + tol) next_diag = t_end;
    }
    if (state.t >= next_snap - tol) {
      take_snapshot();
      next_snap = std::min(next_snap + config.snapshot_interval, t_end);
      if (next_snap <= state.t + tol) next_snap = t_end;
    }
  }

  const auto fin_int = integ.interior_integrals(state);
  rec.final_integrals = {static_cast<double>(fin_int[0]),
                         static_cast<double>(fin_int[1]),
                         static_cast<double>(fin_int[2])};
  rec.ledger = integ.ledger();
  rec.diagnostics = diag.records();
  rec.steps = integ.steps_taken();
  rec.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - wall_start)
                         .count();
  return rec;
}

}  // namespace wavepatterns
