#include "wavepatterns/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wavepatterns/errors.hpp"
#include "wavepatterns/quadrature.hpp"

namespace wavepatterns {

std::vector<double> derivative(std::span<const double> f, double dx) {
  const int n = static_cast<int>(f.size());
  if (n < 3) throw DomainError("derivative: need at least 3 samples");
  std::vector<double> d(n);
  for (int i = 1; i < n - 1; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * dx);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * dx);
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * dx);
  return d;
}

namespace {

std::vector<double> second_derivative(std::span<const double> f, double dx) {
  const int n = static_cast<int>(f.size());
  std::vector<double> d(n);
  for (int i = 1; i < n - 1; ++i)
    d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (dx * dx);
  d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / (dx * dx);
  d[n - 1] =
      (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / (dx * dx);
  return d;
}

double l2_sq(std::span<const double> f, double dx) {
  std::vector<double> sq(f.size());
  for (size_t i = 0; i < f.size(); ++i) sq[i] = f[i] * f[i];
  return trapezoid(sq, dx);
}

double phi_fn(double s) { return s - 1.0 - std::log(s); }

}  // namespace

namespace {

PerturbationSnapshot perturbation_from_sample(const FieldState& state,
                                              const CompositeSample& sample,
                                              const Grid& grid) {
  const int n = grid.nodes();
  PerturbationSnapshot snap;
  snap.t = state.t;
  snap.dx = grid.dx();
  snap.x0 = grid.x(0);
  snap.phi.resize(n);
  snap.psi.resize(n);
  snap.xi.resize(n);
  for (int i = 0; i < n; ++i) {
    snap.phi[i] = state.v[i] - sample.V[i];
    snap.psi[i] = state.u[i] - sample.U[i];
    snap.xi[i] = state.theta[i] - sample.Theta[i];
  }
  snap.phi_x = derivative(snap.phi, snap.dx);
  snap.psi_x = derivative(snap.psi, snap.dx);
  snap.xi_x = derivative(snap.xi, snap.dx);
  snap.phi_xx = second_derivative(snap.phi, snap.dx);
  snap.psi_xx = second_derivative(snap.psi, snap.dx);
  snap.xi_xx = second_derivative(snap.xi, snap.dx);
  return snap;
}

double relative_entropy_from_sample(const FieldState& state,
                                    const CompositeSample& sample,
                                    const GasParams& gp, const Grid& grid) {
  const int n = grid.nodes();
  std::vector<double> density(n);
  for (int i = 0; i < n; ++i) {
    if (!(state.v[i] > 0.0) || !(state.theta[i] > 0.0) ||
        !(sample.V[i] > 0.0) || !(sample.Theta[i] > 0.0))
      throw DomainError("relative_entropy: positivity violated");
    const double psi = state.u[i] - sample.U[i];
    density[i] = gp.R * sample.Theta[i] * phi_fn(state.v[i] / sample.V[i]) +
                 0.5 * psi * psi +
                 gp.R * sample.Theta[i] / (gp.gamma - 1.0) *
                     phi_fn(state.theta[i] / sample.Theta[i]);
  }
  return trapezoid(density, grid.dx());
}

std::vector<double> grid_positions(const Grid& grid) {
  std::vector<double> xs(grid.nodes());
  for (int i = 0; i < grid.nodes(); ++i) xs[i] = grid.x(i);
  return xs;
}

}  // namespace

PerturbationSnapshot perturbation(const FieldState& state,
                                  const CompositeWave& wave,
                                  const GasParams& gp, const Grid& grid) {
  if (state.nodes() != grid.nodes())
    throw DomainError("perturbation: state and grid sizes disagree");
  const std::vector<double> xs = grid_positions(grid);
  return perturbation_from_sample(
      state, sample_composite(wave, gp, xs, state.t), grid);
}

NormRecord norms(const PerturbationSnapshot& snap) {
  NormRecord r;
  r.t = snap.t;
  const double dx = snap.dx;
  const double l0 = l2_sq(snap.phi, dx) + l2_sq(snap.psi, dx) +
                    l2_sq(snap.xi, dx);
  const double l1 = l2_sq(snap.phi_x, dx) + l2_sq(snap.psi_x, dx) +
                    l2_sq(snap.xi_x, dx);
  const double l2d = l2_sq(snap.phi_xx, dx) + l2_sq(snap.psi_xx, dx) +
                     l2_sq(snap.xi_xx, dx);
  r.l2 = std::sqrt(l0);
  r.h1 = std::sqrt(l0 + l1);
  r.h2 = std::sqrt(l0 + l1 + l2d);
  for (int i = 0; i < snap.nodes(); ++i) {
    const double m = std::sqrt(snap.phi[i] * snap.phi[i] +
                               snap.psi[i] * snap.psi[i] +
                               snap.xi[i] * snap.xi[i]);
    r.sup = std::max(r.sup, m);
  }
  r.dis_hyp = l2_sq(snap.phi_x, dx) + l2_sq(snap.phi_xx, dx) +
              l2_sq(snap.psi_x, dx) + l2_sq(snap.psi_xx, dx);
  const std::vector<double> xi_xxx = derivative(snap.xi_xx, dx);
  r.dis_heat = l2_sq(snap.xi_x, dx) + l2_sq(snap.xi_xx, dx) +
               l2_sq(xi_xxx, dx);
  r.n_sup = r.h2;
  return r;
}

double relative_entropy(const FieldState& state, const CompositeWave& wave,
                        const GasParams& gp, const Grid& grid) {
  if (state.nodes() != grid.nodes())
    throw DomainError("relative_entropy: state and grid sizes disagree");
  const std::vector<double> xs = grid_positions(grid);
  return relative_entropy_from_sample(
      state, sample_composite(wave, gp, xs, state.t), gp, grid);
}

double HeatKernelWeight::omega(double x, double t) const {
  if (t < 0.0) throw DomainError("heat kernel: t must be >= 0");
  return std::exp(-alpha * x * x / (1.0 + t)) / std::sqrt(1.0 + t);
}

double HeatKernelWeight::g(double x, double t) const {
  if (t < 0.0) throw DomainError("heat kernel: t must be >= 0");
  const double z = std::sqrt(alpha) * x / std::sqrt(1.0 + t);
  return 0.5 * std::sqrt(M_PI / alpha) * (1.0 + std::erf(z));
}

double HeatKernelWeight::g_sup() const { return std::sqrt(M_PI / alpha); }

double HeatKernelWeight::plain_gaussian_integral(double t) const {
  return std::sqrt(M_PI * (1.0 + t) / alpha);
}

WeightEval weight_eval(const HeatKernelWeight& w, double x, double t) {
  return {w.omega(x, t), w.g(x, t)};
}

WeightedIntegrals weighted_norms(const PerturbationSnapshot& snap,
                                 const HeatKernelWeight& w,
                                 const GasParams& gp,
                                 std::span<const double> pressure_field) {
  const int n = snap.nodes();
  if (static_cast<int>(pressure_field.size()) != n)
    throw DomainError("weighted_norms: pressure field size mismatch");
  std::vector<double> f0(n), f1(n), f2(n);
  for (int i = 0; i < n; ++i) {
    const double om = w.omega(snap.x0 + i * snap.dx, snap.t);
    const double w2 = om * om;
    const double phi = snap.phi[i], psi = snap.psi[i], xi = snap.xi[i];
    const double P = pressure_field[i];
    f0[i] = w2 * (phi * phi + psi * psi + xi * xi);
    const double sound = gp.R * xi - P * phi;
    f1[i] = w2 * (sound * sound + psi * psi);
    const double thermo = gp.R * xi + (gp.gamma - 1.0) * P * phi;
    f2[i] = w2 * thermo * thermo;
  }
  return {trapezoid(f0, snap.dx), trapezoid(f1, snap.dx),
          trapezoid(f2, snap.dx)};
}

LineFit decay_fit(std::span<const double> t, std::span<const double> value,
                  double window_lo, double window_hi) {
  return fit_power_law(t, value, window_lo, window_hi, 8);
}

std::vector<double> apriori_ratio(std::span<const NormRecord> records,
                                  double delta) {
  std::vector<double> out;
  out.reserve(records.size());
  if (records.empty()) return out;
  const double denom = records.front().h2 * records.front().h2 + delta;
  for (const NormRecord& r : records) {
    const double num =
        r.n_sup * r.n_sup + r.int_dis_hyp + r.int_dis_heat;
    out.push_back(denom > 0.0
                      ? num / denom
                      : std::numeric_limits<double>::quiet_NaN());
  }
  return out;
}

DiagnosticsAccumulator::DiagnosticsAccumulator(const CompositeWave& wave,
                                               const GasParams& gp,
                                               const Grid& grid,
                                               const DiagnosticsConfig& cfg)
    : wave_(wave), gp_(gp), grid_(grid), cfg_(cfg),
      delta_(wave.pattern.delta) {}

const DiagRecord& DiagnosticsAccumulator::push(const FieldState& state) {
  if (state.nodes() != grid_.nodes())
    throw DomainError("diagnostics: state and grid sizes disagree");
  const std::vector<double> xs = grid_positions(grid_);
  const CompositeSample sample = sample_composite(wave_, gp_, xs, state.t);
  const PerturbationSnapshot snap =
      perturbation_from_sample(state, sample, grid_);

  const int n = grid_.nodes();
  std::vector<double> pressure_field(n);
  for (int i = 0; i < n; ++i)
    pressure_field[i] = gp_.R * sample.Theta[i] / sample.V[i];

  DiagRecord rec;
  rec.norm = norms(snap);
  rec.rel_entropy = relative_entropy_from_sample(state, sample, gp_, grid_);
  const HeatKernelWeight w{cfg_.alpha};
  rec.weighted = weighted_norms(snap, w, gp_, pressure_field);

  if (init_h2_sq_ < 0.0) init_h2_sq_ = rec.norm.h2 * rec.norm.h2;
  n_sup_ = std::max(n_sup_, rec.norm.h2);
  rec.norm.n_sup = n_sup_;

  if (have_prev_) {
    const double dt = state.t - prev_t_;
    int_dis_hyp_ += 0.5L * (prev_dis_hyp_ + rec.norm.dis_hyp) * dt;
    int_dis_heat_ += 0.5L * (prev_dis_heat_ + rec.norm.dis_heat) * dt;
    int_w_basic_ += 0.5L * (prev_w_.basic + rec.weighted.basic) * dt;
    int_w_sound_ += 0.5L * (prev_w_.sound + rec.weighted.sound) * dt;
    int_w_thermo_ += 0.5L * (prev_w_.thermo + rec.weighted.thermo) * dt;
  }
  have_prev_ = true;
  prev_t_ = state.t;
  prev_dis_hyp_ = rec.norm.dis_hyp;
  prev_dis_heat_ = rec.norm.dis_heat;
  prev_w_ = rec.weighted;

  rec.norm.int_dis_hyp = static_cast<double>(int_dis_hyp_);
  rec.norm.int_dis_heat = static_cast<double>(int_dis_heat_);
  rec.int_w_basic = static_cast<double>(int_w_basic_);
  rec.int_w_sound = static_cast<double>(int_w_sound_);
  rec.int_w_thermo = static_cast<double>(int_w_thermo_);

  const double denom = init_h2_sq_ + delta_;
  const double num =
      n_sup_ * n_sup_ + rec.norm.int_dis_hyp + rec.norm.int_dis_heat;
  rec.ratio = denom > 0.0 ? num / denom
                          : std::numeric_limits<double>::quiet_NaN();
  rec.ratio_flagged = std::isfinite(rec.ratio) && rec.ratio > cfg_.ratio_bound;

  records_.push_back(std::move(rec));
  return records_.back();
}

}  // namespace wavepatterns
