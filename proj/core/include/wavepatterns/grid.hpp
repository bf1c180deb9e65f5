#ifndef WAVEPATTERNS_GRID_HPP
#define WAVEPATTERNS_GRID_HPP

#include <cstdint>
#include <vector>

#include "wavepatterns/errors.hpp"

namespace wavepatterns {

/// Uniform Lagrangian grid on [-half_width, half_width].
struct Grid {
  double half_width = 600.0;
  int cells = 6000;

  double dx() const { return 2.0 * half_width / cells; }
  int nodes() const { return cells + 1; }
  double x(int i) const { return -half_width + dx() * i; }
};

inline void validate(const Grid& g) {
  if (g.cells < 16) throw DomainError("grid: need at least 16 cells");
  if (!(g.half_width > 0.0)) throw DomainError("grid: half_width must be > 0");
}

/// Nodal (v, u, theta) samples at one time instant.
struct FieldState {
  double t = 0.0;
  std::vector<double> v, u, theta;

  int nodes() const { return static_cast<int>(v.size()); }
};

enum class PerturbationMode { gaussian_bumps, fourier };

/// Smooth, compactly decaying initial perturbation (phi0, psi0, xi0)
/// added on top of the composite wave at t = 0.
struct PerturbationSpec {
  PerturbationMode mode = PerturbationMode::gaussian_bumps;
  double eps_v = 0.01;      // phi0 amplitude
  double eps_u = 0.01;      // psi0 amplitude
  double eps_theta = 0.01;  // xi0 amplitude
  double width = 2.0;       // bump width / fourier envelope uses 10x this
  double center = 0.0;
  int fourier_modes = 4;
  double fourier_k0 = 0.5;  // base wavenumber of the fourier mode
  std::uint32_t seed = 42;
};

/// Per-node perturbation values at t = 0.
struct PerturbationFields {
  std::vector<double> phi, psi, xi;
};

PerturbationFields sample_perturbation(const PerturbationSpec& pert,
                                       const Grid& grid);

struct SolverConfig {
  double cfl = 0.9;            // Courant factor in (0, 1]
  double art_visc = 0.05;      // grid-scaled artificial viscosity coefficient
  double t_end = 200.0;
  double snapshot_interval = 20.0;
  double diag_interval = 1.0;
};

inline void validate(const SolverConfig& c) {
  if (!(c.cfl > 0.0) || c.cfl > 1.0)
    throw DomainError("solver: cfl must lie in (0, 1]");
  if (c.art_visc < 0.0) throw DomainError("solver: art_visc must be >= 0");
  if (c.t_end < 0.0) throw DomainError("solver: t_end must be >= 0");
}

}  // namespace wavepatterns

#endif
