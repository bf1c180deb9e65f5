#ifndef WAVEPATTERNS_IO_HPP
#define WAVEPATTERNS_IO_HPP

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "wavepatterns/composite.hpp"
#include "wavepatterns/diagnostics.hpp"
#include "wavepatterns/grid.hpp"

namespace wavepatterns {

/// Shortest round-trip decimal representation (re-parsing yields the same
/// bits), used by every CSV writer so identical runs give identical files.
std::string format_double(double x);

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

/// Column-oriented CSV writer; all columns must have equal length.
void write_csv(const std::filesystem::path& path,
               std::span<const std::string> header,
               std::span<const std::vector<double>> columns);

/// xi, theta_hat, theta_hat_prime
void export_contact_profile(const std::filesystem::path& path,
                            const ContactProfile& profile);

/// x, t, V, U, Theta, Vx, Ux, Thetax rows for one smooth rarefaction,
/// sampled at the given times over [x_lo, x_hi].
void export_rarefaction_profile(const std::filesystem::path& path,
                                const RarefactionSpec& spec,
                                const GasParams& gp,
                                std::span<const double> times, double x_lo,
                                double x_hi, int samples);

/// x, V, U, Theta, R1, R2 at one time.
void export_composite_snapshot(const std::filesystem::path& path,
                               const CompositeWave& wave, const GasParams& gp,
                               double t, double x_lo, double x_hi,
                               int samples);

/// x, v, u, theta, phi, psi, xi for one solver snapshot.
void export_run_snapshot(const std::filesystem::path& path,
                         const FieldState& state, const Grid& grid,
                         const CompositeWave& wave, const GasParams& gp);

/// One row per diagnostics record.
void export_norm_series(const std::filesystem::path& path,
                        std::span<const DiagRecord> records);

}  // namespace wavepatterns

#endif
