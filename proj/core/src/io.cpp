#include "wavepatterns/io.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "wavepatterns/errors.hpp"

namespace wavepatterns {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("io: cannot open " + path.string());
  out << content;
  if (!out) throw ConfigError("io: write failed for " + path.string());
}

void write_csv(const std::filesystem::path& path,
               std::span<const std::string> header,
               std::span<const std::vector<double>> columns) {
  if (header.size() != columns.size())
    throw DomainError("write_csv: header/column count mismatch");
  const size_t rows = columns.empty() ? 0 : columns.front().size();
  for (const auto& c : columns)
    if (c.size() != rows) throw DomainError("write_csv: ragged columns");

  std::string body;
  for (size_t j = 0; j < header.size(); ++j) {
    if (j) body += ',';
    body += header[j];
  }
  body += '\n';
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < columns.size(); ++j) {
      if (j) body += ',';
      body += format_double(columns[j][i]);
    }
    body += '\n';
  }
  write_text_file(path, body);
}

void export_contact_profile(const std::filesystem::path& path,
                            const ContactProfile& profile) {
  const int n = profile.nodes();
  std::vector<double> xi(n);
  for (int i = 0; i < n; ++i) xi[i] = profile.xi_at(i);
  const std::vector<std::string> header = {"xi", "theta_hat",
                                           "theta_hat_prime"};
  const std::vector<std::vector<double>> cols = {xi, profile.theta,
                                                 profile.theta_prime};
  write_csv(path, header, cols);
}

void export_rarefaction_profile(const std::filesystem::path& path,
                                const RarefactionSpec& spec,
                                const GasParams& gp,
                                std::span<const double> times, double x_lo,
                                double x_hi, int samples) {
  std::vector<double> x, t, V, U, Theta, Vx, Ux, Thetax;
  for (double tt : times) {
    for (int i = 0; i < samples; ++i) {
      const double xx = x_lo + (x_hi - x_lo) * i / (samples - 1);
      const WaveEval e = eval_rarefaction(spec, gp, xx, tt);
      x.push_back(xx);
      t.push_back(tt);
      V.push_back(e.V);
      U.push_back(e.U);
      Theta.push_back(e.Theta);
      Vx.push_back(e.Vx);
      Ux.push_back(e.Ux);
      Thetax.push_back(e.Thetax);
    }
  }
  const std::vector<std::string> header = {"x",  "t",  "V",     "U",
                                           "Theta", "Vx", "Ux", "Thetax"};
  const std::vector<std::vector<double>> cols = {x, t, V, U, Theta, Vx, Ux,
                                                 Thetax};
  write_csv(path, header, cols);
}

void export_composite_snapshot(const std::filesystem::path& path,
                               const CompositeWave& wave, const GasParams& gp,
                               double t, double x_lo, double x_hi,
                               int samples) {
  std::vector<double> x(samples), V(samples), U(samples), Theta(samples),
      R1(samples), R2(samples);
  for (int i = 0; i < samples; ++i) {
    const double xx = x_lo + (x_hi - x_lo) * i / (samples - 1);
    const WaveEval e = eval_composite(wave, gp, xx, t);
    const Residuals r = residuals(wave, gp, xx, t);
    x[i] = xx;
    V[i] = e.V;
    U[i] = e.U;
    Theta[i] = e.Theta;
    R1[i] = r.r1;
    R2[i] = r.r2;
  }
  const std::vector<std::string> header = {"x", "V", "U", "Theta", "R1", "R2"};
  const std::vector<std::vector<double>> cols = {x, V, U, Theta, R1, R2};
  write_csv(path, header, cols);
}

void export_run_snapshot(const std::filesystem::path& path,
                         const FieldState& state, const Grid& grid,
                         const CompositeWave& wave, const GasParams& gp) {
  const int n = grid.nodes();
  std::vector<double> x(n), phi(n), psi(n), xi(n);
  for (int i = 0; i < n; ++i) {
    x[i] = grid.x(i);
    const WaveEval e = eval_composite(wave, gp, x[i], state.t);
    phi[i] = state.v[i] - e.V;
    psi[i] = state.u[i] - e.U;
    xi[i] = state.theta[i] - e.Theta;
  }
  const std::vector<std::string> header = {"x",   "v",   "u", "theta",
                                           "phi", "psi", "xi"};
  const std::vector<std::vector<double>> cols = {x,   state.v, state.u,
                                                 state.theta, phi, psi, xi};
  write_csv(path, header, cols);
}

void export_norm_series(const std::filesystem::path& path,
                        std::span<const DiagRecord> records) {
  const std::vector<std::string> header = {
      "t",        "l2",          "h1",           "h2",
      "sup",      "n_sup",       "dis_hyp",      "dis_heat",
      "int_dis_hyp", "int_dis_heat", "entropy",  "w_basic",
      "w_sound",  "w_thermo",    "int_w_basic",  "int_w_sound",
      "int_w_thermo", "ratio"};
  std::vector<std::vector<double>> cols(header.size());
  for (const DiagRecord& r : records) {
    size_t j = 0;
    cols[j++].push_back(r.norm.t);
    cols[j++].push_back(r.norm.l2);
    cols[j++].push_back(r.norm.h1);
    cols[j++].push_back(r.norm.h2);
    cols[j++].push_back(r.norm.sup);
    cols[j++].push_back(r.norm.n_sup);
    cols[j++].push_back(r.norm.dis_hyp);
    cols[j++].push_back(r.norm.dis_heat);
    cols[j++].push_back(r.norm.int_dis_hyp);
    cols[j++].push_back(r.norm.int_dis_heat);
    cols[j++].push_back(r.rel_entropy);
    cols[j++].push_back(r.weighted.basic);
    cols[j++].push_back(r.weighted.sound);
    cols[j++].push_back(r.weighted.thermo);
    cols[j++].push_back(r.int_w_basic);
    cols[j++].push_back(r.int_w_sound);
    cols[j++].push_back(r.int_w_thermo);
    cols[j++].push_back(r.ratio);
  }
  write_csv(path, header, cols);
}

}  // namespace wavepatterns
