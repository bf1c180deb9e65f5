#include "wavepatterns/fit.hpp"

#include <cmath>

#include "wavepatterns/errors.hpp"

namespace wavepatterns {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw DiagnosticError("fit_line: need >= 2 paired samples");
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw DiagnosticError("fit_line: degenerate abscissae");
  LineFit f;
  f.n = n;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

namespace {
LineFit windowed_log_fit(std::span<const double> t,
                         std::span<const double> value, double lo, double hi,
                         int min_points, bool log_abscissa) {
  if (t.size() != value.size())
    throw DiagnosticError("fit: time/value size mismatch");
  std::vector<double> xs, ys;
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < lo || t[i] > hi) continue;
    if (!(value[i] > 0.0))
      throw DiagnosticError("fit: non-positive value inside fit window");
    xs.push_back(log_abscissa ? std::log1p(t[i]) : t[i]);
    ys.push_back(std::log(value[i]));
  }
  if (static_cast<int>(xs.size()) < min_points)
    throw DiagnosticError("fit: fewer than the required samples in window");
  return fit_line(xs, ys);
}
}  // namespace

LineFit fit_power_law(std::span<const double> t, std::span<const double> value,
                      double window_lo, double window_hi, int min_points) {
  return windowed_log_fit(t, value, window_lo, window_hi, min_points, true);
}

LineFit fit_exponential(std::span<const double> t,
                        std::span<const double> value, double window_lo,
                        double window_hi, int min_points) {
  return windowed_log_fit(t, value, window_lo, window_hi, min_points, false);
}

LineFit fit_gaussian_envelope(std::span<const double> x,
                              std::span<const double> absf, double x_min,
                              double floor, int min_points) {
  if (x.size() != absf.size())
    throw DiagnosticError("fit: abscissa/value size mismatch");
  std::vector<double> xs, ys;
  for (size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i]) < x_min) continue;
    if (!(absf[i] > floor)) continue;
    xs.push_back(x[i] * x[i]);
    ys.push_back(std::log(absf[i]));
  }
  if (static_cast<int>(xs.size()) < min_points)
    throw DiagnosticError(
        "fit: fewer than the required tail samples above the noise floor");
  return fit_line(xs, ys);
}

}  // namespace wavepatterns
