#ifndef WAVEPATTERNS_FIT_HPP
#define WAVEPATTERNS_FIT_HPP

#include <span>
#include <vector>

namespace wavepatterns {

/// Least-squares line y = intercept + slope * x with coefficient of
/// determination. Inputs must have equal size >= 2.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int n = 0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Power-law rate: slope of log(value) against log(1+t).
/// Throws DiagnosticError if fewer than min_points samples fall in
/// [window_lo, window_hi] or any windowed value is non-positive.
LineFit fit_power_law(std::span<const double> t, std::span<const double> value,
                      double window_lo, double window_hi, int min_points = 8);

/// Exponential rate: slope of log(value) against t (rate = -slope).
LineFit fit_exponential(std::span<const double> t,
                        std::span<const double> value, double window_lo,
                        double window_hi, int min_points = 8);

/// Gaussian envelope |f| <= C * exp(-c x^2): regression of log|f| on x^2
/// over samples with |x| >= x_min and |f| > floor.
/// Returns slope = -c, intercept = log C.
LineFit fit_gaussian_envelope(std::span<const double> x,
                              std::span<const double> absf, double x_min,
                              double floor, int min_points = 10);

}  // namespace wavepatterns

#endif
