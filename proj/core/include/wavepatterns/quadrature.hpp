#ifndef WAVEPATTERNS_QUADRATURE_HPP
#define WAVEPATTERNS_QUADRATURE_HPP

#include <span>

namespace wavepatterns {

/// Composite trapezoid on uniformly spaced samples.
inline double trapezoid(std::span<const double> f, double dx) {
  if (f.size() < 2) return 0.0;
  double acc = 0.5 * (f.front() + f.back());
  for (size_t i = 1; i + 1 < f.size(); ++i) acc += f[i];
  return acc * dx;
}

/// Composite Simpson on uniformly spaced samples; falls back to a trapezoid
/// panel at the right end when the sample count is even.
inline double simpson(std::span<const double> f, double dx) {
  const size_t n = f.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * (f[0] + f[1]) * dx;
  const size_t odd_n = (n % 2 == 1) ? n : n - 1;
  double acc = f[0] + f[odd_n - 1];
  for (size_t i = 1; i + 1 < odd_n; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
  double result = acc * dx / 3.0;
  if (n % 2 == 0) result += 0.5 * (f[n - 2] + f[n - 1]) * dx;
  return result;
}

}  // namespace wavepatterns

#endif
