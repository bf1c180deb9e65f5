#ifndef WAVEPATTERNS_WAVE_EVAL_HPP
#define WAVEPATTERNS_WAVE_EVAL_HPP

namespace wavepatterns {

/// Pointwise wave values and derivatives at (x, t). Shared by the contact
/// wave, the smooth rarefactions, and their superposition.
struct WaveEval {
  double V = 0.0, U = 0.0, Theta = 0.0;
  double Vx = 0.0, Ux = 0.0, Thetax = 0.0;
  double Vxx = 0.0, Uxx = 0.0, Thetaxx = 0.0;
  double Vt = 0.0, Ut = 0.0, Thetat = 0.0;
};

}  // namespace wavepatterns

#endif
