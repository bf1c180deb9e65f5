#include "wavepatterns/contact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wavepatterns/errors.hpp"

namespace wavepatterns {

namespace {

struct HermiteCell {
  int i;
  double t;  // local coordinate in [0, 1]
};

HermiteCell locate(double xi, double xi_max, double h, int n) {
  const double pos = (xi + xi_max) / h;
  int i = static_cast<int>(std::floor(pos));
  i = std::clamp(i, 0, n - 2);
  return {i, pos - i};
}

double hermite(double f0, double d0, double f1, double d1, double h,
               double t) {
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * f0 + (t3 - 2 * t2 + t) * h * d0 +
         (-2 * t3 + 3 * t2) * f1 + (t3 - t2) * h * d1;
}

}  // namespace

double ContactProfile::theta_hat(double xi) const {
  if (xi <= -xi_max) return theta_minus;
  if (xi >= xi_max) return theta_plus;
  const auto [i, t] = locate(xi, xi_max, h, nodes());
  return hermite(theta[i], theta_prime[i], theta[i + 1], theta_prime[i + 1], h,
                 t);
}

double ContactProfile::theta_hat_prime(double xi) const {
  if (std::abs(xi) >= xi_max) return 0.0;
  const auto [i, t] = locate(xi, xi_max, h, nodes());
  // Nodal second derivatives from the ODE identity keep theta' C^1.
  auto second = [&](int k) {
    const double tp = theta_prime[k];
    return tp * tp / theta[k] - xi_at(k) * tp / (2.0 * a);
  };
  return hermite(theta_prime[i], second(i), theta_prime[i + 1], second(i + 1),
                 h, t);
}

double ContactProfile::theta_hat_second(double xi) const {
  if (std::abs(xi) >= xi_max) return 0.0;
  const double th = theta_hat(xi);
  const double tp = theta_hat_prime(xi);
  return tp * tp / th - xi * tp / (2.0 * a);
}

ContactProfile solve_selfsimilar(const GasParams& gp, double theta_minus,
                                 double theta_plus, double p_plus,
                                 double xi_max, int grid_points, double tol,
                                 double u_minus) {
  validate(gp);
  if (!(theta_minus > 0.0) || !(theta_plus > 0.0))
    throw DomainError("contact: boundary temperatures must be > 0");
  if (!(p_plus > 0.0)) throw DomainError("contact: p_plus must be > 0");
  if (grid_points < 16) throw DomainError("contact: grid_points too small");
  if (!(xi_max > 0.0)) throw DomainError("contact: xi_max must be > 0");

  ContactProfile prof;
  prof.theta_minus = theta_minus;
  prof.theta_plus = theta_plus;
  prof.p_plus = p_plus;
  prof.u_minus = u_minus;
  prof.a = gp.kappa * p_plus * (gp.gamma - 1.0) / (gp.gamma * gp.R * gp.R);
  prof.b = gp.kappa * (gp.gamma - 1.0) / (gp.gamma * gp.R);
  prof.xi_max = xi_max;

  const int n = grid_points;
  const double h = 2.0 * xi_max / (n - 1);
  prof.h = h;
  prof.theta.assign(n, theta_minus);
  prof.theta_prime.assign(n, 0.0);

  if (theta_minus == theta_plus) {
    // Constant solution: nothing to solve.
    prof.residual = 0.0;
    prof.iterations = 0;
    return prof;
  }

  auto& th = prof.theta;
  const double mid = 0.5 * (theta_minus + theta_plus);
  const double half_jump = 0.5 * (theta_plus - theta_minus);
  for (int i = 0; i < n; ++i) th[i] = mid + half_jump * std::tanh(prof.xi_at(i));
  th[0] = theta_minus;
  th[n - 1] = theta_plus;

  const double a = prof.a;
  const double floor_theta = 0.1 * std::min(theta_minus, theta_plus);

  // F_i = a (ln th)''_h + (xi_i / 2) (th)'_h on interior nodes.
  auto residual_vec = [&](const std::vector<double>& y, std::vector<double>& F) {
    for (int i = 1; i < n - 1; ++i) {
      const double lap =
          (std::log(y[i + 1]) - 2.0 * std::log(y[i]) + std::log(y[i - 1])) /
          (h * h);
      const double grad = (y[i + 1] - y[i - 1]) / (2.0 * h);
      F[i] = a * lap + 0.5 * prof.xi_at(i) * grad;
    }
  };
  auto max_norm = [&](const std::vector<double>& F) {
    double m = 0.0;
    for (int i = 1; i < n - 1; ++i) m = std::max(m, std::abs(F[i]));
    return m;
  };

  std::vector<double> F(n, 0.0), lower(n), diag(n), upper(n), rhs(n), dy(n),
      trial(n);
  residual_vec(th, F);
  double res = max_norm(F);
  const int max_iter = 50;
  int iter = 0;
  while (res > tol && iter < max_iter) {
    // Tridiagonal Newton system on the interior unknowns.
    for (int i = 1; i < n - 1; ++i) {
      const double xi = prof.xi_at(i);
      lower[i] = a / (h * h * th[i - 1]) - xi / (4.0 * h);
      diag[i] = -2.0 * a / (h * h * th[i]);
      upper[i] = a / (h * h * th[i + 1]) + xi / (4.0 * h);
      rhs[i] = -F[i];
    }
    // Thomas algorithm (boundary unknowns are fixed).
    for (int i = 2; i < n - 1; ++i) {
      const double w = lower[i] / diag[i - 1];
      diag[i] -= w * upper[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    dy[n - 2] = rhs[n - 2] / diag[n - 2];
    for (int i = n - 3; i >= 1; --i)
      dy[i] = (rhs[i] - upper[i] * dy[i + 1]) / diag[i];

    double lambda = 1.0;
    double new_res = std::numeric_limits<double>::infinity();
    for (int back = 0; back < 12; ++back) {
      trial = th;
      for (int i = 1; i < n - 1; ++i)
        trial[i] = std::max(th[i] + lambda * dy[i], floor_theta);
      residual_vec(trial, F);
      new_res = max_norm(F);
      if (new_res < (1.0 - 0.25 * lambda) * res || new_res < tol) break;
      lambda *= 0.5;
    }
    th = trial;
    res = new_res;
    ++iter;
  }
  if (res > tol)
    throw SolverError("contact: Newton iteration did not converge", res);
  prof.residual = res;
  prof.iterations = iter;

  // Tabulated first derivative: central interior, one-sided second order ends.
  auto& tp = prof.theta_prime;
  for (int i = 1; i < n - 1; ++i) tp[i] = (th[i + 1] - th[i - 1]) / (2.0 * h);
  tp[0] = (-3.0 * th[0] + 4.0 * th[1] - th[2]) / (2.0 * h);
  tp[n - 1] = (3.0 * th[n - 1] - 4.0 * th[n - 2] + th[n - 3]) / (2.0 * h);

  const double tail = std::max(std::abs(tp[0]), std::abs(tp[n - 1]));
  if (tail > 1e-8 * std::max(1.0, prof.delta()))
    throw TruncationError(
        "contact: profile not flat at +-xi_max; enlarge the domain");
  return prof;
}

WaveEval eval_contact(const ContactProfile& prof, const GasParams& gp,
                      double x, double t) {
  if (t < 0.0) throw DomainError("contact: t must be >= 0");
  const double s1 = std::sqrt(1.0 + t);
  const double xi = x / s1;
  const double Rp = gp.R / prof.p_plus;
  const double a = prof.a, b = prof.b;

  WaveEval e{};
  if (std::abs(xi) >= prof.xi_max || prof.constant_profile()) {
    const double th = xi < 0.0 ? prof.theta_minus : prof.theta_plus;
    e.Theta = th;
    e.V = Rp * th;
    e.U = prof.u_minus;
    return e;  // all derivatives exactly zero in the far field
  }

  const double th = prof.theta_hat(xi);
  const double tp = prof.theta_hat_prime(xi);
  const double q = tp / th;                       // (ln theta)'
  const double qp = -xi * tp / (2.0 * a);          // ODE identity
  const double tpp = th * (qp + q * q);            // theta''
  const double qpp = -(tp + xi * tpp) / (2.0 * a);

  e.Theta = th;
  e.Thetax = tp / s1;
  e.Thetaxx = tpp / (1.0 + t);
  e.Thetat = -0.5 * xi * tp / (1.0 + t);

  e.V = Rp * th;
  e.Vx = Rp * e.Thetax;
  e.Vxx = Rp * e.Thetaxx;
  e.Vt = Rp * e.Thetat;

  e.U = prof.u_minus + b * q / s1;
  e.Ux = b * qp / (1.0 + t);
  e.Uxx = b * qpp / ((1.0 + t) * s1);
  e.Ut = -0.5 * b * (q + xi * qp) / ((1.0 + t) * s1);
  return e;
}

namespace {
EnvelopeFit envelope_fit(const std::vector<double>& xi,
                         const std::vector<double>& mag, double delta) {
  const double floor = std::max(1e-14 * delta, 5e-300);
  const LineFit lf = fit_gaussian_envelope(xi, mag, 1.0, floor, 10);
  EnvelopeFit ef;
  ef.c = -lf.slope;
  ef.C = std::exp(lf.intercept) / delta;
  ef.r_squared = lf.r_squared;
  ef.n = lf.n;
  return ef;
}
}  // namespace

double ContactDecayReport::min_c() const {
  return std::min({deviation_left.c, deviation_right.c, slope_left.c,
                   slope_right.c, curvature_left.c, curvature_right.c});
}

double ContactDecayReport::min_r_squared() const {
  return std::min({deviation_left.r_squared, deviation_right.r_squared,
                   slope_left.r_squared, slope_right.r_squared,
                   curvature_left.r_squared, curvature_right.r_squared});
}

double ContactDecayReport::max_C() const {
  return std::max({deviation_left.C, deviation_right.C, slope_left.C,
                   slope_right.C, curvature_left.C, curvature_right.C});
}

ContactDecayReport check_contact_decay(const ContactProfile& prof) {
  ContactDecayReport rep;
  rep.delta = prof.delta();
  if (prof.constant_profile()) {
    rep.constant_profile = true;
    return rep;
  }

  const int n = prof.nodes();
  std::vector<double> xi_l, dev_l, slope_l, curv_l;
  std::vector<double> xi_r, dev_r, slope_r, curv_r;
  for (int i = 0; i < n; ++i) {
    const double xi = prof.xi_at(i);
    const double far = xi < 0.0 ? prof.theta_minus : prof.theta_plus;
    const double dev = std::abs(prof.theta[i] - far);
    const double sl = std::abs(prof.theta_prime[i]);
    const double tp = prof.theta_prime[i];
    const double cu =
        std::abs(tp * tp / prof.theta[i] - xi * tp / (2.0 * prof.a));
    auto& xs = xi < 0.0 ? xi_l : xi_r;
    xs.push_back(xi);
    (xi < 0.0 ? dev_l : dev_r).push_back(dev);
    (xi < 0.0 ? slope_l : slope_r).push_back(sl);
    (xi < 0.0 ? curv_l : curv_r).push_back(cu);
  }
  rep.deviation_left = envelope_fit(xi_l, dev_l, rep.delta);
  rep.deviation_right = envelope_fit(xi_r, dev_r, rep.delta);
  rep.slope_left = envelope_fit(xi_l, slope_l, rep.delta);
  rep.slope_right = envelope_fit(xi_r, slope_r, rep.delta);
  rep.curvature_left = envelope_fit(xi_l, curv_l, rep.delta);
  rep.curvature_right = envelope_fit(xi_r, curv_r, rep.delta);
  return rep;
}

}  // namespace wavepatterns
