// Acceptance suite: one criterion per numbered section, each printing a
// PASS/FAIL line. Exit status 0 iff every requested criterion passes.

#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../helpers.hpp"
#include "wavepatterns/composite.hpp"
#include "wavepatterns/diagnostics.hpp"
#include "wavepatterns/solver.hpp"

using namespace wavepatterns;
using wavepatterns::testing::ReferenceStates;

namespace {

struct Criterion {
  int id;
  std::string name;
  bool ok = true;
  std::ostringstream log;

  void check(const std::string& what, bool passed, double value = NAN,
             double threshold = NAN) {
    ok = ok && passed;
    log << "  [" << (passed ? "ok" : "XX") << "] " << what;
    if (!std::isnan(value)) log << "  (value " << value;
    if (!std::isnan(threshold)) log << ", threshold " << threshold;
    if (!std::isnan(value)) log << ")";
    log << "\n";
  }
};

const GasParams kGas{1.0, 5.0 / 3.0, 1.0, 1.0};

// ---------------------------------------------------------------- criterion 1
void contact_construction(Criterion& c) {
  for (double theta_plus : {1.05, 1.1, 1.2}) {
    const std::string tag = " (theta_plus " + std::to_string(theta_plus) + ")";
    const ContactProfile p = solve_selfsimilar(kGas, 1.0, theta_plus, 1.0);
    c.check("BVP residual < 1e-8" + tag, p.residual < 1e-8, p.residual, 1e-8);

    bool monotone = true, bounded = true;
    for (int i = 0; i < p.nodes(); ++i) {
      monotone = monotone && p.theta_prime[i] >= -1e-14;
      bounded = bounded && p.theta[i] >= 1.0 - 1e-12 &&
                p.theta[i] <= theta_plus + 1e-12;
    }
    c.check("profile monotone" + tag, monotone);
    c.check("profile bounded by the end temperatures" + tag, bounded);

    double max_dp = 0.0, max_mass = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double x = -30.0 + 60.0 * i / 99.0;
      for (int j = 0; j < 10; ++j) {
        const double t = 10.0 * j / 9.0;
        const WaveEval e = eval_contact(p, kGas, x, t);
        max_dp = std::max(max_dp, std::abs(kGas.R * e.Theta / e.V - 1.0));
        max_mass = std::max(max_mass, std::abs(e.Vt - e.Ux));
      }
    }
    c.check("pressure constancy < 1e-12" + tag, max_dp < 1e-12, max_dp, 1e-12);
    c.check("mass row V_t - U_x < 1e-6 on 100x10" + tag, max_mass < 1e-6,
            max_mass, 1e-6);

    const ContactDecayReport rep = check_contact_decay(p);
    c.check("gaussian envelopes have c > 0" + tag, rep.min_c() > 0.0,
            rep.min_c(), 0.0);
    c.check("envelope fits have R^2 > 0.95" + tag, rep.min_r_squared() > 0.95,
            rep.min_r_squared(), 0.95);
  }
}

// ---------------------------------------------------------------- criterion 2
void rarefaction_rates(Criterion& c) {
  const ReferenceStates ref = wavepatterns::testing::reference_states();
  const WavePattern pat = decompose(kGas, ref.z_minus, ref.z_plus);
  const RarefactionSpec wave1 = make_rarefaction_1(kGas, pat.z_minus,
                                                   pat.z_minus_m.v);
  const RarefactionSpec wave3 = make_rarefaction_3(kGas, pat.z_plus,
                                                   pat.z_plus_m.v);

  for (const auto* spec : {&wave1, &wave3}) {
    const std::string tag =
        spec->family == Family::k1 ? " (family 1)" : " (family 3)";
    const double delta = spec->delta_theta(kGas);

    // Lemma 2.1(i): V_t = U_x > 0, cross-checked by time differences.
    bool positive = true;
    double worst_fd = 0.0;
    const double h = 1e-4;
    for (double t : {1.0, 5.0, 20.0})
      for (int i = 0; i <= 200; ++i) {
        const double x = spec->w_l * t - 20.0 +
                         (spec->w_r * t - spec->w_l * t + 40.0) * i / 200.0;
        const WaveEval e = eval_rarefaction(*spec, kGas, x, t);
        positive = positive && e.Ux > 0.0 && e.Vt == e.Ux;
        const double vt_fd = (eval_rarefaction(*spec, kGas, x, t + h).V -
                              eval_rarefaction(*spec, kGas, x, t - h).V) /
                             (2.0 * h);
        worst_fd = std::max(worst_fd, std::abs(vt_fd - e.Ux));
      }
    c.check("V_t = U_x > 0 everywhere" + tag, positive);
    c.check("time-difference cross-check < 1e-6" + tag, worst_fd < 1e-6,
            worst_fd, 1e-6);

    std::vector<double> ts, l2, linf, l1, snd_l2, snd_linf;
    for (double t = 20.0; t <= 205.0; t *= 1.22) {
      const ProfileNorms n1 = rarefaction_derivative_norms(*spec, kGas, t, 1);
      const ProfileNorms n2 = rarefaction_derivative_norms(*spec, kGas, t, 2);
      ts.push_back(t);
      l2.push_back(n1.l2);
      linf.push_back(n1.linf);
      l1.push_back(n1.l1);
      snd_l2.push_back(n2.l2);
      snd_linf.push_back(n2.linf);
    }
    const double e_l2 = fit_power_law(ts, l2, 0, 1e9, 8).slope;
    const double e_linf = fit_power_law(ts, linf, 0, 1e9, 8).slope;
    c.check("L2 slope exponent within 0.1 of -1/2" + tag,
            std::abs(e_l2 + 0.5) <= 0.1, e_l2, -0.5);
    c.check("Linf slope exponent within 0.1 of -1" + tag,
            std::abs(e_linf + 1.0) <= 0.1, e_linf, -1.0);
    double l1_max = 0.0;
    for (double v : l1) l1_max = std::max(l1_max, v);
    c.check("L1 of the slope bounded by 3 delta" + tag, l1_max <= 3.0 * delta,
            l1_max, 3.0 * delta);
    const double e2_l2 = fit_power_law(ts, snd_l2, 0, 1e9, 8).slope;
    const double e2_linf = fit_power_law(ts, snd_linf, 0, 1e9, 8).slope;
    c.check("second-derivative L2 exponent <= -0.9" + tag, e2_l2 <= -0.9,
            e2_l2, -0.9);
    c.check("second-derivative Linf exponent <= -0.9" + tag, e2_linf <= -0.9,
            e2_linf, -0.9);

    // Lemma 2.1(iv): approach to the centered fan.
    double prev = 1e300;
    bool decreasing = true;
    for (double t : {10.0, 40.0, 160.0}) {
      double sup = 0.0;
      for (int i = 0; i <= 4000; ++i) {
        const double lo = spec->w_l * t - 40.0, hi = spec->w_r * t + 40.0;
        const double x = lo + (hi - lo) * i / 4000.0;
        const WaveEval e = eval_rarefaction(*spec, kGas, x, t);
        const ThermoState fan = exact_fan(*spec, kGas, x / t);
        sup = std::max({sup, std::abs(e.V - fan.v), std::abs(e.U - fan.u),
                        std::abs(e.Theta - fan.theta)});
      }
      decreasing = decreasing && sup < prev;
      prev = sup;
    }
    c.check("sup distance to the exact fan decreases over {10,40,160}" + tag,
            decreasing);
  }
}

// ---------------------------------------------------------------- criterion 3
void decomposition(Criterion& c) {
  const ReferenceStates ref = wavepatterns::testing::reference_states();
  const WavePattern pat = decompose(kGas, ref.z_minus, ref.z_plus);
  const double rec_err =
      std::max({std::abs(pat.z_minus_m.v - ref.v_minus_m),
                std::abs(pat.z_plus_m.v - ref.v_plus_m),
                std::abs(pat.u_m - ref.u_m), std::abs(pat.p_m - ref.p_m)});
  c.check("forward-built pattern recovered to 1e-8", rec_err < 1e-8, rec_err,
          1e-8);

  const WavePattern pc =
      decompose(kGas, ThermoState{1.0, 0.0, 1.0}, ThermoState{2.0, 0.0, 2.0});
  c.check("pure contact: zero-strength rarefactions exactly",
          pc.z_minus_m.v == 1.0 && pc.z_plus_m.v == 2.0 && pc.u_m == 0.0);

  ThermoState half = ref.z_minus;
  half.v += 0.5 * (ref.z_plus.v - ref.z_minus.v);
  half.u += 0.5 * (ref.z_plus.u - ref.z_minus.u);
  half.theta += 0.5 * (ref.z_plus.theta - ref.z_minus.theta);
  const WavePattern hp = decompose(kGas, ref.z_minus, half);
  auto closeness = [](const WavePattern& p) {
    return std::abs(p.z_minus_m.v - p.z_minus.v) +
           std::abs(p.z_plus_m.v - p.z_plus.v) +
           std::abs(p.u_m - p.z_minus.u) + std::abs(p.u_m - p.z_plus.u) +
           std::abs(p.z_minus_m.theta - p.z_minus.theta) +
           std::abs(p.z_plus_m.theta - p.z_plus.theta);
  };
  const double ratio = closeness(hp) / closeness(pat);
  c.check("halving the jump scales the closeness by [0.3, 0.7]",
          ratio > 0.3 && ratio < 0.7, ratio);
}

// ---------------------------------------------------------------- criterion 4
void residual_bounds(Criterion& c) {
  const ReferenceStates ref = wavepatterns::testing::reference_states();
  const CompositeWave wave = build_composite(kGas, ref.z_minus, ref.z_plus);

  double worst_mom = 0.0, worst_en = 0.0;
  for (int i = 0; i < 400; ++i) {
    const double x = -80.0 + 160.0 * i / 399.0;
    for (int j = 0; j < 20; ++j) {
      const double t = 0.5 + 19.5 * j / 19.0;
      const WaveEval e = eval_composite(wave, kGas, x, t);
      const Residuals r = residuals(wave, kGas, x, t);
      const double px =
          kGas.R * (e.Thetax * e.V - e.Theta * e.Vx) / (e.V * e.V);
      worst_mom = std::max(worst_mom, std::abs(e.Ut + px + r.r1));
      const double heat =
          kGas.kappa * (e.Thetaxx / e.V - e.Thetax * e.Vx / (e.V * e.V));
      worst_en = std::max(
          worst_en,
          std::abs(kGas.R / (kGas.gamma - 1.0) * e.Thetat +
                   kGas.R * e.Theta / e.V * e.Ux - heat + r.r2));
    }
  }
  c.check("momentum row reproduces -R1 to 1e-5 on 400x20", worst_mom < 1e-5,
          worst_mom, 1e-5);
  c.check("energy row reproduces -R2 to 1e-5 on 400x20", worst_en < 1e-5,
          worst_en, 1e-5);

  std::vector<double> ts, r2s, r1c;
  for (double t = 20.0; t <= 190.0; t *= 1.45) {
    const ResidualSups s = residual_sup(wave, kGas, t, 2001);
    ts.push_back(t);
    r2s.push_back(s.r2);
    r1c.push_back(s.r1_contact);
  }
  const double e_r2 = fit_power_law(ts, r2s, 0, 1e9, 5).slope;
  const double e_r1 = fit_power_law(ts, r1c, 0, 1e9, 5).slope;
  c.check("sup |R2| decay exponent <= -7/8 + 0.15", e_r2 <= -7.0 / 8.0 + 0.15,
          e_r2, -7.0 / 8.0 + 0.15);
  c.check("gaussian part of R1 decay exponent <= -3/2 + 0.15",
          e_r1 <= -1.5 + 0.15, e_r1, -1.5 + 0.15);

  const ReferenceStates pcs = wavepatterns::testing::pure_contact_states();
  const CompositeWave pc = build_composite(kGas, pcs.z_minus, pcs.z_plus);
  double worst_r2 = 0.0, worst_r1 = 0.0;
  for (double x : {-5.0, 0.0, 2.0, 11.0})
    for (double t : {0.0, 4.0, 30.0}) {
      const Residuals r = residuals(pc, kGas, x, t);
      const WaveEval ce = eval_contact(pc.contact, kGas, x, t);
      worst_r1 = std::max(worst_r1, std::abs(r.r1 + ce.Ut));
      worst_r2 = std::max(worst_r2, std::abs(r.r2));
    }
  c.check("pure contact: R1 reduces to the contact acceleration",
          worst_r1 < 1e-14, worst_r1, 1e-14);
  c.check("pure contact: R2 vanishes identically", worst_r2 < 1e-14, worst_r2,
          1e-14);
}

// ---------------------------------------------------------------- criterion 5
void solver_correctness(Criterion& c) {
  {  // constant state over 1e4 steps
    const Grid grid{10.0, 100};
    SolverConfig cfg;
    FieldState s;
    s.v.assign(grid.nodes(), 1.0);
    s.u.assign(grid.nodes(), 0.0);
    s.theta.assign(grid.nodes(), 1.0);
    TimeIntegrator integ(kGas, grid, cfg);
    const double dt = stable_dt(s, kGas, grid, cfg);
    for (int k = 0; k < 10000; ++k) integ.step(s, dt);
    double worst = 0.0;
    for (int i = 0; i < s.nodes(); ++i)
      worst = std::max({worst, std::abs(s.v[i] - 1.0), std::abs(s.u[i]),
                        std::abs(s.theta[i] - 1.0)});
    c.check("constant state preserved to roundoff over 1e4 steps",
            worst < 1e-13, worst, 1e-13);
  }

  const ReferenceStates ref = wavepatterns::testing::reference_states();
  const CompositeWave wave = build_composite(kGas, ref.z_minus, ref.z_plus);
  PerturbationSpec no_pert;
  no_pert.eps_v = no_pert.eps_u = no_pert.eps_theta = 0.0;
  SolverConfig cfg;
  cfg.t_end = 10.0;
  cfg.snapshot_interval = 10.0;
  cfg.diag_interval = 10.0;

  std::vector<FieldState> finals;
  double worst_cons = 0.0;
  for (int cells : {1500, 3000, 6000}) {
    const Grid g{600.0, cells};
    const RunRecord rec = run(wave, kGas, g, no_pert, cfg, DiagnosticsConfig{});
    finals.push_back(rec.snapshots.back());
    worst_cons = std::max(worst_cons, conservation_error(rec).worst());
  }
  c.check("conservation ledger residual < 1e-10 relative", worst_cons < 1e-10,
          worst_cons, 1e-10);

  auto diff = [](const FieldState& coarse, const FieldState& fine) {
    double worst = 0.0;
    for (int i = 0; i < coarse.nodes(); ++i)
      worst = std::max({worst, std::abs(coarse.v[i] - fine.v[2 * i]),
                        std::abs(coarse.u[i] - fine.u[2 * i]),
                        std::abs(coarse.theta[i] - fine.theta[2 * i])});
    return worst;
  };
  const double e1 = diff(finals[0], finals[1]);
  const double e2 = diff(finals[1], finals[2]);
  const double order = std::log2(e1 / e2);
  c.check("self-convergence order >= 1 in sup norm (N 1500/3000/6000, t 10)",
          order >= 1.0, order, 1.0);
}

// ------------------------------------------------------- criteria 6 and 7
struct StabilityOutcome {
  bool sup_half, sup_tail, entropy_tail, ratio_ok, valid;
  double sup0, sup_end, max_ratio;
};

StabilityOutcome stability_checks(const RunRecord& rec,
                                  const DiagnosticsConfig& diag) {
  StabilityOutcome out{};
  const auto& recs = rec.diagnostics;
  out.sup0 = recs.front().norm.sup;
  out.sup_end = recs.back().norm.sup;
  out.sup_half = out.sup_end <= 0.5 * out.sup0;
  out.valid = rec.valid;

  auto tail_monotone = [&](auto&& value) {
    const size_t start =
        static_cast<size_t>((1.0 - diag.tail_fraction) * (recs.size() - 1));
    for (size_t i = start; i + 1 < recs.size(); ++i)
      if (value(recs[i + 1]) >
          value(recs[i]) * (1.0 + diag.monotone_slack) + 1e-14)
        return false;
    return true;
  };
  out.sup_tail = tail_monotone([](const DiagRecord& r) { return r.norm.sup; });
  out.entropy_tail =
      tail_monotone([](const DiagRecord& r) { return r.rel_entropy; });

  out.max_ratio = 0.0;
  for (const DiagRecord& r : recs)
    if (std::isfinite(r.ratio)) out.max_ratio = std::max(out.max_ratio, r.ratio);
  out.ratio_ok = out.max_ratio < diag.ratio_bound;
  return out;
}

void report_stability(Criterion& c, const std::string& tag,
                      const StabilityOutcome& o) {
  c.check("run valid (far fields clean)" + tag, o.valid);
  c.check("sup at t_end <= half the initial sup" + tag, o.sup_half, o.sup_end,
          0.5 * o.sup0);
  c.check("sup series non-increasing within 5% over the final quarter" + tag,
          o.sup_tail);
  c.check("relative entropy non-increasing within 5% over the final quarter" +
              tag,
          o.entropy_tail);
  c.check("a-priori ratio below 50" + tag, o.ratio_ok, o.max_ratio, 50.0);
}

void stability_pure_contact(Criterion& c) {
  const ReferenceStates pcs = wavepatterns::testing::pure_contact_states();
  const CompositeWave wave = build_composite(kGas, pcs.z_minus, pcs.z_plus);
  const DiagnosticsConfig diag;
  PerturbationSpec pert;  // defaults: gaussian bumps, eps 0.01, width 2

  SolverConfig cfg;  // defaults: t_end 200, art_visc 0.05
  {
    const Grid grid{600.0, 6000};
    const RunRecord rec = run(wave, kGas, grid, pert, cfg, diag);
    report_stability(c, " (base)", stability_checks(rec, diag));
  }
  {
    SolverConfig half = cfg;
    half.art_visc = 0.025;
    const Grid grid{600.0, 6000};
    const RunRecord rec = run(wave, kGas, grid, pert, half, diag);
    report_stability(c, " (art_visc halved)", stability_checks(rec, diag));
  }
  {
    const Grid grid{600.0, 12000};
    const RunRecord rec = run(wave, kGas, grid, pert, cfg, diag);
    report_stability(c, " (N doubled)", stability_checks(rec, diag));
  }
}

void stability_composite(Criterion& c) {
  const ReferenceStates ref = wavepatterns::testing::reference_states();
  const CompositeWave wave = build_composite(kGas, ref.z_minus, ref.z_plus);
  const DiagnosticsConfig diag;
  PerturbationSpec pert;
  SolverConfig cfg;
  const Grid grid{600.0, 6000};
  const RunRecord rec = run(wave, kGas, grid, pert, cfg, diag);
  report_stability(c, "", stability_checks(rec, diag));

  // Lemma 3.2 weighted time integral grows sublinearly: its increments decay.
  std::vector<double> ts, inc;
  for (const DiagRecord& r : rec.diagnostics) {
    ts.push_back(r.norm.t);
    inc.push_back(r.weighted.basic);
  }
  const double expo =
      fit_power_law(ts, inc, diag.fit_window_lo, diag.fit_window_hi, 8).slope;
  c.check("weighted time-integral increments decay (exponent < 0)", expo < 0.0,
          expo, 0.0);
}

// ---------------------------------------------------------------- criterion 8
void heat_kernel(Criterion& c) {
  double worst_id = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    const HeatKernelWeight w{alpha};
    const double h = 1e-4;
    for (int i = 0; i < 200; ++i) {
      const double x = -8.0 + 16.0 * i / 199.0;
      for (int j = 0; j < 10; ++j) {
        const double t = 0.5 + 9.5 * j / 9.0;
        const double gt = (w.g(x, t + h) - w.g(x, t - h)) / (2.0 * h);
        const double gxx =
            (w.g(x + h, t) - 2.0 * w.g(x, t) + w.g(x - h, t)) / (h * h);
        worst_id = std::max(worst_id, std::abs(4.0 * alpha * gt - gxx));
      }
    }
  }
  c.check("|4 alpha g_t - g_xx| < 1e-7 discretely", worst_id < 1e-7, worst_id,
          1e-7);

  double worst_sup = 0.0, worst_plain = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    const HeatKernelWeight w{alpha};
    for (double t : {0.0, 3.0, 50.0}) {
      worst_sup = std::max(
          worst_sup,
          std::abs(w.g(1e9, t) - std::sqrt(M_PI) / std::sqrt(alpha)));
      // documented alternative normalization: the unweighted gaussian mass
      worst_plain = std::max(
          worst_plain, std::abs(w.plain_gaussian_integral(t) -
                                std::sqrt(M_PI * (1.0 + t) / alpha)));
    }
  }
  c.check("sup_x g = sqrt(pi/alpha) to 1e-10", worst_sup < 1e-10, worst_sup,
          1e-10);
  c.check("unweighted gaussian integral matches sqrt(pi(1+t)/alpha)",
          worst_plain < 1e-12, worst_plain, 1e-12);
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      only = std::atoi(argv[++i]);
  }

  using Fn = std::function<void(Criterion&)>;
  const std::vector<std::pair<std::string, Fn>> table = {
      {"contact-wave construction", contact_construction},
      {"rarefaction rates", rarefaction_rates},
      {"decomposition", decomposition},
      {"composite residual bounds", residual_bounds},
      {"solver correctness", solver_correctness},
      {"stability, pure contact", stability_pure_contact},
      {"stability, composite wave", stability_composite},
      {"heat-kernel identities", heat_kernel},
  };

  bool all_ok = true;
  for (size_t i = 0; i < table.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only != 0 && only != id) continue;
    Criterion crit{id, table[i].first};
    try {
      table[i].second(crit);
    } catch (const std::exception& e) {
      crit.check(std::string("unexpected exception: ") + e.what(), false);
    }
    std::cout << crit.log.str();
    std::cout << "criterion " << id << " (" << crit.name
              << "): " << (crit.ok ? "PASS" : "FAIL") << "\n";
    all_ok = all_ok && crit.ok;
  }
  return all_ok ? 0 : 1;
}
