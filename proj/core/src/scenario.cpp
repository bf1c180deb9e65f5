#include "wavepatterns/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wavepatterns/errors.hpp"

namespace wavepatterns {

using nlohmann::json;

ThermoState Scenario::right_state() const {
  if (right) return *right;
  if (!pure_contact_theta_plus)
    throw ConfigError("scenario: neither right state nor pure_contact given");
  // Equal velocity and pressure across the jump.
  ThermoState z;
  z.theta = *pure_contact_theta_plus;
  z.u = left.u;
  z.v = left.v * z.theta / left.theta;
  return z;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError("scenario: " + where + ": " + what);
}

void check_keys(const json& j, const std::string& where,
                const std::set<std::string>& allowed) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& item : j.items())
    if (!allowed.contains(item.key()))
      fail(where, "unknown key '" + item.key() + "'");
}

double get_num(const json& j, const std::string& where, const char* key,
               double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) fail(where, std::string(key) + " must be a number");
  return j[key].get<double>();
}

ThermoState parse_state(const json& j, const std::string& where) {
  check_keys(j, where, {"v", "u", "theta"});
  ThermoState z;
  z.v = get_num(j, where, "v", 1.0);
  z.u = get_num(j, where, "u", 0.0);
  z.theta = get_num(j, where, "theta", 1.0);
  if (!(z.v > 0.0)) fail(where, "v must be > 0");
  if (!(z.theta > 0.0)) fail(where, "theta must be > 0");
  return z;
}

json apply_overrides(json doc, std::span<const std::string> overrides) {
  for (const std::string& ov : overrides) {
    const auto eq = ov.find('=');
    if (eq == std::string::npos)
      throw ConfigError("override '" + ov + "' is not of the form key=value");
    std::string path = "/" + ov.substr(0, eq);
    for (auto& ch : path)
      if (ch == '.') ch = '/';
    const std::string raw = ov.substr(eq + 1);
    json value = json::parse(raw, nullptr, false);
    if (value.is_discarded()) value = raw;  // plain string value
    doc[json::json_pointer(path)] = value;
  }
  return doc;
}

}  // namespace

Scenario parse_scenario(const std::string& text,
                        std::span<const std::string> overrides) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario: parse error: ") + e.what());
  }
  doc = apply_overrides(std::move(doc), overrides);

  check_keys(doc, "document",
             {"name", "gas", "left", "right", "pure_contact", "perturbation",
              "grid", "solver", "contact", "diagnostics", "output_dir"});

  Scenario sc;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("name", "must be a string");
    sc.name = doc["name"].get<std::string>();
  }
  if (doc.contains("output_dir")) {
    if (!doc["output_dir"].is_string()) fail("output_dir", "must be a string");
    sc.output_dir = doc["output_dir"].get<std::string>();
  }

  if (doc.contains("gas")) {
    const json& g = doc["gas"];
    check_keys(g, "gas", {"R", "gamma", "A", "kappa"});
    sc.gas.R = get_num(g, "gas", "R", sc.gas.R);
    sc.gas.gamma = get_num(g, "gas", "gamma", sc.gas.gamma);
    sc.gas.A = get_num(g, "gas", "A", sc.gas.A);
    sc.gas.kappa = get_num(g, "gas", "kappa", sc.gas.kappa);
    try {
      validate(sc.gas);
    } catch (const DomainError& e) {
      fail("gas", e.what());
    }
  }

  if (!doc.contains("left")) fail("left", "required");
  sc.left = parse_state(doc["left"], "left");

  const bool has_right = doc.contains("right");
  const bool has_pc = doc.contains("pure_contact");
  if (has_right == has_pc)
    fail("document",
         "exactly one of 'right' and 'pure_contact' must be given");
  if (has_right) {
    sc.right = parse_state(doc["right"], "right");
  } else {
    const json& pc = doc["pure_contact"];
    check_keys(pc, "pure_contact", {"theta_plus"});
    const double tp = get_num(pc, "pure_contact", "theta_plus", -1.0);
    if (!(tp > 0.0)) fail("pure_contact", "theta_plus must be > 0");
    sc.pure_contact_theta_plus = tp;
  }

  if (doc.contains("perturbation")) {
    const json& p = doc["perturbation"];
    check_keys(p, "perturbation",
               {"mode", "eps_v", "eps_u", "eps_theta", "width", "center",
                "fourier_modes", "fourier_k0", "seed"});
    if (p.contains("mode")) {
      const std::string mode = p["mode"].get<std::string>();
      if (mode == "gaussian-bumps")
        sc.perturbation.mode = PerturbationMode::gaussian_bumps;
      else if (mode == "fourier")
        sc.perturbation.mode = PerturbationMode::fourier;
      else
        fail("perturbation", "mode must be 'gaussian-bumps' or 'fourier'");
    }
    auto& pt = sc.perturbation;
    pt.eps_v = get_num(p, "perturbation", "eps_v", pt.eps_v);
    pt.eps_u = get_num(p, "perturbation", "eps_u", pt.eps_u);
    pt.eps_theta = get_num(p, "perturbation", "eps_theta", pt.eps_theta);
    pt.width = get_num(p, "perturbation", "width", pt.width);
    pt.center = get_num(p, "perturbation", "center", pt.center);
    pt.fourier_modes = static_cast<int>(
        get_num(p, "perturbation", "fourier_modes", pt.fourier_modes));
    pt.fourier_k0 = get_num(p, "perturbation", "fourier_k0", pt.fourier_k0);
    pt.seed = static_cast<std::uint32_t>(
        get_num(p, "perturbation", "seed", pt.seed));
    if (!(pt.width > 0.0)) fail("perturbation", "width must be > 0");
  }

  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    check_keys(g, "grid", {"half_width", "cells"});
    sc.grid.half_width =
        get_num(g, "grid", "half_width", sc.grid.half_width);
    sc.grid.cells = static_cast<int>(get_num(g, "grid", "cells",
                                             sc.grid.cells));
    try {
      validate(sc.grid);
    } catch (const DomainError& e) {
      fail("grid", e.what());
    }
  }

  if (doc.contains("solver")) {
    const json& s = doc["solver"];
    check_keys(s, "solver",
               {"cfl", "art_visc", "t_end", "snapshot_interval",
                "diag_interval"});
    auto& sv = sc.solver;
    sv.cfl = get_num(s, "solver", "cfl", sv.cfl);
    sv.art_visc = get_num(s, "solver", "art_visc", sv.art_visc);
    sv.t_end = get_num(s, "solver", "t_end", sv.t_end);
    sv.snapshot_interval =
        get_num(s, "solver", "snapshot_interval", sv.snapshot_interval);
    sv.diag_interval = get_num(s, "solver", "diag_interval", sv.diag_interval);
    try {
      validate(sv);
    } catch (const DomainError& e) {
      fail("solver", e.what());
    }
  }

  if (doc.contains("contact")) {
    const json& c = doc["contact"];
    check_keys(c, "contact", {"xi_max", "grid_points", "tol"});
    sc.contact.xi_max = get_num(c, "contact", "xi_max", sc.contact.xi_max);
    sc.contact.grid_points = static_cast<int>(
        get_num(c, "contact", "grid_points", sc.contact.grid_points));
    sc.contact.tol = get_num(c, "contact", "tol", sc.contact.tol);
    if (!(sc.contact.xi_max > 0.0)) fail("contact", "xi_max must be > 0");
    if (sc.contact.grid_points < 16)
      fail("contact", "grid_points must be >= 16");
    if (!(sc.contact.tol > 0.0)) fail("contact", "tol must be > 0");
  }

  if (doc.contains("diagnostics")) {
    const json& d = doc["diagnostics"];
    check_keys(d, "diagnostics",
               {"alpha", "ratio_bound", "tail_fraction", "monotone_slack",
                "fit_window"});
    auto& dg = sc.diagnostics;
    dg.alpha = get_num(d, "diagnostics", "alpha", dg.alpha);
    dg.ratio_bound = get_num(d, "diagnostics", "ratio_bound", dg.ratio_bound);
    dg.tail_fraction =
        get_num(d, "diagnostics", "tail_fraction", dg.tail_fraction);
    dg.monotone_slack =
        get_num(d, "diagnostics", "monotone_slack", dg.monotone_slack);
    if (d.contains("fit_window")) {
      const json& w = d["fit_window"];
      if (!w.is_array() || w.size() != 2)
        fail("diagnostics", "fit_window must be [lo, hi]");
      dg.fit_window_lo = w[0].get<double>();
      dg.fit_window_hi = w[1].get<double>();
    }
    if (!(dg.alpha > 0.0)) fail("diagnostics", "alpha must be > 0");
  }
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path,
                       std::span<const std::string> overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("scenario: cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), overrides);
}

std::string canonical_scenario(const Scenario& sc) {
  json doc;
  doc["name"] = sc.name;
  doc["output_dir"] = sc.output_dir;
  doc["gas"] = {{"R", sc.gas.R},
                {"gamma", sc.gas.gamma},
                {"A", sc.gas.A},
                {"kappa", sc.gas.kappa}};
  doc["left"] = {{"v", sc.left.v}, {"u", sc.left.u}, {"theta", sc.left.theta}};
  if (sc.right)
    doc["right"] = {{"v", sc.right->v},
                    {"u", sc.right->u},
                    {"theta", sc.right->theta}};
  else
    doc["pure_contact"] = {{"theta_plus", *sc.pure_contact_theta_plus}};
  doc["perturbation"] = {
      {"mode", sc.perturbation.mode == PerturbationMode::gaussian_bumps
                   ? "gaussian-bumps"
                   : "fourier"},
      {"eps_v", sc.perturbation.eps_v},
      {"eps_u", sc.perturbation.eps_u},
      {"eps_theta", sc.perturbation.eps_theta},
      {"width", sc.perturbation.width},
      {"center", sc.perturbation.center},
      {"fourier_modes", sc.perturbation.fourier_modes},
      {"fourier_k0", sc.perturbation.fourier_k0},
      {"seed", sc.perturbation.seed}};
  doc["grid"] = {{"half_width", sc.grid.half_width}, {"cells", sc.grid.cells}};
  doc["solver"] = {{"cfl", sc.solver.cfl},
                   {"art_visc", sc.solver.art_visc},
                   {"t_end", sc.solver.t_end},
                   {"snapshot_interval", sc.solver.snapshot_interval},
                   {"diag_interval", sc.solver.diag_interval}};
  doc["contact"] = {{"xi_max", sc.contact.xi_max},
                    {"grid_points", sc.contact.grid_points},
                    {"tol", sc.contact.tol}};
  doc["diagnostics"] = {
      {"alpha", sc.diagnostics.alpha},
      {"ratio_bound", sc.diagnostics.ratio_bound},
      {"tail_fraction", sc.diagnostics.tail_fraction},
      {"monotone_slack", sc.diagnostics.monotone_slack},
      {"fit_window",
       {sc.diagnostics.fit_window_lo, sc.diagnostics.fit_window_hi}}};
  return doc.dump(2) + "\n";
}

}  // namespace wavepatterns
