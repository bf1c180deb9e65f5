#ifndef WAVEPATTERNS_SCENARIO_HPP
#define WAVEPATTERNS_SCENARIO_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <string>

#include "wavepatterns/diagnostics.hpp"
#include "wavepatterns/gas.hpp"
#include "wavepatterns/grid.hpp"

namespace wavepatterns {

/// Settings of the contact-layer BVP solve.
struct ContactSolveConfig {
  double xi_max = 12.0;
  int grid_points = 4001;
  double tol = 1e-10;
};

/// One fully specified problem: gas, end states (explicit right state or the
/// pure-contact shorthand), perturbation, grid, solver and diagnostics
/// settings, and the output directory.
struct Scenario {
  std::string name = "scenario";
  GasParams gas;
  ThermoState left;
  std::optional<ThermoState> right;               // explicit z+
  std::optional<double> pure_contact_theta_plus;  // shorthand: (2.2)-matched z+
  PerturbationSpec perturbation;
  Grid grid;
  SolverConfig solver;
  ContactSolveConfig contact;
  DiagnosticsConfig diagnostics;
  std::string output_dir = "out";

  /// The right end state: explicit, or built from the shorthand with equal
  /// velocity and pressure.
  ThermoState right_state() const;
};

/// Parses and validates a scenario document (JSON). Overrides of the form
/// "dotted.key.path=value" are applied to the document before validation.
/// Unknown keys anywhere are rejected. Throws ConfigError naming the key.
Scenario parse_scenario(const std::string& text,
                        std::span<const std::string> overrides = {});

Scenario load_scenario(const std::filesystem::path& path,
                       std::span<const std::string> overrides = {});

/// Canonical emission: every field explicit, keys sorted, stable number
/// formatting. parse(canonical_scenario(s)) reproduces s exactly.
std::string canonical_scenario(const Scenario& sc);

}  // namespace wavepatterns

#endif
