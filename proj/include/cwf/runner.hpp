#pragma once
// Scenario configuration, the scenario registry, and the suite/sweep drivers
// behind the cwf command line tool.
//
// Configs are JSON documents (see config_schema()). A run is fully determined
// by the resolved config: random fields are seeded band-limited trigonometric
// polynomials, and every reduction in the library decomposes independently of
// the thread count, so reports are byte-identical across thread counts.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cwf/report.hpp"
#include "cwf/torus_forms.hpp"

namespace cwf {

struct ScenarioConfig {
  std::string scenario;
  // sweep resolutions in ascending order; suites run at the last entry; the
  // monopole scenario reads these as quadrature point counts per axis
  std::vector<int> grid_sizes;
  DiffMode mode = DiffMode::spectral;
  std::string group = "su2";
  std::string polynomial = "c2_su2";
  int beta_pairs = 2;  // symplectic pairing form: sigma^(pairs-1) / (pairs-1)!
  int fmax = 1;        // frequency cap of the seeded random fields
  double amp = 0.3;    // amplitude of the seeded random fields
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerances;  // per-check-id overrides
  std::map<std::string, double> min_orders;  // per-sweep-record overrides
};

std::vector<std::string> scenario_names();

// built-in runnable defaults for a registered scenario (seed 42); throws
// std::runtime_error for unknown names
ScenarioConfig default_config(const std::string& scenario);

// parses and validates a JSON config document; unknown scenarios, unknown
// keys, wrong types, missing seed, and negative tolerances are rejected with
// std::runtime_error
ScenarioConfig parse_config(const std::string& text);

// the config file format, as a human-readable schema document
std::string config_schema();

// runs the scenario's check list at the finest configured size; individual
// check failures (including thrown solver errors) are recorded per check and
// the suite continues
VerificationReport run_suite(const ScenarioConfig& config);

// runs the scenario's refinement records over all configured sizes (at least
// 3) and fits observed convergence orders
VerificationReport convergence_sweep(const ScenarioConfig& config);

}  // namespace cwf
