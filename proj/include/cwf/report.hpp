#pragma once
// Structured verification reports: per-check residual records, convergence
// records from refinement sweeps, and two deterministic renderings (a JSON
// document and a fixed-width summary table). Rendering is byte-stable for
// identical record values, so reports can be compared as files.

#include <cstdint>
#include <string>
#include <vector>

namespace cwf {

struct CheckRecord {
  std::string id;
  double value = 0.0;
  double expected = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string error;  // nonempty: the check aborted before producing numbers
};

struct ConvergenceRecord {
  std::string id;
  std::vector<int> resolutions;
  std::vector<double> residuals;
  bool exact = false;         // every residual sits below the exactness floor
  double fitted_order = 0.0;  // least-squares slope, meaningful when !exact
  double min_order = 0.0;
  bool pass = false;
  std::string error;
};

struct VerificationReport {
  std::string version;
  std::string scenario;
  std::string kind;  // "suite" or "sweep"
  std::uint64_t seed = 0;
  // resolved run parameters, echoed so the report identifies its inputs
  std::vector<int> grid_sizes;
  std::string mode;
  std::string group;
  std::string polynomial;
  std::vector<CheckRecord> checks;
  std::vector<ConvergenceRecord> convergence;

  bool overall_pass() const;
};

// machine-readable rendering with stable key order and number formatting
std::string report_json(const VerificationReport& r);
// fixed-width human summary table
std::string report_summary(const VerificationReport& r);

}  // namespace cwf
