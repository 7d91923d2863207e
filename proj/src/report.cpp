#include "cwf/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace cwf {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void row(std::string& out, const std::string& c0, const std::string& c1,
         const std::string& c2, const std::string& c3, const std::string& c4) {
  char buf[192];
  std::snprintf(buf, sizeof buf, "  %-28s %-14s %-12s %-12s %s\n", c0.c_str(),
                c1.c_str(), c2.c_str(), c3.c_str(), c4.c_str());
  out += buf;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

bool VerificationReport::overall_pass() const {
  for (const CheckRecord& c : checks)
    if (!c.pass) return false;
  for (const ConvergenceRecord& c : convergence)
    if (!c.pass) return false;
  return true;
}

std::string report_json(const VerificationReport& r) {
  ordered_json j;
  j["version"] = r.version;
  j["scenario"] = r.scenario;
  j["kind"] = r.kind;
  j["seed"] = r.seed;
  j["grid_sizes"] = r.grid_sizes;
  j["mode"] = r.mode;
  j["group"] = r.group;
  j["polynomial"] = r.polynomial;

  ordered_json checks = ordered_json::array();
  for (const CheckRecord& c : r.checks) {
    ordered_json jc;
    jc["id"] = c.id;
    if (!c.error.empty()) {
      jc["error"] = c.error;
    } else {
      jc["value"] = c.value;
      jc["expected"] = c.expected;
      jc["residual"] = c.residual;
      jc["tolerance"] = c.tolerance;
    }
    jc["pass"] = c.pass;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);

  ordered_json conv = ordered_json::array();
  for (const ConvergenceRecord& c : r.convergence) {
    ordered_json jc;
    jc["id"] = c.id;
    if (!c.error.empty()) {
      jc["error"] = c.error;
    } else {
      jc["resolutions"] = c.resolutions;
      jc["residuals"] = c.residuals;
      if (c.exact)
        jc["order"] = "exact";
      else
        jc["order"] = c.fitted_order;
      jc["min_order"] = c.min_order;
    }
    jc["pass"] = c.pass;
    conv.push_back(std::move(jc));
  }
  j["convergence"] = std::move(conv);

  j["overall_pass"] = r.overall_pass();
  return j.dump(2) + "\n";
}

std::string report_summary(const VerificationReport& r) {
  std::string out;
  out += "cwf " + r.kind + " report " + r.version + "\n";
  out += "scenario " + r.scenario + ", seed " + std::to_string(r.seed) +
         ", sizes [" + join_ints(r.grid_sizes) + "], mode " + r.mode +
         ", group " + r.group + ", polynomial " + r.polynomial + "\n";
  const std::string rule(78, '-');
  out += rule + "\n";

  if (!r.checks.empty()) {
    row(out, "check", "value", "residual", "tolerance", "status");
    for (const CheckRecord& c : r.checks) {
      if (!c.error.empty()) {
        row(out, c.id, "error: " + c.error, "", "", "FAIL");
        continue;
      }
      row(out, c.id, fmt("%+.6e", c.value), fmt("%.3e", c.residual),
          fmt("%.1e", c.tolerance), c.pass ? "pass" : "FAIL");
    }
  }
  if (!r.convergence.empty()) {
    row(out, "convergence", "resolutions", "order", "required", "status");
    for (const ConvergenceRecord& c : r.convergence) {
      if (!c.error.empty()) {
        row(out, c.id, "error: " + c.error, "", "", "FAIL");
        continue;
      }
      row(out, c.id, join_ints(c.resolutions),
          c.exact ? std::string("exact") : fmt("%.2f", c.fitted_order),
          fmt("%.2f", c.min_order), c.pass ? "pass" : "FAIL");
    }
  }
  out += rule + "\n";
  out += std::string("overall ") + (r.overall_pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace cwf
