#pragma once
// Small shared numeric helpers.

#include <cmath>
#include <cstddef>
#include <vector>

namespace cwf {

// least-squares slope of log(err) against log(h): the observed convergence
// order of a discretization
inline double fit_log_order(const std::vector<double>& h,
                            const std::vector<double>& err) {
  std::size_t n = h.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::log(h[i]);
    double y = std::log(err[i] > 0 ? err[i] : 1e-300);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double d = n * sxx - sx * sx;
  return (n * sxy - sx * sy) / d;
}

}  // namespace cwf
