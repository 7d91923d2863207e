#include "cwf/scenarios.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cwf/weil.hpp"

namespace cwf {
namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// dphi-coefficients of the monopole connection on the two caps:
// A_N = (n/2)(1 - cos theta) dphi, A_S = -(n/2)(1 + cos theta) dphi
double north_coeff(int n, double theta) {
  return 0.5 * n * (1.0 - std::cos(theta));
}
double south_coeff(int n, double theta) {
  return -0.5 * n * (1.0 + std::cos(theta));
}

}  // namespace

double monopole_chern_number(int n, int quad_points) {
  require(quad_points >= 16, "monopole quadrature needs at least 16 points");
  std::vector<std::pair<double, double>> gl = gauss_legendre_01(quad_points);

  // F = (n/2) sin(theta) dtheta ^ dphi on both caps; integrate each cap with
  // a product rule, theta over a half range and phi over the full circle
  double total = 0.0;
  for (int cap = 0; cap < 2; ++cap) {
    const double theta0 = (cap == 0) ? 0.0 : 0.5 * kPi;
    for (const auto& [t, wt] : gl) {
      const double theta = theta0 + 0.5 * kPi * t;
      double phi_sum = 0.0;
      for (const auto& [u, wu] : gl) {
        (void)u;
        phi_sum += wu * 2.0 * kPi;
      }
      total += wt * 0.5 * kPi * phi_sum * 0.5 * n * std::sin(theta);
    }
  }
  return total / (2.0 * kPi);
}

double monopole_overlap_residual(int n, int samples) {
  require(samples > 0, "need at least one sample");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    // colatitude band around the equator where both charts are defined
    const double theta =
        0.25 * kPi + 0.5 * kPi * (i + 0.5) / static_cast<double>(samples);
    const double shift = north_coeff(n, theta) - south_coeff(n, theta);
    worst = std::max(worst, std::abs(shift - n));
  }
  return worst;
}

CharFormDescriptor symplectic_descriptor(const TorusGrid& g, int n_pairs) {
  require(n_pairs >= 1, "need at least one symplectic pair");
  require(g.dim() == 2 * n_pairs, "grid dimension must be 2 n_pairs");
  WeilPoly f =
      make_weil(WeilKind::trace_power, 2, cplx(1.0 / (8.0 * kPi * kPi)),
                Algebra::su2());

  // sigma = dx^0 ^ dx^1 + dx^2 ^ dx^3 + ...; beta = sigma^(n-1)/(n-1)!
  GridForm beta = unit_scalar_form(g);
  if (n_pairs > 1) {
    ConstForm sigma;
    sigma.degree = 2;
    sigma.coeff.assign(static_cast<std::size_t>(g.ncomp(2)), 0.0);
    for (int p = 0; p < n_pairs; ++p)
      sigma.coeff[static_cast<std::size_t>(g.comp_index(
          2, (1u << (2 * p)) | (1u << (2 * p + 1))))] = 1.0;
    GridForm sf = const_scalar_form(g, sigma);
    double fact = 1.0;
    for (int j = 1; j < n_pairs; ++j) {
      beta = wedge_product(beta, sf);
      fact *= j;
    }
    beta.scale(cplx(1.0 / fact));
  }
  return CharFormDescriptor::make(f, beta);
}

}  // namespace cwf
