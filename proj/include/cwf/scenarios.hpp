#pragma once
// Built-in analytic scenarios: the two-chart S^2 monopole bundle evaluated by
// quadrature (nontrivial-bundle Chern-Weil without an atlas framework) and
// the symplectic descriptor on even-dimensional tori.

#include "cwf/connection_forms.hpp"
#include "cwf/torus_forms.hpp"

namespace cwf {

// first Chern number (1/2pi) int_{S^2} F of the charge-n monopole bundle,
// F = (n/2) sin(theta) dtheta ^ dphi, integrated with quad_points-node
// Gauss-Legendre rules per axis on each polar cap; exact answer is n
double monopole_chern_number(int n, int quad_points);

// max deviation of A_N - A_S from the clutching shift n dphi, sampled on a
// band of colatitudes around the equator; zero to rounding by construction
double monopole_overlap_residual(int n, int samples);

// descriptor (f, beta) with f = (1/8pi^2) tr(X^2) and
// beta = sigma^(n_pairs-1)/(n_pairs-1)! for the standard constant symplectic
// form sigma on T^(2 n_pairs); its evaluate_C is the Atiyah-Bott pairing
CharFormDescriptor symplectic_descriptor(const TorusGrid& g, int n_pairs);

}  // namespace cwf
