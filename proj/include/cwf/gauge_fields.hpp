#pragma once
// Connections, curvature, gauge action, covariant calculus, and the Coulomb
// vertical/horizontal splitting of tangent vectors at a connection.
//
// Conventions: a connection A is a Lie-valued 1-form; a gauge transformation
// phi is a group-valued 0-form. The action is
//   gauge_act(phi, A) = phi A phi^-1 - (d phi) phi^-1,
// its infinitesimal version along the flow t -> exp(-tX) is
//   infinitesimal_action(X, A) = dX + [A, X].

#include "cwf/torus_forms.hpp"

namespace cwf {

// F = dA + 1/2 [A ^ A]
GridForm curvature(const GridForm& A);

// pointwise conjugate transpose
GridForm dagger_field(const GridForm& w);

// pointwise phi w phi^-1 for a group-valued 0-form phi
GridForm conjugate_field(const GridForm& phi, const GridForm& w);

GridForm gauge_act(const GridForm& phi, const GridForm& A);

GridForm infinitesimal_action(const GridForm& X, const GridForm& A);

// d_A w = dw + [A ^ w]
GridForm covariant_derivative(const GridForm& A, const GridForm& w);

// adjoint of d_A on 0-forms: (delta_A a) = -sum_i (D_i a_i + [A_i, a_i]);
// satisfies <d_A X, a> = <X, delta_A a> exactly in the discrete pairing
GridForm codifferential(const GridForm& A, const GridForm& a);

// delta_A d_A on 0-forms; positive semidefinite
GridForm laplacian(const GridForm& A, const GridForm& X);

struct SolveStats {
  int iters = 0;
  double rel_residual = 0.0;
};

// minimal-norm solve of laplacian(A, x) = b by conjugate gradients; the
// right-hand sides arising here (codifferentials) are orthogonal to the
// kernel, so plain CG from zero stays in the range
GridForm solve_laplacian(const GridForm& A, const GridForm& b,
                         double rel_tol = 1e-12, int max_iter = 0,
                         SolveStats* stats = nullptr);

// d_A G_A delta_A a: the vertical (gauge-orbit) part of a tangent vector a
GridForm coulomb_vertical(const GridForm& A, const GridForm& a,
                          SolveStats* stats = nullptr);

// a minus its vertical part; post: codifferential(A, result) ~ 0
GridForm horizontal_project(const GridForm& A, const GridForm& a,
                            SolveStats* stats = nullptr);

// y += s x on raw form payloads (shapes must match)
void form_axpy(double s, const GridForm& x, GridForm& y);

}  // namespace cwf
