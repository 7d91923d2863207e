#pragma once
// Chern-Simons theory on a 3-torus: the evaluated action, winding numbers of
// group-valued maps with an independent simplicial degree oracle, the
// gauge-shift law, the conserved current of extremal connections, and
// horizontality of the induced 1-form on connection space.

#include <array>

#include "cwf/gauge_fields.hpp"
#include "cwf/torus_forms.hpp"

namespace cwf {

// -1/8pi^2 int tr(A ^ dA + 2/3 A ^ A ^ A) for su(2); the abelian variant is
// -1/4pi^2 int A ^ dA (the c1 normalization squared, cubic term vanishing)
double cs_action(const GridForm& A);

// (s/24pi^2) int tr((phi^-1 dphi)^3); the sign s is fixed so that the value
// agrees with the simplicial degree oracle on explicit degree-d maps
double winding_number(const GridForm& phi);

struct DegreeMapSpec {
  int degree = 0;
  double rho = 0.35;
  std::array<double, 3> center{0.5, 0.5, 0.5};
};

// smooth map T^3 -> SU(2) of the given topological degree: a radial quintic
// smoothstep profile inside the ball of radius rho, identity outside
GridForm make_degree_map(const TorusGrid& g, const DegreeMapSpec& spec);

struct DegreeCount {
  int degree = 0;
  bool conclusive = false;
};

// brute-force Brouwer degree: signed count of piecewise-linear preimages of a
// regular value over the Kuhn triangulation of the grid; exact integer when
// conclusive, inconclusive when the value passes too close to a cell face
DegreeCount degree_oracle(const GridForm& phi, const GrpElem& regular_value);

// | cs_action(phi . A) - cs_action(A) + winding_number(phi) |
double cs_shift_residual(const GridForm& A, const GridForm& phi);

// the current 2-form -1/4pi^2 tr(X F_A)
GridForm cs_current(const GridForm& A, const GridForm& X);

// L2 norm of d applied to the current 2-form; vanishes for flat connections
double current_closedness_residual(const GridForm& A, const GridForm& X);

// evaluation of the 1-form induced by tr(F^2) on the gauge-orbit direction
// through A: 1/4pi^2 int tr(d_A X ^ F_A); zero by horizontality
double horizontality_residual(const GridForm& A, const GridForm& X);

}  // namespace cwf
