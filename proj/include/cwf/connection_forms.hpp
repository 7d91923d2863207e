#pragma once
// Characteristic forms on the affine space of connections, obtained by
// evaluating the fiber integral of an invariant polynomial in the universal
// curvature against tangent vectors: C_{f,beta}(A; a_1..a_q), the
// gauge-equivariant extension C#_{f,beta}(X), the moment pairing, and
// residuals for Cartan closedness, gauge invariance, and transgression.

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "cwf/gauge_fields.hpp"
#include "cwf/torus_forms.hpp"
#include "cwf/weil.hpp"

namespace cwf {

// the pair (f, beta): an invariant polynomial of degree k and a closed scalar
// r-form on the base; the induced form on connection space has degree
// q = 2k + r - n
struct CharFormDescriptor {
  WeilPoly f;
  GridForm beta;
  int q = 0;

  // validates that beta is scalar and closed and that q is in range
  static CharFormDescriptor make(const WeilPoly& f, GridForm beta);
  // beta = 1
  static CharFormDescriptor make_top(const WeilPoly& f, const TorusGrid& g);

  const TorusGrid& grid() const { return beta.grid(); }
  int k() const { return f.degree; }
  int r() const { return beta.degree(); }
};

// all-ones scalar 0-form
GridForm unit_scalar_form(const TorusGrid& g);
// scalar form with the given constant coefficient per component
GridForm const_scalar_form(const TorusGrid& g, const ConstForm& c);

// C_{f,beta} at A on exactly q tangent vectors (Lie-valued 1-forms)
double evaluate_C(const CharFormDescriptor& d, const GridForm& A,
                  const std::vector<const GridForm*>& args);

// equivariant extension C#_{f,beta}(X) at A on m tangent vectors; the
// X-degree i of the contributing stratum solves 2(k - i) + r - n = m, and
// inadmissible m evaluate to zero. X = 0 with m = q collapses to evaluate_C
// through the same code path.
double evaluate_C_sharp(const CharFormDescriptor& d, const GridForm& A,
                        const GridForm& X,
                        const std::vector<const GridForm*>& args);

// the scalar-argument part of C#: for the degree-2 surface descriptor this is
// the moment map pairing <m_A, X>
double moment_pairing(const CharFormDescriptor& d, const GridForm& A,
                      const GridForm& X);

using ConnectionFunctional = std::function<double(const GridForm&)>;

// central difference of a functional on the affine space of connections
double directional_derivative(const ConnectionFunctional& fn, const GridForm& A,
                              const GridForm& dir, double step);

struct RichardsonPair {
  double coarse = 0.0;  // step h
  double fine = 0.0;    // step h / 2
  double extrapolated() const { return (4.0 * fine - coarse) / 3.0; }
  double agreement() const { return std::abs(fine - coarse) / 3.0; }
};

RichardsonPair richardson_derivative(const ConnectionFunctional& fn,
                                     const GridForm& A, const GridForm& dir,
                                     double step);

// residual of the Cartan-model closedness of C#: with probes p_0..p_m,
// | sum_j (-1)^j D_{p_j} [C#(X)(probes \ p_j)] - C#(X)(d_A X, p_0..p_m) |
double cartan_closedness_residual(const CharFormDescriptor& d,
                                  const GridForm& A, const GridForm& X,
                                  const std::vector<const GridForm*>& probes,
                                  double step = 1e-4);

// | evaluate_C(phi . A; Ad_phi args) - evaluate_C(A; args) |
double gauge_invariance_residual(const CharFormDescriptor& d, const GridForm& A,
                                 const GridForm& phi,
                                 const std::vector<const GridForm*>& args);

// c_f(F_A): the scalar 2k-form f(F_A, ..., F_A)
GridForm char_form(const WeilPoly& f, const GridForm& A);

struct TransgressionResult {
  double pointwise_l2 = 0.0;
  double integral_gap = 0.0;
};

// residual of c_f(F_1) - c_f(F_0) = d[ k int_0^1 f(A_1 - A_0, F_t, ..) dt ]
// on a base of dimension 2k, with the t-integral done by Gauss-Legendre
// quadrature (exact for t_nodes >= ceil(k/2) + 1)
TransgressionResult transgression_residual(const WeilPoly& f,
                                           const GridForm& A0,
                                           const GridForm& A1, int t_nodes);

// Gauss-Legendre nodes and weights on [0, 1]
std::vector<std::pair<double, double>> gauss_legendre_01(int n);

}  // namespace cwf
