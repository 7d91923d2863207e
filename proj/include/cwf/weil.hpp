#pragma once
// Ad-invariant polynomials on the Lie algebra and their full polarizations.
// Two families: trace powers c0 * tr(X^k) and determinants c0 * det(X).

#include <string>
#include <vector>

#include "cwf/lie_core.hpp"

namespace cwf {

enum class WeilKind : unsigned char { trace_power = 0, determinant = 1 };

struct WeilPoly {
  WeilKind kind = WeilKind::trace_power;
  int degree = 1;  // polynomial degree k (arity of the polarization)
  cplx c0 = 1.0;   // normalization constant
  Algebra alg;
};

// Validates degree/kind/algebra compatibility; throws std::invalid_argument.
WeilPoly make_weil(WeilKind kind, int degree, cplx c0, const Algebra& alg);

// Named registry: "c2_su2" -> (1/8 pi^2) tr(X^2), "det_su2" -> (1/4 pi^2)
// det(X), "c1_u1" -> (i/2 pi) X. Unknown name throws std::out_of_range.
WeilPoly weil_registry(const std::string& name);
std::vector<std::string> weil_registry_names();

// f(X) = polarized(X, ..., X)
cplx evaluate(const WeilPoly& f, const AlgElem& x);

// Fully symmetric multilinear extension; xs.size() must equal f.degree.
cplx polarized(const WeilPoly& f, const std::vector<AlgElem>& xs);

// |sum_i polarized(x_1, .., [y, x_i], .., x_k)|; zero for invariant f.
double ad_invariance_residual(const WeilPoly& f, const std::vector<AlgElem>& xs,
                              const AlgElem& y);

// Pointwise variant on raw row-major k-by-k blocks, used by grid-field code.
// n = f.degree pointers, each to an alg.k * alg.k block.
cplx polarized_point(const WeilPoly& f, const cplx* const* xs);

}  // namespace cwf
