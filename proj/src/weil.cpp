#include "cwf/weil.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cwf {

namespace {

cplx trace_of(int k, const cplx* x) {
  cplx t = 0;
  for (int i = 0; i < k; ++i) t += x[i * k + i];
  return t;
}

cplx trace_prod2(int k, const cplx* a, const cplx* b) {
  cplx t = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t += a[i * k + j] * b[j * k + i];
  return t;
}

cplx trace_prod3(int k, const cplx* a, const cplx* b, const cplx* c) {
  cplx t = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      cplx ab = 0;
      for (int l = 0; l < k; ++l) ab += a[i * k + l] * b[l * k + j];
      t += ab * c[j * k + i];
    }
  return t;
}

}  // namespace

WeilPoly make_weil(WeilKind kind, int degree, cplx c0, const Algebra& alg) {
  if (degree < 1 || degree > 3)
    throw std::invalid_argument("weil degree must be 1..3");
  if (kind == WeilKind::determinant && degree != alg.k)
    throw std::invalid_argument("determinant degree must equal matrix size");
  return {kind, degree, c0, alg};
}

WeilPoly weil_registry(const std::string& name) {
  const double pi = std::numbers::pi;
  if (name == "c2_su2")
    return make_weil(WeilKind::trace_power, 2, 1.0 / (8.0 * pi * pi),
                     Algebra::su2());
  if (name == "det_su2")
    return make_weil(WeilKind::determinant, 2, 1.0 / (4.0 * pi * pi),
                     Algebra::su2());
  if (name == "c1_u1")
    return make_weil(WeilKind::trace_power, 1, cplx(0.0, 1.0 / (2.0 * pi)),
                     Algebra::u1());
  throw std::out_of_range("unknown weil polynomial: " + name);
}

std::vector<std::string> weil_registry_names() {
  return {"c2_su2", "det_su2", "c1_u1"};
}

cplx polarized_point(const WeilPoly& f, const cplx* const* xs) {
  int k = f.alg.k;
  if (f.kind == WeilKind::trace_power) {
    switch (f.degree) {
      case 1:
        return f.c0 * trace_of(k, xs[0]);
      case 2:
        return f.c0 * trace_prod2(k, xs[0], xs[1]);
      default:
        return f.c0 * 0.5 *
               (trace_prod3(k, xs[0], xs[1], xs[2]) +
                trace_prod3(k, xs[0], xs[2], xs[1]));
    }
  }
  // determinant polarizations via trace identities
  switch (f.degree) {
    case 1:
      return f.c0 * trace_of(k, xs[0]);
    case 2: {
      cplx t1 = trace_of(k, xs[0]), t2 = trace_of(k, xs[1]);
      return f.c0 * 0.5 * (t1 * t2 - trace_prod2(k, xs[0], xs[1]));
    }
    default: {
      cplx t1 = trace_of(k, xs[0]), t2 = trace_of(k, xs[1]),
           t3 = trace_of(k, xs[2]);
      cplx p12 = trace_prod2(k, xs[0], xs[1]),
           p13 = trace_prod2(k, xs[0], xs[2]),
           p23 = trace_prod2(k, xs[1], xs[2]);
      cplx s = t1 * t2 * t3 - t1 * p23 - t2 * p13 - t3 * p12 +
               trace_prod3(k, xs[0], xs[1], xs[2]) +
               trace_prod3(k, xs[0], xs[2], xs[1]);
      return f.c0 * (s / 6.0);
    }
  }
}

cplx evaluate(const WeilPoly& f, const AlgElem& x) {
  if (!(x.alg == f.alg)) throw std::invalid_argument("algebra mismatch");
  const cplx* p = x.m.data();
  const cplx* xs[3] = {p, p, p};
  return polarized_point(f, xs);
}

cplx polarized(const WeilPoly& f, const std::vector<AlgElem>& xs) {
  if (static_cast<int>(xs.size()) != f.degree)
    throw std::invalid_argument("polarized arity mismatch");
  const cplx* ps[3] = {nullptr, nullptr, nullptr};
  for (int i = 0; i < f.degree; ++i) {
    if (!(xs[static_cast<std::size_t>(i)].alg == f.alg))
      throw std::invalid_argument("algebra mismatch");
    ps[i] = xs[static_cast<std::size_t>(i)].m.data();
  }
  return polarized_point(f, ps);
}

double ad_invariance_residual(const WeilPoly& f, const std::vector<AlgElem>& xs,
                              const AlgElem& y) {
  if (static_cast<int>(xs.size()) != f.degree)
    throw std::invalid_argument("polarized arity mismatch");
  cplx s = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<AlgElem> mod = xs;
    mod[i] = bracket(y, xs[i]);
    s += polarized(f, mod);
  }
  return std::abs(s);
}

}  // namespace cwf
