#include "cwf/connection_forms.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace cwf {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// the unique stratum contributing to an m-argument evaluation: X-degree i
// with 2(k - i) + r - n = m, weight (-1)^i binom(k, i) (k-i)!/(k-i-m)!
struct Stratum {
  bool ok = false;
  int i = 0;
  int nf = 0;
  double weight = 0.0;
};

Stratum stratum_for(const CharFormDescriptor& d, int m) {
  const int k = d.k();
  const int n = d.grid().dim();
  const int r = d.r();
  Stratum s;
  if ((m + n - r) % 2 != 0) return s;
  s.i = k - (m + n - r) / 2;
  s.nf = k - s.i - m;
  if (s.i < 0 || s.i > k || s.nf < 0) return s;
  s.ok = true;
  double w = (s.i % 2) ? -1.0 : 1.0;
  for (int j = 1; j <= s.i; ++j) w *= static_cast<double>(k - s.i + j) / j;
  for (int j = 0; j < m; ++j) w *= static_cast<double>(k - s.i - j);
  s.weight = w;
  return s;
}

double evaluate_stratum(const CharFormDescriptor& d, const GridForm& A,
                        const GridForm* X,
                        const std::vector<const GridForm*>& args) {
  const TorusGrid& g = d.grid();
  require(A.is_lie() && A.degree() == 1 && A.grid().same(g),
          "connection must be a Lie-valued 1-form on the descriptor grid");
  require(d.f.alg == A.algebra(), "polynomial and connection algebra differ");
  for (const GridForm* a : args)
    require(a != nullptr && a->is_lie() && a->degree() == 1 &&
                a->grid().same(g) && a->algebra() == A.algebra(),
            "tangent arguments must be Lie-valued 1-forms on the same grid");
  if (X != nullptr)
    require(X->is_lie() && X->degree() == 0 && X->grid().same(g) &&
                X->algebra() == A.algebra(),
            "gauge direction must be a Lie-valued 0-form on the same grid");

  const Stratum s = stratum_for(d, static_cast<int>(args.size()));
  if (!s.ok) return 0.0;
  if (s.i > 0 && X == nullptr) return 0.0;

  std::vector<const GridForm*> slots = args;
  GridForm F;
  if (s.nf > 0) {
    F = curvature(A);
    for (int j = 0; j < s.nf; ++j) slots.push_back(&F);
  }
  for (int j = 0; j < s.i; ++j) slots.push_back(X);
  GridForm w = multilinear_wedge(d.f, slots);
  return s.weight * integrate(wedge_product(w, d.beta));
}

}  // namespace

CharFormDescriptor CharFormDescriptor::make(const WeilPoly& f, GridForm beta) {
  require(!beta.is_lie(), "beta must be a scalar form");
  const TorusGrid& g = beta.grid();
  if (beta.degree() < g.dim()) {
    GridForm db = exterior_derivative(beta);
    require(db.max_abs() <= 1e-10 * (1.0 + beta.max_abs()),
            "beta must be closed");
  }
  const int q = 2 * f.degree + beta.degree() - g.dim();
  require(q >= 0 && q <= 2 * f.degree, "need 0 <= 2k + r - n <= 2k");
  return CharFormDescriptor{f, std::move(beta), q};
}

CharFormDescriptor CharFormDescriptor::make_top(const WeilPoly& f,
                                                const TorusGrid& g) {
  return make(f, unit_scalar_form(g));
}

GridForm unit_scalar_form(const TorusGrid& g) {
  GridForm b = GridForm::scalar(g, 0);
  cplx* p = b.data();
  for (std::size_t s = 0; s < b.size(); ++s) p[s] = 1.0;
  return b;
}

GridForm const_scalar_form(const TorusGrid& g, const ConstForm& c) {
  require(static_cast<int>(c.coeff.size()) == g.ncomp(c.degree),
          "one coefficient per component required");
  GridForm b = GridForm::scalar(g, c.degree);
  for (int j = 0; j < b.ncomp(); ++j) {
    cplx* p = b.comp(j);
    const double v = c.coeff[static_cast<std::size_t>(j)];
    for (std::size_t s = 0; s < g.volume(); ++s) p[s] = v;
  }
  return b;
}

double evaluate_C(const CharFormDescriptor& d, const GridForm& A,
                  const std::vector<const GridForm*>& args) {
  require(static_cast<int>(args.size()) == d.q,
          "evaluate_C needs exactly q arguments");
  return evaluate_stratum(d, A, nullptr, args);
}

double evaluate_C_sharp(const CharFormDescriptor& d, const GridForm& A,
                        const GridForm& X,
                        const std::vector<const GridForm*>& args) {
  return evaluate_stratum(d, A, &X, args);
}

double moment_pairing(const CharFormDescriptor& d, const GridForm& A,
                      const GridForm& X) {
  require(d.grid().dim() == 2, "moment pairing is defined on a surface");
  return evaluate_C_sharp(d, A, X, {});
}

double directional_derivative(const ConnectionFunctional& fn, const GridForm& A,
                              const GridForm& dir, double step) {
  require(step > 0.0, "step must be positive");
  GridForm up = dir;
  up.scale(step);
  up += A;
  GridForm dn = dir;
  dn.scale(-step);
  dn += A;
  return (fn(up) - fn(dn)) / (2.0 * step);
}

RichardsonPair richardson_derivative(const ConnectionFunctional& fn,
                                     const GridForm& A, const GridForm& dir,
                                     double step) {
  RichardsonPair p;
  p.coarse = directional_derivative(fn, A, dir, step);
  p.fine = directional_derivative(fn, A, dir, 0.5 * step);
  return p;
}

double cartan_closedness_residual(const CharFormDescriptor& d,
                                  const GridForm& A, const GridForm& X,
                                  const std::vector<const GridForm*>& probes,
                                  double step) {
  const int np = static_cast<int>(probes.size());
  require(np >= 1, "need at least one probe");
  require(stratum_for(d, np - 1).ok || stratum_for(d, np + 1).ok,
          "no stratum matches the probe count");
  double term1 = 0.0;
  for (int j = 0; j < np; ++j) {
    std::vector<const GridForm*> sub;
    sub.reserve(static_cast<std::size_t>(np) - 1);
    for (int l = 0; l < np; ++l)
      if (l != j) sub.push_back(probes[static_cast<std::size_t>(l)]);
    auto fn = [&](const GridForm& B) { return evaluate_C_sharp(d, B, X, sub); };
    const double der =
        directional_derivative(fn, A, *probes[static_cast<std::size_t>(j)], step);
    term1 += (j % 2 ? -1.0 : 1.0) * der;
  }
  GridForm xa = infinitesimal_action(X, A);
  std::vector<const GridForm*> ext;
  ext.reserve(probes.size() + 1);
  ext.push_back(&xa);
  for (const GridForm* p : probes) ext.push_back(p);
  const double term2 = evaluate_C_sharp(d, A, X, ext);
  return std::abs(term1 - term2);
}

double gauge_invariance_residual(const CharFormDescriptor& d, const GridForm& A,
                                 const GridForm& phi,
                                 const std::vector<const GridForm*>& args) {
  GridForm Ag = gauge_act(phi, A);
  std::vector<GridForm> conj;
  conj.reserve(args.size());
  for (const GridForm* a : args) conj.push_back(conjugate_field(phi, *a));
  std::vector<const GridForm*> cargs;
  cargs.reserve(conj.size());
  for (const GridForm& c : conj) cargs.push_back(&c);
  return std::abs(evaluate_C(d, Ag, cargs) - evaluate_C(d, A, args));
}

GridForm char_form(const WeilPoly& f, const GridForm& A) {
  GridForm F = curvature(A);
  std::vector<const GridForm*> slots(static_cast<std::size_t>(f.degree), &F);
  return multilinear_wedge(f, slots);
}

TransgressionResult transgression_residual(const WeilPoly& f,
                                           const GridForm& A0,
                                           const GridForm& A1, int t_nodes) {
  const TorusGrid& g = A0.grid();
  require(A0.is_lie() && A1.is_lie() && A0.degree() == 1 && A1.degree() == 1 &&
              A1.grid().same(g) && A0.algebra() == A1.algebra(),
          "endpoints must be connections on the same grid");
  require(g.dim() == 2 * f.degree, "transgression needs dim = 2k");
  require(t_nodes >= 2, "need at least two quadrature nodes");
  const int k = f.degree;
  GridForm a = A1;
  a -= A0;
  GridForm c1 = char_form(f, A1);
  GridForm c0 = char_form(f, A0);
  GridForm tg = GridForm::scalar(g, 2 * k - 1);
  for (const auto& [t, w] : gauss_legendre_01(t_nodes)) {
    GridForm At = A0;
    At.scale(1.0 - t);
    GridForm t1 = A1;
    t1.scale(t);
    At += t1;
    GridForm Ft = curvature(At);
    std::vector<const GridForm*> slots;
    slots.push_back(&a);
    for (int j = 0; j + 1 < k; ++j) slots.push_back(&Ft);
    GridForm term = multilinear_wedge(f, slots);
    term.scale(w * k);
    tg += term;
  }
  TransgressionResult out;
  GridForm resid = c1;
  resid -= c0;
  resid -= exterior_derivative(tg);
  out.pointwise_l2 = resid.l2();
  out.integral_gap = std::abs(integrate(c1) - integrate(c0));
  return out;
}

std::vector<std::pair<double, double>> gauss_legendre_01(int n) {
  require(n >= 1 && n <= 64, "node count out of range");
  std::vector<std::pair<double, double>> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    out[static_cast<std::size_t>(i)] = {0.5 * (x + 1.0), 0.5 * w};
  }
  return out;
}

}  // namespace cwf
