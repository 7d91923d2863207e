#include "cwf/gauge_fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cwf/kernels.hpp"
#include "cwf/parallel.hpp"

namespace cwf {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void require_connection(const GridForm& A) {
  require(A.is_lie() && A.degree() == 1, "connection must be a Lie 1-form");
}

}  // namespace

GridForm curvature(const GridForm& A) {
  require_connection(A);
  GridForm F = exterior_derivative(A);
  GridForm br = bracket_wedge(A, A);
  br.scale(0.5);
  F += br;
  return F;
}

GridForm dagger_field(const GridForm& w) {
  require(w.is_lie(), "dagger_field needs a Lie/group-valued form");
  int k = w.algebra().k;
  std::size_t kk = static_cast<std::size_t>(k) * k;
  GridForm out = w;
  const std::size_t V = w.grid().volume();
  for (int c = 0; c < w.ncomp(); ++c) {
    const cplx* src = w.comp(c);
    cplx* dst = out.comp(c);
    par::parallel_for_range(V, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t s = lo; s < hi; ++s)
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            dst[s * kk + static_cast<std::size_t>(i * k + j)] =
                std::conj(src[s * kk + static_cast<std::size_t>(j * k + i)]);
    });
  }
  return out;
}

GridForm conjugate_field(const GridForm& phi, const GridForm& w) {
  require(phi.is_lie() && phi.degree() == 0, "phi must be a 0-form");
  require(w.is_lie() && phi.algebra() == w.algebra(), "algebra mismatch");
  require(phi.grid().same(w.grid()), "grid mismatch");
  int k = phi.algebra().k;
  const std::size_t V = w.grid().volume();
  GridForm phid = dagger_field(phi);
  GridForm tmp = GridForm::lie(w.grid(), w.algebra(), 0);
  GridForm out = w;
  for (int c = 0; c < w.ncomp(); ++c) {
    par::par_cmm(k, 1.0, phi.comp(0), w.comp(c), tmp.comp(0), V, false);
    par::par_cmm(k, 1.0, tmp.comp(0), phid.comp(0), out.comp(c), V, false);
  }
  return out;
}

GridForm gauge_act(const GridForm& phi, const GridForm& A) {
  require_connection(A);
  GridForm out = conjugate_field(phi, A);
  GridForm dphi = exterior_derivative(phi);
  GridForm phid = dagger_field(phi);
  int k = A.algebra().k;
  const std::size_t V = A.grid().volume();
  for (int c = 0; c < A.ncomp(); ++c)
    par::par_cmm(k, -1.0, dphi.comp(c), phid.comp(0), out.comp(c), V, true);
  return out;
}

GridForm infinitesimal_action(const GridForm& X, const GridForm& A) {
  require(X.is_lie() && X.degree() == 0, "X must be a Lie-valued 0-form");
  require_connection(A);
  GridForm out = exterior_derivative(X);
  GridForm br = bracket_wedge(A, X);
  out += br;
  return out;
}

GridForm covariant_derivative(const GridForm& A, const GridForm& w) {
  require_connection(A);
  GridForm out = exterior_derivative(w);
  GridForm br = bracket_wedge(A, w);
  out += br;
  return out;
}

GridForm codifferential(const GridForm& A, const GridForm& a) {
  require_connection(A);
  require(a.is_lie() && a.degree() == 1, "codifferential needs a 1-form");
  require(A.grid().same(a.grid()) && A.algebra() == a.algebra(),
          "operand mismatch");
  const TorusGrid& g = A.grid();
  int k = A.algebra().k;
  const std::size_t V = g.volume();
  GridForm out = GridForm::lie(g, A.algebra(), 0);
  for (int i = 0; i < g.dim(); ++i) {
    apply_axis_derivative(g, i, a.block(), a.comp(i), out.comp(0), -1.0);
    par::par_cmm(k, -1.0, A.comp(i), a.comp(i), out.comp(0), V, true);
    par::par_cmm(k, 1.0, a.comp(i), A.comp(i), out.comp(0), V, true);
  }
  return out;
}

GridForm laplacian(const GridForm& A, const GridForm& X) {
  return codifferential(A, infinitesimal_action(X, A));
}

void form_axpy(double s, const GridForm& x, GridForm& y) {
  require(x.size() == y.size(), "form_axpy size mismatch");
  par::par_axpy(s, reinterpret_cast<const double*>(x.data()),
                reinterpret_cast<double*>(y.data()), 2 * x.size());
}

GridForm solve_laplacian(const GridForm& A, const GridForm& b, double rel_tol,
                         int max_iter, SolveStats* stats) {
  require(b.is_lie() && b.degree() == 0, "rhs must be a Lie-valued 0-form");
  if (max_iter <= 0)
    max_iter = 200 + 40 * static_cast<int>(std::sqrt(
                         static_cast<double>(b.grid().volume())));
  GridForm x = GridForm::lie(b.grid(), b.algebra(), 0);
  GridForm r = b;
  GridForm p = r;
  double bb = l2_inner(b, b);
  if (bb == 0.0) {
    if (stats) *stats = {0, 0.0};
    return x;
  }
  double rr = bb;
  double rr_best = bb;
  double gamma0 = 0.0;
  int it = 0;
  int stale = 0;
  // the l2 residual of CG is not monotone and can plateau for long stretches
  // before the superlinear phase, so the stagnation window must scale with
  // the iteration budget
  const int stale_window = std::max(100, max_iter / 4);
  for (; it < max_iter; ++it) {
    GridForm ap = laplacian(A, p);
    double pap = l2_inner(p, ap);
    double pp = l2_inner(p, p);
    if (it == 0) gamma0 = pap / pp;
    // search direction numerically inside the kernel: stepping along it
    // amplifies rounding noise without reducing the residual
    if (!(pap > 1e-13 * gamma0 * pp)) break;
    double alpha = rr / pap;
    form_axpy(alpha, p, x);
    form_axpy(-alpha, ap, r);
    double rr2 = l2_inner(r, r);
    if (std::sqrt(rr2 / bb) < rel_tol) {
      rr = rr2;
      ++it;
      break;
    }
    if (rr2 < 0.9999 * rr_best) {
      rr_best = rr2;
      stale = 0;
    } else if (++stale >= stale_window) {
      rr = rr2;
      ++it;
      break;
    }
    double beta = rr2 / rr;
    // p = r + beta p
    p.scale(beta);
    form_axpy(1.0, r, p);
    rr = rr2;
  }
  if (stats) *stats = {it, std::sqrt(rr / bb)};
  return x;
}

GridForm coulomb_vertical(const GridForm& A, const GridForm& a,
                          SolveStats* stats) {
  GridForm b = codifferential(A, a);
  GridForm x = solve_laplacian(A, b, 1e-12, 0, stats);
  return infinitesimal_action(x, A);
}

GridForm horizontal_project(const GridForm& A, const GridForm& a,
                            SolveStats* stats) {
  GridForm v = coulomb_vertical(A, a, stats);
  GridForm out = a;
  out -= v;
  return out;
}

}  // namespace cwf
