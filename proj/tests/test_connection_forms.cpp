#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cwf/connection_forms.hpp"
#include "cwf/fields.hpp"
#include "cwf/gauge_fields.hpp"
#include "cwf/numerics.hpp"
#include "doctest.h"

using cwf::Algebra;
using cwf::CharFormDescriptor;
using cwf::ConstForm;
using cwf::cplx;
using cwf::DiffMode;
using cwf::GridForm;
using cwf::TorusGrid;
using cwf::WeilPoly;

namespace {

constexpr double kPi = 3.14159265358979323846;

// independent quadrature of (1/4pi^2) Re integral tr(a ^ b) on a surface
double surface_trace_wedge(const GridForm& a, const GridForm& b) {
  const TorusGrid& g = a.grid();
  const int k = a.algebra().k;
  const std::size_t blk = static_cast<std::size_t>(k) * k;
  double acc = 0.0;
  for (std::size_t s = 0; s < g.volume(); ++s) {
    const cplx* a1 = a.comp(0) + blk * s;
    const cplx* a2 = a.comp(1) + blk * s;
    const cplx* b1 = b.comp(0) + blk * s;
    const cplx* b2 = b.comp(1) + blk * s;
    cplx t = 0.0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        t += a1[static_cast<std::size_t>(k * i + j)] *
                 b2[static_cast<std::size_t>(k * j + i)] -
             a2[static_cast<std::size_t>(k * i + j)] *
                 b1[static_cast<std::size_t>(k * j + i)];
    acc += t.real();
  }
  return acc * g.cell_volume() / (4.0 * kPi * kPi);
}

// independent quadrature of -(1/4pi^2) Re integral tr(X F) on a surface
double surface_moment(const GridForm& X, const GridForm& F) {
  const TorusGrid& g = X.grid();
  const int k = X.algebra().k;
  const std::size_t blk = static_cast<std::size_t>(k) * k;
  double acc = 0.0;
  for (std::size_t s = 0; s < g.volume(); ++s) {
    const cplx* x = X.comp(0) + blk * s;
    const cplx* f = F.comp(0) + blk * s;
    cplx t = 0.0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        t += x[static_cast<std::size_t>(k * i + j)] *
             f[static_cast<std::size_t>(k * j + i)];
    acc += t.real();
  }
  return -acc * g.cell_volume() / (4.0 * kPi * kPi);
}

GridForm zero_like(const GridForm& w) {
  GridForm z = w;
  z.set_zero();
  return z;
}

}  // namespace

TEST_SUITE_BEGIN("connection_forms");

TEST_CASE("surface calibration matches the hand quadrature") {
  TorusGrid g({24, 24}, DiffMode::spectral);
  Algebra su2 = Algebra::su2();
  CharFormDescriptor d =
      CharFormDescriptor::make_top(cwf::weil_registry("c2_su2"), g);
  CHECK(d.q == 2);

  GridForm A = cwf::rand_lie_form(g, su2, 1, 301);
  GridForm a = cwf::rand_lie_form(g, su2, 1, 302);
  GridForm b = cwf::rand_lie_form(g, su2, 1, 303);
  GridForm X = cwf::rand_lie_form(g, su2, 0, 304);

  const double got = cwf::evaluate_C(d, A, {&a, &b});
  const double want = surface_trace_wedge(a, b);
  CHECK(std::abs(got - want) < 1e-12 * (1.0 + std::abs(want)));

  const double m = cwf::moment_pairing(d, A, X);
  const double mw = surface_moment(X, cwf::curvature(A));
  CHECK(std::abs(m - mw) < 1e-12 * (1.0 + std::abs(mw)));
}

TEST_CASE("equivariant evaluation collapses at X = 0 and stratifies by count") {
  TorusGrid g({12, 12}, DiffMode::spectral);
  Algebra su2 = Algebra::su2();
  CharFormDescriptor d =
      CharFormDescriptor::make_top(cwf::weil_registry("c2_su2"), g);
  GridForm A = cwf::rand_lie_form(g, su2, 1, 311);
  GridForm a = cwf::rand_lie_form(g, su2, 1, 312);
  GridForm b = cwf::rand_lie_form(g, su2, 1, 313);
  GridForm X0 = GridForm::lie(g, su2, 0);

  CHECK(cwf::evaluate_C_sharp(d, A, X0, {&a, &b}) ==
        cwf::evaluate_C(d, A, {&a, &b}));
  CHECK(cwf::evaluate_C_sharp(d, A, X0, {&a}) == 0.0);
  CHECK_THROWS_AS(cwf::evaluate_C(d, A, {&a}), std::invalid_argument);
  CHECK_THROWS_AS(
      cwf::evaluate_C(CharFormDescriptor::make_top(
                          cwf::make_weil(cwf::WeilKind::trace_power, 2,
                                         cplx(1.0), Algebra::u1()),
                          g),
                      A, {&a, &b}),
      std::invalid_argument);
}

TEST_CASE("evaluate_C is antisymmetric and multilinear") {
  TorusGrid g({16, 16}, DiffMode::fd4);
  Algebra su2 = Algebra::su2();
  CharFormDescriptor d =
      CharFormDescriptor::make_top(cwf::weil_registry("c2_su2"), g);
  GridForm A = cwf::rand_lie_form(g, su2, 1, 321);
  GridForm a = cwf::rand_lie_form(g, su2, 1, 322);
  GridForm b = cwf::rand_lie_form(g, su2, 1, 323);
  GridForm c = cwf::rand_lie_form(g, su2, 1, 324);

  const double ab = cwf::evaluate_C(d, A, {&a, &b});
  const double ba = cwf::evaluate_C(d, A, {&b, &a});
  CHECK(std::abs(ab + ba) < 1e-12 * (1.0 + std::abs(ab)));

  GridForm z = zero_like(a);
  CHECK(cwf::evaluate_C(d, A, {&z, &b}) == 0.0);

  GridForm combo = a;
  combo.scale(0.75);
  GridForm c2 = c;
  c2.scale(-1.25);
  combo += c2;
  const double lin = cwf::evaluate_C(d, A, {&combo, &b});
  const double split = 0.75 * ab - 1.25 * cwf::evaluate_C(d, A, {&c, &b});
  CHECK(std::abs(lin - split) < 1e-12 * (1.0 + std::abs(split)));
}

TEST_CASE("abelian descriptors: exactness and the analytic moment value") {
  TorusGrid g({16, 16}, DiffMode::spectral);
  Algebra u1 = Algebra::u1();

  CharFormDescriptor c1 =
      CharFormDescriptor::make_top(cwf::weil_registry("c1_u1"), g);
  CHECK(c1.q == 0);
  GridForm A = cwf::rand_lie_form(g, u1, 1, 331);
  // the total curvature of a globally defined potential vanishes exactly
  CHECK(std::abs(cwf::evaluate_C(c1, A, {})) < 1e-13);

  CharFormDescriptor d = CharFormDescriptor::make_top(
      cwf::make_weil(cwf::WeilKind::trace_power, 2,
                     cplx(1.0 / (8.0 * kPi * kPi)), u1),
      g);
  GridForm Aw = GridForm::lie(g, u1, 1);
  cwf::fill_component(Aw, 1, 0, 0, [](const double* x) {
    return cplx(0.0, 0.7 * std::sin(2.0 * kPi * x[0]));
  });
  GridForm X = GridForm::lie(g, u1, 0);
  cwf::fill_component(X, 0, 0, 0, [](const double* x) {
    return cplx(0.0, std::cos(2.0 * kPi * x[0]));
  });
  const double got = cwf::moment_pairing(d, Aw, X);
  CHECK(std::abs(got - 0.7 / (4.0 * kPi)) < 1e-12);
}

TEST_CASE("moment pairing vanishes on flat connections") {
  TorusGrid g({16, 16}, DiffMode::spectral);
  Algebra su2 = Algebra::su2();
  CharFormDescriptor d =
      CharFormDescriptor::make_top(cwf::weil_registry("c2_su2"), g);
  GridForm phi = cwf::rand_group_field(g, su2, 341, 1, 0.1);
  GridForm zero = GridForm::lie(g, su2, 1);
  GridForm Aflat = cwf::gauge_act(phi, zero);
  GridForm X = cwf::rand_lie_form(g, su2, 0, 342);
  const double scale = 1.0 + X.l2() * Aflat.l2();
  CHECK(std::abs(cwf::moment_pairing(d, Aflat, X)) < 1e-10 * scale);
}

TEST_CASE("directional derivative: affine exactness and Richardson") {
  TorusGrid g({12, 12}, DiffMode::spectral);
  Algebra su2 = Algebra::su2();
  GridForm A = cwf::rand_lie_form(g, su2, 1, 351);
  GridForm dir = cwf::rand_lie_form(g, su2, 1, 352);
  GridForm P = cwf::rand_lie_form(g, su2, 1, 353);

  cwf::ConnectionFunctional constant = [](const GridForm&) { return 1.25; };
  CHECK(cwf::directional_derivative(constant, A, dir, 1e-4) == 0.0);

  cwf::ConnectionFunctional linear = [&](const GridForm& B) {
    return cwf::l2_inner(P, B);
  };
  const double exact = cwf::l2_inner(P, dir);
  for (double h : {1e-2, 1e-4}) {
    const double got = cwf::directional_derivative(linear, A, dir, h);
    CHECK(std::abs(got - exact) < 1e-10 * (1.0 + std::abs(exact)));
  }

  CharFormDescriptor d =
      CharFormDescriptor::make_top(cwf::weil_registry("c2_su2"), g);
  GridForm X = cwf::rand_lie_form(g, su2, 0, 354);
  cwf::ConnectionFunctional mom = [&](const GridForm& B) {
    return cwf::moment_pairing(d, B, X);
  };
  cwf::RichardsonPair rp = cwf::richardson_derivative(mom, A, dir, 1e-4);
  CHECK(rp.agreement() < 1e-10 * (1.0 + std::abs(rp.extrapolated())));
}

TEST_CASE("cartan closedness: the moment identity on a surface") {
  TorusGrid g({32, 32}, DiffMode::spectral);
  Algebra su2 = Algebra::su2();
  CharFormDescriptor d =
      CharFormDescriptor::make_top(cwf::weil_registry("c2_su2"), g);
  GridForm A = cwf::rand_lie_form(g, su2, 1, 361);
  GridForm X = cwf::rand_lie_form(g, su2, 0, 362);
  GridForm a = cwf::rand_lie_form(g, su2, 1, 363);

  GridForm xa = cwf::infinitesimal_action(X, A);
  const double scale = 1.0 + std::abs(cwf::evaluate_C(d, A, {&xa, &a}));
  CHECK(cwf::cartan_closedness_residual(d, A, X, {&a}, 1e-4) < 1e-9 * scale);

  // independent statement of the same identity
  cwf::ConnectionFunctional mom = [&](const GridForm& B) {
    return cwf::moment_pairing(d, B, X);
  };
  const double lhs = cwf::directional_derivative(mom, A, a, 1e-4);
  const double rhs = cwf::evaluate_C(d, A, {&xa, &a});
  CHECK(std::abs(lhs - rhs) < 1e-9 * scale);

  // X = 0 removes every stratum the probes can reach
  GridForm X0 = GridForm::lie(g, su2, 0);
  CHECK(cwf::cartan_closedness_residual(d, A, X0, {&a}, 1e-4) == 0.0);

  // a 3-probe evaluation sees an A-independent 2-form and a vanishing
  // 4-argument stratum
  GridForm b = cwf::rand_lie_form(g, su2, 1, 364);
  GridForm c = cwf::rand_lie_form(g, su2, 1, 365);
  CHECK(cwf::cartan_closedness_residual(d, A, X, {&a, &b, &c}, 1e-4) == 0.0);

  CHECK_THROWS_AS(cwf::cartan_closedness_residual(d, A, X, {&a, &b}, 1e-4),
                  std::invalid_argument);
}

TEST_CASE("cartan closedness holds for the abelian analog and on T4") {
  Algebra u1 = Algebra::u1();
  TorusGrid g2({16, 16}, DiffMode::spectral);
  CharFormDescriptor du = CharFormDescriptor::make_top(
      cwf::make_weil(cwf::WeilKind::trace_power, 2,
                     cplx(1.0 / (8.0 * kPi * kPi)), u1),
      g2);
  GridForm Au = cwf::rand_lie_form(g2, u1, 1, 371);
  GridForm Xu = cwf::rand_lie_form(g2, u1, 0, 372);
  GridForm au = cwf::rand_lie_form(g2, u1, 1, 373);
  CHECK(cwf::cartan_closedness_residual(du, Au, Xu, {&au}, 1e-4) < 1e-9);

  Algebra su2 = Algebra::su2();
  TorusGrid g4({8, 8, 8, 8}, DiffMode::spectral);
  ConstForm sigma{2, {1.0, 0.0, 0.0, 0.0, 0.0, 1.0}};
  CharFormDescriptor ds = CharFormDescriptor::make(
      cwf::weil_registry("c2_su2"), cwf::const_scalar_form(g4, sigma));
  CHECK(ds.q == 2);
  GridForm A = cwf::rand_lie_form(g4, su2, 1, 374);
  GridForm X = cwf::rand_lie_form(g4, su2, 0, 375);
  GridForm a = cwf::rand_lie_form(g4, su2, 1, 376);
  GridForm xa = cwf::infinitesimal_action(X, A);
  const double scale = 1.0 + std::abs(cwf::evaluate_C(ds, A, {&xa, &a}));
  CHECK(cwf::cartan_closedness_residual(ds, A, X, {&a}, 1e-4) < 1e-9 * scale);
}

TEST_CASE("gauge invariance of the evaluated forms") {
  Algebra su2 = Algebra::su2();
  TorusGrid g({20, 20}, DiffMode::spectral);
  CharFormDescriptor d =
      CharFormDescriptor::make_top(cwf::weil_registry("c2_su2"), g);
  GridForm A = cwf::rand_lie_form(g, su2, 1, 381);
  GridForm a = cwf::rand_lie_form(g, su2, 1, 382);
  GridForm b = cwf::rand_lie_form(g, su2, 1, 383);
  const double scale = 1.0 + std::abs(cwf::evaluate_C(d, A, {&a, &b}));

  GridForm id = cwf::group_exp_field(GridForm::lie(g, su2, 0));
  CHECK(cwf::gauge_invariance_residual(d, A, id, {&a, &b}) == 0.0);

  GridForm phi = cwf::rand_group_field(g, su2, 384, 1, 0.1);
  CHECK(cwf::gauge_invariance_residual(d, A, phi, {&a, &b}) < 1e-10 * scale);

  // constant abelian transform
  Algebra u1 = Algebra::u1();
  CharFormDescriptor dc =
      CharFormDescriptor::make_top(cwf::weil_registry("c1_u1"), g);
  GridForm Au = cwf::rand_lie_form(g, u1, 1, 385);
  GridForm Xc = GridForm::lie(g, u1, 0);
  cwf::fill_component(Xc, 0, 0, 0,
                      [](const double*) { return cplx(0.0, 0.83); });
  GridForm phic = cwf::group_exp_field(Xc);
  CHECK(cwf::gauge_invariance_residual(dc, Au, phic, {}) < 1e-12);
}

TEST_CASE("gauge invariance with curvature slots on T3") {
  Algebra su2 = Algebra::su2();
  TorusGrid g({20, 20, 20}, DiffMode::spectral);
  CharFormDescriptor d =
      CharFormDescriptor::make_top(cwf::weil_registry("c2_su2"), g);
  CHECK(d.q == 1);
  GridForm A = cwf::rand_lie_form(g, su2, 1, 391, 1, 0.5);
  GridForm a = cwf::rand_lie_form(g, su2, 1, 392, 1, 0.5);
  GridForm phi = cwf::rand_group_field(g, su2, 393, 1, 0.05);
  const double scale = 1.0 + std::abs(cwf::evaluate_C(d, A, {&a}));
  CHECK(cwf::gauge_invariance_residual(d, A, phi, {&a}) < 1e-10 * scale);
}

TEST_CASE("transgression: exact endpoints and spectral identity") {
  Algebra su2 = Algebra::su2();
  TorusGrid g({10, 10, 10, 10}, DiffMode::spectral);
  WeilPoly f = cwf::weil_registry("c2_su2");
  GridForm A0 = cwf::rand_lie_form(g, su2, 1, 401, 1);
  GridForm A1 = cwf::rand_lie_form(g, su2, 1, 402, 1);

  cwf::TransgressionResult same = cwf::transgression_residual(f, A0, A0, 2);
  CHECK(same.pointwise_l2 == 0.0);
  CHECK(same.integral_gap == 0.0);

  cwf::TransgressionResult r = cwf::transgression_residual(f, A0, A1, 2);
  const double scale = 1.0 + cwf::char_form(f, A1).l2();
  CHECK(r.pointwise_l2 < 1e-10 * scale);
  CHECK(r.integral_gap < 1e-11 * scale);

  // more quadrature nodes change nothing once the t-degree is covered
  cwf::TransgressionResult r4 = cwf::transgression_residual(f, A0, A1, 4);
  CHECK(std::abs(r4.pointwise_l2 - r.pointwise_l2) < 1e-12 * scale);
}

TEST_CASE("transgression: abelian case is exact in both modes") {
  Algebra u1 = Algebra::u1();
  WeilPoly f = cwf::weil_registry("c1_u1");
  for (DiffMode mode : {DiffMode::fd4, DiffMode::spectral}) {
    TorusGrid g({14, 18}, mode);
    GridForm A0 = cwf::rand_lie_form(g, u1, 1, 411);
    GridForm A1 = cwf::rand_lie_form(g, u1, 1, 412);
    cwf::TransgressionResult r = cwf::transgression_residual(f, A0, A1, 2);
    const double scale = 1.0 + cwf::char_form(f, A1).l2();
    CHECK(r.pointwise_l2 < 1e-12 * scale);
    CHECK(r.integral_gap < 1e-13 * scale);
  }
}

TEST_CASE("transgression: fd4 pointwise residual refines at fourth order") {
  Algebra su2 = Algebra::su2();
  WeilPoly f = cwf::weil_registry("c2_su2");
  std::vector<double> hs, errs;
  for (int N : {10, 14}) {
    TorusGrid g({N, N, N, N}, DiffMode::fd4);
    GridForm A0 = cwf::rand_lie_form(g, su2, 1, 421, 1);
    GridForm A1 = cwf::rand_lie_form(g, su2, 1, 422, 1);
    cwf::TransgressionResult r = cwf::transgression_residual(f, A0, A1, 2);
    hs.push_back(g.spacing(0));
    errs.push_back(r.pointwise_l2);
  }
  CHECK(cwf::fit_log_order(hs, errs) > 3.0);
}

TEST_CASE("gauss-legendre nodes integrate polynomials exactly") {
  for (int n : {1, 2, 3, 5}) {
    auto nodes = cwf::gauss_legendre_01(n);
    double wsum = 0.0;
    for (const auto& [t, w] : nodes) wsum += w;
    CHECK(std::abs(wsum - 1.0) < 1e-14);
    // exact up to degree 2n - 1
    const int p = 2 * n - 1;
    double got = 0.0;
    for (const auto& [t, w] : nodes) got += w * std::pow(t, p);
    CHECK(std::abs(got - 1.0 / (p + 1)) < 1e-13);
  }
}

TEST_CASE("descriptor construction validates beta") {
  TorusGrid g({12, 12}, DiffMode::spectral);
  WeilPoly f = cwf::weil_registry("c2_su2");
  // a non-closed 1-form is rejected
  GridForm beta = GridForm::scalar(g, 1);
  cwf::fill_component(beta, 0, 0, 0, [](const double* x) {
    return cplx(std::sin(2.0 * kPi * x[1]), 0.0);
  });
  CHECK_THROWS_AS(CharFormDescriptor::make(f, beta), std::invalid_argument);
  // a closed one passes
  cwf::fill_component(beta, 0, 0, 0, [](const double* x) {
    return cplx(std::sin(2.0 * kPi * x[0]), 0.0);
  });
  CHECK(CharFormDescriptor::make(f, beta).q == 3);
  // q out of range is rejected
  TorusGrid g3({6, 6, 6}, DiffMode::spectral);
  CHECK_THROWS_AS(
      CharFormDescriptor::make_top(cwf::weil_registry("c1_u1"), g3),
      std::invalid_argument);
}

TEST_SUITE_END();
