#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cwf/chern_simons.hpp"
#include "cwf/fields.hpp"
#include "cwf/gauge_fields.hpp"
#include "cwf/lie_core.hpp"
#include "cwf/numerics.hpp"
#include "doctest.h"

using cwf::Algebra;
using cwf::AlgElem;
using cwf::cplx;
using cwf::cs_action;
using cwf::cs_shift_residual;
using cwf::degree_oracle;
using cwf::DegreeCount;
using cwf::DegreeMapSpec;
using cwf::DiffMode;
using cwf::GridForm;
using cwf::GrpElem;
using cwf::make_degree_map;
using cwf::SmallMat;
using cwf::TorusGrid;
using cwf::winding_number;

namespace {

constexpr double kPi = 3.14159265358979323846;

// a fixed regular value away from the identity and its antipode
GrpElem regular_value() {
  std::vector<SmallMat> basis = cwf::algebra_basis(Algebra::su2());
  SmallMat x = (1.3 * 0.6) * basis[0] + (1.3 * -0.4) * basis[1] +
               (1.3 * 0.693) * basis[2];
  return cwf::group_exp(AlgElem{Algebra::su2(), x});
}

GridForm bump(const TorusGrid& g, int degree, double rho = 0.45) {
  DegreeMapSpec spec;
  spec.degree = degree;
  spec.rho = rho;
  return make_degree_map(g, spec);
}

}  // namespace

TEST_SUITE_BEGIN("chern_simons");

TEST_CASE("cs_action: zero connection, validation, abelian zero family") {
  TorusGrid g({12, 12, 12}, DiffMode::fd4);
  GridForm zero = GridForm::lie(g, Algebra::su2(), 1);
  CHECK(cs_action(zero) == 0.0);

  // alpha dx + beta(x) dy has pointwise vanishing A ^ dA
  GridForm A = GridForm::lie(g, Algebra::u1(), 1);
  cwf::fill_component(A, 0, 0, 0, [](const double*) { return cplx(0.0, 0.8); });
  cwf::fill_component(A, 1, 0, 0, [](const double* x) {
    return cplx(0.0, std::sin(2.0 * kPi * x[0]));
  });
  CHECK(cs_action(A) == 0.0);

  TorusGrid g2({8, 8}, DiffMode::fd4);
  CHECK_THROWS_AS(cs_action(GridForm::lie(g2, Algebra::su2(), 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(cs_action(GridForm::lie(g, Algebra::su2(), 0)),
                  std::invalid_argument);
}

TEST_CASE("cs_action: helical abelian connection against the analytic value") {
  // A = i(sin(2pi z) dx + cos(2pi z) dy): int A ^ dA = -2pi, cs = 1/(2pi)
  TorusGrid g({12, 12, 12}, DiffMode::spectral);
  GridForm A = GridForm::lie(g, Algebra::u1(), 1);
  cwf::fill_component(A, 0, 0, 0, [](const double* x) {
    return cplx(0.0, std::sin(2.0 * kPi * x[2]));
  });
  cwf::fill_component(A, 1, 0, 0, [](const double* x) {
    return cplx(0.0, std::cos(2.0 * kPi * x[2]));
  });
  CHECK(std::abs(cs_action(A) - 1.0 / (2.0 * kPi)) < 1e-12);
}

TEST_CASE("winding_number: constants, validation") {
  TorusGrid g({10, 10, 10}, DiffMode::fd4);
  GridForm phi = bump(g, 0);
  CHECK(winding_number(phi) == 0.0);

  // degree 0 builds the identity map exactly
  const cplx* p = phi.data();
  double dev = 0.0;
  for (std::size_t s = 0; s < g.volume(); ++s) {
    dev = std::max(dev, std::abs(p[4 * s] - 1.0));
    dev = std::max(dev, std::abs(p[4 * s + 1]));
    dev = std::max(dev, std::abs(p[4 * s + 2]));
    dev = std::max(dev, std::abs(p[4 * s + 3] - 1.0));
  }
  CHECK(dev == 0.0);

  CHECK_THROWS_AS(winding_number(GridForm::lie(g, Algebra::u1(), 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(winding_number(GridForm::lie(g, Algebra::su2(), 1)),
                  std::invalid_argument);
}

TEST_CASE("make_degree_map rejects invalid radii and grids") {
  TorusGrid g({10, 10, 10}, DiffMode::fd4);
  DegreeMapSpec spec;
  spec.degree = 1;
  spec.rho = 0.5;
  CHECK_THROWS_AS(make_degree_map(g, spec), std::invalid_argument);
  spec.rho = 0.0;
  CHECK_THROWS_AS(make_degree_map(g, spec), std::invalid_argument);
  TorusGrid g2({10, 10}, DiffMode::fd4);
  spec.rho = 0.3;
  CHECK_THROWS_AS(make_degree_map(g2, spec), std::invalid_argument);
}

TEST_CASE("degree_oracle: no preimages for the constant map, validation") {
  TorusGrid g({8, 8, 8}, DiffMode::fd4);
  GridForm phi = bump(g, 0);
  DegreeCount dc = degree_oracle(phi, regular_value());
  CHECK(dc.degree == 0);
  CHECK(dc.conclusive);

  CHECK_THROWS_AS(degree_oracle(GridForm::lie(g, Algebra::u1(), 0),
                                regular_value()),
                  std::invalid_argument);
}

TEST_CASE("winding quantization matches the simplicial oracle") {
  TorusGrid g({48, 48, 48}, DiffMode::spectral);
  GrpElem t = regular_value();
  for (int d : {-2, -1, 1, 2, 3}) {
    GridForm phi = bump(g, d);
    DegreeCount dc = degree_oracle(phi, t);
    CHECK(dc.conclusive);
    CHECK(dc.degree == d);
    CHECK(std::abs(winding_number(phi) - d) < 1e-6);
  }
}

TEST_CASE("pure-gauge connections carry cs_action = -degree") {
  TorusGrid g({32, 32, 32}, DiffMode::spectral);
  GridForm zero = GridForm::lie(g, Algebra::su2(), 1);
  for (int d : {-1, 2}) {
    GridForm A = cwf::gauge_act(bump(g, d), zero);
    CHECK(std::abs(cs_action(A) + d) < 1e-5);
  }
}

TEST_CASE("gauge-shift law: identity is exact, large shifts close") {
  TorusGrid g({32, 32, 32}, DiffMode::spectral);
  GridForm A = cwf::rand_lie_form(g, Algebra::su2(), 1, 501, 2, 0.3);
  GridForm id = bump(g, 0);
  CHECK(cs_shift_residual(A, id) == 0.0);

  GridForm zero = GridForm::lie(g, Algebra::su2(), 1);
  for (int d : {-1, 1, 2}) {
    GridForm phi = bump(g, d);
    CHECK(cs_shift_residual(zero, phi) < 1e-5);
    CHECK(cs_shift_residual(A, phi) < 1e-5);
  }

  TorusGrid gf({48, 48, 48}, DiffMode::spectral);
  GridForm Af = cwf::rand_lie_form(gf, Algebra::su2(), 1, 501, 2, 0.3);
  CHECK(cs_shift_residual(Af, bump(gf, 2)) < 1e-6);
}

TEST_CASE("gauge-shift residual refines at order >= 3 under fd4") {
  std::vector<double> hs, errs;
  for (int N : {24, 32, 48}) {
    TorusGrid g({N, N, N}, DiffMode::fd4);
    GridForm A = cwf::rand_lie_form(g, Algebra::su2(), 1, 501, 2, 0.3);
    hs.push_back(1.0 / N);
    errs.push_back(cs_shift_residual(A, bump(g, 1, 0.35)));
  }
  CHECK(cwf::fit_log_order(hs, errs) > 3.0);
}

TEST_CASE("winding is additive over disjointly supported bumps") {
  TorusGrid g({48, 48, 48}, DiffMode::spectral);
  DegreeMapSpec s1;
  s1.degree = 1;
  s1.rho = 0.3;
  s1.center = {0.25, 0.25, 0.25};
  DegreeMapSpec s2 = s1;
  s2.center = {0.75, 0.75, 0.75};
  GridForm prod = cwf::wedge_product(make_degree_map(g, s1),
                                     make_degree_map(g, s2));
  DegreeCount dc = degree_oracle(prod, regular_value());
  CHECK(dc.conclusive);
  CHECK(dc.degree == 2);
  CHECK(std::abs(winding_number(prod) - 2.0) < 1e-4);
}

TEST_CASE("cs_action is invariant under nullhomotopic gauge maps") {
  TorusGrid g({20, 20, 20}, DiffMode::spectral);
  GridForm phi = cwf::rand_group_field(g, Algebra::su2(), 704, 1, 0.2);
  GridForm A = cwf::rand_lie_form(g, Algebra::su2(), 1, 705, 1, 0.3);
  CHECK(std::abs(winding_number(phi)) < 1e-12);
  CHECK(std::abs(cs_action(cwf::gauge_act(phi, A)) - cs_action(A)) < 1e-12);
}

TEST_CASE("cs_current: abelian oracle and vanishing at A = 0") {
  TorusGrid g({12, 12, 12}, DiffMode::spectral);
  GridForm A = cwf::rand_lie_form(g, Algebra::u1(), 1, 706, 2, 0.8);
  GridForm X = GridForm::lie(g, Algebra::u1(), 0);
  cwf::fill_component(X, 0, 0, 0, [](const double*) { return cplx(0.0, 0.37); });

  GridForm J = cwf::cs_current(A, X);
  GridForm dA = cwf::exterior_derivative(A);
  const cplx x0(0.0, 0.37);
  double dev = 0.0;
  for (int c = 0; c < J.ncomp(); ++c) {
    const cplx* j = J.comp(c);
    const cplx* e = dA.comp(c);
    for (std::size_t s = 0; s < g.volume(); ++s) {
      cplx want = -1.0 / (4.0 * kPi * kPi) * x0 * e[s];
      dev = std::max(dev, std::abs(j[s] - want));
    }
  }
  CHECK(dev < 1e-15);

  GridForm zero = GridForm::lie(g, Algebra::u1(), 1);
  CHECK(cwf::cs_current(zero, X).max_abs() == 0.0);
}

TEST_CASE("current closedness: exact abelian case, flat limit, refinement") {
  // u(1), constant X: d(current) = const * dd(A) = 0 to rounding
  for (DiffMode mode : {DiffMode::fd4, DiffMode::spectral}) {
    TorusGrid g({16, 16, 16}, mode);
    GridForm A = cwf::rand_lie_form(g, Algebra::u1(), 1, 703, 2, 0.8);
    GridForm X = GridForm::lie(g, Algebra::u1(), 0);
    cwf::fill_component(X, 0, 0, 0,
                        [](const double*) { return cplx(0.0, 0.37); });
    CHECK(cwf::current_closedness_residual(A, X) < 1e-12);
  }

  TorusGrid g({16, 16, 16}, DiffMode::spectral);
  GridForm X = cwf::rand_lie_form(g, Algebra::su2(), 0, 702, 1, 0.4);
  GridForm zero = GridForm::lie(g, Algebra::su2(), 1);
  CHECK(cwf::current_closedness_residual(zero, X) == 0.0);

  // nearly flat pure-gauge connection: residual at the aliasing floor
  GridForm phi = cwf::rand_group_field(g, Algebra::su2(), 701, 1, 0.3);
  CHECK(cwf::current_closedness_residual(cwf::gauge_act(phi, zero), X) < 1e-6);

  // a generic curved connection is far from closed
  GridForm Arand = cwf::rand_lie_form(g, Algebra::su2(), 1, 604, 1, 0.4);
  CHECK(cwf::current_closedness_residual(Arand, X) > 1e-2);

  std::vector<double> hs, errs;
  for (int N : {12, 16, 24}) {
    TorusGrid gf({N, N, N}, DiffMode::fd4);
    GridForm pf = cwf::rand_group_field(gf, Algebra::su2(), 701, 1, 0.3);
    GridForm zf = GridForm::lie(gf, Algebra::su2(), 1);
    GridForm Xf = cwf::rand_lie_form(gf, Algebra::su2(), 0, 702, 1, 0.4);
    hs.push_back(1.0 / N);
    errs.push_back(
        cwf::current_closedness_residual(cwf::gauge_act(pf, zf), Xf));
  }
  CHECK(cwf::fit_log_order(hs, errs) > 3.0);
}

TEST_CASE("horizontality: trivial zeros and band-limited exactness") {
  TorusGrid g({16, 16, 16}, DiffMode::spectral);
  GridForm A = cwf::rand_lie_form(g, Algebra::su2(), 1, 601, 1, 0.4);
  GridForm X0 = GridForm::lie(g, Algebra::su2(), 0);
  CHECK(cwf::horizontality_residual(A, X0) == 0.0);

  GridForm zero = GridForm::lie(g, Algebra::su2(), 1);
  GridForm X = cwf::rand_lie_form(g, Algebra::su2(), 0, 602, 1, 0.4);
  CHECK(cwf::horizontality_residual(zero, X) == 0.0);

  CHECK(cwf::horizontality_residual(A, X) < 1e-12);

  TorusGrid gw({32, 32, 32}, DiffMode::spectral);
  GridForm Aw = cwf::rand_lie_form(gw, Algebra::su2(), 1, 607, 3, 0.5);
  GridForm Xw = cwf::rand_lie_form(gw, Algebra::su2(), 0, 608, 3, 0.5);
  CHECK(cwf::horizontality_residual(Aw, Xw) < 1e-10);
}

TEST_SUITE_END();
