#include "cwf/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "cwf/chern_simons.hpp"
#include "cwf/connection_forms.hpp"
#include "cwf/fields.hpp"
#include "cwf/gauge_fields.hpp"
#include "cwf/numerics.hpp"
#include "cwf/scenarios.hpp"
#include "cwf/weil.hpp"
#include "json.hpp"

namespace cwf {
namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kPi = std::numbers::pi;
// sweep residuals below this at every resolution are reported as exact
constexpr double kExactFloor = 1e-12;

struct CheckNums {
  double value = 0.0;
  double expected = 0.0;
  double residual = 0.0;
};

double tol_for(const ScenarioConfig& c, const std::string& id, double dflt) {
  auto it = c.tolerances.find(id);
  return it == c.tolerances.end() ? dflt : it->second;
}

double order_for(const ScenarioConfig& c, const std::string& id, double dflt) {
  auto it = c.min_orders.find(id);
  return it == c.min_orders.end() ? dflt : it->second;
}

double rel(double got, double want) {
  return std::abs(got - want) / (1.0 + std::abs(want));
}

void run_check(const ScenarioConfig& c, VerificationReport& rep,
               const std::string& id, double dflt_tol,
               const std::function<CheckNums()>& body) {
  CheckRecord rec;
  rec.id = id;
  rec.tolerance = tol_for(c, id, dflt_tol);
  try {
    const CheckNums n = body();
    rec.value = n.value;
    rec.expected = n.expected;
    rec.residual = n.residual;
    rec.pass = rec.residual <= rec.tolerance;
  } catch (const std::exception& e) {
    rec.error = e.what();
    rec.pass = false;
  }
  rep.checks.push_back(std::move(rec));
}

void run_sweep(const ScenarioConfig& c, VerificationReport& rep,
               const std::string& id, double dflt_min_order,
               const std::function<double(int)>& residual_at) {
  ConvergenceRecord rec;
  rec.id = id;
  rec.min_order = order_for(c, id, dflt_min_order);
  try {
    for (int N : c.grid_sizes) {
      rec.resolutions.push_back(N);
      rec.residuals.push_back(residual_at(N));
    }
    rec.exact = std::all_of(rec.residuals.begin(), rec.residuals.end(),
                            [](double r) { return r < kExactFloor; });
    if (rec.exact) {
      rec.pass = true;
    } else {
      std::vector<double> hs;
      for (int N : rec.resolutions) hs.push_back(1.0 / N);
      rec.fitted_order = fit_log_order(hs, rec.residuals);
      rec.pass = rec.fitted_order >= rec.min_order;
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
    rec.pass = false;
  }
  rep.convergence.push_back(std::move(rec));
}

// independent quadrature of (1/4pi^2) Re int tr(a ^ b) on a surface
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

// independent quadrature of int tr(a ^ b) ^ sigma on T^4 for the standard
// sigma = dx0^dx1 + dx2^dx3
double t4_sigma_pairing(const GridForm& a, const GridForm& b) {
  const TorusGrid& g = a.grid();
  const int k = a.algebra().k;
  const std::size_t blk = static_cast<std::size_t>(k) * k;
  auto c = [&](int axis) { return g.comp_index(1, 1u << axis); };
  double acc = 0.0;
  for (std::size_t s = 0; s < g.volume(); ++s) {
    cplx t = 0.0;
    for (auto [u, v] : {std::pair<int, int>{2, 3}, std::pair<int, int>{0, 1}}) {
      const cplx* au = a.comp(c(u)) + blk * s;
      const cplx* av = a.comp(c(v)) + blk * s;
      const cplx* bu = b.comp(c(u)) + blk * s;
      const cplx* bv = b.comp(c(v)) + blk * s;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          const std::size_t ij = static_cast<std::size_t>(k * i + j);
          const std::size_t ji = static_cast<std::size_t>(k * j + i);
          t += au[ij] * bv[ji] - av[ij] * bu[ji];
        }
    }
    acc += t.real();
  }
  return acc * g.cell_volume();
}

GrpElem su2_regular_value() {
  std::vector<SmallMat> basis = algebra_basis(Algebra::su2());
  SmallMat x = (1.3 * 0.6) * basis[0] + (1.3 * -0.4) * basis[1] +
               (1.3 * 0.693) * basis[2];
  return group_exp(AlgElem{Algebra::su2(), x});
}

// exactness checks shared by the torus scenarios
void add_calculus_checks(const ScenarioConfig& c, VerificationReport& rep,
                         const TorusGrid& g, std::uint64_t s) {
  run_check(c, rep, "d2", 1e-12, [&] {
    GridForm w =
        rand_lie_form(g, Algebra::su2(), g.dim() - 2, s + 91, c.fmax, c.amp);
    GridForm dw = exterior_derivative(w);
    GridForm ddw = exterior_derivative(dw);
    const double n = ddw.l2();
    return CheckNums{n, 0.0, n / std::max(1.0, dw.l2())};
  });
  run_check(c, rep, "stokes", 1e-12, [&] {
    GridForm eta =
        rand_lie_form(g, Algebra::u1(), g.dim() - 1, s + 92, c.fmax, c.amp);
    GridForm deta = exterior_derivative(eta);
    const double v = std::abs(integrate(deta));
    return CheckNums{v, 0.0, v / std::max(1.0, deta.max_abs())};
  });
}

void suite_atiyah_bott(const ScenarioConfig& c, VerificationReport& rep) {
  const int N = c.grid_sizes.back();
  TorusGrid g({N, N}, c.mode);
  const Algebra su2 = Algebra::su2();
  const WeilPoly f = weil_registry(c.polynomial);
  const CharFormDescriptor d = CharFormDescriptor::make_top(f, g);
  const std::uint64_t s = c.seed * 1000;

  const GridForm A = rand_lie_form(g, su2, 1, s + 1, c.fmax, c.amp);
  const GridForm a = rand_lie_form(g, su2, 1, s + 2, c.fmax, c.amp);
  const GridForm b = rand_lie_form(g, su2, 1, s + 3, c.fmax, c.amp);
  const GridForm X = rand_lie_form(g, su2, 0, s + 4, c.fmax, c.amp);

  run_check(c, rep, "calibration", 1e-10, [&] {
    const double got = evaluate_C(d, A, {&a, &b});
    const double want = c.polynomial == "c2_su2"
                            ? surface_trace_wedge(a, b)
                            : 2.0 * integrate(multilinear_wedge(f, {&a, &b}));
    return CheckNums{got, want, rel(got, want)};
  });

  run_check(c, rep, "moment_pairing", 1e-10, [&] {
    const double got = moment_pairing(d, A, X);
    GridForm F = curvature(A);
    const double want = -2.0 * integrate(multilinear_wedge(f, {&X, &F}));
    return CheckNums{got, want, rel(got, want)};
  });

  // shared central-difference data for the identity and its step-halving
  // agreement
  struct MomentBits {
    double lhs, rhs, agree;
  };
  std::optional<MomentBits> mb;
  auto moment_bits = [&]() -> const MomentBits& {
    if (!mb) {
      GridForm xa = infinitesimal_action(X, A);
      ConnectionFunctional mom = [&](const GridForm& B) {
        return moment_pairing(d, B, X);
      };
      RichardsonPair rp = richardson_derivative(mom, A, a, 1e-4);
      mb = MomentBits{rp.extrapolated(), evaluate_C(d, A, {&xa, &a}),
                      rp.agreement()};
    }
    return *mb;
  };
  run_check(c, rep, "moment_identity", 1e-6, [&] {
    const MomentBits& m = moment_bits();
    return CheckNums{m.lhs, m.rhs, std::abs(m.lhs - m.rhs)};
  });
  run_check(c, rep, "moment_identity_agreement", 1e-8, [&] {
    const MomentBits& m = moment_bits();
    return CheckNums{m.agree, 0.0, m.agree};
  });

  run_check(c, rep, "equivariance", 1e-10, [&] {
    CheckNums worst;
    for (std::uint64_t i = 0; i < 5; ++i) {
      const std::uint64_t t = s + 10 + 4 * i;
      GridForm Ai = rand_lie_form(g, su2, 1, t, c.fmax, c.amp);
      GridForm Xi = rand_lie_form(g, su2, 0, t + 1, c.fmax, c.amp);
      GridForm phi = rand_group_field(g, su2, t + 2, c.fmax, c.amp);
      const double lhs =
          moment_pairing(d, gauge_act(phi, Ai), conjugate_field(phi, Xi));
      const double rhs = moment_pairing(d, Ai, Xi);
      if (rel(lhs, rhs) >= worst.residual)
        worst = CheckNums{lhs, rhs, rel(lhs, rhs)};
    }
    return worst;
  });

  const GridForm dax = infinitesimal_action(X, A);
  run_check(c, rep, "coulomb_recover", 1e-8, [&] {
    GridForm xrec = solve_laplacian(A, codifferential(A, dax));
    GridForm diff = xrec;
    diff -= X;
    const double dist = diff.l2();
    return CheckNums{dist, 0.0, dist / std::max(1.0, X.l2())};
  });
  run_check(c, rep, "coulomb_project", 1e-8, [&] {
    GridForm h = horizontal_project(A, dax);
    const double n = h.l2();
    return CheckNums{n, 0.0, n / std::max(1.0, dax.l2())};
  });
  run_check(c, rep, "coulomb_adjoint", 1e-11, [&] {
    const double lhs = l2_inner(dax, a);
    const double rhs = l2_inner(X, codifferential(A, a));
    return CheckNums{lhs, rhs, rel(lhs, rhs)};
  });

  run_check(c, rep, "gauge_invariance_c2_su2", 1e-10, [&] {
    const CharFormDescriptor dg =
        CharFormDescriptor::make_top(weil_registry("c2_su2"), g);
    GridForm phi = rand_group_field(g, su2, s + 40, c.fmax, c.amp);
    const double scale = 1.0 + std::abs(evaluate_C(dg, A, {&a, &b}));
    const double r = gauge_invariance_residual(dg, A, phi, {&a, &b});
    return CheckNums{r, 0.0, r / scale};
  });
  run_check(c, rep, "gauge_invariance_det_su2", 1e-10, [&] {
    const CharFormDescriptor dg =
        CharFormDescriptor::make_top(weil_registry("det_su2"), g);
    GridForm phi = rand_group_field(g, su2, s + 41, c.fmax, c.amp);
    const double scale = 1.0 + std::abs(evaluate_C(dg, A, {&a, &b}));
    const double r = gauge_invariance_residual(dg, A, phi, {&a, &b});
    return CheckNums{r, 0.0, r / scale};
  });
  run_check(c, rep, "gauge_invariance_c1_u1", 1e-10, [&] {
    const Algebra u1 = Algebra::u1();
    const CharFormDescriptor dg =
        CharFormDescriptor::make_top(weil_registry("c1_u1"), g);
    GridForm Au = rand_lie_form(g, u1, 1, s + 42, c.fmax, c.amp);
    GridForm phi = rand_group_field(g, u1, s + 43, c.fmax, c.amp);
    const double scale = 1.0 + std::abs(evaluate_C(dg, Au, {}));
    const double r = gauge_invariance_residual(dg, Au, phi, {});
    return CheckNums{r, 0.0, r / scale};
  });

  add_calculus_checks(c, rep, g, s);
}

void sweep_atiyah_bott(const ScenarioConfig& c, VerificationReport& rep) {
  const std::uint64_t s = c.seed * 1000;
  run_sweep(c, rep, "calibration", 3.5, [&](int N) {
    TorusGrid g({N, N}, c.mode);
    const WeilPoly f = weil_registry(c.polynomial);
    const CharFormDescriptor d = CharFormDescriptor::make_top(f, g);
    GridForm A = rand_lie_form(g, Algebra::su2(), 1, s + 1, c.fmax, c.amp);
    GridForm a = rand_lie_form(g, Algebra::su2(), 1, s + 2, c.fmax, c.amp);
    GridForm b = rand_lie_form(g, Algebra::su2(), 1, s + 3, c.fmax, c.amp);
    const double got = evaluate_C(d, A, {&a, &b});
    const double want = c.polynomial == "c2_su2"
                            ? surface_trace_wedge(a, b)
                            : 2.0 * integrate(multilinear_wedge(f, {&a, &b}));
    return rel(got, want);
  });
  run_sweep(c, rep, "d2", 3.5, [&](int N) {
    TorusGrid g({N, N}, c.mode);
    GridForm w = rand_lie_form(g, Algebra::su2(), 0, s + 91, c.fmax, c.amp);
    GridForm dw = exterior_derivative(w);
    return exterior_derivative(dw).l2() / std::max(1.0, dw.l2());
  });
  run_sweep(c, rep, "leibniz", 3.5, [&](int N) {
    TorusGrid g({N, N}, c.mode);
    GridForm u = rand_lie_form(g, Algebra::u1(), 0, s + 93, c.fmax, c.amp);
    GridForm v = rand_lie_form(g, Algebra::u1(), 1, s + 94, c.fmax, c.amp);
    GridForm lhs = exterior_derivative(wedge_product(u, v));
    GridForm rhs = wedge_product(exterior_derivative(u), v);
    GridForm rhs2 = wedge_product(u, exterior_derivative(v));
    rhs += rhs2;
    lhs -= rhs;
    return lhs.l2() / std::max(1.0, rhs.l2());
  });
}

void suite_cs(const ScenarioConfig& c, VerificationReport& rep) {
  const int N = c.grid_sizes.back();
  TorusGrid g({N, N, N}, c.mode);
  const Algebra su2 = Algebra::su2();
  const std::uint64_t s = c.seed * 1000;

  run_check(c, rep, "cs_shift", 5e-3, [&] {
    CheckNums worst;
    for (int deg : {-1, 1, 2}) {
      DegreeMapSpec spec;
      spec.degree = deg;
      spec.rho = 0.45;
      GridForm phi = make_degree_map(g, spec);
      GridForm A =
          rand_lie_form(g, su2, 1, s + 22 + static_cast<std::uint64_t>(deg),
                        c.fmax, c.amp);
      const double r = cs_shift_residual(A, phi);
      if (r >= worst.residual) worst = CheckNums{r, 0.0, r};
    }
    return worst;
  });

  run_check(c, rep, "winding_quantization", 5e-3, [&] {
    const GrpElem rv = su2_regular_value();
    CheckNums worst;
    for (int deg : {-2, -1, 0, 1, 2, 3}) {
      DegreeMapSpec spec;
      spec.degree = deg;
      spec.rho = 0.45;
      GridForm phi = make_degree_map(g, spec);
      const double w = winding_number(phi);
      const DegreeCount dc = degree_oracle(phi, rv);
      if (!dc.conclusive || dc.degree != deg)
        throw std::runtime_error("degree oracle disagrees at degree " +
                                 std::to_string(deg));
      const double r = std::abs(w - deg);
      if (r >= worst.residual)
        worst = CheckNums{w, static_cast<double>(deg), r};
    }
    return worst;
  });

  run_check(c, rep, "horizontality", 1e-8, [&] {
    const CharFormDescriptor d =
        CharFormDescriptor::make_top(weil_registry("c2_su2"), g);
    CheckNums worst;
    for (std::uint64_t i = 0; i < 3; ++i) {
      const std::uint64_t t = s + 30 + 3 * i;
      GridForm A = rand_lie_form(g, su2, 1, t, c.fmax, c.amp);
      GridForm X = rand_lie_form(g, su2, 0, t + 1, c.fmax, c.amp);
      GridForm p = rand_lie_form(g, su2, 1, t + 2, c.fmax, c.amp);
      const double scale = 1.0 + std::abs(evaluate_C(d, A, {&p}));
      const double raw = horizontality_residual(A, X);
      if (raw / scale >= worst.residual)
        worst = CheckNums{raw, 0.0, raw / scale};
    }
    return worst;
  });

  add_calculus_checks(c, rep, g, s);
}

void sweep_cs(const ScenarioConfig& c, VerificationReport& rep) {
  const std::uint64_t s = c.seed * 1000;
  const Algebra su2 = Algebra::su2();
  run_sweep(c, rep, "cs_shift", 3.0, [&](int N) {
    TorusGrid g({N, N, N}, c.mode);
    DegreeMapSpec spec;
    spec.degree = 1;
    spec.rho = 0.35;
    GridForm phi = make_degree_map(g, spec);
    GridForm A = rand_lie_form(g, su2, 1, s + 50, c.fmax, c.amp);
    return cs_shift_residual(A, phi);
  });
  run_sweep(c, rep, "winding", 3.0, [&](int N) {
    TorusGrid g({N, N, N}, c.mode);
    DegreeMapSpec spec;
    spec.degree = 1;
    spec.rho = 0.35;
    return std::abs(winding_number(make_degree_map(g, spec)) - 1.0);
  });
  run_sweep(c, rep, "bianchi", 3.5, [&](int N) {
    TorusGrid g({N, N, N}, c.mode);
    GridForm A = rand_lie_form(g, su2, 1, s + 51, c.fmax, c.amp);
    GridForm F = curvature(A);
    return covariant_derivative(A, F).l2() / std::max(1.0, F.l2());
  });
  run_sweep(c, rep, "leibniz", 3.5, [&](int N) {
    TorusGrid g({N, N, N}, c.mode);
    GridForm u = rand_lie_form(g, Algebra::u1(), 0, s + 93, c.fmax, c.amp);
    GridForm v = rand_lie_form(g, Algebra::u1(), 1, s + 94, c.fmax, c.amp);
    GridForm lhs = exterior_derivative(wedge_product(u, v));
    GridForm rhs = wedge_product(exterior_derivative(u), v);
    GridForm rhs2 = wedge_product(u, exterior_derivative(v));
    rhs += rhs2;
    lhs -= rhs;
    return lhs.l2() / std::max(1.0, rhs.l2());
  });
}

void suite_transgression(const ScenarioConfig& c, VerificationReport& rep) {
  const int N = c.grid_sizes.back();
  TorusGrid g({N, N, N, N}, c.mode);
  const std::uint64_t s = c.seed * 1000;

  run_check(c, rep, "transgression", 1e-10, [&] {
    const WeilPoly f = weil_registry(c.polynomial);
    GridForm A0 = rand_lie_form(g, Algebra::su2(), 1, s + 60, c.fmax, c.amp);
    GridForm A1 = rand_lie_form(g, Algebra::su2(), 1, s + 61, c.fmax, c.amp);
    const TransgressionResult tr = transgression_residual(f, A0, A1, 4);
    return CheckNums{tr.integral_gap, 0.0, tr.integral_gap};
  });

  add_calculus_checks(c, rep, g, s);
}

void sweep_transgression(const ScenarioConfig& c, VerificationReport& rep) {
  const std::uint64_t s = c.seed * 1000;
  const WeilPoly f = weil_registry(c.polynomial);
  auto memo = std::map<int, TransgressionResult>();
  auto tres = [&, f, s](int N) {
    auto it = memo.find(N);
    if (it != memo.end()) return it->second;
    TorusGrid g({N, N, N, N}, c.mode);
    GridForm A0 = rand_lie_form(g, Algebra::su2(), 1, s + 60, c.fmax, c.amp);
    GridForm A1 = rand_lie_form(g, Algebra::su2(), 1, s + 61, c.fmax, c.amp);
    const TransgressionResult tr = transgression_residual(f, A0, A1, 4);
    memo[N] = tr;
    return tr;
  };
  run_sweep(c, rep, "transgression_pointwise", 3.5,
            [&](int N) { return tres(N).pointwise_l2; });
  run_sweep(c, rep, "stokes_gap", 3.5,
            [&](int N) { return tres(N).integral_gap; });
}

void suite_symplectic(const ScenarioConfig& c, VerificationReport& rep) {
  const int N = c.grid_sizes.back();
  TorusGrid g({N, N, N, N}, c.mode);
  const Algebra su2 = Algebra::su2();
  const std::uint64_t s = c.seed * 1000;
  const CharFormDescriptor sym = symplectic_descriptor(g, c.beta_pairs);

  const GridForm A = rand_lie_form(g, su2, 1, s + 70, c.fmax, c.amp);
  const GridForm a = rand_lie_form(g, su2, 1, s + 71, c.fmax, c.amp);
  const GridForm b = rand_lie_form(g, su2, 1, s + 72, c.fmax, c.amp);

  run_check(c, rep, "pairing_oracle", 1e-12, [&] {
    const double got = evaluate_C(sym, A, {&a, &b});
    const double want = 2.0 / (8.0 * kPi * kPi) * t4_sigma_pairing(a, b);
    return CheckNums{got, want, rel(got, want)};
  });
  run_check(c, rep, "antisymmetry", 1e-12, [&] {
    const double got = evaluate_C(sym, A, {&a, &b});
    const double swapped = evaluate_C(sym, A, {&b, &a});
    return CheckNums{got, -swapped, rel(got, -swapped)};
  });
  run_check(c, rep, "nondegeneracy", 1e9, [&] {
    GridForm p2 = rand_lie_form(g, su2, 1, s + 73, c.fmax, c.amp);
    GridForm p3 = rand_lie_form(g, su2, 1, s + 74, c.fmax, c.amp);
    const GridForm* probes[4] = {&a, &b, &p2, &p3};
    double m[4][4];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        m[i][j] = i == j ? 0.0 : evaluate_C(sym, A, {probes[i], probes[j]});
    const double pf =
        m[0][1] * m[2][3] - m[0][2] * m[1][3] + m[0][3] * m[1][2];
    // residual is the reciprocal Pfaffian magnitude of the probe block, so
    // a small value certifies robust nondegeneracy on this basis
    const double r = 1.0 / std::max(std::abs(pf), 1e-300);
    return CheckNums{pf, 0.0, r};
  });
  run_check(c, rep, "t2_reduction", 1e-15, [&] {
    TorusGrid g2({N, N}, c.mode);
    const CharFormDescriptor s1 = symplectic_descriptor(g2, 1);
    const CharFormDescriptor top =
        CharFormDescriptor::make_top(weil_registry("c2_su2"), g2);
    GridForm A2 = rand_lie_form(g2, su2, 1, s + 75, c.fmax, c.amp);
    GridForm a2 = rand_lie_form(g2, su2, 1, s + 76, c.fmax, c.amp);
    GridForm b2 = rand_lie_form(g2, su2, 1, s + 77, c.fmax, c.amp);
    const double v1 = evaluate_C(s1, A2, {&a2, &b2});
    const double v2 = evaluate_C(top, A2, {&a2, &b2});
    return CheckNums{v1, v2, std::abs(v1 - v2)};
  });

  add_calculus_checks(c, rep, g, s);
}

void sweep_symplectic(const ScenarioConfig& c, VerificationReport& rep) {
  const std::uint64_t s = c.seed * 1000;
  auto pair_at = [&](int N, bool swap) {
    TorusGrid g({N, N, N, N}, c.mode);
    const CharFormDescriptor sym = symplectic_descriptor(g, c.beta_pairs);
    GridForm A = rand_lie_form(g, Algebra::su2(), 1, s + 70, c.fmax, c.amp);
    GridForm a = rand_lie_form(g, Algebra::su2(), 1, s + 71, c.fmax, c.amp);
    GridForm b = rand_lie_form(g, Algebra::su2(), 1, s + 72, c.fmax, c.amp);
    return swap ? evaluate_C(sym, A, {&b, &a}) : evaluate_C(sym, A, {&a, &b});
  };
  run_sweep(c, rep, "antisymmetry", 3.5, [&](int N) {
    const double got = pair_at(N, false);
    return rel(got, -pair_at(N, true));
  });
  run_sweep(c, rep, "pairing_oracle", 3.5, [&](int N) {
    TorusGrid g({N, N, N, N}, c.mode);
    const CharFormDescriptor sym = symplectic_descriptor(g, c.beta_pairs);
    GridForm A = rand_lie_form(g, Algebra::su2(), 1, s + 70, c.fmax, c.amp);
    GridForm a = rand_lie_form(g, Algebra::su2(), 1, s + 71, c.fmax, c.amp);
    GridForm b = rand_lie_form(g, Algebra::su2(), 1, s + 72, c.fmax, c.amp);
    const double got = evaluate_C(sym, A, {&a, &b});
    return rel(got, 2.0 / (8.0 * kPi * kPi) * t4_sigma_pairing(a, b));
  });
}

void suite_monopole(const ScenarioConfig& c, VerificationReport& rep) {
  const int q = c.grid_sizes.back();
  run_check(c, rep, "monopole_chern", 1e-8, [&] {
    CheckNums worst;
    for (int n : {-2, -1, 0, 1, 2, 3}) {
      const double v = monopole_chern_number(n, q);
      const double r = std::abs(v - n);
      if (r >= worst.residual)
        worst = CheckNums{v, static_cast<double>(n), r};
    }
    return worst;
  });
  run_check(c, rep, "monopole_overlap", 1e-12, [&] {
    CheckNums worst;
    for (int n : {-2, 1, 3}) {
      const double r = monopole_overlap_residual(n, q);
      if (r >= worst.residual) worst = CheckNums{r, 0.0, r};
    }
    return worst;
  });
  run_check(c, rep, "monopole_additivity", 1e-12, [&] {
    const double v = monopole_chern_number(1, q) +
                     monopole_chern_number(2, q) - monopole_chern_number(3, q);
    return CheckNums{v, 0.0, std::abs(v)};
  });
}

void sweep_monopole(const ScenarioConfig& c, VerificationReport& rep) {
  run_sweep(c, rep, "chern_quadrature", 3.0, [&](int q) {
    return std::abs(monopole_chern_number(2, q) - 2.0);
  });
}

struct ScenarioEntry {
  const char* name;
  void (*suite)(const ScenarioConfig&, VerificationReport&);
  void (*sweep)(const ScenarioConfig&, VerificationReport&);
};

constexpr ScenarioEntry kScenarios[] = {
    {"monopole", suite_monopole, sweep_monopole},
    {"atiyah_bott_t2", suite_atiyah_bott, sweep_atiyah_bott},
    {"symplectic_t4", suite_symplectic, sweep_symplectic},
    {"cs_t3", suite_cs, sweep_cs},
    {"transgression_t4", suite_transgression, sweep_transgression},
};

const ScenarioEntry& find_scenario(const std::string& name) {
  for (const ScenarioEntry& e : kScenarios)
    if (name == e.name) return e;
  throw std::runtime_error("unknown scenario: " + name);
}

[[noreturn]] void malformed(const std::string& msg) {
  throw std::runtime_error("malformed config: " + msg);
}

void validate_config(const ScenarioConfig& c) {
  find_scenario(c.scenario);
  if (c.grid_sizes.empty()) malformed("grid_sizes must be nonempty");
  for (int N : c.grid_sizes)
    if (N < 5) malformed("grid sizes must be >= 5");
  if (!std::is_sorted(c.grid_sizes.begin(), c.grid_sizes.end()))
    malformed("grid_sizes must be ascending");
  if (c.group != "su2" && c.group != "u1")
    malformed("group must be 'su2' or 'u1'");
  try {
    weil_registry(c.polynomial);
  } catch (const std::exception&) {
    malformed("unknown polynomial '" + c.polynomial + "'");
  }
  if (c.scenario == "monopole") {
    if (c.group != "u1") malformed("monopole is a u1 scenario");
    if (c.polynomial != "c1_u1") malformed("monopole fixes polynomial c1_u1");
  } else {
    if (c.group != "su2") malformed(c.scenario + " requires group su2");
    if (c.scenario == "cs_t3" || c.scenario == "symplectic_t4") {
      if (c.polynomial != "c2_su2")
        malformed(c.scenario + " fixes polynomial c2_su2");
    } else if (c.polynomial == "c1_u1") {
      malformed(c.scenario + " needs an su2 polynomial");
    }
  }
  if (c.beta_pairs < 1) malformed("beta_pairs must be >= 1");
  if (c.scenario == "symplectic_t4" && c.beta_pairs != 2)
    malformed("symplectic_t4 runs on T^4: beta_pairs must be 2");
  if (c.fmax < 0 || c.fmax > 8) malformed("fmax must be in [0, 8]");
  if (!(c.amp >= 0.0)) malformed("amp must be nonnegative");
  for (const auto& [id, tol] : c.tolerances)
    if (!(tol >= 0.0)) malformed("negative tolerance for '" + id + "'");
}

VerificationReport make_header(const ScenarioConfig& c, const char* kind) {
  VerificationReport r;
  r.version = kVersion;
  r.scenario = c.scenario;
  r.kind = kind;
  r.seed = c.seed;
  r.grid_sizes = c.grid_sizes;
  r.mode = c.mode == DiffMode::fd4 ? "fd4" : "spectral";
  r.group = c.group;
  r.polynomial = c.polynomial;
  return r;
}

}  // namespace

std::vector<std::string> scenario_names() {
  std::vector<std::string> names;
  for (const ScenarioEntry& e : kScenarios) names.emplace_back(e.name);
  return names;
}

ScenarioConfig default_config(const std::string& scenario) {
  find_scenario(scenario);
  ScenarioConfig c;
  c.scenario = scenario;
  c.seed = 42;
  if (scenario == "monopole") {
    c.group = "u1";
    c.polynomial = "c1_u1";
    c.grid_sizes = {16, 32, 64};
  } else if (scenario == "atiyah_bott_t2") {
    c.grid_sizes = {16, 24, 32};
  } else if (scenario == "symplectic_t4") {
    c.grid_sizes = {8, 12, 16};
  } else if (scenario == "cs_t3") {
    c.grid_sizes = {24, 32, 48};
  } else {
    c.grid_sizes = {12, 16, 24};
    c.mode = DiffMode::fd4;
  }
  return c;
}

ScenarioConfig parse_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    malformed(e.what());
  }
  if (!j.is_object()) malformed("expected a JSON object");
  if (!j.contains("scenario") || !j.at("scenario").is_string())
    malformed("scenario (string) is required");

  static const std::set<std::string> known = {
      "scenario", "grid_sizes", "mode",       "group", "polynomial",
      "beta_pairs", "fmax",     "amp",        "seed",  "tolerances",
      "min_orders"};
  for (const auto& item : j.items())
    if (known.find(item.key()) == known.end())
      malformed("unknown key '" + item.key() + "'");

  ScenarioConfig c = default_config(j.at("scenario").get<std::string>());
  if (!j.contains("seed") || !j.at("seed").is_number_unsigned())
    malformed("seed (nonnegative integer) is required");
  c.seed = j.at("seed").get<std::uint64_t>();

  try {
    if (j.contains("grid_sizes"))
      c.grid_sizes = j.at("grid_sizes").get<std::vector<int>>();
    if (j.contains("mode")) {
      const std::string m = j.at("mode").get<std::string>();
      if (m == "fd4")
        c.mode = DiffMode::fd4;
      else if (m == "spectral")
        c.mode = DiffMode::spectral;
      else
        malformed("mode must be 'fd4' or 'spectral'");
    }
    if (j.contains("group")) c.group = j.at("group").get<std::string>();
    if (j.contains("polynomial"))
      c.polynomial = j.at("polynomial").get<std::string>();
    if (j.contains("beta_pairs")) c.beta_pairs = j.at("beta_pairs").get<int>();
    if (j.contains("fmax")) c.fmax = j.at("fmax").get<int>();
    if (j.contains("amp")) c.amp = j.at("amp").get<double>();
    if (j.contains("tolerances"))
      c.tolerances =
          j.at("tolerances").get<std::map<std::string, double>>();
    if (j.contains("min_orders"))
      c.min_orders = j.at("min_orders").get<std::map<std::string, double>>();
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
  validate_config(c);
  return c;
}

std::string config_schema() {
  return R"(cwf scenario config: a JSON object

required keys
  scenario     string   one of: monopole, atiyah_bott_t2, symplectic_t4,
                        cs_t3, transgression_t4
  seed         integer  nonnegative; seeds every random field in the run

optional keys (defaults are per scenario)
  grid_sizes   [int]    ascending resolutions, each >= 5; suites run at the
                        last entry, sweeps use all entries (at least 3); the
                        monopole scenario reads them as quadrature points
  mode         string   "spectral" or "fd4" (default spectral, except
                        transgression_t4 which defaults to fd4)
  group        string   structure group, fixed per scenario: "su2" for the
                        torus scenarios, "u1" for monopole
  polynomial   string   invariant polynomial key: "c2_su2" or "det_su2" for
                        atiyah_bott_t2 and transgression_t4; other scenarios
                        fix their polynomial
  beta_pairs   int      symplectic_t4 only; must be 2 on T^4 (the descriptor
                        uses sigma^(pairs-1)/(pairs-1)!)
  fmax         int      frequency cap of seeded random fields (default 1)
  amp          float    amplitude of seeded random fields (default 0.3)
  tolerances   object   check id -> tolerance override (values >= 0)
  min_orders   object   sweep record id -> required fitted order override
)";
}

VerificationReport run_suite(const ScenarioConfig& config) {
  validate_config(config);
  const ScenarioEntry& e = find_scenario(config.scenario);
  VerificationReport rep = make_header(config, "suite");
  e.suite(config, rep);
  return rep;
}

VerificationReport convergence_sweep(const ScenarioConfig& config) {
  validate_config(config);
  if (config.grid_sizes.size() < 3)
    malformed("a convergence sweep needs at least 3 grid sizes");
  const ScenarioEntry& e = find_scenario(config.scenario);
  VerificationReport rep = make_header(config, "sweep");
  e.sweep(config, rep);
  return rep;
}

}  // namespace cwf
