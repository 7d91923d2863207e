#include "cwf/fields.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cwf {

namespace {

// integer modes with sum |m_i| <= fmax, canonical half (first nonzero entry
// positive) plus zero, in lexicographic order
std::vector<std::array<int, 4>> mode_list(int n, int fmax) {
  std::vector<std::array<int, 4>> modes;
  std::array<int, 4> m{};
  std::function<void(int, int)> rec = [&](int axis, int budget) {
    if (axis == n) {
      for (int a = 0; a < n; ++a) {
        if (m[static_cast<std::size_t>(a)] > 0) break;
        if (m[static_cast<std::size_t>(a)] < 0) return;
      }
      modes.push_back(m);
      return;
    }
    for (int v = -budget; v <= budget; ++v) {
      m[static_cast<std::size_t>(axis)] = v;
      rec(axis + 1, budget - std::abs(v));
    }
    m[static_cast<std::size_t>(axis)] = 0;
  };
  rec(0, fmax);
  return modes;
}

// per-axis tables of exp(2 pi i m j / N) for m in [-fmax, fmax]
struct PhaseTables {
  int fmax;
  std::array<std::vector<cplx>, 4> rows;  // rows[a][(m+fmax)*N + j]

  PhaseTables(const TorusGrid& g, int fm) : fmax(fm) {
    const double twopi = 2.0 * std::numbers::pi;
    for (int a = 0; a < g.dim(); ++a) {
      int N = g.extent(a);
      auto& r = rows[static_cast<std::size_t>(a)];
      r.resize(static_cast<std::size_t>(2 * fm + 1) * static_cast<std::size_t>(N));
      for (int m = -fm; m <= fm; ++m)
        for (int j = 0; j < N; ++j)
          r[static_cast<std::size_t>((m + fm) * N + j)] =
              std::polar(1.0, twopi * m * j / N);
    }
  }

  const cplx* row(int axis, int m) const {
    const auto& r = rows[static_cast<std::size_t>(axis)];
    return r.data() + static_cast<std::size_t>(m + fmax) *
                          (r.size() / static_cast<std::size_t>(2 * fmax + 1));
  }
};

// out[site] += Re(w * exp(2 pi i m.x))
void add_mode(const TorusGrid& g, const PhaseTables& tab,
              const std::array<int, 4>& m, cplx w, double* out) {
  static const cplx one(1.0, 0.0);
  int N[4] = {1, 1, 1, 1};
  const cplx* rows[4] = {&one, &one, &one, &one};
  for (int a = 0; a < g.dim(); ++a) {
    N[a] = g.extent(a);
    rows[a] = tab.row(a, m[static_cast<std::size_t>(a)]);
  }
  std::size_t s = 0;
  for (int j0 = 0; j0 < N[0]; ++j0) {
    cplx p0 = rows[0][j0];
    for (int j1 = 0; j1 < N[1]; ++j1) {
      cplx p1 = p0 * rows[1][j1];
      for (int j2 = 0; j2 < N[2]; ++j2) {
        cplx p2 = p1 * rows[2][j2];
        for (int j3 = 0; j3 < N[3]; ++j3) out[s++] += (w * (p2 * rows[3][j3])).real();
      }
    }
  }
}

}  // namespace

double NormalStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
  double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

GridForm rand_lie_form(const TorusGrid& g, const Algebra& alg, int degree,
                       std::uint64_t seed, int fmax, double amp) {
  GridForm w = GridForm::lie(g, alg, degree);
  NormalStream ns(seed);
  PhaseTables tab(g, fmax);
  auto modes = mode_list(g.dim(), fmax);
  auto basis = algebra_basis(alg);
  const std::size_t V = g.volume();
  const std::size_t kk = static_cast<std::size_t>(alg.k) *
                         static_cast<std::size_t>(alg.k);
  std::vector<double> chan(V);
  for (int c = 0; c < w.ncomp(); ++c) {
    cplx* comp = w.comp(c);
    for (const auto& b : basis) {
      std::fill(chan.begin(), chan.end(), 0.0);
      for (const auto& m : modes) {
        double alpha = amp * ns.next();
        double beta = amp * ns.next();
        add_mode(g, tab, m, cplx(alpha, -beta), chan.data());
      }
      for (std::size_t s = 0; s < V; ++s)
        for (std::size_t e = 0; e < kk; ++e)
          comp[s * kk + e] += chan[s] * b.data()[e];
    }
  }
  return w;
}

GridForm group_exp_field(const GridForm& xi) {
  if (!xi.is_lie() || xi.degree() != 0)
    throw std::invalid_argument("group_exp_field needs a Lie-valued 0-form");
  const Algebra& alg = xi.algebra();
  GridForm out = GridForm::lie(xi.grid(), alg, 0);
  const std::size_t V = xi.grid().volume();
  const std::size_t kk = static_cast<std::size_t>(alg.k) *
                         static_cast<std::size_t>(alg.k);
  const cplx* src = xi.comp(0);
  cplx* dst = out.comp(0);
  for (std::size_t s = 0; s < V; ++s) exp_point(alg, src + s * kk, dst + s * kk);
  return out;
}

GridForm rand_group_field(const TorusGrid& g, const Algebra& alg,
                          std::uint64_t seed, int fmax, double amp) {
  return group_exp_field(rand_lie_form(g, alg, 0, seed, fmax, amp));
}

void fill_component(GridForm& w, int comp, int bi, int bj,
                    const std::function<cplx(const double*)>& fn) {
  const TorusGrid& g = w.grid();
  int n = g.dim();
  int k = w.is_lie() ? w.algebra().k : 1;
  cplx* dst = w.comp(comp);
  const std::size_t blk = static_cast<std::size_t>(w.block());
  int N[4] = {1, 1, 1, 1};
  for (int a = 0; a < n; ++a) N[a] = g.extent(a);
  double x[4] = {0, 0, 0, 0};
  std::size_t s = 0;
  for (int j0 = 0; j0 < N[0]; ++j0) {
    x[0] = g.dim() > 0 ? g.coord(0, j0) : 0.0;
    for (int j1 = 0; j1 < N[1]; ++j1) {
      if (n > 1) x[1] = g.coord(1, j1);
      for (int j2 = 0; j2 < N[2]; ++j2) {
        if (n > 2) x[2] = g.coord(2, j2);
        for (int j3 = 0; j3 < N[3]; ++j3) {
          if (n > 3) x[3] = g.coord(3, j3);
          dst[s * blk + static_cast<std::size_t>(bi * k + bj)] = fn(x);
          ++s;
        }
      }
    }
  }
}

}  // namespace cwf
