#include "cwf/torus_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cwf/kernels.hpp"
#include "cwf/parallel.hpp"

namespace cwf {

namespace {

int popcount(unsigned m) { return __builtin_popcount(m); }

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// ordered partition of `mask` into blocks of the given sizes: component index
// per block plus the shuffle sign
struct PartTerm {
  std::array<int, 3> comp;
  double sign;
};

void enum_partitions_rec(const TorusGrid& g, unsigned rest,
                         const std::vector<int>& sz, std::size_t level,
                         std::array<int, 3>& comps, std::vector<int>& seq,
                         std::vector<PartTerm>& out) {
  if (level == sz.size()) {
    out.push_back({comps, static_cast<double>(TorusGrid::perm_sign(seq))});
    return;
  }
  int want = sz[level];
  if (want == 0) {
    comps[level] = 0;
    enum_partitions_rec(g, rest, sz, level + 1, comps, seq, out);
    return;
  }
  // iterate submasks of `rest` with popcount == want
  for (unsigned s = rest;; s = (s - 1) & rest) {
    if (popcount(s) == want) {
      comps[level] = g.comp_index(want, s);
      auto axes = TorusGrid::mask_axes(s);
      for (int a : axes) seq.push_back(a);
      enum_partitions_rec(g, rest & ~s, sz, level + 1, comps, seq, out);
      seq.resize(seq.size() - axes.size());
    }
    if (s == 0) break;
  }
}

std::vector<PartTerm> enum_partitions(const TorusGrid& g, unsigned mask,
                                      const std::vector<int>& sz) {
  std::vector<PartTerm> out;
  std::array<int, 3> comps{};
  std::vector<int> seq;
  enum_partitions_rec(g, mask, sz, 0, comps, seq, out);
  return out;
}

void require_same_shape(const GridForm& a, const GridForm& b) {
  require(a.grid().same(b.grid()), "grid mismatch");
  require(a.degree() == b.degree(), "degree mismatch");
  require(a.block() == b.block(), "block mismatch");
}

}  // namespace

TorusGrid::TorusGrid(std::vector<int> extents, DiffMode mode)
    : n_(static_cast<int>(extents.size())), ext_(std::move(extents)),
      mode_(mode) {
  require(n_ >= 1 && n_ <= 4, "grid dimension must be 1..4");
  vol_ = 1;
  cellvol_ = 1.0;
  for (int N : ext_) {
    require(N >= 5, "grid extent must be at least 5");
    vol_ *= static_cast<std::size_t>(N);
    cellvol_ /= N;
  }
  stride_.assign(static_cast<std::size_t>(n_), 1);
  for (int a = n_ - 2; a >= 0; --a)
    stride_[static_cast<std::size_t>(a)] =
        stride_[static_cast<std::size_t>(a + 1)] *
        static_cast<std::size_t>(ext_[static_cast<std::size_t>(a + 1)]);

  terms_.resize(static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a) {
    int N = ext_[static_cast<std::size_t>(a)];
    std::vector<double> c(static_cast<std::size_t>(N), 0.0);
    if (mode_ == DiffMode::fd4) {
      double Nd = N;
      c[1] = 2.0 * Nd / 3.0;
      c[2] = -Nd / 12.0;
      c[static_cast<std::size_t>(N - 1)] = -c[1];
      c[static_cast<std::size_t>(N - 2)] = -c[2];
    } else {
      const double pi = std::numbers::pi;
      int gmax = (N - 1) / 2;
      for (int m = 1; m <= (N - 1) / 2; ++m) {
        double s = 0.0;
        for (int g = 1; g <= gmax; ++g)
          s += g * std::sin(2.0 * pi * g * m / N);
        double v = (4.0 * pi / N) * s;
        c[static_cast<std::size_t>(m)] = v;
        c[static_cast<std::size_t>(N - m)] = -v;
      }
    }
    auto& t = terms_[static_cast<std::size_t>(a)];
    for (int m = 1; m < N; ++m)
      if (c[static_cast<std::size_t>(m)] != 0.0)
        t.emplace_back(m, c[static_cast<std::size_t>(m)]);
  }

  masks_.resize(static_cast<std::size_t>(n_) + 1);
  mask2idx_.assign(static_cast<std::size_t>(n_) + 1, {});
  for (int p = 0; p <= n_; ++p) {
    auto& mk = masks_[static_cast<std::size_t>(p)];
    auto& ix = mask2idx_[static_cast<std::size_t>(p)];
    ix.fill(-1);
    // sorted p-tuples in lexicographic order
    std::vector<int> tup(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) tup[static_cast<std::size_t>(i)] = i;
    while (true) {
      unsigned mask = 0;
      for (int v : tup) mask |= 1u << v;
      ix[mask] = static_cast<int>(mk.size());
      mk.push_back(mask);
      if (p == 0) break;
      int i = p - 1;
      while (i >= 0 && tup[static_cast<std::size_t>(i)] == n_ - p + i) --i;
      if (i < 0) break;
      ++tup[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < p; ++j)
        tup[static_cast<std::size_t>(j)] = tup[static_cast<std::size_t>(i)] + (j - i);
    }
  }
}

std::vector<int> TorusGrid::mask_axes(unsigned mask) {
  std::vector<int> axes;
  for (int a = 0; a < 4; ++a)
    if (mask & (1u << a)) axes.push_back(a);
  return axes;
}

int TorusGrid::perm_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

GridForm GridForm::lie(const TorusGrid& g, const Algebra& alg, int degree) {
  require(degree >= 0 && degree <= g.dim(), "bad form degree");
  GridForm w;
  w.grid_ = &g;
  w.degree_ = degree;
  w.block_ = alg.k * alg.k;
  w.lie_ = true;
  w.alg_ = alg;
  w.data_.assign(static_cast<std::size_t>(g.ncomp(degree)) * g.volume() *
                     static_cast<std::size_t>(w.block_),
                 cplx(0.0, 0.0));
  return w;
}

GridForm GridForm::scalar(const TorusGrid& g, int degree) {
  require(degree >= 0 && degree <= g.dim(), "bad form degree");
  GridForm w;
  w.grid_ = &g;
  w.degree_ = degree;
  w.block_ = 1;
  w.lie_ = false;
  w.data_.assign(static_cast<std::size_t>(g.ncomp(degree)) * g.volume(),
                 cplx(0.0, 0.0));
  return w;
}

void GridForm::set_zero() { std::fill(data_.begin(), data_.end(), cplx(0.0)); }

GridForm& GridForm::operator+=(const GridForm& o) {
  require_same_shape(*this, o);
  kern::axpy(1.0, reinterpret_cast<const double*>(o.data()),
             reinterpret_cast<double*>(data()), 2 * size());
  return *this;
}

GridForm& GridForm::operator-=(const GridForm& o) {
  require_same_shape(*this, o);
  kern::axpy(-1.0, reinterpret_cast<const double*>(o.data()),
             reinterpret_cast<double*>(data()), 2 * size());
  return *this;
}

GridForm& GridForm::scale(cplx s) {
  if (s.imag() == 0.0) {
    double* d = reinterpret_cast<double*>(data());
    kern::scale(s.real(), d, d, 2 * size());
  } else {
    for (auto& v : data_) v *= s;
  }
  return *this;
}

double GridForm::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double GridForm::l2() const {
  const double* d = reinterpret_cast<const double*>(data());
  return std::sqrt(par::det_dot(d, d, 2 * size()) * grid_->cell_volume());
}

GridForm operator+(GridForm a, const GridForm& b) {
  a += b;
  return a;
}
GridForm operator-(GridForm a, const GridForm& b) {
  a -= b;
  return a;
}
GridForm operator*(cplx s, GridForm a) {
  a.scale(s);
  return a;
}
GridForm operator*(double s, GridForm a) {
  a.scale(s);
  return a;
}

void apply_axis_derivative(const TorusGrid& g, int axis, int block,
                           const cplx* src, cplx* dst, double coeff) {
  const std::size_t inner = g.site_stride(axis) * static_cast<std::size_t>(block);
  const std::size_t line = static_cast<std::size_t>(g.extent(axis)) * inner;
  const std::size_t outer = g.volume() * static_cast<std::size_t>(block) / line;
  for (const auto& [m, c] : g.stencil_terms(axis)) {
    const double a = coeff * c;
    const std::size_t shift = static_cast<std::size_t>(m) * inner;
    par::parallel_for(outer, [&](std::size_t o) {
      const cplx* s0 = src + o * line;
      cplx* d0 = dst + o * line;
      kern::axpy(a, reinterpret_cast<const double*>(s0 + shift),
                 reinterpret_cast<double*>(d0), 2 * (line - shift));
      kern::axpy(a, reinterpret_cast<const double*>(s0),
                 reinterpret_cast<double*>(d0 + (line - shift)), 2 * shift);
    });
  }
}

GridForm exterior_derivative(const GridForm& w) {
  const TorusGrid& g = w.grid();
  int p = w.degree();
  require(p < g.dim(), "derivative of a top-degree form");
  GridForm out = w.is_lie() ? GridForm::lie(g, w.algebra(), p + 1)
                            : GridForm::scalar(g, p + 1);
  const auto& out_masks = g.comp_masks(p + 1);
  for (int cj = 0; cj < out.ncomp(); ++cj) {
    auto axes = TorusGrid::mask_axes(out_masks[static_cast<std::size_t>(cj)]);
    for (std::size_t t = 0; t < axes.size(); ++t) {
      int axis = axes[t];
      unsigned srcmask = out_masks[static_cast<std::size_t>(cj)] & ~(1u << axis);
      int cs = g.comp_index(p, srcmask);
      double sign = (t % 2 == 0) ? 1.0 : -1.0;
      apply_axis_derivative(g, axis, w.block(), w.comp(cs), out.comp(cj), sign);
    }
  }
  return out;
}

GridForm wedge_product(const GridForm& a, const GridForm& b) {
  const TorusGrid& g = a.grid();
  require(g.same(b.grid()), "grid mismatch");
  require(a.is_lie() == b.is_lie(), "mixed wedge operands");
  int k = 1;
  if (a.is_lie()) {
    require(a.algebra() == b.algebra(), "algebra mismatch");
    k = a.algebra().k;
  }
  int P = a.degree() + b.degree();
  require(P <= g.dim(), "wedge degree exceeds dimension");
  GridForm out = a.is_lie() ? GridForm::lie(g, a.algebra(), P)
                            : GridForm::scalar(g, P);
  const std::size_t V = g.volume();
  const auto& masks = g.comp_masks(P);
  for (int cj = 0; cj < out.ncomp(); ++cj) {
    auto parts = enum_partitions(g, masks[static_cast<std::size_t>(cj)],
                                 {a.degree(), b.degree()});
    for (const auto& t : parts)
      par::par_cmm(k, t.sign, a.comp(t.comp[0]), b.comp(t.comp[1]),
                   out.comp(cj), V, true);
  }
  return out;
}

GridForm bracket_wedge(const GridForm& a, const GridForm& b) {
  const TorusGrid& g = a.grid();
  require(g.same(b.grid()), "grid mismatch");
  require(a.is_lie() && b.is_lie() && a.algebra() == b.algebra(),
          "bracket_wedge needs Lie-valued operands");
  int k = a.algebra().k;
  int P = a.degree() + b.degree();
  require(P <= g.dim(), "wedge degree exceeds dimension");
  GridForm out = GridForm::lie(g, a.algebra(), P);
  const std::size_t V = g.volume();
  const auto& masks = g.comp_masks(P);
  for (int cj = 0; cj < out.ncomp(); ++cj) {
    auto parts = enum_partitions(g, masks[static_cast<std::size_t>(cj)],
                                 {a.degree(), b.degree()});
    for (const auto& t : parts) {
      par::par_cmm(k, t.sign, a.comp(t.comp[0]), b.comp(t.comp[1]),
                   out.comp(cj), V, true);
      par::par_cmm(k, -t.sign, b.comp(t.comp[1]), a.comp(t.comp[0]),
                   out.comp(cj), V, true);
    }
  }
  return out;
}

GridForm multilinear_wedge(const WeilPoly& f,
                           const std::vector<const GridForm*>& ws) {
  require(static_cast<int>(ws.size()) == f.degree,
          "multilinear_wedge arity mismatch");
  const TorusGrid& g = ws[0]->grid();
  std::vector<int> sizes;
  int P = 0;
  for (const GridForm* w : ws) {
    require(w->grid().same(g), "grid mismatch");
    require(w->is_lie() && w->algebra() == f.alg, "algebra mismatch");
    sizes.push_back(w->degree());
    P += w->degree();
  }
  require(P <= g.dim(), "wedge degree exceeds dimension");
  GridForm out = GridForm::scalar(g, P);
  const std::size_t V = g.volume();
  const std::size_t kk = static_cast<std::size_t>(f.alg.k) *
                         static_cast<std::size_t>(f.alg.k);
  const auto& masks = g.comp_masks(P);
  const int r = f.degree;
  for (int cj = 0; cj < out.ncomp(); ++cj) {
    auto parts = enum_partitions(g, masks[static_cast<std::size_t>(cj)], sizes);
    cplx* o = out.comp(cj);
    for (const auto& t : parts) {
      const cplx* base[3] = {nullptr, nullptr, nullptr};
      for (int i = 0; i < r; ++i) base[i] = ws[static_cast<std::size_t>(i)]->comp(t.comp[i]);
      const double sg = t.sign;
      par::parallel_for_range(V, [&](std::size_t lo, std::size_t hi) {
        const cplx* p[3];
        for (std::size_t s = lo; s < hi; ++s) {
          for (int i = 0; i < r; ++i) p[i] = base[i] + s * kk;
          o[s] += sg * polarized_point(f, p);
        }
      });
    }
  }
  return out;
}

GridForm wedge_const(const GridForm& w, const ConstForm& beta) {
  const TorusGrid& g = w.grid();
  require(beta.degree >= 0 && beta.degree <= g.dim(), "bad constant degree");
  require(static_cast<int>(beta.coeff.size()) == g.ncomp(beta.degree),
          "constant form coefficient count mismatch");
  int P = w.degree() + beta.degree;
  require(P <= g.dim(), "wedge degree exceeds dimension");
  GridForm out = w.is_lie() ? GridForm::lie(g, w.algebra(), P)
                            : GridForm::scalar(g, P);
  const std::size_t len = 2 * out.comp_len();
  const auto& masks = g.comp_masks(P);
  for (int cj = 0; cj < out.ncomp(); ++cj) {
    auto parts = enum_partitions(g, masks[static_cast<std::size_t>(cj)],
                                 {w.degree(), beta.degree});
    for (const auto& t : parts) {
      double a = t.sign * beta.coeff[static_cast<std::size_t>(t.comp[1])];
      if (a == 0.0) continue;
      par::par_axpy(a, reinterpret_cast<const double*>(w.comp(t.comp[0])),
                    reinterpret_cast<double*>(out.comp(cj)), len);
    }
  }
  return out;
}

double integrate(const GridForm& w) {
  require(w.degree() == w.grid().dim(), "integrate needs a top-degree form");
  require(w.block() == 1, "integrate needs scalar-type components");
  cplx s = par::det_sum_cplx(w.comp(0), w.grid().volume());
  return s.real() * w.grid().cell_volume();
}

double l2_inner(const GridForm& a, const GridForm& b) {
  require_same_shape(a, b);
  require(a.is_lie() && a.algebra() == b.algebra(), "l2_inner needs Lie forms");
  const std::size_t V = a.grid().volume();
  int k = a.algebra().k;
  std::vector<double> t(V);
  double s = 0.0;
  for (int c = 0; c < a.ncomp(); ++c) {
    par::par_retrace_mul(k, a.comp(c), b.comp(c), t.data(), V);
    s += par::det_sum(t.data(), V);
  }
  return -s * a.grid().cell_volume();
}

}  // namespace cwf
