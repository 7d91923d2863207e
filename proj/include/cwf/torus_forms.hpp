#pragma once
// Differential forms on periodic grids over [0,1)^n, n <= 4, with values in a
// matrix Lie algebra or in C. Derivatives are circulant per axis: a 4th-order
// central stencil or an exact spectral differentiation row, chosen at grid
// construction. Both variants are exactly antisymmetric, so summation by
// parts, d^2 = 0 and the discrete Stokes identity hold to rounding.

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "cwf/lie_core.hpp"
#include "cwf/weil.hpp"

namespace cwf {

enum class DiffMode : unsigned char { fd4 = 0, spectral = 1 };

class TorusGrid {
 public:
  TorusGrid(std::vector<int> extents, DiffMode mode);

  int dim() const { return n_; }
  int extent(int axis) const { return ext_[static_cast<std::size_t>(axis)]; }
  std::size_t volume() const { return vol_; }
  double spacing(int axis) const { return 1.0 / extent(axis); }
  double cell_volume() const { return cellvol_; }
  DiffMode mode() const { return mode_; }
  double coord(int axis, int j) const { return j * spacing(axis); }

  // sites are indexed lexicographically, axis 0 slowest
  std::size_t site_stride(int axis) const {
    return stride_[static_cast<std::size_t>(axis)];
  }

  // nonzero entries (shift, coeff) of the derivative row along an axis:
  // (D f)(x_j) = sum_m c_m f(x_{j+m})
  const std::vector<std::pair<int, double>>& stencil_terms(int axis) const {
    return terms_[static_cast<std::size_t>(axis)];
  }

  bool same(const TorusGrid& o) const {
    return n_ == o.n_ && ext_ == o.ext_ && mode_ == o.mode_;
  }

  // degree-p components as axis bitmasks, lexicographic in the sorted tuples
  int ncomp(int p) const {
    return static_cast<int>(masks_[static_cast<std::size_t>(p)].size());
  }
  const std::vector<unsigned>& comp_masks(int p) const {
    return masks_[static_cast<std::size_t>(p)];
  }
  int comp_index(int p, unsigned mask) const {
    return mask2idx_[static_cast<std::size_t>(p)][mask];
  }
  static std::vector<int> mask_axes(unsigned mask);
  // parity sign of the concatenated axis word `seq` relative to sorted order
  static int perm_sign(const std::vector<int>& seq);

 private:
  int n_;
  std::vector<int> ext_;
  DiffMode mode_;
  std::size_t vol_;
  double cellvol_;
  std::vector<std::size_t> stride_;
  std::vector<std::vector<std::pair<int, double>>> terms_;
  std::vector<std::vector<unsigned>> masks_;
  std::vector<std::array<int, 16>> mask2idx_;
};

// A degree-p form with ncomp = binom(n,p) components; each component stores
// one block of `block` complex entries per site (k*k for Lie-valued, 1 for
// scalar), site-major.
class GridForm {
 public:
  GridForm() = default;
  static GridForm lie(const TorusGrid& g, const Algebra& alg, int degree);
  static GridForm scalar(const TorusGrid& g, int degree);

  const TorusGrid& grid() const { return *grid_; }
  int degree() const { return degree_; }
  int ncomp() const { return grid_->ncomp(degree_); }
  int block() const { return block_; }
  bool is_lie() const { return lie_; }
  const Algebra& algebra() const { return alg_; }

  std::size_t comp_len() const { return grid_->volume() * block_; }
  cplx* comp(int c) { return data_.data() + comp_len() * c; }
  const cplx* comp(int c) const { return data_.data() + comp_len() * c; }
  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  void set_zero();
  GridForm& operator+=(const GridForm& o);
  GridForm& operator-=(const GridForm& o);
  GridForm& scale(cplx s);

  double max_abs() const;
  double l2() const;  // sqrt(sum |entry|^2 * cell volume)

 private:
  const TorusGrid* grid_ = nullptr;
  int degree_ = 0;
  int block_ = 1;
  bool lie_ = false;
  Algebra alg_;
  std::vector<cplx> data_;
};

GridForm operator+(GridForm a, const GridForm& b);
GridForm operator-(GridForm a, const GridForm& b);
GridForm operator*(cplx s, GridForm a);
GridForm operator*(double s, GridForm a);

// dst_comp += coeff * D_axis(src_comp), both of `block` complex per site
void apply_axis_derivative(const TorusGrid& g, int axis, int block,
                           const cplx* src, cplx* dst, double coeff);

GridForm exterior_derivative(const GridForm& w);

// pointwise-product wedge (matrix product for Lie-valued, complex product for
// scalar); operands must share block type
GridForm wedge_product(const GridForm& a, const GridForm& b);

// graded bracket wedge [a ^ b] of Lie-valued forms
GridForm bracket_wedge(const GridForm& a, const GridForm& b);

// scalar form whose J-component is the shuffle sum of f applied slotwise to
// the component matrices; ws.size() must equal f.degree
GridForm multilinear_wedge(const WeilPoly& f,
                           const std::vector<const GridForm*>& ws);

// constant-coefficient real form, one coefficient per component (lex order)
struct ConstForm {
  int degree = 0;
  std::vector<double> coeff;
};

GridForm wedge_const(const GridForm& w, const ConstForm& beta);

// integral of a top-degree scalar (block 1) form; real part
double integrate(const GridForm& w);

// L2 inner product of Lie-valued forms: -sum_comps Re tr(a_J b_J) * cellvol
double l2_inner(const GridForm& a, const GridForm& b);

}  // namespace cwf
