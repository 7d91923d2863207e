#pragma once
// Matrix Lie group/algebra kernels for u(1), su(2) and u(k), k <= 4.
// Algebra elements are anti-Hermitian complex matrices (no factors of i in
// storage), group elements are unitary.

#include <array>
#include <complex>
#include <vector>

namespace cwf {

using cplx = std::complex<double>;

enum class AlgebraTag : unsigned char { u1 = 0, su2 = 1, uk = 2 };

struct Algebra {
  AlgebraTag tag = AlgebraTag::u1;
  int k = 1;  // matrix size

  // real dimension of the algebra
  int dim() const {
    switch (tag) {
      case AlgebraTag::u1:
        return 1;
      case AlgebraTag::su2:
        return 3;
      default:
        return k * k;
    }
  }
  static Algebra u1() { return {AlgebraTag::u1, 1}; }
  static Algebra su2() { return {AlgebraTag::su2, 2}; }
  static Algebra uk(int k) { return {AlgebraTag::uk, k}; }
  bool operator==(const Algebra&) const = default;
};

// Dense complex k-by-k matrix, k <= 4, row-major, value semantics.
class SmallMat {
 public:
  SmallMat() = default;
  explicit SmallMat(int k) : k_(k) {}

  int k() const { return k_; }
  cplx& at(int i, int j) { return v_[static_cast<std::size_t>(i * k_ + j)]; }
  const cplx& at(int i, int j) const {
    return v_[static_cast<std::size_t>(i * k_ + j)];
  }
  cplx* data() { return v_.data(); }
  const cplx* data() const { return v_.data(); }

  static SmallMat identity(int k) {
    SmallMat m(k);
    for (int i = 0; i < k; ++i) m.at(i, i) = 1.0;
    return m;
  }

  SmallMat dagger() const {
    SmallMat m(k_);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) m.at(i, j) = std::conj(at(j, i));
    return m;
  }

  cplx trace() const {
    cplx t = 0;
    for (int i = 0; i < k_; ++i) t += at(i, i);
    return t;
  }

  double norm() const;  // Frobenius

  friend SmallMat operator+(const SmallMat& a, const SmallMat& b) {
    SmallMat r(a.k_);
    for (int i = 0; i < a.k_ * a.k_; ++i) r.v_[i] = a.v_[i] + b.v_[i];
    return r;
  }
  friend SmallMat operator-(const SmallMat& a, const SmallMat& b) {
    SmallMat r(a.k_);
    for (int i = 0; i < a.k_ * a.k_; ++i) r.v_[i] = a.v_[i] - b.v_[i];
    return r;
  }
  friend SmallMat operator*(const SmallMat& a, const SmallMat& b);
  friend SmallMat operator*(cplx s, const SmallMat& a) {
    SmallMat r(a.k_);
    for (int i = 0; i < a.k_ * a.k_; ++i) r.v_[i] = s * a.v_[i];
    return r;
  }
  friend SmallMat operator*(double s, const SmallMat& a) {
    return cplx(s, 0.0) * a;
  }

 private:
  int k_ = 0;
  std::array<cplx, 16> v_{};
};

struct AlgElem {
  Algebra alg;
  SmallMat m;
};

struct GrpElem {
  Algebra alg;
  SmallMat m;
};

// [X, Y] = XY - YX; throws std::invalid_argument on mismatched algebras.
AlgElem bracket(const AlgElem& x, const AlgElem& y);

// Lie exponential. su(2) uses the closed form exp(X) = cos(r) I + sinc(r) X
// with r = sqrt(det X); other algebras use scaling-and-squaring with a
// truncated series.
GrpElem group_exp(const AlgElem& x);

// Ad_g X = g X g^{-1} (= g X g^dagger for unitary g).
AlgElem adjoint(const GrpElem& g, const AlgElem& x);

// Re tr(XY); symmetric, Ad-invariant, negative definite on anti-Hermitian
// arguments.
double trace_pairing(const AlgElem& x, const AlgElem& y);

// Anti-Hermitian basis of the algebra (su(2): e_a = -(i/2) sigma_a).
std::vector<SmallMat> algebra_basis(const Algebra& alg);

// Invariant residuals used by tests and input validation.
double anti_hermitian_residual(const SmallMat& m);
double unitarity_residual(const SmallMat& m);

// Raw pointwise variants shared with grid-field code (row-major k*k blocks).
void bracket_point(int k, const cplx* x, const cplx* y, cplx* out);
void exp_point(const Algebra& alg, const cplx* x, cplx* out);

}  // namespace cwf
