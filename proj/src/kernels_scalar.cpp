#include "cwf/kernels.hpp"

// Reference implementations. These define the canonical operation order;
// the AVX2 variants reproduce it exactly.

namespace cwf::kern {
namespace {

void axpby_s(double a, const double* x, double b, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void axpy_s(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + a * x[i];
}

void scale_s(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i];
}

double block_sum_s(const double* x, std::size_t n) {
  double l0 = 0, l1 = 0, l2 = 0, l3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    l0 += x[i];
    l1 += x[i + 1];
    l2 += x[i + 2];
    l3 += x[i + 3];
  }
  double lane[4] = {l0, l1, l2, l3};
  for (; i < n; ++i) lane[i % 4] += x[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void block_sum2_s(const double* x, std::size_t n, double* out) {
  double l0 = 0, l1 = 0, l2 = 0, l3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    l0 += x[i];
    l1 += x[i + 1];
    l2 += x[i + 2];
    l3 += x[i + 3];
  }
  double lane[4] = {l0, l1, l2, l3};
  for (; i < n; ++i) lane[i % 4] += x[i];
  out[0] = lane[0] + lane[2];
  out[1] = lane[1] + lane[3];
}

double block_dot_s(const double* x, const double* y, std::size_t n) {
  double l0 = 0, l1 = 0, l2 = 0, l3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    l0 += x[i] * y[i];
    l1 += x[i + 1] * y[i + 1];
    l2 += x[i + 2] * y[i + 2];
    l3 += x[i + 3] * y[i + 3];
  }
  double lane[4] = {l0, l1, l2, l3};
  for (; i < n; ++i) lane[i % 4] += x[i] * y[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

// Complex product accumulated entry by entry:
//   re += coeff * (ar*br - ai*bi), im += coeff * (ar*bi + ai*br)
// with every product and sum rounded in this exact order.
void cmm_s(int k, double coeff, const cplx* A, const cplx* B, cplx* C,
           std::size_t nsites, bool accumulate) {
  const std::size_t kk = static_cast<std::size_t>(k) * k;
  for (std::size_t s = 0; s < nsites; ++s) {
    const double* a = reinterpret_cast<const double*>(A + s * kk);
    const double* b = reinterpret_cast<const double*>(B + s * kk);
    double* c = reinterpret_cast<double*>(C + s * kk);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        double re = 0, im = 0;
        for (int l = 0; l < k; ++l) {
          const double ar = a[2 * (i * k + l)];
          const double ai = a[2 * (i * k + l) + 1];
          const double br = b[2 * (l * k + j)];
          const double bi = b[2 * (l * k + j) + 1];
          re += ar * br - ai * bi;
          im += ar * bi + ai * br;
        }
        const std::size_t idx = 2 * static_cast<std::size_t>(i * k + j);
        if (accumulate) {
          c[idx] = c[idx] + coeff * re;
          c[idx + 1] = c[idx + 1] + coeff * im;
        } else {
          c[idx] = coeff * re;
          c[idx + 1] = coeff * im;
        }
      }
    }
  }
}

// Re tr(AB) = sum_{i,j} Re(A[i][j] * B[j][i]); terms are combined with a
// fixed pair tree: row sums r_i = (t_{i0}+t_{i1})+(t_{i2}+t_{i3}), total
// (r0+r1)+(r2+r3) (shorter rows collapse from the left).
void retrace_mul_s(int k, const cplx* A, const cplx* B, double* t,
                   std::size_t nsites) {
  const std::size_t kk = static_cast<std::size_t>(k) * k;
  for (std::size_t s = 0; s < nsites; ++s) {
    const double* a = reinterpret_cast<const double*>(A + s * kk);
    const double* b = reinterpret_cast<const double*>(B + s * kk);
    double row[4] = {0, 0, 0, 0};
    for (int i = 0; i < k; ++i) {
      double term[4] = {0, 0, 0, 0};
      for (int j = 0; j < k; ++j) {
        const double ar = a[2 * (i * k + j)];
        const double ai = a[2 * (i * k + j) + 1];
        const double br = b[2 * (j * k + i)];
        const double bi = b[2 * (j * k + i) + 1];
        term[j] = ar * br - ai * bi;
      }
      row[i] = (k > 2) ? (term[0] + term[1]) + (term[2] + term[3])
                       : term[0] + term[1];
    }
    t[s] = (k > 2) ? (row[0] + row[1]) + (row[2] + row[3]) : row[0] + row[1];
  }
}

}  // namespace

namespace detail {
const Ops scalar_ops = {axpby_s,      axpy_s,      scale_s,
                        block_sum_s,  block_sum2_s, block_dot_s,
                        cmm_s,        retrace_mul_s};
}  // namespace detail

}  // namespace cwf::kern
