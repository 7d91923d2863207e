#include "cwf/kernels.hpp"

// AVX2 variants. Compiled with -mavx2 in this translation unit only; the
// dispatcher never selects them unless the CPU reports AVX2. No FMA is
// used anywhere so every lane rounds exactly like the scalar reference.

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace cwf::kern {
namespace {

void axpby_v(double a, const double* x, double b, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i,
                     _mm256_add_pd(_mm256_mul_pd(va, vx), _mm256_mul_pd(vb, vy)));
  }
  for (; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void axpy_v(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void scale_v(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) y[i] = a * x[i];
}

double block_sum_v(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double lane[4];
  _mm256_storeu_pd(lane, acc);
  for (; i < n; ++i) lane[i % 4] += x[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void block_sum2_v(const double* x, std::size_t n, double* out) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double lane[4];
  _mm256_storeu_pd(lane, acc);
  for (; i < n; ++i) lane[i % 4] += x[i];
  out[0] = lane[0] + lane[2];
  out[1] = lane[1] + lane[3];
}

double block_dot_v(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_add_pd(acc, p);
  }
  double lane[4];
  _mm256_storeu_pd(lane, acc);
  for (; i < n; ++i) lane[i % 4] += x[i] * y[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

// One row (two complex entries) of a 2x2 product: acc += a * [b0, b1],
// where a is a complex scalar. addsub reproduces the scalar rounding:
// re = ar*br - ai*bi, im = ar*bi + ai*br.
inline __m256d cmul_row_acc(__m256d acc, double ar, double ai, __m256d brow) {
  const __m256d var = _mm256_set1_pd(ar);
  const __m256d vai = _mm256_set1_pd(ai);
  const __m256d bswap = _mm256_permute_pd(brow, 0x5);
  return _mm256_add_pd(
      acc, _mm256_addsub_pd(_mm256_mul_pd(var, brow), _mm256_mul_pd(vai, bswap)));
}

void cmm2_v(double coeff, const cplx* A, const cplx* B, cplx* C,
            std::size_t nsites, bool accumulate) {
  const __m256d vcoeff = _mm256_set1_pd(coeff);
  for (std::size_t s = 0; s < nsites; ++s) {
    const double* a = reinterpret_cast<const double*>(A + s * 4);
    const double* b = reinterpret_cast<const double*>(B + s * 4);
    double* c = reinterpret_cast<double*>(C + s * 4);
    const __m256d brow0 = _mm256_loadu_pd(b);
    const __m256d brow1 = _mm256_loadu_pd(b + 4);
    for (int i = 0; i < 2; ++i) {
      __m256d acc = _mm256_setzero_pd();
      acc = cmul_row_acc(acc, a[4 * i], a[4 * i + 1], brow0);
      acc = cmul_row_acc(acc, a[4 * i + 2], a[4 * i + 3], brow1);
      const __m256d scaled = _mm256_mul_pd(vcoeff, acc);
      double* crow = c + 4 * i;
      if (accumulate)
        _mm256_storeu_pd(crow, _mm256_add_pd(_mm256_loadu_pd(crow), scaled));
      else
        _mm256_storeu_pd(crow, scaled);
    }
  }
}

void cmm_v(int k, double coeff, const cplx* A, const cplx* B, cplx* C,
           std::size_t nsites, bool accumulate) {
  if (k == 2)
    cmm2_v(coeff, A, B, C, nsites, accumulate);
  else
    detail::scalar_ops.cmm(k, coeff, A, B, C, nsites, accumulate);
}

void retrace_mul2_v(const cplx* A, const cplx* B, double* t, std::size_t nsites) {
  for (std::size_t s = 0; s < nsites; ++s) {
    const double* a = reinterpret_cast<const double*>(A + s * 4);
    const double* b = reinterpret_cast<const double*>(B + s * 4);
    const __m256d arow0 = _mm256_loadu_pd(a);
    const __m256d arow1 = _mm256_loadu_pd(a + 4);
    const __m256d brow0 = _mm256_loadu_pd(b);
    const __m256d brow1 = _mm256_loadu_pd(b + 4);
    // Columns of B: [b00, b10] and [b01, b11].
    const __m256d bt0 = _mm256_permute2f128_pd(brow0, brow1, 0x20);
    const __m256d bt1 = _mm256_permute2f128_pd(brow0, brow1, 0x31);
    const __m256d v1 = _mm256_mul_pd(arow0, bt0);
    const __m256d v2 = _mm256_mul_pd(arow1, bt1);
    // h = [t00, t10, t01, t11] with t_ij = Re(A[i][j]*B[j][i]).
    const __m256d h = _mm256_hsub_pd(v1, v2);
    double lane[4];
    _mm256_storeu_pd(lane, h);
    t[s] = (lane[0] + lane[2]) + (lane[1] + lane[3]);
  }
}

void retrace_mul_v(int k, const cplx* A, const cplx* B, double* t,
                   std::size_t nsites) {
  if (k == 2)
    retrace_mul2_v(A, B, t, nsites);
  else
    detail::scalar_ops.retrace_mul(k, A, B, t, nsites);
}

}  // namespace

namespace detail {
const Ops avx2_ops = {axpby_v,      axpy_v,       scale_v,
                      block_sum_v,  block_sum2_v, block_dot_v,
                      cmm_v,        retrace_mul_v};
}  // namespace detail

}  // namespace cwf::kern

#else  // non-x86: AVX2 table aliases the scalar reference

namespace cwf::kern::detail {
const Ops avx2_ops = scalar_ops;
}  // namespace cwf::kern::detail

#endif
