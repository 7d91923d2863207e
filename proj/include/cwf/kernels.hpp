#pragma once
// Hot arithmetic kernels: scalar reference implementations plus AVX2
// variants selected at runtime. Both paths perform the same operations in
// the same order, so results are bitwise identical (enforced by tests).

#include <complex>
#include <cstddef>

namespace cwf::kern {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

// ISA actually used by the dispatched kernels.
Isa active_isa();
// Test hook: pin the implementation (requesting avx2 on unsupported
// hardware falls back to scalar).
void force_isa(Isa isa);
void reset_isa();
bool cpu_has_avx2();

// y[i] = a*x[i] + b*y[i]
void axpby(double a, const double* x, double b, double* y, std::size_t n);
// y[i] += a*x[i]
void axpy(double a, const double* x, double* y, std::size_t n);
// y[i] = a*x[i]
void scale(double a, const double* x, double* y, std::size_t n);

// Sum of x[0..n) in the canonical four-lane order: lane l accumulates
// indices congruent to l mod 4, final result is (l0+l1)+(l2+l3).
double block_sum(const double* x, std::size_t n);
// Same lane pattern, returning even-index and odd-index totals separately
// (re/im of an interleaved complex array). n must be even.
void block_sum2(const double* x, std::size_t n, double out[2]);
// Dot product with the same lane pattern.
double block_dot(const double* x, const double* y, std::size_t n);

// Batched per-site k-by-k complex matrix multiply:
//   C_s = coeff * A_s * B_s        (accumulate = false)
//   C_s += coeff * A_s * B_s       (accumulate = true)
// Matrices are stored row-major, nsites consecutive k*k blocks.
void cmm(int k, double coeff, const cplx* A, const cplx* B, cplx* C,
         std::size_t nsites, bool accumulate);

// t[s] = Re tr(A_s * B_s), pair-tree summation over the k*k terms.
void retrace_mul(int k, const cplx* A, const cplx* B, double* t,
                 std::size_t nsites);

namespace detail {
struct Ops {
  void (*axpby)(double, const double*, double, double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scale)(double, const double*, double*, std::size_t);
  double (*block_sum)(const double*, std::size_t);
  void (*block_sum2)(const double*, std::size_t, double*);
  double (*block_dot)(const double*, const double*, std::size_t);
  void (*cmm)(int, double, const cplx*, const cplx*, cplx*, std::size_t, bool);
  void (*retrace_mul)(int, const cplx*, const cplx*, double*, std::size_t);
};
extern const Ops scalar_ops;
extern const Ops avx2_ops;
}  // namespace detail

}  // namespace cwf::kern
