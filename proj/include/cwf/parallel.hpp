#pragma once
// Thread pool with deterministic work decomposition: the block structure of
// every parallel operation and reduction is a fixed function of the problem
// size, never of the thread count, so all results are bitwise reproducible.

#include <complex>
#include <cstddef>
#include <functional>

namespace cwf::par {

using cplx = std::complex<double>;

// Fixed block length (in doubles / sites) for decompositions and reductions.
inline constexpr std::size_t kBlock = 4096;

int thread_count();
void set_thread_count(int n);

// Runs fn(b) for b in [0, nblocks). fn calls must write to disjoint state.
void parallel_for(std::size_t nblocks, const std::function<void(std::size_t)>& fn);

// Splits [0, n) into kBlock-sized chunks and runs fn(lo, hi) on each.
void parallel_for_range(std::size_t n,
                        const std::function<void(std::size_t, std::size_t)>& fn);

// Deterministic reductions: per-block partials (canonical lane order inside
// each block) combined with a sequential pairwise tree in block order.
double det_sum(const double* x, std::size_t n);
cplx det_sum_cplx(const cplx* x, std::size_t n);
double det_dot(const double* x, const double* y, std::size_t n);

// Parallel elementwise wrappers over the dispatched kernels.
void par_axpy(double a, const double* x, double* y, std::size_t n);
void par_axpby(double a, const double* x, double b, double* y, std::size_t n);
void par_scale(double a, const double* x, double* y, std::size_t n);
void par_cmm(int k, double coeff, const cplx* A, const cplx* B, cplx* C,
             std::size_t nsites, bool accumulate);
void par_retrace_mul(int k, const cplx* A, const cplx* B, double* t,
                     std::size_t nsites);

}  // namespace cwf::par
