#include "cwf/kernels.hpp"

#include <atomic>

namespace cwf::kern {
namespace {

bool detect_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

enum class Mode : int { autodetect, scalar, avx2 };
std::atomic<Mode> g_mode{Mode::autodetect};

const detail::Ops& ops() {
  switch (g_mode.load(std::memory_order_relaxed)) {
    case Mode::scalar:
      return detail::scalar_ops;
    case Mode::avx2:
      return cpu_has_avx2() ? detail::avx2_ops : detail::scalar_ops;
    default:
      return cpu_has_avx2() ? detail::avx2_ops : detail::scalar_ops;
  }
}

}  // namespace

bool cpu_has_avx2() {
  static const bool has = detect_avx2();
  return has;
}

Isa active_isa() {
  return &ops() == &detail::avx2_ops ? Isa::avx2 : Isa::scalar;
}

void force_isa(Isa isa) {
  g_mode.store(isa == Isa::avx2 ? Mode::avx2 : Mode::scalar,
               std::memory_order_relaxed);
}

void reset_isa() { g_mode.store(Mode::autodetect, std::memory_order_relaxed); }

void axpby(double a, const double* x, double b, double* y, std::size_t n) {
  ops().axpby(a, x, b, y, n);
}
void axpy(double a, const double* x, double* y, std::size_t n) {
  ops().axpy(a, x, y, n);
}
void scale(double a, const double* x, double* y, std::size_t n) {
  ops().scale(a, x, y, n);
}
double block_sum(const double* x, std::size_t n) { return ops().block_sum(x, n); }
void block_sum2(const double* x, std::size_t n, double out[2]) {
  ops().block_sum2(x, n, out);
}
double block_dot(const double* x, const double* y, std::size_t n) {
  return ops().block_dot(x, y, n);
}
void cmm(int k, double coeff, const cplx* A, const cplx* B, cplx* C,
         std::size_t nsites, bool accumulate) {
  ops().cmm(k, coeff, A, B, C, nsites, accumulate);
}
void retrace_mul(int k, const cplx* A, const cplx* B, double* t,
                 std::size_t nsites) {
  ops().retrace_mul(k, A, B, t, nsites);
}

}  // namespace cwf::kern
