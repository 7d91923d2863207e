#pragma once
// Deterministic field constructors: seeded band-limited random forms (exactly
// reproducible for a given seed and grid shape, independent of thread count)
// and pointwise fills from analytic expressions.

#include <cstdint>
#include <functional>
#include <random>

#include "cwf/torus_forms.hpp"

namespace cwf {

// standard normals from a seeded engine via Box-Muller (fixed algorithm, so
// streams do not depend on library implementation details)
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : rng_(seed) {}
  double next();

 private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// random band-limited Lie-valued degree-p form: independent channels per
// (component, algebra basis direction), each a trig polynomial over modes m
// with sum_i |m_i| <= fmax and N(0, amp^2) coefficients
GridForm rand_lie_form(const TorusGrid& g, const Algebra& alg, int degree,
                       std::uint64_t seed, int fmax = 2, double amp = 1.0);

// pointwise group exponential of a random Lie-algebra-valued 0-form
GridForm rand_group_field(const TorusGrid& g, const Algebra& alg,
                          std::uint64_t seed, int fmax = 2, double amp = 1.0);

// fill entry (bi, bj) of component `comp` from a function of the point
// x in [0,1)^n
void fill_component(GridForm& w, int comp, int bi, int bj,
                    const std::function<cplx(const double*)>& fn);

// pointwise group exponential of a Lie-valued 0-form
GridForm group_exp_field(const GridForm& xi);

}  // namespace cwf
