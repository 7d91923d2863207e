#include "cwf/lie_core.hpp"

#include <cmath>
#include <stdexcept>

namespace cwf {

namespace {

void require_same(const Algebra& a, const Algebra& b) {
  if (!(a == b)) throw std::invalid_argument("algebra mismatch");
}

void mat_mul(int k, const cplx* a, const cplx* b, cplx* c) {
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      cplx s = 0;
      for (int l = 0; l < k; ++l) s += a[i * k + l] * b[l * k + j];
      c[i * k + j] = s;
    }
}

double frob(int k, const cplx* a) {
  double s = 0;
  for (int i = 0; i < k * k; ++i) s += std::norm(a[i]);
  return std::sqrt(s);
}

// sin(r)/r, stable near r = 0
double sinc(double r) {
  if (r < 1e-4) {
    double r2 = r * r;
    return 1.0 - r2 / 6.0 + r2 * r2 / 120.0;
  }
  return std::sin(r) / r;
}

// exp by scaling-and-squaring with a degree-16 truncated series
void exp_series(int k, const cplx* x, cplx* out) {
  double nrm = frob(k, x);
  int s = 0;
  double scaled = nrm;
  while (scaled > 0.25) {
    scaled *= 0.5;
    ++s;
  }
  double factor = std::ldexp(1.0, -s);
  cplx y[16], term[16], acc[16], tmp[16];
  for (int i = 0; i < k * k; ++i) {
    y[i] = factor * x[i];
    acc[i] = 0;
    term[i] = 0;
  }
  for (int i = 0; i < k; ++i) {
    acc[i * k + i] = 1.0;
    term[i * k + i] = 1.0;
  }
  for (int j = 1; j <= 16; ++j) {
    mat_mul(k, term, y, tmp);
    double inv = 1.0 / static_cast<double>(j);
    for (int i = 0; i < k * k; ++i) {
      term[i] = inv * tmp[i];
      acc[i] += term[i];
    }
  }
  for (int j = 0; j < s; ++j) {
    mat_mul(k, acc, acc, tmp);
    for (int i = 0; i < k * k; ++i) acc[i] = tmp[i];
  }
  for (int i = 0; i < k * k; ++i) out[i] = acc[i];
}

}  // namespace

SmallMat operator*(const SmallMat& a, const SmallMat& b) {
  SmallMat r(a.k_);
  mat_mul(a.k_, a.v_.data(), b.v_.data(), r.v_.data());
  return r;
}

double SmallMat::norm() const { return frob(k_, v_.data()); }

void bracket_point(int k, const cplx* x, const cplx* y, cplx* out) {
  cplx xy[16], yx[16];
  mat_mul(k, x, y, xy);
  mat_mul(k, y, x, yx);
  for (int i = 0; i < k * k; ++i) out[i] = xy[i] - yx[i];
}

AlgElem bracket(const AlgElem& x, const AlgElem& y) {
  require_same(x.alg, y.alg);
  AlgElem r{x.alg, SmallMat(x.m.k())};
  bracket_point(x.m.k(), x.m.data(), y.m.data(), r.m.data());
  return r;
}

void exp_point(const Algebra& alg, const cplx* x, cplx* out) {
  if (alg.tag == AlgebraTag::u1) {
    out[0] = std::exp(x[0]);
    return;
  }
  if (alg.tag == AlgebraTag::su2 &&
      std::abs(x[0] + x[3]) <= 1e-14 * (1.0 + frob(2, x))) {
    // traceless 2x2: X^2 = -det(X) I, det(X) = r^2 >= 0 for anti-Hermitian X
    cplx det = x[0] * x[3] - x[1] * x[2];
    double r2 = det.real();
    if (r2 >= 0.0) {
      double r = std::sqrt(r2);
      double c = std::cos(r), sc = sinc(r);
      out[0] = c + sc * x[0];
      out[1] = sc * x[1];
      out[2] = sc * x[2];
      out[3] = c + sc * x[3];
      return;
    }
  }
  exp_series(alg.k, x, out);
}

GrpElem group_exp(const AlgElem& x) {
  GrpElem g{x.alg, SmallMat(x.m.k())};
  exp_point(x.alg, x.m.data(), g.m.data());
  return g;
}

AlgElem adjoint(const GrpElem& g, const AlgElem& x) {
  require_same(g.alg, x.alg);
  AlgElem r{x.alg, g.m * x.m * g.m.dagger()};
  return r;
}

double trace_pairing(const AlgElem& x, const AlgElem& y) {
  require_same(x.alg, y.alg);
  return (x.m * y.m).trace().real();
}

std::vector<SmallMat> algebra_basis(const Algebra& alg) {
  const cplx i1(0.0, 1.0);
  std::vector<SmallMat> basis;
  switch (alg.tag) {
    case AlgebraTag::u1: {
      SmallMat m(1);
      m.at(0, 0) = i1;
      basis.push_back(m);
      break;
    }
    case AlgebraTag::su2: {
      // e_a = -(i/2) sigma_a
      SmallMat e1(2), e2(2), e3(2);
      e1.at(0, 1) = -0.5 * i1;
      e1.at(1, 0) = -0.5 * i1;
      e2.at(0, 1) = -0.5;
      e2.at(1, 0) = 0.5;
      e3.at(0, 0) = -0.5 * i1;
      e3.at(1, 1) = 0.5 * i1;
      basis.push_back(e1);
      basis.push_back(e2);
      basis.push_back(e3);
      break;
    }
    default: {
      int k = alg.k;
      for (int a = 0; a < k; ++a) {
        SmallMat m(k);
        m.at(a, a) = i1;
        basis.push_back(m);
      }
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
          SmallMat re(k), im(k);
          re.at(a, b) = 1.0;
          re.at(b, a) = -1.0;
          im.at(a, b) = i1;
          im.at(b, a) = i1;
          basis.push_back(re);
          basis.push_back(im);
        }
      break;
    }
  }
  return basis;
}

double anti_hermitian_residual(const SmallMat& m) {
  double r = 0;
  for (int i = 0; i < m.k(); ++i)
    for (int j = 0; j < m.k(); ++j)
      r = std::max(r, std::abs(m.at(i, j) + std::conj(m.at(j, i))));
  return r;
}

double unitarity_residual(const SmallMat& m) {
  SmallMat p = m * m.dagger();
  double r = 0;
  for (int i = 0; i < m.k(); ++i)
    for (int j = 0; j < m.k(); ++j) {
      cplx want = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
      r = std::max(r, std::abs(p.at(i, j) - want));
    }
  return r;
}

}  // namespace cwf
