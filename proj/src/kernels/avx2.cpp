// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include "snl/kernels/kernels.hpp"

namespace snl::kernels {

namespace {

// Two complex doubles per register: [re0, im0, re1, im1].

void caxpy(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * k);
    __m256d xs = _mm256_permute_pd(xv, 0b0101);
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs));
    __m256d yv = _mm256_loadu_pd(yd + 2 * k);
    _mm256_storeu_pd(yd + 2 * k, _mm256_add_pd(yv, prod));
  }
  for (; k < n; ++k) y[k] += alpha * x[k];
}

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

Complex cdotc(std::size_t n, const Complex* x, const Complex* y) {
  auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<const double*>(y);
  __m256d same = _mm256_setzero_pd();   // [xr*yr, xi*yi, ...]
  __m256d cross = _mm256_setzero_pd();  // [xr*yi, xi*yr, ...]
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * k);
    __m256d yv = _mm256_loadu_pd(yd + 2 * k);
    same = _mm256_fmadd_pd(xv, yv, same);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
  }
  double re = hsum(same);
  alignas(32) double c[4];
  _mm256_store_pd(c, cross);
  double im = (c[0] - c[1]) + (c[2] - c[3]);
  for (; k < n; ++k) {
    re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
    im += x[k].real() * y[k].imag() - x[k].imag() * y[k].real();
  }
  return {re, im};
}

double cnrm2sq(std::size_t n, const Complex* x) {
  auto* xd = reinterpret_cast<const double*>(x);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d a = _mm256_loadu_pd(xd + 2 * k);
    __m256d b = _mm256_loadu_pd(xd + 2 * k + 4);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  double out = hsum(_mm256_add_pd(acc0, acc1));
  for (; k < n; ++k) out += std::norm(x[k]);
  return out;
}

const Table kAvx2{Isa::Avx2, caxpy, cdotc, cnrm2sq};

}  // namespace

const Table* avx2_table() { return &kAvx2; }

}  // namespace snl::kernels
