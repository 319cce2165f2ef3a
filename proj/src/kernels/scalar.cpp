#include "snl/kernels/kernels.hpp"

namespace snl::kernels {

namespace {

void caxpy(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  for (std::size_t k = 0; k < n; ++k) y[k] += alpha * x[k];
}

Complex cdotc(std::size_t n, const Complex* x, const Complex* y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
    im += x[k].real() * y[k].imag() - x[k].imag() * y[k].real();
  }
  return {re, im};
}

double cnrm2sq(std::size_t n, const Complex* x) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += std::norm(x[k]);
  return acc;
}

const Table kScalar{Isa::Scalar, caxpy, cdotc, cnrm2sq};

}  // namespace

const Table& scalar_table() { return kScalar; }

}  // namespace snl::kernels
