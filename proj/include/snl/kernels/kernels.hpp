#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace snl::kernels {

using Complex = std::complex<double>;

enum class Isa { Scalar, Avx2 };

/// Dense complex vector primitives used by the constraint assembler and the
/// solver diagnostics. Every variant computes the same quantities; only the
/// summation order of the reductions may differ.
struct Table {
  Isa isa;
  /// y += alpha * x
  void (*caxpy)(std::size_t n, Complex alpha, const Complex* x, Complex* y);
  /// sum_k conj(x_k) y_k
  Complex (*cdotc)(std::size_t n, const Complex* x, const Complex* y);
  /// sum_k |x_k|^2
  double (*cnrm2sq)(std::size_t n, const Complex* x);
};

const Table& scalar_table();
/// Null when the build does not include the variant.
const Table* avx2_table();

bool cpu_supports(Isa isa);

/// Best variant for this CPU, unless SNL_KERNELS=scalar forces the reference.
const Table& active();

std::string_view isa_name(Isa isa);

}  // namespace snl::kernels
