#include <cstdlib>
#include <cstring>

#include "snl/kernels/kernels.hpp"

namespace snl::kernels {

#if !defined(SNL_HAVE_AVX2)
const Table* avx2_table() { return nullptr; }
#endif

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(SNL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const Table& active() {
  static const Table& table = [&]() -> const Table& {
    const char* forced = std::getenv("SNL_KERNELS");
    if (forced && std::strcmp(forced, "scalar") == 0) return scalar_table();
    if (cpu_supports(Isa::Avx2) && avx2_table()) return *avx2_table();
    return scalar_table();
  }();
  return table;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

}  // namespace snl::kernels
