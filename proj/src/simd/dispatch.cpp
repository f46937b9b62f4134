#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "dynemb/simd/kernels.hpp"

namespace dynemb::simd {
namespace {

bool cpu_has_avx2() {
#if defined(DYNEMB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend initial_backend() {
  Backend best = cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
  if (const char* env = std::getenv("DYNEMB_SIMD")) {
    const std::string v(env);
    if (v == "scalar") return Backend::Scalar;
    if (v == "avx2" && best == Backend::Avx2) return Backend::Avx2;
  }
  return best;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{initial_backend()};
  return b;
}

}  // namespace

bool backend_supported(Backend b) {
  return b == Backend::Scalar || cpu_has_avx2();
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_supported(b)) {
    throw std::invalid_argument("SIMD backend not supported on this CPU: " +
                                std::string(backend_name(b)));
  }
  current().store(b, std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

const KernelTable& active() {
#if defined(DYNEMB_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) return avx2_kernels();
#endif
  return scalar_kernels();
}

}  // namespace dynemb::simd
