#pragma once

// Dense double-precision vector kernels used by every inner loop in the
// library (SGD updates, Jacobi sweeps, GEMM rows, Hadamard features).
//
// Each kernel has a scalar reference implementation and, on x86-64, an
// AVX2/FMA variant. The variant is picked once at startup from CPUID; the
// DYNEMB_SIMD environment variable ("scalar" or "avx2") overrides it.

#include <cstddef>
#include <span>
#include <string_view>

namespace dynemb::simd {

enum class Backend { Scalar, Avx2 };

struct KernelTable {
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // x *= alpha
  void (*scale)(double alpha, double* x, std::size_t n);
  // out = a .* b
  void (*hadamard)(const double* a, const double* b, double* out, std::size_t n);
  // ||a - b||^2
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
  // y = alpha * x + beta * y
  void (*axpby)(double alpha, const double* x, double beta, double* y, std::size_t n);
};

const KernelTable& scalar_kernels();
#if defined(DYNEMB_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif

bool backend_supported(Backend b);

// Active backend. Defaults to the best supported one.
Backend active_backend();
void set_backend(Backend b);
std::string_view backend_name(Backend b);

const KernelTable& active();

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), y.size());
}
inline void scale(double alpha, std::span<double> x) {
  active().scale(alpha, x.data(), x.size());
}
inline void hadamard(std::span<const double> a, std::span<const double> b,
                     std::span<double> out) {
  active().hadamard(a.data(), b.data(), out.data(), out.size());
}
inline double squared_distance(std::span<const double> a, std::span<const double> b) {
  return active().squared_distance(a.data(), b.data(), a.size());
}
inline void axpby(double alpha, std::span<const double> x, double beta,
                  std::span<double> y) {
  active().axpby(alpha, x.data(), beta, y.data(), y.size());
}

// RAII override of the active backend, restores the previous one on exit.
class ScopedBackend {
 public:
  explicit ScopedBackend(Backend b) : prev_(active_backend()) { set_backend(b); }
  ~ScopedBackend() { set_backend(prev_); }
  ScopedBackend(const ScopedBackend&) = delete;
  ScopedBackend& operator=(const ScopedBackend&) = delete;

 private:
  Backend prev_;
};

}  // namespace dynemb::simd
