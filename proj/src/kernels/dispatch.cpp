#include <atomic>
#include <cstdlib>
#include <string>

#include "vfc/error.hpp"
#include "vfc/kernels/modp.hpp"

namespace vfc::kernels {

std::string_view name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool available(Backend b) {
  switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(VFC_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(VFC_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const ModpKernels& kernels_for(Backend b) {
  if (!available(b))
    throw Error(ErrorCode::InvalidArgument, "kernel backend '" + std::string(name(b)) + "' is not available");
  switch (b) {
#if defined(VFC_HAVE_AVX2)
    case Backend::Avx2: return detail::avx2_kernels;
#endif
#if defined(VFC_HAVE_NEON)
    case Backend::Neon: return detail::neon_kernels;
#endif
    default: return detail::scalar_kernels;
  }
}

namespace {

Backend initial_backend() {
  if (const char* env = std::getenv("VFC_KERNELS")) {
    std::string v(env);
    if (v == "scalar") return Backend::Scalar;
    if (v == "avx2" && available(Backend::Avx2)) return Backend::Avx2;
    if (v == "neon" && available(Backend::Neon)) return Backend::Neon;
  }
  if (available(Backend::Avx2)) return Backend::Avx2;
  if (available(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{initial_backend()};
  return b;
}

}  // namespace

Backend active_backend() { return current().load(std::memory_order_relaxed); }

const ModpKernels& active() { return kernels_for(active_backend()); }

void force_backend(Backend b) {
  kernels_for(b);
  current().store(b, std::memory_order_relaxed);
}

}  // namespace vfc::kernels
