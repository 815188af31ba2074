#pragma once

// Row kernels for Gaussian elimination over F_p, p < 2^31.
//
// Entries are residues in [0, p) stored as uint32. Every backend must produce
// bit-identical output to the scalar reference; the AVX2 and NEON variants use
// Shoup's precomputed-quotient multiplication so they stay in 32-bit lanes.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace vfc::kernels {

enum class Backend { Scalar, Avx2, Neon };

struct ModpKernels {
  /// dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n);
  /// row[i] = (c * row[i]) mod p
  void (*scale)(std::uint32_t* row, std::uint32_t c, std::uint32_t p, std::size_t n);
};

std::string_view name(Backend b);

/// Whether the backend was compiled in and the running CPU supports it.
bool available(Backend b);

/// Kernels for a specific backend; throws if unavailable.
const ModpKernels& kernels_for(Backend b);

/// Backend in use. Defaults to the best available one; the environment
/// variable VFC_KERNELS=scalar|avx2|neon overrides at first use.
Backend active_backend();
const ModpKernels& active();

/// Switches the process-wide backend (tests and benchmarks).
void force_backend(Backend b);

/// floor(c * 2^32 / p), the Shoup companion of the multiplier c.
inline std::uint32_t shoup_precompute(std::uint32_t c, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
}

namespace detail {
extern const ModpKernels scalar_kernels;
#if defined(VFC_HAVE_AVX2)
extern const ModpKernels avx2_kernels;
#endif
#if defined(VFC_HAVE_NEON)
extern const ModpKernels neon_kernels;
#endif
}  // namespace detail

}  // namespace vfc::kernels
