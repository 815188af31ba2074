#include "vfc/kernels/modp.hpp"

namespace vfc::kernels::detail {

namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((std::uint64_t{dst[i]} + std::uint64_t{c} * src[i]) % p);
}

void scale_scalar(std::uint32_t* row, std::uint32_t c, std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<std::uint32_t>(std::uint64_t{c} * row[i] % p);
}

}  // namespace

const ModpKernels scalar_kernels{axpy_scalar, scale_scalar};

}  // namespace vfc::kernels::detail
