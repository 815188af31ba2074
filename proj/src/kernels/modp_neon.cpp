#include <arm_neon.h>

#include "vfc/kernels/modp.hpp"

namespace vfc::kernels::detail {

namespace {

inline uint32x4_t mulmod_shoup(uint32x4_t x, uint32_t c, uint32_t c_shoup, uint32x4_t p) {
  const uint64x2_t lo = vmull_n_u32(vget_low_u32(x), c_shoup);
  const uint64x2_t hi = vmull_n_u32(vget_high_u32(x), c_shoup);
  const uint32x4_t q = vcombine_u32(vshrn_n_u64(lo, 32), vshrn_n_u64(hi, 32));
  uint32x4_t r = vsubq_u32(vmulq_n_u32(x, c), vmulq_u32(q, p));
  return vminq_u32(r, vsubq_u32(r, p));
}

void axpy_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n) {
  const std::uint32_t cs = shoup_precompute(c, p);
  const uint32x4_t vp = vdupq_n_u32(p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t s = vaddq_u32(vld1q_u32(dst + i), mulmod_shoup(vld1q_u32(src + i), c, cs, vp));
    vst1q_u32(dst + i, vminq_u32(s, vsubq_u32(s, vp)));
  }
  for (; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((std::uint64_t{dst[i]} + std::uint64_t{c} * src[i]) % p);
}

void scale_neon(std::uint32_t* row, std::uint32_t c, std::uint32_t p, std::size_t n) {
  const std::uint32_t cs = shoup_precompute(c, p);
  const uint32x4_t vp = vdupq_n_u32(p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) vst1q_u32(row + i, mulmod_shoup(vld1q_u32(row + i), c, cs, vp));
  for (; i < n; ++i) row[i] = static_cast<std::uint32_t>(std::uint64_t{c} * row[i] % p);
}

}  // namespace

const ModpKernels neon_kernels{axpy_neon, scale_neon};

}  // namespace vfc::kernels::detail
