#include <immintrin.h>

#include "vfc/kernels/modp.hpp"

namespace vfc::kernels::detail {

namespace {

// Shoup multiplication in 8 lanes: for x < p < 2^31,
//   q = (x * c') >> 32, r = c*x - q*p (mod 2^32) lies in [0, 2p).
inline __m256i mulmod_shoup(__m256i x, __m256i c, __m256i c_shoup, __m256i p) {
  const __m256i prod_even = _mm256_mul_epu32(x, c_shoup);
  const __m256i prod_odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), c_shoup);
  const __m256i q = _mm256_blend_epi32(_mm256_srli_epi64(prod_even, 32), prod_odd, 0xAA);
  __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, c), _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n) {
  const std::uint32_t cs = shoup_precompute(c, p);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vcs = _mm256_set1_epi32(static_cast<int>(cs));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_add_epi32(d, mulmod_shoup(x, vc, vcs, vp));
    s = _mm256_min_epu32(s, _mm256_sub_epi32(s, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), s);
  }
  for (; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((std::uint64_t{dst[i]} + std::uint64_t{c} * src[i]) % p);
}

void scale_avx2(std::uint32_t* row, std::uint32_t c, std::uint32_t p, std::size_t n) {
  const std::uint32_t cs = shoup_precompute(c, p);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vcs = _mm256_set1_epi32(static_cast<int>(cs));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), mulmod_shoup(x, vc, vcs, vp));
  }
  for (; i < n; ++i) row[i] = static_cast<std::uint32_t>(std::uint64_t{c} * row[i] % p);
}

}  // namespace

const ModpKernels avx2_kernels{axpy_avx2, scale_avx2};

}  // namespace vfc::kernels::detail
