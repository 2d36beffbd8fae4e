#include "btz/kernels.hpp"

#if BTZ_X86

#include <immintrin.h>

#include <algorithm>
#include <bit>

namespace btz::kernels {
namespace {

__attribute__((target("avx2"))) inline __m256i count_le8(const __m256i* cols, int r, __m256i t,
                                                         __m256i dvec) {
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i zero = _mm256_setzero_si256();
  __m256i acc = zero;
  for (int i = 0; i < r; ++i) {
    __m256i x = _mm256_add_epi32(_mm256_sub_epi32(t, cols[i]), one);
    x = _mm256_min_epi32(_mm256_max_epi32(x, zero), dvec);
    acc = _mm256_add_epi32(acc, x);
  }
  return acc;
}

}  // namespace

__attribute__((target("avx2"))) void member_batch_avx2(const std::int32_t* coords, std::size_t count,
                                                       int r, int d, int k, std::uint8_t* out) {
  constexpr std::size_t kLanes = 8;
  const std::size_t full = count - count % kLanes;
  const __m256i dvec = _mm256_set1_epi32(d);
  const __m256i km1 = _mm256_set1_epi32(k - 1);
  const __m256i kvec = _mm256_set1_epi32(k);
  const __m256i one = _mm256_set1_epi32(1);

  alignas(32) std::int32_t lane[kLanes];
  __m256i cols[kMaxPackedRank];

  for (std::size_t base = 0; base < full; base += kLanes) {
    for (int i = 0; i < r; ++i) {
      for (std::size_t l = 0; l < kLanes; ++l) lane[l] = coords[(base + l) * static_cast<std::size_t>(r) + i];
      cols[i] = _mm256_load_si256(reinterpret_cast<const __m256i*>(lane));
    }
    __m256i lo = cols[0], hi = cols[0];
    for (int i = 1; i < r; ++i) {
      lo = _mm256_min_epi32(lo, cols[i]);
      hi = _mm256_max_epi32(hi, cols[i]);
    }
    hi = _mm256_add_epi32(hi, _mm256_set1_epi32(d - 1));

    _mm256_store_si256(reinterpret_cast<__m256i*>(lane), _mm256_sub_epi32(hi, lo));
    const std::uint32_t widest = static_cast<std::uint32_t>(*std::max_element(lane, lane + kLanes));
    const int iters = std::bit_width(widest);

    for (int it = 0; it < iters; ++it) {
      const __m256i mid = _mm256_add_epi32(lo, _mm256_srli_epi32(_mm256_sub_epi32(hi, lo), 1));
      const __m256i ge = _mm256_cmpgt_epi32(count_le8(cols, r, mid, dvec), km1);
      hi = _mm256_blendv_epi8(hi, mid, ge);
      lo = _mm256_blendv_epi8(_mm256_add_epi32(mid, one), lo, ge);
    }
    const __m256i hit = _mm256_cmpgt_epi32(count_le8(cols, r, lo, dvec), kvec);
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(hit));
    for (std::size_t l = 0; l < kLanes; ++l) out[base + l] = static_cast<std::uint8_t>((mask >> l) & 1);
  }
  if (full < count)
    member_batch_scalar(coords + full * static_cast<std::size_t>(r), count - full, r, d, k, out + full);
}

}  // namespace btz::kernels

#endif
