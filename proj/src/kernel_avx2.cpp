// Compiled with -mavx2; only reached after a runtime CPU check.
#include "sedalg/kernel.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace sedalg::kernel::avx2 {

void parity_batch(Mask a, const Mask* b, std::uint8_t* out, std::size_t n) {
  std::size_t i = 0;
  const __m256i one = _mm256_set1_epi32(1);
  for (; i + 8 <= n; i += 8) {
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i acc = _mm256_setzero_si256();
    for (Mask s = a >> 1; s; s >>= 1)
      acc = _mm256_xor_si256(acc, _mm256_and_si256(_mm256_set1_epi32(static_cast<int>(s)), vb));
    acc = _mm256_xor_si256(acc, _mm256_srli_epi32(acc, 16));
    acc = _mm256_xor_si256(acc, _mm256_srli_epi32(acc, 8));
    acc = _mm256_xor_si256(acc, _mm256_srli_epi32(acc, 4));
    acc = _mm256_xor_si256(acc, _mm256_srli_epi32(acc, 2));
    acc = _mm256_xor_si256(acc, _mm256_srli_epi32(acc, 1));
    acc = _mm256_and_si256(acc, one);
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (int k = 0; k < 8; ++k) out[i + k] = static_cast<std::uint8_t>(lanes[k]);
  }
  for (; i < n; ++i) out[i] = static_cast<std::uint8_t>(reorder_parity(a, b[i]));
}

}  // namespace sedalg::kernel::avx2
#endif
