#include "sedalg/kernel.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace sedalg::kernel::neon {

void parity_batch(Mask a, const Mask* b, std::uint8_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t vb = vld1q_u32(b + i);
    uint32x4_t acc = vdupq_n_u32(0);
    for (Mask s = a >> 1; s; s >>= 1) acc = veorq_u32(acc, vandq_u32(vdupq_n_u32(s), vb));
    acc = veorq_u32(acc, vshrq_n_u32(acc, 16));
    acc = veorq_u32(acc, vshrq_n_u32(acc, 8));
    acc = veorq_u32(acc, vshrq_n_u32(acc, 4));
    acc = veorq_u32(acc, vshrq_n_u32(acc, 2));
    acc = veorq_u32(acc, vshrq_n_u32(acc, 1));
    acc = vandq_u32(acc, vdupq_n_u32(1));
    std::uint32_t lanes[4];
    vst1q_u32(lanes, acc);
    for (int k = 0; k < 4; ++k) out[i + k] = static_cast<std::uint8_t>(lanes[k]);
  }
  for (; i < n; ++i) out[i] = static_cast<std::uint8_t>(reorder_parity(a, b[i]));
}

}  // namespace sedalg::kernel::neon
#endif
