#pragma once
// Batched blade reordering parity.
//
// For a fixed left blade a and many right blades b[i], out[i] is 1 when
// reordering the concatenated generator word a·b[i] into ascending order
// takes an odd number of transpositions, 0 otherwise.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace sedalg::kernel {

using Mask = std::uint32_t;

// parity(XOR_k ((a >> k) & b)) for k >= 1; the popcount parity is linear over XOR
inline int reorder_parity(Mask a, Mask b) {
  Mask acc = 0;
  for (Mask s = a >> 1; s; s >>= 1) acc ^= s & b;
  acc ^= acc >> 16;
  acc ^= acc >> 8;
  acc ^= acc >> 4;
  acc ^= acc >> 2;
  acc ^= acc >> 1;
  return static_cast<int>(acc & 1u);
}

namespace scalar {
void parity_batch(Mask a, const Mask* b, std::uint8_t* out, std::size_t n);
}

#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {
void parity_batch(Mask a, const Mask* b, std::uint8_t* out, std::size_t n);
}
#endif

#if defined(__aarch64__)
namespace neon {
void parity_batch(Mask a, const Mask* b, std::uint8_t* out, std::size_t n);
}
#endif

enum class Impl { Scalar, Avx2, Neon };

// Best variant supported by the running CPU.
Impl detect();
bool supported(Impl impl);
std::string_view name(Impl impl);

// Selected once on first use; tests can override.
Impl active();
void force(Impl impl);

void parity_batch(Mask a, const Mask* b, std::uint8_t* out, std::size_t n);

}  // namespace sedalg::kernel
