#include "sedalg/kernel.hpp"

#include <atomic>
#include <stdexcept>

namespace sedalg::kernel {

namespace scalar {
void parity_batch(Mask a, const Mask* b, std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(reorder_parity(a, b[i]));
}
}  // namespace scalar

namespace {

using BatchFn = void (*)(Mask, const Mask*, std::uint8_t*, std::size_t);

BatchFn fn_for(Impl impl) {
  switch (impl) {
#if defined(__x86_64__) || defined(__i386__)
    case Impl::Avx2: return avx2::parity_batch;
#endif
#if defined(__aarch64__)
    case Impl::Neon: return neon::parity_batch;
#endif
    default: return scalar::parity_batch;
  }
}

std::atomic<int> g_impl{-1};

}  // namespace

bool supported(Impl impl) {
  switch (impl) {
    case Impl::Scalar: return true;
    case Impl::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Impl::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Impl detect() {
  if (supported(Impl::Avx2)) return Impl::Avx2;
  if (supported(Impl::Neon)) return Impl::Neon;
  return Impl::Scalar;
}

std::string_view name(Impl impl) {
  switch (impl) {
    case Impl::Scalar: return "scalar";
    case Impl::Avx2: return "avx2";
    case Impl::Neon: return "neon";
  }
  return "?";
}

Impl active() {
  int v = g_impl.load(std::memory_order_relaxed);
  if (v < 0) {
    v = static_cast<int>(detect());
    g_impl.store(v, std::memory_order_relaxed);
  }
  return static_cast<Impl>(v);
}

void force(Impl impl) {
  if (!supported(impl)) throw std::runtime_error("kernel variant not supported on this CPU");
  g_impl.store(static_cast<int>(impl), std::memory_order_relaxed);
}

void parity_batch(Mask a, const Mask* b, std::uint8_t* out, std::size_t n) {
  fn_for(active())(a, b, out, n);
}

}  // namespace sedalg::kernel
