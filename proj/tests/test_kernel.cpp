#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "sedalg/clifford.hpp"
#include "sedalg/kernel.hpp"

using namespace sedalg;

namespace {

std::vector<kernel::Mask> random_masks(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<kernel::Mask> d(0, 0xFFFF);
  std::vector<kernel::Mask> v(n);
  for (auto& m : v) m = d(rng);
  return v;
}

}  // namespace

TEST_CASE("reorder parity agrees with the blade product sign") {
  for (Mask a : {0u, 1u, 3u, 0x7Fu, 0xFFFFu, 0x1234u})
    for (Mask b : random_masks(200, a + 7)) CHECK((kernel::reorder_parity(a, b) ? -1 : 1) == blade_mul(a, b).sign);
}

TEST_CASE("scalar batch matches the per-element reference") {
  auto bs = random_masks(1001, 1);
  std::vector<std::uint8_t> out(bs.size());
  for (kernel::Mask a : random_masks(20, 2)) {
    kernel::scalar::parity_batch(a, bs.data(), out.data(), bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) REQUIRE(out[i] == kernel::reorder_parity(a, bs[i]));
  }
}

TEST_CASE("every supported variant matches scalar, including ragged tails") {
  for (auto impl : {kernel::Impl::Scalar, kernel::Impl::Avx2, kernel::Impl::Neon}) {
    if (!kernel::supported(impl)) continue;
    CAPTURE(std::string(kernel::name(impl)));
    kernel::force(impl);
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 257u}) {
      auto bs = random_masks(n, n + 3);
      std::vector<std::uint8_t> ref(n), got(n);
      for (kernel::Mask a : random_masks(16, n + 11)) {
        kernel::scalar::parity_batch(a, bs.data(), ref.data(), n);
        kernel::parity_batch(a, bs.data(), got.data(), n);
        REQUIRE(ref == got);
      }
    }
  }
  kernel::force(kernel::detect());
}

TEST_CASE("detection picks a supported variant") {
  CHECK(kernel::supported(kernel::detect()));
  CHECK(kernel::supported(kernel::Impl::Scalar));
}
