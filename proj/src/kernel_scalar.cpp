#include "mixedmult/kernel.hpp"

namespace mm::kernel {

namespace {

bool divides_any_scalar(const std::uint16_t* cols, std::size_t padded,
                        int nvars, std::size_t ngens,
                        const std::uint16_t* cand) {
  for (std::size_t g = 0; g < ngens; ++g) {
    bool ok = true;
    for (int v = 0; v < nvars; ++v) {
      if (cols[static_cast<std::size_t>(v) * padded + g] > cand[v]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::uint64_t pair_slice_scalar(const std::uint16_t* lo, const std::uint16_t* hi,
                                std::size_t count, std::uint32_t rem) {
  // union of the intervals [lo[i], rem - hi[i]] inside [0, rem]
  std::vector<std::uint8_t> mark(rem + 1, 0);
  for (std::size_t i = 0; i < count; ++i) {
    if (hi[i] > rem) continue;
    std::uint32_t a = lo[i];
    std::uint32_t b = rem - hi[i];
    for (std::uint32_t j = a; j <= b && j <= rem; ++j) mark[j] = 1;
    if (a == 0 && b >= rem) return rem + 1;  // whole range covered
  }
  std::uint64_t total = 0;
  for (std::uint8_t m : mark) total += m;
  return total;
}

}  // namespace

const Variant& scalar_variant() {
  static const Variant v{"scalar", &divides_any_scalar, &pair_slice_scalar};
  return v;
}

}  // namespace mm::kernel
