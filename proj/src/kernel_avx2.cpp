#include "mixedmult/kernel.hpp"

#include <immintrin.h>

namespace mm::kernel {

namespace {

// lane-wise a <= b for unsigned 16-bit lanes
inline __m256i le_epu16(__m256i a, __m256i b) {
  return _mm256_cmpeq_epi16(_mm256_max_epu16(a, b), b);
}

bool divides_any_avx2(const std::uint16_t* cols, std::size_t padded,
                      int nvars, std::size_t ngens,
                      const std::uint16_t* cand) {
  (void)ngens;  // padding lanes carry 0xFFFF and can never divide
  for (std::size_t g = 0; g < padded; g += 16) {
    __m256i acc = _mm256_set1_epi16(-1);
    for (int v = 0; v < nvars; ++v) {
      const __m256i gen = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(
          cols + static_cast<std::size_t>(v) * padded + g));
      acc = _mm256_and_si256(acc, le_epu16(gen, _mm256_set1_epi16(static_cast<short>(cand[v]))));
      if (_mm256_testz_si256(acc, acc)) break;
    }
    if (!_mm256_testz_si256(acc, acc)) return true;
  }
  return false;
}

std::uint64_t pair_slice_avx2(const std::uint16_t* lo, const std::uint16_t* hi,
                              std::size_t count, std::uint32_t rem) {
  const std::size_t chunks = (rem + 16) / 16;
  std::vector<std::uint16_t> covered(chunks * 16, 0);

  const std::uint16_t lanes_init[16] = {0, 1, 2,  3,  4,  5,  6,  7,
                                        8, 9, 10, 11, 12, 13, 14, 15};
  __m256i base = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lanes_init));
  const __m256i step = _mm256_set1_epi16(16);

  for (std::size_t i = 0; i < count; ++i) {
    if (hi[i] > rem) continue;
    const std::uint32_t b = rem - hi[i];
    if (lo[i] > b) continue;
    const __m256i vlo = _mm256_set1_epi16(static_cast<short>(lo[i]));
    const __m256i vhi = _mm256_set1_epi16(static_cast<short>(b));
    __m256i j = base;
    for (std::size_t c = 0; c < chunks; ++c) {
      auto* slot = reinterpret_cast<__m256i*>(covered.data() + 16 * c);
      const __m256i in = _mm256_and_si256(le_epu16(vlo, j), le_epu16(j, vhi));
      _mm256_storeu_si256(slot, _mm256_or_si256(_mm256_loadu_si256(slot), in));
      j = _mm256_add_epi16(j, step);
    }
  }

  // lanes beyond rem were never marked: the hi bound excludes them
  std::uint64_t total = 0;
  for (std::uint16_t m : covered) total += m & 1;
  return total;
}

}  // namespace

const Variant* avx2_variant_impl() {
  __builtin_cpu_init();
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  static const Variant v{"avx2", &divides_any_avx2, &pair_slice_avx2};
  return &v;
}

}  // namespace mm::kernel
