#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mixedmult/kernel.hpp"

using namespace mm;
using namespace mm::kernel;

namespace {

std::mt19937_64 rng(2024);

MonomialIdeal rand_ideal(int n, unsigned maxdeg, int gens) {
  std::vector<ExponentVector> g;
  for (int i = 0; i < gens; ++i) {
    ExponentVector m(static_cast<std::size_t>(n));
    unsigned deg = 1 + static_cast<unsigned>(rng() % maxdeg);
    for (unsigned k = 0; k < deg; ++k) m[static_cast<std::size_t>(rng() % n)] += 1;
    g.push_back(std::move(m));
  }
  return MonomialIdeal::from_generators(RingContext::standard(n), std::move(g));
}

}  // namespace

TEST_CASE("pair_slice variants agree") {
  const Variant& scalar = scalar_variant();
  const Variant* avx2 = avx2_variant();
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = rng() % 12;
    const std::uint32_t rem = static_cast<std::uint32_t>(rng() % 300);
    std::vector<std::uint16_t> lo(k), hi(k);
    for (std::size_t i = 0; i < k; ++i) {
      lo[i] = static_cast<std::uint16_t>(rng() % (rem + 4));
      hi[i] = static_cast<std::uint16_t>(rng() % (rem + 4));
    }
    // brute force oracle
    std::uint64_t brute = 0;
    for (std::uint32_t j = 0; j <= rem; ++j) {
      bool in = false;
      for (std::size_t i = 0; i < k; ++i)
        in = in || (lo[i] <= j && hi[i] <= rem - j);
      brute += in ? 1 : 0;
    }
    CHECK(scalar.pair_slice(lo.data(), hi.data(), k, rem) == brute);
    if (avx2) CHECK(avx2->pair_slice(lo.data(), hi.data(), k, rem) == brute);
  }
}

TEST_CASE("divides_any variants agree") {
  const Variant& scalar = scalar_variant();
  const Variant* avx2 = avx2_variant();
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    MonomialIdeal I = rand_ideal(n, 5, 1 + static_cast<int>(rng() % 40));
    PackedIdeal P = PackedIdeal::pack(I);
    for (int c = 0; c < 20; ++c) {
      std::vector<std::uint16_t> cand(static_cast<std::size_t>(n));
      ExponentVector m(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        cand[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(rng() % 8);
        m[static_cast<std::size_t>(v)] = cand[static_cast<std::size_t>(v)];
      }
      const bool expect = I.contains(m);
      CHECK(scalar.divides_any(P.cols.data(), P.padded, P.nvars, P.ngens,
                               cand.data()) == expect);
      if (avx2)
        CHECK(avx2->divides_any(P.cols.data(), P.padded, P.nvars, P.ngens,
                                cand.data()) == expect);
    }
  }
}

TEST_CASE("pruned counting matches plain enumeration in both variants") {
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    MonomialIdeal I = rand_ideal(n, 5, 1 + static_cast<int>(rng() % 6));
    // one or two blocks
    std::vector<int> blocks;
    if (n >= 3 && rng() % 2) blocks = {n - 1, 1};
    else blocks = {n};
    std::vector<Exp> degs;
    for (std::size_t b = 0; b < blocks.size(); ++b) degs.push_back(rng() % 12);

    REQUIRE(select_variant("scalar"));
    const std::uint64_t ref_scalar = count_members_reference(I, blocks, degs);
    const std::uint64_t fast_scalar = count_members(I, blocks, degs);
    CHECK(fast_scalar == ref_scalar);
    if (avx2_variant()) {
      REQUIRE(select_variant("avx2"));
      CHECK(count_members_reference(I, blocks, degs) == ref_scalar);
      CHECK(count_members(I, blocks, degs) == ref_scalar);
    }
    REQUIRE(select_variant("auto"));
  }
}

TEST_CASE("free counts") {
  CHECK(count_monomials({2}, {5}) == 6);
  CHECK(count_monomials({2, 2}, {3, 2}) == 12);
  CHECK(count_members_total(unit_ideal(RingContext::standard(3)), 4) ==
        count_monomials({3}, {4}));
  CHECK(count_members_total(zero_ideal(RingContext::standard(3)), 4) == 0);
}

TEST_CASE("kernel names") {
  CHECK(std::string(scalar_variant().name) == "scalar");
  CHECK(select_variant("auto"));
  CHECK_FALSE(select_variant("no-such-kernel"));
}
