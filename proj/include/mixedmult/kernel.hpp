#ifndef MIXEDMULT_KERNEL_HPP
#define MIXEDMULT_KERNEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mixedmult/monomial.hpp"

namespace mm::kernel {

// Lattice-point membership counting is the hot inner loop of every Hilbert
// function in this project.  The two primitives below exist in a scalar
// reference form and an AVX2 form, selected at runtime and equivalence-tested
// against each other.
//
// Generator exponents are packed into u16 lanes; 0xFFFF is the "divides
// nothing" sentinel used both for padding and for exponents beyond the
// enumeration budget.
constexpr std::uint16_t kNeverDivides = 0xFFFF;

struct Variant {
  const char* name;
  // true iff some packed generator divides cand componentwise.
  // cols is column-major: cols[v * padded + g]; cand entries must be < 0xFFFF.
  bool (*divides_any)(const std::uint16_t* cols, std::size_t padded,
                      int nvars, std::size_t ngens, const std::uint16_t* cand);
  // #{ j in [0, rem] : exists i < count with lo[i] <= j and hi[i] <= rem - j }
  std::uint64_t (*pair_slice)(const std::uint16_t* lo, const std::uint16_t* hi,
                              std::size_t count, std::uint32_t rem);
};

const Variant& scalar_variant();
const Variant* avx2_variant();   // nullptr when unavailable (build or CPU)
const Variant& active_variant();
// name: "scalar", "avx2" or "auto"; returns false if the variant is unavailable
bool select_variant(const std::string& name);

struct PackedIdeal {
  int nvars = 0;
  std::size_t ngens = 0;
  std::size_t padded = 0;             // multiple of 16
  std::vector<std::uint16_t> cols;    // cols[v * padded + g]

  static PackedIdeal pack(const MonomialIdeal& I);
};

// Number of monomials with the given exact degree in each variable block
// (blocks are contiguous runs of variables; block_lens sums to nvars).
std::uint64_t count_monomials(const std::vector<int>& block_lens,
                              const std::vector<Exp>& degs);

// Number of such monomials lying in I.  Pruned recursive enumeration; the
// two-variable tail goes through the active pair_slice kernel.
std::uint64_t count_members(const MonomialIdeal& I,
                            const std::vector<int>& block_lens,
                            const std::vector<Exp>& degs);

// Same count by plain odometer enumeration + divides_any, used as the
// equivalence oracle for the pruned path and for the SIMD variants.
std::uint64_t count_members_reference(const MonomialIdeal& I,
                                      const std::vector<int>& block_lens,
                                      const std::vector<Exp>& degs);

// Single N-grading convenience: monomials of total degree t lying in I.
std::uint64_t count_members_total(const MonomialIdeal& I, Exp t);

}  // namespace mm::kernel

#endif
