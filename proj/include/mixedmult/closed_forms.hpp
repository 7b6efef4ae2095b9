#ifndef MIXEDMULT_CLOSED_FORMS_HPP
#define MIXEDMULT_CLOSED_FORMS_HPP

#include <vector>

#include "mixedmult/numeric.hpp"

namespace mm::closed_forms {

// Blowup multiplicity for an ideal generated by a homogeneous d-sequence,
// split by the dimension drop of the first colon ideal.
BigInt htu_rees(const std::vector<BigInt>& e_quotients, int dim_ambient,
                int dim_first_quotient, const BigInt& e_ambient);

// Predicted e_i(m|I) for a d-sequence: e(A/I_{i+1}) below the cutoff, then 0.
std::vector<BigInt> hoang_mixed(const std::vector<BigInt>& e_quotients, int s,
                                int length);

// Blowup multiplicities for a filter-regular subsystem of parameters of
// non-decreasing degrees a_1 <= ... <= a_n.
BigInt filter_regular_rees(const std::vector<unsigned>& degrees,
                           const BigInt& e_ambient);
BigInt filter_regular_extended(const std::vector<unsigned>& degrees,
                               const BigInt& e_ambient);

// Signed blowup mixed multiplicities e_i(A[It]) for a homogeneous regular
// sequence of degrees d_1 <= ... <= d_r in an n-variable polynomial ring.
std::vector<BigInt> regular_sequence_rees_mixed(const std::vector<unsigned>& degrees,
                                                const BigInt& e_ambient,
                                                int nvars);

// Same for the maximal minors of a generic (r-1) x r matrix.
std::vector<BigInt> minors_mixed(int r);

// Right-hand side of the extended Rees multiplicity formula.
BigRat katz_verma_rhs(const BigInt& e_front, const std::vector<BigInt>& e_list,
                      unsigned d);

// Signed mixed multiplicities of the free bigraded algebra with m variables
// of degree (1,0) and n variables of degrees (d_j, 1).
std::vector<BigInt> bigraded_free_mixed(int m, int n,
                                        const std::vector<unsigned>& ds);

}  // namespace mm::closed_forms

#endif
