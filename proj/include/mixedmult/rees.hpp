#ifndef MIXEDMULT_REES_HPP
#define MIXEDMULT_REES_HPP

#include "mixedmult/hilbert.hpp"
#include "mixedmult/monomial.hpp"

namespace mm {

// Bigraded data of the blowup algebra of a monomial ideal in a standard
// graded polynomial ring, fitted on its cone of polynomial behavior.
struct ReesBigradedData {
  MonomialIdeal ideal;
  Exp slope = 0;             // max generator degree
  int s = 0;                 // total degree of the fitted polynomial
  HilbertPolynomial fit;     // cone region
  std::vector<BigInt> e;     // e_0..e_s, possibly negative
  int rho = 0;               // max index with e_i != 0
};

// H(u, v) = number of degree-u monomials lying in I^v
HilbertTable rees_hilbert(const MonomialIdeal& I, Exp u_lo, Exp u_hi, Exp v_lo,
                          Exp v_hi);

ReesBigradedData rees_mixed_multiplicities(const MonomialIdeal& I,
                                           const FitOptions& opt = {});

// multiplicity of the quotient by the irrelevant-saturation of the zero
// ideal with respect to I (the expected top coefficient of the cone fit)
BigInt saturated_quotient_multiplicity(const MonomialIdeal& I);

// P_{A/I^v}(u), valid for v inside the fitted cone region
MultiPoly quotient_hilbert_polynomial(const ReesBigradedData& R, Exp v);

// degree of the blowup embedded by the (c, e) linear system; needs c > slope*e
BigInt embedded_degree(const ReesBigradedData& R, Exp c, Exp e);

// independent diagonal fit of the same degree (the cross-check oracle)
BigInt embedded_degree_diagonal_fit(const MonomialIdeal& I, Exp c, Exp e);

}  // namespace mm

#endif
