#ifndef MIXEDMULT_MULTIPLICITIES_HPP
#define MIXEDMULT_MULTIPLICITIES_HPP

#include <string>
#include <vector>

#include "mixedmult/hilbert.hpp"
#include "mixedmult/monomial.hpp"

namespace mm {

struct InvariantFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (I | J_1,...,J_s): I primary to the variable ideal, J_i nonzero proper
struct IdealTuple {
  MonomialIdeal primary;
  std::vector<MonomialIdeal> others;

  static IdealTuple make(MonomialIdeal primary, std::vector<MonomialIdeal> others);
};

// ell(K1/K2) for K2 inside K1, counted degree by degree up to degree_bound
BigInt quotient_length(const MonomialIdeal& K1, const MonomialIdeal& K2,
                       Exp degree_bound);

// ell(A/I) for an m-primary monomial ideal
BigInt colength(const MonomialIdeal& I);

// ell(A / I^{u0} J_1^{u1} ... J_s^{us}); every ideal must be m-primary
BigInt bhattacharya_length(const IdealTuple& T, const std::vector<unsigned>& u);

struct MixedMultiplicityResult {
  HilbertPolynomial fit;
  MixedMultiplicityVector top;  // e_alpha, |alpha| = degree
  int degree = kZeroPolyDegree;
};

// mixed multiplicities of the standard multigraded algebra attached to the
// tuple, via table fitting and normalized top-coefficient extraction
MixedMultiplicityResult mixed_multiplicities(const IdealTuple& T,
                                             const FitOptions& opt = {});

// e_j(I|J) for j = 0..d-1 (pair convention: j follows the J direction)
std::vector<BigInt> mixed_e_list(const MonomialIdeal& I, const MonomialIdeal& J,
                                 const FitOptions& opt = {});

// e_0..e_d for m-primary J (top entry is e(J))
std::vector<BigInt> bhattacharya_e_full(const MonomialIdeal& I,
                                        const MonomialIdeal& J,
                                        const FitOptions& opt = {});

BigInt samuel_multiplicity(const MonomialIdeal& I);

// independent staircase oracle: n! * vol(orthant minus Newton polyhedron)
BigInt staircase_volume_multiplicity(const MonomialIdeal& I);

int analytic_spread(const MonomialIdeal& J);

struct RigidityReport {
  int rho = -1;
  int height_lo = 0;      // height(J) - 1
  int spread_hi = 0;      // s(J) - 1
  bool positivity_ok = false;
  bool bracket_ok = false;
  bool degree_bound_ok = false;  // J-direction degree of the fit < s(J)
};
RigidityReport rigidity_check(const MonomialIdeal& I, const MonomialIdeal& J,
                              const FitOptions& opt = {});

struct OrderFormulaReport {
  BigInt e1;
  Exp order = 0;
  bool ok = false;
};
OrderFormulaReport order_formula_check(const MonomialIdeal& J,
                                       const FitOptions& opt = {});

struct MultiplicitySequence {
  std::vector<BigInt> c;  // c_0..c_d
};
MultiplicitySequence multiplicity_sequence(const MonomialIdeal& I,
                                           const FitOptions& opt = {});
BigInt j_multiplicity(const MonomialIdeal& I);

// e(A[It]_M) through the associated-graded filtration fit
BigInt rees_algebra_multiplicity(const MonomialIdeal& I);

// e(G_M) for G the associated graded ring of I
BigInt assoc_graded_multiplicity(const MonomialIdeal& I);

// extended Rees multiplicity evaluated from computed mixed multiplicities;
// integrality of the closed-form value is asserted
BigInt extended_rees_multiplicity(const MonomialIdeal& I);

// deg v_i = e_{i-1}(m|I) - e_i(m|I), i = 1..d, out-of-range terms read as 0
std::vector<BigInt> stuckrad_vogel_degrees(const MonomialIdeal& I);

struct MilnorSequence {
  std::vector<BigInt> mu;  // mu^(0)..mu^(n+1)
};
MilnorSequence milnor_sequence(const std::vector<unsigned>& exponents);

struct InequalityReport {
  std::vector<BigInt> e;  // e_0..e_d
  BigInt e_product;       // e(IJ)
  bool expansion_ok = false;
  bool teissier_ok = false;
  bool logconvex_ok = false;
  bool minkowski_ok = false;
  std::string minkowski_method;
};
InequalityReport inequality_suite(const MonomialIdeal& I, const MonomialIdeal& J);

// multi-Rees algebra multiplicity as the sum of the top mixed multiplicities
// of the tuple (m | J_1..J_s)
BigInt multi_rees_multiplicity(const std::vector<MonomialIdeal>& Js,
                               const FitOptions& opt = {});
// independent filtration fit of the same multiplicity
BigInt multi_rees_multiplicity_fit(const std::vector<MonomialIdeal>& Js);

// total-grading multiplicity of the algebra attached to (I | J)
BigInt pair_total_multiplicity(const MonomialIdeal& I, const MonomialIdeal& J);

}  // namespace mm

#endif
