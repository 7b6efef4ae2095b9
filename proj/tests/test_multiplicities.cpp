#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixedmult/bridge.hpp"
#include "mixedmult/multiplicities.hpp"

using namespace mm;

namespace {

RingContext r2 = RingContext::standard(2);
RingContext r3 = RingContext::standard(3);

MonomialIdeal I2(const char* text) { return parse_ideal(text, r2); }
MonomialIdeal I3(const char* text) { return parse_ideal(text, r3); }

std::vector<BigInt> ints(std::vector<long long> v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("colengths") {
  CHECK(colength(power(variable_ideal(r2), 2)) == 3);
  CHECK(colength(I2("ideal(x1^2, x1*x2, x2^3)")) == 4);
  CHECK(colength(power(I2("ideal(x1^2, x1*x2, x2^3)"), 2)) == 13);
  CHECK(colength(power(I2("ideal(x1^2, x1*x2, x2^3)"), 3)) == 27);
  CHECK_THROWS_AS(colength(I2("ideal(x1)")), std::invalid_argument);
  IdealTuple T = IdealTuple::make(variable_ideal(r2), {variable_ideal(r2)});
  CHECK(bhattacharya_length(T, {1, 1}) == 3);
}

TEST_CASE("Samuel multiplicities and the staircase oracle") {
  CHECK(samuel_multiplicity(variable_ideal(r2)) == 1);
  CHECK(samuel_multiplicity(I2("ideal(x1^2, x1*x2, x2^3)")) == 5);
  CHECK(samuel_multiplicity(I2("ideal(x1^3, x2^4)")) == 12);
  CHECK(staircase_volume_multiplicity(I2("ideal(x1^2, x1*x2, x2^3)")) == 5);
  CHECK(staircase_volume_multiplicity(I2("ideal(x1^3, x2^4)")) == 12);
  CHECK(staircase_volume_multiplicity(variable_ideal(r2)) == 1);
  CHECK(samuel_multiplicity(I3("ideal(x1^2, x2^2, x3^2)")) == 8);
}

TEST_CASE("mixed multiplicity lists") {
  CHECK(mixed_e_list(variable_ideal(r2), I2("ideal(x1^2, x1*x2, x2^3)")) ==
        ints({1, 2}));
  CHECK(mixed_e_list(variable_ideal(r3), I3("ideal(x1^2, x2^2, x3^2)")) ==
        ints({1, 2, 4}));
  CHECK(mixed_e_list(variable_ideal(r2), I2("ideal(x1)")) == ints({1, 0}));
  CHECK(bhattacharya_e_full(variable_ideal(r2),
                            I2("ideal(x1^2, x1*x2, x2^3)")) ==
        ints({1, 2, 5}));
}

TEST_CASE("the leading-slot multiplicity is e(I)") {
  MonomialIdeal I = I2("ideal(x1^2, x2^2)");
  MonomialIdeal J = I2("ideal(x1^3, x1*x2)");
  MixedMultiplicityResult r = mixed_multiplicities(IdealTuple::make(I, {J}));
  CHECK(r.degree == 1);
  CHECK(r.top.at({1, 0}) == samuel_multiplicity(I));
}

TEST_CASE("analytic spread") {
  CHECK(analytic_spread(variable_ideal(r2)) == 2);
  CHECK(analytic_spread(I2("ideal(x1*x2)")) == 1);
  CHECK(analytic_spread(I2("ideal(x1^2, x1*x2)")) == 2);
}

TEST_CASE("order formula") {
  OrderFormulaReport rep = order_formula_check(I2("ideal(x1^2, x1*x2, x2^3)"));
  CHECK(rep.ok);
  CHECK(rep.order == 2);
  CHECK(rep.e1 == 2);
  CHECK(order_formula_check(power(variable_ideal(r2), 3)).e1 == 3);
  CHECK(order_formula_check(I2("ideal(x1^3, x2^5)")).e1 == 3);
  CHECK_THROWS_AS(order_formula_check(I2("ideal(x1)")), std::invalid_argument);
}

TEST_CASE("multiplicity sequences") {
  CHECK(multiplicity_sequence(I2("ideal(x1)")).c == ints({0, 1, 0}));
  CHECK(multiplicity_sequence(I2("ideal(x1^2, x1*x2, x2^3)")).c ==
        ints({5, 0, 0}));
  CHECK(multiplicity_sequence(I2("ideal(x1^2, x1*x2)")).c == ints({2, 1, 0}));
  CHECK(j_multiplicity(variable_ideal(r2)) == 1);
  CHECK(j_multiplicity(I2("ideal(x1)")) == 0);
  CHECK(j_multiplicity(I2("ideal(x1^2, x1*x2)")) == 2);
}

TEST_CASE("blowup multiplicities") {
  CHECK(rees_algebra_multiplicity(I2("ideal(x1^2, x1*x2, x2^2)")) == 3);
  CHECK(rees_algebra_multiplicity(variable_ideal(r2)) == 2);
  CHECK(rees_algebra_multiplicity(I2("ideal(x1^2, x1*x2, x2^3)")) == 3);
  CHECK(rees_algebra_multiplicity(I2("ideal(x1)")) == 1);
}

TEST_CASE("extended blowup multiplicities") {
  CHECK(extended_rees_multiplicity(variable_ideal(r2)) == 1);
  CHECK(extended_rees_multiplicity(I2("ideal(x1^2, x2^2)")) == 4);
  RingContext r1 = RingContext::standard(1);
  CHECK(extended_rees_multiplicity(parse_ideal("ideal(x1^3)", r1)) >= 1);
}

TEST_CASE("intersection cycle degrees") {
  CHECK(stuckrad_vogel_degrees(I2("ideal(x1)")) == ints({1, 0}));
  // m-primary diagonal case: degrees telescope to e_0 - 0
  auto degs = stuckrad_vogel_degrees(variable_ideal(r2));
  CHECK(degs.size() == 2);
  CHECK(degs[0] == 0);  // e_0 - e_1 = 1 - 1
  CHECK(degs[1] == 1);  // e_1 - (out of range)
}

TEST_CASE("Milnor sequences") {
  MilnorSequence s = milnor_sequence({3, 3, 3});
  CHECK(s.mu == ints({1, 2, 4, 8}));
  MilnorSequence t = milnor_sequence({2, 3, 4});
  CHECK(t.mu.front() == 1);
  CHECK(t.mu[1] == 1);   // min(a) - 1
  CHECK(t.mu.back() == 6);
  CHECK_THROWS_AS(milnor_sequence({1, 3}), std::invalid_argument);
}

TEST_CASE("inequality suite") {
  // equal ideals: every inequality collapses to an equality
  MonomialIdeal I = I2("ideal(x1^2, x1*x2, x2^3)");
  InequalityReport rep = inequality_suite(I, I);
  CHECK(rep.expansion_ok);
  CHECK(rep.teissier_ok);
  CHECK(rep.logconvex_ok);
  CHECK(rep.minkowski_ok);
  CHECK(rep.minkowski_method == "exact-rational");
  CHECK(rep.e_product == 20);  // e(I^2) = 4 e(I)

  InequalityReport rep2 =
      inequality_suite(variable_ideal(r2), I2("ideal(x1^2, x1*x2, x2^3)"));
  CHECK(rep2.e_product == 10);
  CHECK(rep2.e == ints({1, 2, 5}));
  CHECK(rep2.expansion_ok);
  CHECK(rep2.minkowski_ok);
}

TEST_CASE("telescoping of the bigraded filtration") {
  // ell(A/I^u J^v) = ell(A/J^v) + sum_{t<u} ell(I^t J^v / I^{t+1} J^v)
  MonomialIdeal I = I2("ideal(x1, x2)");
  MonomialIdeal J = I2("ideal(x1^2, x2^3)");
  IdealTuple T = IdealTuple::make(I, {J});
  for (unsigned u = 1; u <= 3; ++u)
    for (unsigned v = 1; v <= 2; ++v) {
      BigInt lhs = bhattacharya_length(T, {u, v});
      BigInt rhs = colength(power(J, v));
      for (unsigned t = 0; t < u; ++t) {
        MonomialIdeal K1 = product(power(I, t), power(J, v));
        MonomialIdeal K2 = product(K1, I);
        rhs += quotient_length(K1, K2,
                               checked_add(K1.max_generator_degree(),
                                           primary_containment_bound(I)));
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("multi-Rees multiplicities") {
  MonomialIdeal Jx = I2("ideal(x1)");
  MonomialIdeal Jy = I2("ideal(x2)");
  CHECK(multi_rees_multiplicity({Jx, Jy}) == 1);
  CHECK(multi_rees_multiplicity_fit({Jx, Jy}) == 1);
  MonomialIdeal m = variable_ideal(r2);
  CHECK(multi_rees_multiplicity({m, m}) == 3);
  CHECK(multi_rees_multiplicity_fit({m, m}) == 3);
  // s = 1 must reduce to the blowup multiplicity
  MonomialIdeal I = I2("ideal(x1^2, x1*x2, x2^3)");
  CHECK(multi_rees_multiplicity({I}) == rees_algebra_multiplicity(I));
}

TEST_CASE("pair total multiplicity agrees with the top sum") {
  MonomialIdeal I = variable_ideal(r2);
  MonomialIdeal J = I2("ideal(x1^2, x1*x2, x2^3)");
  MixedMultiplicityResult r = mixed_multiplicities(IdealTuple::make(I, {J}));
  BigInt sum = 0;
  for (const auto& [k, v] : r.top.entries) sum += v;
  CHECK(pair_total_multiplicity(I, J) == sum);
}

TEST_CASE("associated graded multiplicity") {
  CHECK(assoc_graded_multiplicity(I2("ideal(x1^2, x1*x2)")) == 3);
  CHECK(assoc_graded_multiplicity(variable_ideal(r2)) == 1);
}

TEST_CASE("rigidity report") {
  RigidityReport r = rigidity_check(variable_ideal(r2), I2("ideal(x1*x2)"));
  CHECK(r.rho == 0);
  CHECK(r.spread_hi == 0);
  CHECK(r.positivity_ok);
  CHECK(r.bracket_ok);
  CHECK(r.degree_bound_ok);
}
