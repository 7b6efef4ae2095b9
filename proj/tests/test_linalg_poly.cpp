#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixedmult/linalg.hpp"
#include "mixedmult/polynomial.hpp"

using namespace mm;

TEST_CASE("exact solve and determinant") {
  linalg::IntMatrix A = {{BigInt(2), BigInt(1)}, {BigInt(1), BigInt(3)}};
  auto x = linalg::solve_exact(A, {BigInt(5), BigInt(10)});
  CHECK(x[0] == BigRat(1));
  CHECK(x[1] == BigRat(3));
  CHECK(linalg::det_exact(A) == 5);
  CHECK(linalg::det_exact({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}) == 0);
  CHECK_THROWS_AS(
      linalg::solve_exact({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}},
                          {BigInt(1), BigInt(1)}),
      linalg::SingularMatrix);
  CHECK(linalg::rank_exact({{BigInt(1), BigInt(2), BigInt(3)},
                            {BigInt(2), BigInt(4), BigInt(6)}}) == 1);
}

TEST_CASE("integer kernel is saturated") {
  // kernel of (2 4) is spanned by (2, -1), not (4, -2)
  auto K = linalg::integer_kernel({{BigInt(2), BigInt(4)}});
  REQUIRE(K.size() == 1);
  BigInt g = boost::multiprecision::gcd(K[0][0], K[0][1]);
  CHECK((g == 1 || g == -1));
  CHECK(BigInt(2) * K[0][0] + BigInt(4) * K[0][1] == 0);
}

TEST_CASE("saturated row span") {
  // span of (2,2) inside Z^2 is generated by (1,1)
  auto B = linalg::saturated_row_span({{BigInt(2), BigInt(2)}});
  REQUIRE(B.size() == 1);
  CHECK(abs(B[0][0]) == 1);
  CHECK(B[0][0] == B[0][1]);
  auto c = linalg::coordinates_in_basis(B, {BigInt(3), BigInt(3)});
  CHECK(abs(c[0]) == 3);
  CHECK_THROWS_AS(linalg::coordinates_in_basis(B, {BigInt(1), BigInt(2)}),
                  std::invalid_argument);
  // hyperplane sum = 0 in Z^3
  auto H = linalg::saturated_row_span(
      {{BigInt(1), BigInt(-1), BigInt(0)}, {BigInt(1), BigInt(0), BigInt(-1)}});
  CHECK(H.size() == 2);
}

TEST_CASE("polynomial arithmetic") {
  MultiPoly p(2);
  p.set({1, 1}, BigRat(1));
  p.set({0, 0}, BigRat(1));
  CHECK(p.total_degree() == 2);
  CHECK(p.eval({BigInt(3), BigInt(4)}) == BigRat(13));
  CHECK(p.degree_in(0) == 1);
  MultiPoly z(2);
  CHECK(z.total_degree() == -1);
  CHECK(p.top_part().coefficients().size() == 1);
  MultiPoly q = p.partial_eval(1, BigInt(2));
  CHECK(q.arity() == 1);
  CHECK(q.eval({BigInt(5)}) == BigRat(11));
}

TEST_CASE("interpolation recovers polynomials") {
  // fit (u+1)(v+1) from a triangular grid
  std::vector<std::vector<BigInt>> pts;
  std::vector<BigInt> vals;
  for (const auto& b : monomials_up_to(2, 2)) {
    BigInt u = 3 + b[0], v = 3 + b[1];
    pts.push_back({u, v});
    vals.push_back((u + 1) * (v + 1));
  }
  MultiPoly fit = fit_exact(pts, vals, 2, 2);
  CHECK(fit.coeff({1, 1}) == BigRat(1));
  CHECK(fit.coeff({1, 0}) == BigRat(1));
  CHECK(fit.coeff({2, 0}) == BigRat(0));
  CHECK(fit.eval({BigInt(10), BigInt(20)}) == BigRat(231));
}

TEST_CASE("binomial basis polynomials") {
  MultiPoly c2 = binomial_poly(2, 1);  // C(t+1, 2) = t(t+1)/2
  CHECK(c2.eval({BigInt(4)}) == BigRat(10));
  CHECK(c2.coeff({2}) == BigRat(1, 2));
  MultiPoly c0 = binomial_poly(0, 0);
  CHECK(c0.eval({BigInt(7)}) == BigRat(1));
}

TEST_CASE("integer roots") {
  CHECK(iroot_floor(BigInt(26), 3) == 2);
  CHECK(iroot_floor(BigInt(27), 3) == 3);
  CHECK(iroot_floor(BigInt(1) << 40, 2) == BigInt(1) << 20);
  BigInt r;
  CHECK(is_perfect_power(BigInt(216), 3, r));
  CHECK(r == 6);
  CHECK_FALSE(is_perfect_power(BigInt(217), 3, r));
}
