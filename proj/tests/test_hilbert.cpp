#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixedmult/hilbert.hpp"
#include "mixedmult/kernel.hpp"

using namespace mm;

namespace {

GradedPresentation free_bigraded(int m, int n) {
  RingContext ring = RingContext::blocks({m, n});
  return GradedPresentation::make(ring, zero_ideal(ring));
}

// the worked four-by-four example: two blocks of four variables, relations
// (x1,y1) cap (x1,x2,x3) cap (y1,y2,y3)
GradedPresentation crossing_planes() {
  RingContext ring = RingContext::blocks({4, 4});
  auto v = [&](int i) { return ExponentVector::unit(8, static_cast<std::size_t>(i)); };
  MonomialIdeal P1 = MonomialIdeal::from_generators(ring, {v(0), v(4)});
  MonomialIdeal P2 = MonomialIdeal::from_generators(ring, {v(0), v(1), v(2)});
  MonomialIdeal P3 = MonomialIdeal::from_generators(ring, {v(4), v(5), v(6)});
  return GradedPresentation::make(ring, intersect(intersect(P1, P2), P3));
}

}  // namespace

TEST_CASE("free bigraded Hilbert function") {
  GradedPresentation P = free_bigraded(2, 3);
  for (Exp u = 0; u <= 4; ++u)
    for (Exp v = 0; v <= 4; ++v) {
      const auto expect = binomial_u64(u + 1, 1) * binomial_u64(v + 2, 2);
      CHECK(graded_piece_dimension(P, {u, v}) ==
            static_cast<std::int64_t>(expect));
    }
}

TEST_CASE("truncated polynomial ring") {
  RingContext r1 = RingContext::standard(1);
  GradedPresentation P = GradedPresentation::make(
      r1, MonomialIdeal::from_generators(r1, {ExponentVector{3}}));
  HilbertTable T = hilbert_function(P, {0}, {5});
  CHECK(T.at({0}) == 1);
  CHECK(T.at({2}) == 1);
  CHECK(T.at({3}) == 0);
  CHECK(T.at({5}) == 0);
  CHECK(relevant_total_degree(P) == kZeroPolyDegree);
}

TEST_CASE("fit against a table") {
  GradedPresentation P = free_bigraded(2, 2);
  HilbertTable T = hilbert_function(P, {0, 0}, {6, 6});
  HilbertPolynomial fit = fit_polynomial(T, 2, {2, 2});
  CHECK(fit.poly.coeff({1, 1}) == BigRat(1));
  CHECK(fit.poly.coeff({0, 0}) == BigRat(1));
  CHECK(std::get<BoxRegion>(fit.region).corner == std::vector<Exp>{0, 0});
  MixedMultiplicityVector e = extract_mixed_multiplicities(fit);
  CHECK(e.total_degree == 2);
  CHECK(e.at({1, 1}) == 1);
  CHECK(e.at({2, 0}) == 0);
}

TEST_CASE("fit error carries the first mismatch") {
  // values of a function that is not a polynomial of degree 1 anywhere
  HilbertTable T({0}, {9});
  for (Exp t = 0; t <= 9; ++t) T.set({t}, static_cast<std::int64_t>(t * t));
  CHECK_THROWS_AS(fit_polynomial(T, 1, {4}), UnstableRegion);
}

TEST_CASE("stable box driver") {
  // Hilbert-Samuel style: values stabilize only from t = 3 on
  CellFn f = [](const std::vector<Exp>& t) -> std::int64_t {
    if (t[0] < 3) return 1;
    return static_cast<std::int64_t>(5 * t[0] + 2);
  };
  HilbertPolynomial fit = fit_stable_box(f, 1, 1);
  CHECK(fit.poly.coeff({1}) == BigRat(5));
  CHECK(std::get<BoxRegion>(fit.region).corner == std::vector<Exp>{3});
}

TEST_CASE("relevant dimension and partial degrees") {
  CHECK(relevant_total_degree(free_bigraded(2, 2)) == 2);
  GradedPresentation P = crossing_planes();
  CHECK(relevant_total_degree(P) == 4);
  auto [r1, r2] = partial_degrees(P);
  CHECK(r1 == 3);
  CHECK(r2 == 3);
  auto [f1, f2] = partial_degrees(free_bigraded(3, 2));
  CHECK(f1 == 2);
  CHECK(f2 == 1);
}

TEST_CASE("crossing planes mixed multiplicities") {
  GradedPresentation P = crossing_planes();
  CellFn f = [&](const std::vector<Exp>& u) {
    return graded_piece_dimension(P, u);
  };
  HilbertPolynomial fit = fit_stable_box(f, 2, 4);
  MixedMultiplicityVector e = extract_mixed_multiplicities(fit);
  CHECK(e.total_degree == 4);
  CHECK(e.at({2, 2}) == 1);
  CHECK(e.at({1, 3}) == 0);
  CHECK(e.at({3, 1}) == 0);
}

TEST_CASE("prescribed mixed multiplicities") {
  // two blocks of three variables; components realize the sequence (1,2,3)
  RingContext ring = RingContext::blocks({3, 3});
  auto xv = [&](int i, Exp p = 1) {
    return ExponentVector::unit(6, static_cast<std::size_t>(i), p);
  };
  auto yv = [&](int j, Exp p = 1) {
    return ExponentVector::unit(6, static_cast<std::size_t>(3 + j), p);
  };
  MonomialIdeal Q0 = MonomialIdeal::from_generators(ring, {xv(0, 1), xv(1)});
  MonomialIdeal Q1 = MonomialIdeal::from_generators(ring, {xv(0, 2), yv(0)});
  MonomialIdeal Q2 = MonomialIdeal::from_generators(ring, {yv(0, 3), yv(1)});
  GradedPresentation P = GradedPresentation::make(
      ring, intersect(intersect(Q0, Q1), Q2));
  CHECK(relevant_total_degree(P) == 2);
  CellFn f = [&](const std::vector<Exp>& u) {
    return graded_piece_dimension(P, u);
  };
  HilbertPolynomial fit = fit_stable_box(f, 2, 2);
  MixedMultiplicityVector e = extract_mixed_multiplicities(fit);
  CHECK(e.at({0, 2}) == 1);
  CHECK(e.at({1, 1}) == 2);
  CHECK(e.at({2, 0}) == 3);
}

TEST_CASE("sum transform") {
  HilbertTable T({0, 0}, {2, 2});
  for (std::size_t i = 0; i < T.cell_count(); ++i) T.set(T.point_of(i), 1);
  HilbertTable S = sum_transform(T, {0, 1});
  for (Exp u = 0; u <= 2; ++u)
    for (Exp v = 0; v <= 2; ++v)
      CHECK(S.at({u, v}) == static_cast<std::int64_t>((u + 1) * (v + 1)));

  HilbertTable L({0}, {3});
  for (Exp t = 0; t <= 3; ++t) L.set({t}, static_cast<std::int64_t>(t));
  HilbertTable SL = sum_transform(L, {0});
  CHECK(SL.at({0}) == 0);
  CHECK(SL.at({1}) == 1);
  CHECK(SL.at({2}) == 3);
  CHECK(SL.at({3}) == 6);
}

TEST_CASE("tensor factorization of free pieces") {
  // H of a free product is the product of the factors
  GradedPresentation P = free_bigraded(3, 4);
  RingContext rx = RingContext::standard(3);
  RingContext ry = RingContext::standard(4);
  GradedPresentation Px = GradedPresentation::make(rx, zero_ideal(rx));
  GradedPresentation Py = GradedPresentation::make(ry, zero_ideal(ry));
  for (Exp u = 0; u <= 3; ++u)
    for (Exp v = 0; v <= 3; ++v)
      CHECK(graded_piece_dimension(P, {u, v}) ==
            graded_piece_dimension(Px, {u}) * graded_piece_dimension(Py, {v}));
}

TEST_CASE("non-standard gradings enumerate exactly") {
  // one variable of degree (1,0), one of degree (2,1)
  RingContext ring;
  ring.nvars = 2;
  ring.grading_rank = 2;
  ring.grading = {{1, 0}, {2, 1}};
  GradedPresentation P = GradedPresentation::make(ring, zero_ideal(ring));
  // H(u, v) = #{(a, b): a + 2b = u, b = v} = 1 iff u >= 2v
  CHECK(graded_piece_dimension(P, {5, 2}) == 1);
  CHECK(graded_piece_dimension(P, {3, 2}) == 0);
  CHECK(graded_piece_dimension(P, {4, 2}) == 1);
}

TEST_CASE("diagonal multiplicities of the free bigraded algebra") {
  GradedPresentation P = free_bigraded(2, 2);
  CHECK(diagonal_multiplicity(P, {1, 1}) == 2);
  CHECK(diagonal_multiplicity(P, {2, 1}) == 4);
}

TEST_CASE("total grading multiplicity precondition") {
  // a presentation whose second block ideal sits inside a minimal prime
  RingContext ring = RingContext::blocks({1, 1});
  MonomialIdeal rel = MonomialIdeal::from_generators(
      ring, {ExponentVector{1, 0}});  // kills the x block
  GradedPresentation P = GradedPresentation::make(ring, rel);
  CHECK_THROWS_AS(total_grading_multiplicity(P), std::invalid_argument);
}
