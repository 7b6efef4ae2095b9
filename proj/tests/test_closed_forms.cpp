#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixedmult/closed_forms.hpp"

using namespace mm;
using namespace mm::closed_forms;

namespace {
std::vector<BigInt> ints(std::vector<long long> v) {
  return std::vector<BigInt>(v.begin(), v.end());
}
}  // namespace

TEST_CASE("blowup multiplicity branches") {
  // deep first colon: only the ambient multiplicity survives
  CHECK(htu_rees(ints({1, 2}), 4, 2, BigInt(3)) == 3);
  // flat case: quotient multiplicities alone
  CHECK(htu_rees(ints({1, 2}), 3, 3, BigInt(5)) == 3);
  // drop by one: quotients plus the ambient multiplicity
  CHECK(htu_rees(ints({1, 2}), 3, 2, BigInt(5)) == 8);
  // empty sequence degenerates to the ambient multiplicity
  CHECK(htu_rees({}, 3, 1, BigInt(4)) == 4);
}

TEST_CASE("colon-ideal mixed multiplicity prediction") {
  CHECK(hoang_mixed(ints({1, 2}), 2, 4) == ints({1, 2, 0, 0}));
  CHECK(hoang_mixed(ints({1}), 1, 2) == ints({1, 0}));
  CHECK_THROWS_AS(hoang_mixed(ints({1}), 2, 3), std::invalid_argument);
}

TEST_CASE("filter-regular closed forms") {
  CHECK(filter_regular_rees({1, 1}, BigInt(1)) == 2);
  CHECK(filter_regular_rees({1, 1}, BigInt(3)) == 6);
  CHECK(filter_regular_rees({2, 3}, BigInt(1)) == 3);
  CHECK(filter_regular_rees({2}, BigInt(1)) == 1);
  CHECK_THROWS_AS(filter_regular_rees({3, 2}, BigInt(1)), std::invalid_argument);

  // all degrees one: the extended sum is empty
  CHECK(filter_regular_extended({1, 1}, BigInt(1)) == 1);
  CHECK(filter_regular_extended({1, 1, 1}, BigInt(2)) == 2);
  CHECK(filter_regular_extended({2, 2}, BigInt(1)) == 4);
  CHECK(filter_regular_extended({2}, BigInt(1)) == 2);
  CHECK(filter_regular_extended({1, 2}, BigInt(1)) == 2);
}

TEST_CASE("regular sequence blowup closed form") {
  CHECK(regular_sequence_rees_mixed({2}, BigInt(1), 2) == ints({-2, 1}));
  CHECK(regular_sequence_rees_mixed({3}, BigInt(1), 2) == ints({-3, 1}));
  CHECK(regular_sequence_rees_mixed({2, 2}, BigInt(1), 2) == ints({0, 1}));
  CHECK(regular_sequence_rees_mixed({2, 3}, BigInt(1), 2) == ints({0, 1}));
  CHECK(regular_sequence_rees_mixed({2, 3}, BigInt(1), 3) == ints({-6, 0, 1}));
  // degree-one sequences reduce to non-negative standard data
  CHECK(regular_sequence_rees_mixed({1, 1}, BigInt(1), 2) == ints({0, 1}));
}

TEST_CASE("maximal minor blowup values are pinned") {
  // 1x2 matrix: the two entries form a regular sequence of linear forms
  auto v = minors_mixed(2);
  REQUIRE(v.size() == 2);
  CHECK(v == ints({1, 1}));
  // 2x3 matrix of indeterminates: frozen regression values
  auto w = minors_mixed(3);
  REQUIRE(w.size() == 6);
  CHECK(w[5] == 1);  // top coefficient is always the ambient multiplicity
}

TEST_CASE("extended blowup right-hand side") {
  CHECK(katz_verma_rhs(BigInt(1), ints({1, 1}), 2) == BigRat(1));
  CHECK(katz_verma_rhs(BigInt(4), ints({4, 4}), 2) == BigRat(4));
  CHECK(katz_verma_rhs(BigInt(3), ints({5}), 1) == BigRat(4));
  CHECK(katz_verma_rhs(BigInt(1), ints({1}), 1) == BigRat(1));
  CHECK_THROWS_AS(katz_verma_rhs(BigInt(1), ints({1}), 2), std::invalid_argument);
}

TEST_CASE("free bigraded closed form") {
  CHECK(bigraded_free_mixed(2, 1, {2}) == ints({-2, 1}));
  CHECK(bigraded_free_mixed(2, 1, {3}) == ints({-3, 1}));
  // zero degrees reduce to the standard bigraded case
  CHECK(bigraded_free_mixed(3, 2, {0, 0}) == ints({0, 0, 1, 0}));
  CHECK(bigraded_free_mixed(1, 1, {4}) == ints({1}));
  // indices at and beyond the first block vanish
  auto v = bigraded_free_mixed(2, 3, {1, 1, 1});
  CHECK(v[2] == 0);
  CHECK(v[3] == 0);
}
