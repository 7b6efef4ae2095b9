#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mixedmult/polytope.hpp"

using namespace mm;
using geom::LatticePolytope;
using geom::Point;

namespace {

Point pt(std::vector<long long> v) { return Point(v.begin(), v.end()); }

LatticePolytope simplex(int n) {
  std::vector<Point> pts;
  pts.emplace_back(static_cast<std::size_t>(n), BigInt(0));
  for (int i = 0; i < n; ++i) {
    Point p(static_cast<std::size_t>(n), BigInt(0));
    p[static_cast<std::size_t>(i)] = 1;
    pts.push_back(std::move(p));
  }
  return LatticePolytope::hull(n, pts);
}

std::mt19937_64 rng(7);

LatticePolytope random_polytope(int n, int coord_max, int npts) {
  std::vector<Point> pts;
  for (int k = 0; k < npts; ++k) {
    Point p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      p[static_cast<std::size_t>(i)] = BigInt(rng() % (coord_max + 1));
    pts.push_back(std::move(p));
  }
  return LatticePolytope::hull(n, pts);
}

}  // namespace

TEST_CASE("hull vertex extraction") {
  LatticePolytope seg = LatticePolytope::hull(
      1, {pt({0}), pt({1}), pt({2})});
  CHECK(seg.vertices() == std::vector<Point>{pt({0}), pt({2})});

  LatticePolytope square = LatticePolytope::hull(
      2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
  CHECK(square.vertices().size() == 4);

  LatticePolytope tri = LatticePolytope::hull(
      2, {pt({0, 0}), pt({2, 0}), pt({1, 1}), pt({0, 3})});
  CHECK(tri.vertices() == std::vector<Point>{pt({0, 0}), pt({0, 3}), pt({2, 0})});
  CHECK(tri.affine_dim() == 2);

  // interior and edge points must be filtered in any dimension
  LatticePolytope cube = LatticePolytope::hull(
      3, {pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 2, 0}), pt({0, 0, 2}),
          pt({2, 2, 0}), pt({2, 0, 2}), pt({0, 2, 2}), pt({2, 2, 2}),
          pt({1, 1, 1}), pt({1, 0, 0}), pt({2, 1, 0})});
  CHECK(cube.vertices().size() == 8);
}

TEST_CASE("volumes") {
  LatticePolytope square = LatticePolytope::hull(
      2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
  CHECK(geom::volume(square).value == BigRat(1));
  CHECK(geom::volume(simplex(2)).value == BigRat(1, 2));
  LatticePolytope tri = LatticePolytope::hull(
      2, {pt({0, 0}), pt({2, 0}), pt({0, 3})});
  CHECK(geom::volume(tri).value == BigRat(3));
  // degenerate input is reported, not mis-measured
  LatticePolytope seg = LatticePolytope::hull(2, {pt({0, 0}), pt({3, 3})});
  auto v = geom::volume(seg);
  CHECK(v.degenerate);
  CHECK(v.value == 0);
  CHECK(geom::volume(simplex(3)).value == BigRat(1, 6));
}

TEST_CASE("normalized volumes") {
  LatticePolytope seg = LatticePolytope::hull(2, {pt({0, 0}), pt({1, 1})});
  CHECK(geom::normalized_volume(seg) == BigRat(1));
  LatticePolytope tri = LatticePolytope::hull(
      3, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  CHECK(geom::normalized_volume(tri) == BigRat(1, 2));
  LatticePolytope point = LatticePolytope::hull(3, {pt({5, 5, 5})});
  CHECK(geom::normalized_volume(point) == BigRat(1));
  CHECK(geom::ehrhart_normalized_volume(tri) == BigRat(1, 2));
}

TEST_CASE("lattice point counts") {
  CHECK(geom::lattice_point_count(simplex(2), 2) == 6);
  CHECK(geom::lattice_point_count(simplex(3), 2) == 10);
  CHECK(geom::lattice_point_count(simplex(2), 0) == 1);
  CHECK(geom::ehrhart_volume(simplex(2)) == BigRat(1, 2));
  CHECK(geom::ehrhart_volume(simplex(3)) == BigRat(1, 6));
}

TEST_CASE("minkowski sums") {
  LatticePolytope segx = LatticePolytope::hull(2, {pt({0, 0}), pt({1, 0})});
  LatticePolytope segy = LatticePolytope::hull(2, {pt({0, 0}), pt({0, 1})});
  LatticePolytope sum = geom::minkowski_sum(segx, segy);
  CHECK(sum.vertices().size() == 4);
  CHECK(geom::volume(sum).value == BigRat(1));
  // adding a point translates
  LatticePolytope shifted = geom::minkowski_sum(
      segx, LatticePolytope::hull(2, {pt({3, 4})}));
  CHECK(shifted.vertices() == std::vector<Point>{pt({3, 4}), pt({4, 4})});
  // simplex doubling
  LatticePolytope two = geom::minkowski_sum(simplex(2), simplex(2));
  CHECK(two.vertices() == std::vector<Point>{pt({0, 0}), pt({0, 2}), pt({2, 0})});
}

TEST_CASE("mixed volumes") {
  LatticePolytope segx = LatticePolytope::hull(2, {pt({0, 0}), pt({1, 0})});
  LatticePolytope segy = LatticePolytope::hull(2, {pt({0, 0}), pt({0, 1})});
  CHECK(geom::mixed_volume({segx, segy}) == BigRat(1));
  CHECK(geom::mixed_volume({simplex(2), simplex(2)}) == BigRat(1));
  LatticePolytope square = LatticePolytope::hull(
      2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
  CHECK(geom::mixed_volume({square, square}) == BigRat(2));
  CHECK(geom::mixed_volume({simplex(2), square}) == BigRat(2));
  // parallel segments span nothing
  LatticePolytope seg2 = LatticePolytope::hull(2, {pt({0, 0}), pt({2, 0})});
  CHECK(geom::mixed_volume({segx, seg2}) == BigRat(0));
}

TEST_CASE("mixed volume properties on random polytopes") {
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    std::vector<LatticePolytope> Q;
    for (int i = 0; i < n; ++i) Q.push_back(random_polytope(n, 4, 5));
    // symmetry
    std::vector<LatticePolytope> R(Q.rbegin(), Q.rend());
    CHECK(geom::mixed_volume(Q) == geom::mixed_volume(R));
    // diagonal identity
    std::vector<LatticePolytope> D(static_cast<std::size_t>(n), Q[0]);
    CHECK(geom::mixed_volume(D) ==
          geom::volume(Q[0]).value * BigRat(factorial(static_cast<unsigned>(n))));
    // multilinearity in the first slot
    LatticePolytope P2 = random_polytope(n, 3, 4);
    std::vector<LatticePolytope> s1 = Q, s2 = Q, s3 = Q;
    s2[0] = P2;
    s3[0] = geom::minkowski_sum(Q[0], P2);
    CHECK(geom::mixed_volume(s3) ==
          geom::mixed_volume(s1) + geom::mixed_volume(s2));
    // monotonicity: enlarging one slot cannot shrink the mixed volume
    std::vector<Point> grown = Q[0].vertices();
    for (const auto& v : P2.vertices()) grown.push_back(v);
    std::vector<LatticePolytope> s4 = Q;
    s4[0] = LatticePolytope::hull(n, grown);
    CHECK(geom::mixed_volume(s4) >= geom::mixed_volume(s1));
    // integrality
    CHECK(boost::multiprecision::denominator(geom::mixed_volume(Q)) == 1);
    // triangulation vs lattice point counting
    for (const auto& q : Q)
      if (q.affine_dim() == n)
        CHECK(geom::ehrhart_volume(q) == geom::volume(q).value);
  }
}

TEST_CASE("Alexandroff-Fenchel spot checks") {
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    std::vector<LatticePolytope> Q;
    for (int i = 0; i < n; ++i) Q.push_back(random_polytope(n, 3, 5));
    std::vector<LatticePolytope> ab = Q, aa = Q, bb = Q;
    aa[1] = Q[0];
    bb[0] = Q[1];
    BigRat lhs = geom::mixed_volume(ab);
    CHECK(lhs * lhs >= geom::mixed_volume(aa) * geom::mixed_volume(bb));
  }
}

TEST_CASE("volume polynomial") {
  LatticePolytope square = LatticePolytope::hull(
      2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
  MultiPoly p = geom::minkowski_volume_polynomial({simplex(2), square});
  CHECK(p.coeff({2, 0}) == BigRat(1, 2));
  CHECK(p.coeff({0, 2}) == BigRat(1));
  CHECK(p.coeff({1, 1}) == BigRat(2));  // MV(simplex, square)
  MultiPoly single = geom::minkowski_volume_polynomial({square});
  CHECK(single.coeff({2}) == BigRat(1));
}

TEST_CASE("Bernstein bounds") {
  // dense simplex supports give the degree product
  std::vector<std::vector<Point>> supports;
  supports.push_back({pt({0, 0}), pt({2, 0}), pt({0, 2}), pt({1, 1})});
  supports.push_back({pt({0, 0}), pt({3, 0}), pt({0, 3})});
  CHECK(geom::bernstein_bound(supports) == 6);
  // two generic supports on the unit square
  std::vector<std::vector<Point>> square_supports(
      2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
  CHECK(geom::bernstein_bound(square_supports) == 2);
  // univariate: degree d means d torus roots
  std::vector<std::vector<Point>> uni(1);
  for (long long i = 0; i <= 4; ++i) uni[0].push_back(pt({i}));
  CHECK(geom::bernstein_bound(uni) == 4);
}

TEST_CASE("membership oracles agree") {
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    std::vector<Point> S;
    const int k = 3 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) {
      Point p(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = BigInt(rng() % 5);
      S.push_back(std::move(p));
    }
    Point q(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) q[static_cast<std::size_t>(j)] = BigInt(rng() % 5);
    CHECK(geom::in_convex_hull(S, q) == geom::in_convex_hull_fm(S, q));
  }
}

TEST_CASE("extreme points against the elimination oracle") {
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    std::vector<Point> S;
    for (int i = 0; i < 7; ++i) {
      Point p(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = BigInt(rng() % 4);
      S.push_back(std::move(p));
    }
    LatticePolytope P = LatticePolytope::hull(n, S);
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    for (const auto& p : S) {
      std::vector<Point> others;
      for (const auto& q : S)
        if (q != p) others.push_back(q);
      const bool extreme = !geom::in_convex_hull_fm(others, p);
      const bool listed =
          std::find(P.vertices().begin(), P.vertices().end(), p) !=
          P.vertices().end();
      CHECK(extreme == listed);
    }
  }
}
