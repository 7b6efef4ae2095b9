#ifndef MIXEDMULT_POLYTOPE_HPP
#define MIXEDMULT_POLYTOPE_HPP

#include <vector>

#include "mixedmult/numeric.hpp"
#include "mixedmult/polynomial.hpp"

namespace mm::geom {

using Point = std::vector<BigInt>;

// Convex hull of lattice points; vertices are exactly the extreme points.
class LatticePolytope {
 public:
  static LatticePolytope hull(int ambient, std::vector<Point> points);

  int ambient_dim() const { return ambient_; }
  int affine_dim() const { return affine_dim_; }
  const std::vector<Point>& vertices() const { return verts_; }

  bool contains(const Point& p) const;

  LatticePolytope dilated(const BigInt& factor) const;
  LatticePolytope translated(const Point& offset) const;

 private:
  int ambient_ = 0;
  int affine_dim_ = 0;
  std::vector<Point> verts_;
};

struct VolumeValue {
  BigRat value;
  bool degenerate = false;  // affine dim < ambient dim
};

// Euclidean volume in the ambient dimension (0 with a flag when degenerate).
VolumeValue volume(const LatticePolytope& P);

// Volume measured against the lattice induced on the affine hull; a point
// counts as 1, a primitive segment as 1.
BigRat normalized_volume(const LatticePolytope& P);

// #(t*P intersect Z^n)
BigInt lattice_point_count(const LatticePolytope& P, unsigned t);

// volume recomputed from lattice-point counts; equals volume(P).value for
// full-dimensional P
BigRat ehrhart_volume(const LatticePolytope& P);
BigRat ehrhart_normalized_volume(const LatticePolytope& P);

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q);

// n-dimensional mixed volume of n polytopes by inclusion-exclusion
BigRat mixed_volume(const std::vector<LatticePolytope>& Q);

// mixed volume of polytopes lying in parallel translates of a common linear
// span, measured against the induced lattice of that span
BigRat lattice_mixed_volume(const std::vector<LatticePolytope>& Q);

// homogeneous degree-n volume polynomial of lambda_0 Q_0 + ... (fit +
// mixed-volume coefficient check)
MultiPoly minkowski_volume_polynomial(const std::vector<LatticePolytope>& Q);

LatticePolytope newton_polytope(int ambient, const std::vector<Point>& support);

BigInt bernstein_bound(const std::vector<std::vector<Point>>& supports);

// exact membership oracles; the Fourier-Motzkin route is kept as the
// independent cross-check for the simplex route
bool in_convex_hull(const std::vector<Point>& S, const Point& p);
bool in_convex_hull_fm(const std::vector<Point>& S, const Point& p);

}  // namespace mm::geom

#endif
