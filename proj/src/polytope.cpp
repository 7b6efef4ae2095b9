#include "mixedmult/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mixedmult/linalg.hpp"

namespace mm::geom {

namespace {

// ---- exact phase-1 simplex: is b in the cone/affine system? ----
// Feasibility of: sum lambda_i s_i = p, sum lambda_i = 1, lambda >= 0.
// Rows: n+1 equalities; artificial variables give the phase-1 objective.
bool simplex_membership(const std::vector<Point>& S, const Point& p) {
  if (S.empty()) return false;
  const std::size_t n = p.size();
  const std::size_t rows = n + 1;
  const std::size_t cols = S.size();

  // tableau rows: [A | b], artificial basis to start; keep b >= 0
  std::vector<std::vector<BigRat>> A(rows, std::vector<BigRat>(cols + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols; ++j) A[i][j] = BigRat(S[j][i]);
    A[i][cols] = BigRat(p[i]);
  }
  for (std::size_t j = 0; j < cols; ++j) A[n][j] = 1;
  A[n][cols] = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    if (A[i][cols] < 0)
      for (auto& x : A[i]) x = -x;
  }

  // phase-1 objective: minimize sum of artificials; reduced costs start as
  // column sums
  std::vector<BigRat> obj(cols + 1);
  for (std::size_t j = 0; j <= cols; ++j) {
    BigRat s = 0;
    for (std::size_t i = 0; i < rows; ++i) s += A[i][j];
    obj[j] = s;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + 1 + i;  // artificials

  for (;;) {
    // Bland: smallest-index entering column with positive reduced cost
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (obj[j] > 0) { enter = j; break; }
    if (enter == cols) break;
    // ratio test, Bland tie-break on basis index
    std::size_t leave = rows;
    BigRat best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (A[i][enter] <= 0) continue;
      BigRat ratio = A[i][cols] / A[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == rows) return false;  // unbounded phase 1 cannot happen
    // pivot
    BigRat piv = A[leave][enter];
    for (auto& x : A[leave]) x /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || A[i][enter] == 0) continue;
      BigRat f = A[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) A[i][j] -= f * A[leave][j];
    }
    BigRat f = obj[enter];
    for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * A[leave][j];
    basis[leave] = enter;
  }
  return obj[cols] == 0;  // artificials drove the infeasibility gap to zero
}

std::vector<Point> dedup(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// incremental extreme-point filter backed by the exact simplex oracle
std::vector<Point> extreme_points(std::vector<Point> pts) {
  pts = dedup(std::move(pts));
  if (pts.size() <= 2) return pts;
  std::vector<Point> ext;
  for (const auto& p : pts) {
    if (simplex_membership(ext, p)) continue;
    ext.push_back(p);
    // membership of earlier candidates can change after each insertion
    for (std::size_t i = 0; i + 1 < ext.size();) {
      std::vector<Point> others;
      for (std::size_t j = 0; j < ext.size(); ++j)
        if (j != i) others.push_back(ext[j]);
      if (simplex_membership(others, ext[i])) ext.erase(ext.begin() + static_cast<std::ptrdiff_t>(i));
      else ++i;
    }
  }
  return dedup(std::move(ext));
}

linalg::IntMatrix edge_matrix(const std::vector<Point>& verts) {
  linalg::IntMatrix M;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    std::vector<BigInt> row(verts[i].size());
    for (std::size_t j = 0; j < row.size(); ++j)
      row[j] = verts[i][j] - verts[0][j];
    M.push_back(std::move(row));
  }
  return M;
}

// integer coordinates of the vertices in the induced affine lattice
std::vector<std::vector<BigInt>> lattice_coords(const std::vector<Point>& verts,
                                                int* out_dim) {
  linalg::IntMatrix E = edge_matrix(verts);
  linalg::IntMatrix B = linalg::saturated_row_span(E);
  if (out_dim) *out_dim = static_cast<int>(B.size());
  std::vector<std::vector<BigInt>> coords;
  for (const auto& v : verts) {
    std::vector<BigInt> d(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) d[j] = v[j] - verts[0][j];
    if (B.empty()) {
      coords.push_back({});
      continue;
    }
    std::vector<BigRat> c = linalg::coordinates_in_basis(B, d);
    std::vector<BigInt> ci;
    for (const BigRat& x : c) {
      if (boost::multiprecision::denominator(x) != 1)
        throw std::logic_error("lattice coordinate is not an integer");
      ci.push_back(boost::multiprecision::numerator(x));
    }
    coords.push_back(std::move(ci));
  }
  return coords;
}

struct FacetStructure {
  // facets as vertex index sets, in the polytope's own affine dimension
  std::vector<std::vector<int>> facets;
  // supporting data in lattice coordinates: normal, offset with <n,x> <= c
  std::vector<std::vector<BigInt>> normals;
  std::vector<BigInt> offsets;
};

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<BigInt> primitive(std::vector<BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// hyperplane normal through r points in r-space (generalized cross product)
std::vector<BigInt> hyperplane_normal(const std::vector<std::vector<BigInt>>& pts) {
  const std::size_t r = pts[0].size();
  linalg::IntMatrix E;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<BigInt> row(r);
    for (std::size_t j = 0; j < r; ++j) row[j] = pts[i][j] - pts[0][j];
    E.push_back(std::move(row));
  }
  std::vector<BigInt> n(r, 0);
  // cofactor expansion: n_j = (-1)^j det(E without column j)
  for (std::size_t j = 0; j < r; ++j) {
    linalg::IntMatrix M;
    for (const auto& row : E) {
      std::vector<BigInt> m;
      for (std::size_t k = 0; k < r; ++k)
        if (k != j) m.push_back(row[k]);
      M.push_back(std::move(m));
    }
    BigInt d = linalg::det_exact(M);
    n[j] = (j % 2 == 0) ? d : -d;
  }
  return n;
}

// enumerate facets of a full-dimensional polytope given in r-dim integer
// coordinates
FacetStructure facet_structure(const std::vector<std::vector<BigInt>>& coords) {
  const std::size_t r = coords[0].size();
  const std::size_t V = coords.size();
  FacetStructure F;
  std::set<std::pair<std::vector<BigInt>, BigInt>> seen;
  std::vector<std::size_t> idx(r);
  // iterate r-subsets
  std::vector<std::size_t> sub(r);
  auto rec = [&](auto&& self, std::size_t start, std::size_t k) -> void {
    if (k == r) {
      std::vector<std::vector<BigInt>> pts;
      for (std::size_t i : sub) pts.push_back(coords[i]);
      std::vector<BigInt> n = hyperplane_normal(pts);
      bool zero = std::all_of(n.begin(), n.end(),
                              [](const BigInt& x) { return x == 0; });
      if (zero) return;
      BigInt c = dot(n, pts[0]);
      // orient as <n, x> <= c
      bool leq = true, geq = true;
      for (const auto& q : coords) {
        BigInt d = dot(n, q);
        if (d > c) leq = false;
        if (d < c) geq = false;
      }
      if (!leq && !geq) return;
      if (!leq) {
        for (auto& x : n) x = -x;
        c = -c;
      }
      std::vector<BigInt> np = primitive(n);
      // rescale offset consistently with the primitive normal
      BigInt cp = dot(np, pts[0]);
      if (!seen.insert({np, cp}).second) return;
      std::vector<int> face;
      for (std::size_t q = 0; q < V; ++q)
        if (dot(np, coords[q]) == cp) face.push_back(static_cast<int>(q));
      // a facet needs affine dimension r-1
      linalg::IntMatrix E;
      for (std::size_t q = 1; q < face.size(); ++q) {
        std::vector<BigInt> row(r);
        for (std::size_t j = 0; j < r; ++j)
          row[j] = coords[static_cast<std::size_t>(face[q])][j] -
                   coords[static_cast<std::size_t>(face[0])][j];
        E.push_back(std::move(row));
      }
      if (linalg::rank_exact(E) != static_cast<int>(r) - 1) return;
      F.facets.push_back(std::move(face));
      F.normals.push_back(std::move(np));
      F.offsets.push_back(cp);
      return;
    }
    for (std::size_t i = start; i + (r - k) <= V; ++i) {
      sub[k] = i;
      self(self, i + 1, k + 1);
    }
  };
  if (V >= r) rec(rec, 0, 0);
  return F;
}

// recursive triangulation into index simplices, coords full-dimensional
std::vector<std::vector<int>> triangulate(const std::vector<std::vector<BigInt>>& coords) {
  const std::size_t r = coords[0].size();
  if (r == 0) return {{0}};
  if (r == 1) {
    // segment: min and max coordinate
    int lo = 0, hi = 0;
    for (std::size_t i = 1; i < coords.size(); ++i) {
      if (coords[i][0] < coords[static_cast<std::size_t>(lo)][0]) lo = static_cast<int>(i);
      if (coords[i][0] > coords[static_cast<std::size_t>(hi)][0]) hi = static_cast<int>(i);
    }
    return {{lo, hi}};
  }
  FacetStructure F = facet_structure(coords);
  // fan from vertex 0 over facets that do not contain it
  std::vector<std::vector<int>> out;
  for (std::size_t f = 0; f < F.facets.size(); ++f) {
    if (dot(F.normals[f], coords[0]) == F.offsets[f]) continue;
    // project facet points into its own (r-1)-dim lattice coordinates
    std::vector<Point> fpts;
    for (int q : F.facets[f]) fpts.push_back(coords[static_cast<std::size_t>(q)]);
    int fdim = 0;
    auto fcoords = lattice_coords(fpts, &fdim);
    if (fdim != static_cast<int>(r) - 1)
      throw std::logic_error("facet has wrong dimension");
    for (auto& simplex : triangulate(fcoords)) {
      std::vector<int> s;
      for (int q : simplex) s.push_back(F.facets[f][static_cast<std::size_t>(q)]);
      s.push_back(0);
      out.push_back(std::move(s));
    }
  }
  return out;
}

BigRat simplex_volume(const std::vector<std::vector<BigInt>>& coords,
                      const std::vector<int>& simplex) {
  const std::size_t r = coords[0].size();
  linalg::IntMatrix E;
  for (std::size_t i = 1; i < simplex.size(); ++i) {
    std::vector<BigInt> row(r);
    for (std::size_t j = 0; j < r; ++j)
      row[j] = coords[static_cast<std::size_t>(simplex[i])][j] -
               coords[static_cast<std::size_t>(simplex[0])][j];
    E.push_back(std::move(row));
  }
  BigInt d = linalg::det_exact(E);
  if (d < 0) d = -d;
  return BigRat(d, factorial(static_cast<unsigned>(r)));
}

BigRat volume_of_coords(const std::vector<std::vector<BigInt>>& coords) {
  if (coords.empty()) return 0;
  if (coords[0].empty()) return 1;  // zero-dimensional point
  BigRat total = 0;
  for (const auto& s : triangulate(coords)) total += simplex_volume(coords, s);
  return total;
}

}  // namespace

LatticePolytope LatticePolytope::hull(int ambient, std::vector<Point> points) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != ambient)
      throw std::invalid_argument("point dimension mismatch");
  LatticePolytope P;
  P.ambient_ = ambient;
  P.verts_ = extreme_points(std::move(points));
  linalg::IntMatrix E = edge_matrix(P.verts_);
  P.affine_dim_ = E.empty() ? 0 : linalg::rank_exact(E);
  return P;
}

bool LatticePolytope::contains(const Point& p) const {
  return simplex_membership(verts_, p);
}

LatticePolytope LatticePolytope::dilated(const BigInt& factor) const {
  if (factor < 0) throw std::invalid_argument("negative dilation");
  LatticePolytope P = *this;
  if (factor == 0) {
    for (auto& v : P.verts_)
      std::fill(v.begin(), v.end(), BigInt(0));
    P.verts_ = dedup(std::move(P.verts_));
    P.affine_dim_ = 0;
    return P;
  }
  for (auto& v : P.verts_)
    for (auto& x : v) x *= factor;
  return P;
}

LatticePolytope LatticePolytope::translated(const Point& offset) const {
  LatticePolytope P = *this;
  for (auto& v : P.verts_)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += offset[i];
  return P;
}

VolumeValue volume(const LatticePolytope& P) {
  VolumeValue out;
  if (P.affine_dim() < P.ambient_dim()) {
    out.value = 0;
    out.degenerate = true;
    return out;
  }
  std::vector<std::vector<BigInt>> coords = P.vertices();  // already full-dim
  out.value = volume_of_coords(coords);
  return out;
}

BigRat normalized_volume(const LatticePolytope& P) {
  int dim = 0;
  auto coords = lattice_coords(P.vertices(), &dim);
  if (dim == 0) return 1;
  return volume_of_coords(coords);
}

BigInt lattice_point_count(const LatticePolytope& P, unsigned t) {
  // ambient lattice points of t*P correspond bijectively to induced-lattice
  // points of the dilated coordinate polytope (the basis is saturated)
  int r = 0;
  auto coords = lattice_coords(P.vertices(), &r);
  if (t == 0 || r == 0) return 1;
  for (auto& c : coords)
    for (auto& x : c) x *= t;
  if (r == 1) {
    BigInt lo = coords[0][0], hi = coords[0][0];
    for (const auto& c : coords) {
      lo = std::min(lo, c[0]);
      hi = std::max(hi, c[0]);
    }
    return hi - lo + 1;
  }
  FacetStructure F = facet_structure(coords);
  std::vector<BigInt> lo(static_cast<std::size_t>(r)), hi(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    lo[static_cast<std::size_t>(i)] = coords[0][static_cast<std::size_t>(i)];
    hi[static_cast<std::size_t>(i)] = coords[0][static_cast<std::size_t>(i)];
    for (const auto& c : coords) {
      lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]);
      hi[static_cast<std::size_t>(i)] = std::max(hi[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]);
    }
  }
  BigInt count = 0;
  std::vector<BigInt> p(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, int i) -> void {
    if (i == r) {
      for (std::size_t f = 0; f < F.normals.size(); ++f)
        if (dot(F.normals[f], p) > F.offsets[f]) return;
      ++count;
      return;
    }
    for (BigInt x = lo[static_cast<std::size_t>(i)]; x <= hi[static_cast<std::size_t>(i)]; ++x) {
      p[static_cast<std::size_t>(i)] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return count;
}

namespace {

BigRat ehrhart_leading(const LatticePolytope& P, int degree) {
  std::vector<std::vector<BigInt>> pts;
  std::vector<BigInt> vals;
  for (int t = 0; t <= degree; ++t) {
    pts.push_back({BigInt(t)});
    vals.push_back(lattice_point_count(P, static_cast<unsigned>(t)));
  }
  MultiPoly fit = fit_exact(pts, vals, 1, degree);
  // one validation point beyond the window
  BigInt check = lattice_point_count(P, static_cast<unsigned>(degree + 1));
  if (fit.eval({BigInt(degree + 1)}) != BigRat(check))
    throw std::logic_error("lattice point counts are not polynomial");
  return fit.coeff({degree});
}

}  // namespace

BigRat ehrhart_volume(const LatticePolytope& P) {
  if (P.affine_dim() < P.ambient_dim()) return 0;
  return ehrhart_leading(P, P.ambient_dim());
}

BigRat ehrhart_normalized_volume(const LatticePolytope& P) {
  return ehrhart_leading(P, P.affine_dim());
}

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q) {
  if (P.ambient_dim() != Q.ambient_dim())
    throw std::invalid_argument("Minkowski sum needs a common ambient dimension");
  std::vector<Point> sums;
  sums.reserve(P.vertices().size() * Q.vertices().size());
  for (const auto& a : P.vertices())
    for (const auto& b : Q.vertices()) {
      Point s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  return LatticePolytope::hull(P.ambient_dim(), std::move(sums));
}

BigRat mixed_volume(const std::vector<LatticePolytope>& Q) {
  const std::size_t n = Q.size();
  if (n == 0) throw std::invalid_argument("mixed volume of an empty family");
  for (const auto& q : Q)
    if (static_cast<std::size_t>(q.ambient_dim()) != n)
      throw std::invalid_argument("mixed volume needs n polytopes in dimension n");
  BigRat total = 0;
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    LatticePolytope S = LatticePolytope::hull(static_cast<int>(n),
                                              {Point(n, BigInt(0))});
    bool first = true;
    unsigned bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      ++bits;
      S = first ? Q[i] : minkowski_sum(S, Q[i]);
      first = false;
    }
    BigRat v = volume(S).value;  // degenerate sums contribute zero
    if ((n - bits) % 2 == 1) total -= v;
    else total += v;
  }
  return total;
}

BigRat lattice_mixed_volume(const std::vector<LatticePolytope>& Q) {
  if (Q.empty()) throw std::invalid_argument("mixed volume of an empty family");
  const int ambient = Q[0].ambient_dim();
  // common direction lattice from all edge vectors
  linalg::IntMatrix E;
  for (const auto& q : Q) {
    auto M = edge_matrix(q.vertices());
    E.insert(E.end(), M.begin(), M.end());
  }
  linalg::IntMatrix B = linalg::saturated_row_span(E);
  const std::size_t n = Q.size();
  if (B.size() > n)
    throw std::invalid_argument("directions exceed the mixed volume arity");
  if (B.size() < n) return 0;  // family cannot span: every summand volume is 0
  std::vector<LatticePolytope> mapped;
  for (const auto& q : Q) {
    std::vector<Point> pts;
    for (const auto& v : q.vertices()) {
      std::vector<BigInt> d(static_cast<std::size_t>(ambient));
      for (std::size_t j = 0; j < d.size(); ++j)
        d[j] = v[j] - q.vertices()[0][j];
      std::vector<BigRat> c = linalg::coordinates_in_basis(B, d);
      Point ci;
      for (const BigRat& x : c) {
        if (boost::multiprecision::denominator(x) != 1)
          throw std::logic_error("lattice coordinate is not an integer");
        ci.push_back(boost::multiprecision::numerator(x));
      }
      pts.push_back(std::move(ci));
    }
    mapped.push_back(LatticePolytope::hull(static_cast<int>(n), std::move(pts)));
  }
  return mixed_volume(mapped);
}

MultiPoly minkowski_volume_polynomial(const std::vector<LatticePolytope>& Q) {
  if (Q.empty()) throw std::invalid_argument("empty polytope family");
  const int n = Q[0].ambient_dim();
  const int k = static_cast<int>(Q.size());
  // sample on the shifted triangle grid and fit an inhomogeneous polynomial
  std::vector<std::vector<BigInt>> pts;
  std::vector<BigInt> vals;
  for (const auto& beta : monomials_up_to(k, n)) {
    std::vector<BigInt> lambda(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) lambda[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] + 1;
    LatticePolytope S = Q[0].dilated(lambda[0]);
    for (int i = 1; i < k; ++i)
      S = minkowski_sum(S, Q[static_cast<std::size_t>(i)].dilated(lambda[static_cast<std::size_t>(i)]));
    BigRat v = volume(S).value;
    // clear denominators: fit n! * V, divide out afterwards
    BigRat scaled = v * BigRat(factorial(static_cast<unsigned>(n)));
    if (boost::multiprecision::denominator(scaled) != 1)
      throw std::logic_error("scaled volume should be an integer");
    pts.push_back(std::move(lambda));
    vals.push_back(boost::multiprecision::numerator(scaled));
  }
  MultiPoly fit = fit_exact(pts, vals, k, n).scaled(
      BigRat(1, factorial(static_cast<unsigned>(n))));
  // homogeneity check: everything below total degree n must vanish
  for (const auto& [key, c] : fit.coefficients()) {
    if (std::accumulate(key.begin(), key.end(), 0) < n && c != 0)
      throw std::logic_error("volume polynomial has sub-homogeneous terms");
  }
  // coefficient of lambda^alpha must be MV(Q_alpha)/alpha!
  for (const auto& alpha : monomials_exact(k, n)) {
    std::vector<LatticePolytope> family;
    for (int i = 0; i < k; ++i)
      for (int c = 0; c < alpha[static_cast<std::size_t>(i)]; ++c)
        family.push_back(Q[static_cast<std::size_t>(i)]);
    BigRat mv = mixed_volume(family);
    BigRat expect = mv;
    for (int a : alpha) expect /= BigRat(factorial(static_cast<unsigned>(a)));
    if (fit.coeff(alpha) != expect)
      throw std::logic_error("volume polynomial disagrees with mixed volumes");
  }
  return fit;
}

LatticePolytope newton_polytope(int ambient, const std::vector<Point>& support) {
  return LatticePolytope::hull(ambient, support);
}

BigInt bernstein_bound(const std::vector<std::vector<Point>>& supports) {
  if (supports.empty()) throw std::invalid_argument("no supports given");
  const std::size_t n = supports.size();
  std::vector<LatticePolytope> Q;
  for (const auto& s : supports)
    Q.push_back(newton_polytope(static_cast<int>(n), s));
  BigRat mv = mixed_volume(Q);
  if (boost::multiprecision::denominator(mv) != 1)
    throw std::logic_error("mixed volume of lattice polytopes must be an integer");
  return boost::multiprecision::numerator(mv);
}

bool in_convex_hull(const std::vector<Point>& S, const Point& p) {
  return simplex_membership(S, p);
}

// ---- Fourier-Motzkin feasibility oracle (small instances) ----

bool in_convex_hull_fm(const std::vector<Point>& S, const Point& p) {
  if (S.empty()) return false;
  const std::size_t k = S.size();
  const std::size_t n = p.size();
  // lambda in R^k: equalities (n+1), inequalities lambda_i >= 0.
  // Solve the equalities by rational elimination, then run FM on the rest.
  std::vector<std::vector<BigRat>> eq;  // row: coeffs..., rhs
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigRat> row(k + 1);
    for (std::size_t j = 0; j < k; ++j) row[j] = BigRat(S[j][i]);
    row[k] = BigRat(p[i]);
    eq.push_back(std::move(row));
  }
  eq.emplace_back(k + 1, BigRat(1));

  // inequalities: lambda_j >= 0  as rows (coeffs..., const) meaning
  // sum coeffs*free + const >= 0 after substitution
  std::vector<std::vector<BigRat>> ineq;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<BigRat> row(k + 1, BigRat(0));
    row[j] = 1;
    ineq.push_back(std::move(row));
  }

  // eliminate pivot variables from the equalities
  std::vector<bool> eliminated(k, false);
  for (auto& row : eq) {
    std::size_t piv = k;
    for (std::size_t j = 0; j < k; ++j)
      if (!eliminated[j] && row[j] != 0) { piv = j; break; }
    if (piv == k) {
      if (row[k] != 0) return false;  // 0 = nonzero
      continue;
    }
    BigRat div = row[piv];
    for (auto& x : row) x /= div;
    for (auto& other : ineq) {
      if (other[piv] == 0) continue;
      BigRat f = other[piv];
      for (std::size_t j = 0; j <= k; ++j) {
        // substitute lambda_piv = row[k] - sum_{j != piv} row[j] lambda_j
        if (j == piv) continue;
        other[j] -= f * (j == k ? -row[k] : row[j]);
      }
      other[piv] = 0;
    }
    for (auto& other : eq) {
      if (&other == &row || other[piv] == 0) continue;
      BigRat f = other[piv];
      for (std::size_t j = 0; j <= k; ++j) other[j] -= f * row[j];
    }
    eliminated[piv] = true;
  }

  // FM elimination over the remaining free variables
  for (std::size_t v = 0; v < k; ++v) {
    if (eliminated[v]) continue;
    std::vector<std::vector<BigRat>> pos, neg, rest;
    for (auto& row : ineq) {
      if (row[v] > 0) pos.push_back(row);
      else if (row[v] < 0) neg.push_back(row);
      else rest.push_back(row);
    }
    for (const auto& a : pos)
      for (const auto& b : neg) {
        // a: alpha*v + ... >= 0, b: -beta*v + ... >= 0  ->  combine
        std::vector<BigRat> row(k + 1);
        for (std::size_t j = 0; j <= k; ++j)
          row[j] = a[j] * (-b[v]) + b[j] * a[v];
        row[v] = 0;
        rest.push_back(std::move(row));
      }
    // drop duplicate rows to keep growth in check
    std::sort(rest.begin(), rest.end());
    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
    ineq = std::move(rest);
  }
  for (const auto& row : ineq) {
    bool constant = true;
    for (std::size_t j = 0; j < k; ++j)
      if (row[j] != 0) { constant = false; break; }
    if (constant && row[k] < 0) return false;
  }
  return true;
}

}  // namespace mm::geom
