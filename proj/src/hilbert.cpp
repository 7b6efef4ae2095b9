#include "mixedmult/hilbert.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "mixedmult/kernel.hpp"
#include "mixedmult/parallel.hpp"

namespace mm {

GradedPresentation GradedPresentation::make(RingContext ring,
                                            MonomialIdeal relations) {
  ring.validate();
  if (!(relations.ring() == ring))
    throw std::invalid_argument("relations live in a different ring");
  if (relations.is_unit())
    throw std::invalid_argument("relations must be a proper ideal");
  return GradedPresentation{std::move(ring), std::move(relations)};
}

HilbertTable::HilbertTable(std::vector<Exp> lo, std::vector<Exp> hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size())
    throw std::invalid_argument("table corner arity mismatch");
  std::size_t cells = 1;
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (hi_[i] < lo_[i]) throw std::invalid_argument("empty table box");
    cells *= static_cast<std::size_t>(hi_[i] - lo_[i] + 1);
  }
  values_.assign(cells, 0);
}

std::size_t HilbertTable::offset(const std::vector<Exp>& u) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (u[i] < lo_[i] || u[i] > hi_[i])
      throw std::out_of_range("table point outside box");
    off = off * static_cast<std::size_t>(hi_[i] - lo_[i] + 1) +
          static_cast<std::size_t>(u[i] - lo_[i]);
  }
  return off;
}

bool HilbertTable::in_range(const std::vector<Exp>& u) const {
  for (std::size_t i = 0; i < lo_.size(); ++i)
    if (u[i] < lo_[i] || u[i] > hi_[i]) return false;
  return true;
}

std::int64_t HilbertTable::at(const std::vector<Exp>& u) const {
  return values_[offset(u)];
}

void HilbertTable::set(const std::vector<Exp>& u, std::int64_t v) {
  values_[offset(u)] = v;
}

std::vector<Exp> HilbertTable::point_of(std::size_t index) const {
  std::vector<Exp> u(lo_.size());
  for (std::size_t i = lo_.size(); i-- > 0;) {
    const std::size_t w = static_cast<std::size_t>(hi_[i] - lo_[i] + 1);
    u[i] = lo_[i] + static_cast<Exp>(index % w);
    index /= w;
  }
  return u;
}

// ---------- enumeration ----------

namespace {

// standard multigraded counting: permute variables into contiguous blocks
struct BlockCounter {
  std::vector<std::vector<int>> block_vars;  // per grading axis
  std::vector<int> kept_axes;                // axes with at least one variable
  std::vector<int> block_lens;
  MonomialIdeal permuted;

  explicit BlockCounter(const GradedPresentation& P) {
    const int s = P.ring.grading_rank;
    block_vars.assign(s, {});
    const auto blk = P.ring.block_assignment();
    for (int v = 0; v < P.ring.nvars; ++v) block_vars[blk[v]].push_back(v);
    std::vector<int> perm;
    for (int b = 0; b < s; ++b) {
      if (block_vars[b].empty()) continue;
      kept_axes.push_back(b);
      block_lens.push_back(static_cast<int>(block_vars[b].size()));
      perm.insert(perm.end(), block_vars[b].begin(), block_vars[b].end());
    }
    std::vector<ExponentVector> gens;
    for (const auto& g : P.relations.generators()) {
      ExponentVector e(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) e[i] = g[perm[i]];
      gens.push_back(std::move(e));
    }
    permuted = MonomialIdeal::from_generators(
        RingContext::standard(static_cast<int>(perm.size())), std::move(gens));
  }

  std::int64_t count(const std::vector<Exp>& u) const {
    // empty blocks admit only degree zero
    for (std::size_t b = 0, k = 0; b < block_vars.size(); ++b) {
      if (!block_vars[b].empty()) { ++k; continue; }
      if (u[b] != 0) return 0;
    }
    std::vector<Exp> degs;
    degs.reserve(kept_axes.size());
    for (int axis : kept_axes) degs.push_back(u[axis]);
    const std::uint64_t total = kernel::count_monomials(block_lens, degs);
    const std::uint64_t members = kernel::count_members(permuted, block_lens, degs);
    return static_cast<std::int64_t>(total - members);
  }
};

std::int64_t count_nonstandard(const GradedPresentation& P,
                               const std::vector<Exp>& u) {
  const int n = P.ring.nvars;
  const int s = P.ring.grading_rank;
  std::vector<Exp> rem = u;
  ExponentVector cand(n);
  std::int64_t total = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      for (int j = 0; j < s; ++j)
        if (rem[j] != 0) return;
      if (!P.relations.contains(cand)) ++total;
      return;
    }
    const auto& d = P.ring.grading[v];
    Exp amax = std::numeric_limits<Exp>::max();
    for (int j = 0; j < s; ++j)
      if (d[j]) amax = std::min(amax, rem[j] / d[j]);
    for (Exp a = 0; a <= amax; ++a) {
      cand[v] = a;
      for (int j = 0; j < s; ++j) rem[j] -= a * d[j];
      self(self, v + 1);
      for (int j = 0; j < s; ++j) rem[j] += a * d[j];
    }
    cand[v] = 0;
  };
  rec(rec, 0);
  return total;
}

}  // namespace

std::int64_t graded_piece_dimension(const GradedPresentation& P,
                                    const std::vector<Exp>& u) {
  if (static_cast<int>(u.size()) != P.ring.grading_rank)
    throw std::invalid_argument("multidegree arity mismatch");
  if (P.ring.is_standard_multigraded()) {
    BlockCounter counter(P);
    return counter.count(u);
  }
  return count_nonstandard(P, u);
}

HilbertTable hilbert_function(const GradedPresentation& P,
                              const std::vector<Exp>& lo,
                              const std::vector<Exp>& hi) {
  HilbertTable T(lo, hi);
  const bool standard = P.ring.is_standard_multigraded();
  std::optional<BlockCounter> counter;
  if (standard) counter.emplace(P);
  parallel_for(T.cell_count(), [&](std::size_t i) {
    const std::vector<Exp> u = T.point_of(i);
    T.set(u, standard ? counter->count(u) : count_nonstandard(P, u));
  });
  return T;
}

HilbertTable sum_transform(const HilbertTable& T, const std::vector<int>& axes) {
  HilbertTable R = T;
  for (int axis : axes) {
    if (axis < 0 || axis >= T.arity())
      throw std::invalid_argument("sum_transform axis out of range");
    for (std::size_t i = 0; i < R.cell_count(); ++i) {
      std::vector<Exp> u = R.point_of(i);
      if (u[axis] == R.lower()[axis]) continue;
      std::vector<Exp> prev = u;
      prev[axis] -= 1;
      R.set(u, R.at(u) + R.at(prev));
    }
  }
  return R;
}

// ---------- fitting ----------

namespace {

class CellCache {
 public:
  explicit CellCache(const CellFn& f) : f_(f) {}

  // evaluate (in parallel) every missing point of the box [lo, hi]
  void ensure_box(const std::vector<Exp>& lo, const std::vector<Exp>& hi) {
    std::vector<std::vector<Exp>> missing;
    std::vector<Exp> u = lo;
    for (;;) {
      if (!cache_.count(u)) missing.push_back(u);
      std::size_t i = u.size();
      for (; i-- > 0;) {
        if (u[i] < hi[i]) { ++u[i]; break; }
        u[i] = lo[i];
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
    std::vector<std::int64_t> vals(missing.size());
    parallel_for(missing.size(), [&](std::size_t i) { vals[i] = f_(missing[i]); });
    for (std::size_t i = 0; i < missing.size(); ++i) cache_[missing[i]] = vals[i];
  }

  std::int64_t get(const std::vector<Exp>& u) {
    auto it = cache_.find(u);
    if (it != cache_.end()) return it->second;
    return cache_[u] = f_(u);
  }

 private:
  const CellFn& f_;
  std::map<std::vector<Exp>, std::int64_t> cache_;
};

bool validate_box(CellCache& cache, const MultiPoly& poly,
                  const std::vector<Exp>& lo, const std::vector<Exp>& hi,
                  std::vector<Exp>* mismatch) {
  std::vector<Exp> u = lo;
  for (;;) {
    std::vector<BigInt> pt(u.begin(), u.end());
    if (poly.eval(pt) != BigRat(cache.get(u))) {
      if (mismatch) *mismatch = u;
      return false;
    }
    std::size_t i = u.size();
    for (; i-- > 0;) {
      if (u[i] < hi[i]) { ++u[i]; break; }
      u[i] = lo[i];
    }
    if (i == static_cast<std::size_t>(-1)) return true;
  }
}

MultiPoly fit_window(CellCache& cache, const std::vector<Exp>& corner, int s,
                     int degree) {
  if (degree == kZeroPolyDegree) return MultiPoly(s);
  std::vector<std::vector<BigInt>> pts;
  std::vector<BigInt> vals;
  for (const auto& beta : monomials_up_to(s, degree)) {
    std::vector<Exp> u(corner);
    for (int i = 0; i < s; ++i) u[i] += static_cast<Exp>(beta[i]);
    pts.emplace_back(u.begin(), u.end());
    vals.push_back(cache.get(u));
  }
  return fit_exact(pts, vals, s, degree);
}

}  // namespace

HilbertPolynomial fit_stable_box(const CellFn& f, int s, int degree,
                                 const FitOptions& opt) {
  if (degree < kZeroPolyDegree) throw std::invalid_argument("bad fit degree");
  CellCache cache(f);
  const Exp side = static_cast<Exp>(degree + 2);
  Exp L = opt.initial_corner + 2 * side - 1;
  std::vector<Exp> mismatch;
  for (;;) {
    if (L > opt.box_cap) throw UnstableRegion(mismatch);
    const std::vector<Exp> hi(s, L);
    const Exp cval = L + 1 >= 2 * side ? L + 1 - 2 * side : 0;
    const std::vector<Exp> lo(s, cval);
    cache.ensure_box(lo, hi);
    const std::vector<Exp> cfit(s, L + 1 - side);
    MultiPoly poly = fit_window(cache, cfit, s, degree);
    if (validate_box(cache, poly, lo, hi, &mismatch)) {
      // shrink to the smallest validated corner
      std::vector<Exp> corner = lo;
      bool changed = true;
      while (changed) {
        changed = false;
        for (int i = 0; i < s; ++i) {
          while (corner[i] > 0) {
            std::vector<Exp> lo2 = corner;
            lo2[i] -= 1;
            std::vector<Exp> hi2 = hi;
            hi2[i] = lo2[i];  // only the new slab needs checking
            cache.ensure_box(lo2, hi2);
            if (!validate_box(cache, poly, lo2, hi2, nullptr)) break;
            corner = lo2;
            changed = true;
          }
        }
      }
      return HilbertPolynomial{std::move(poly), BoxRegion{corner}};
    }
    L = 2 * L + 1;
  }
}

HilbertPolynomial fit_stable_cone(const CellFn& f, int degree, Exp slope,
                                  const FitOptions& opt) {
  if (degree < 0) throw std::invalid_argument("cone fit needs a degree");
  CellCache cache(f);  // cells keyed by (u, v)
  const Exp side = static_cast<Exp>(degree + 2);
  Exp u1 = opt.cone_u1, v1 = opt.cone_v1;
  std::vector<Exp> mismatch;
  for (;;) {
    if (v1 + 2 * side > opt.box_cap) throw UnstableRegion(mismatch);
    // window: triangle in (j, w) mapped through u = slope*v + u1 + j
    std::vector<std::vector<BigInt>> pts;
    std::vector<BigInt> vals;
    for (const auto& beta : monomials_up_to(2, degree)) {
      const Exp w = v1 + static_cast<Exp>(beta[1]);
      const Exp u = slope * w + u1 + static_cast<Exp>(beta[0]);
      vals.push_back(cache.get({u, w}));
      pts.push_back({BigInt(u), BigInt(w)});
    }
    MultiPoly poly = fit_exact(pts, vals, 2, degree);
    bool ok = true;
    for (Exp w = v1; w <= v1 + 2 * side && ok; ++w) {
      for (Exp j = 0; j <= 2 * side && ok; ++j) {
        const Exp u = slope * w + u1 + j;
        if (poly.eval({BigInt(u), BigInt(w)}) != BigRat(cache.get({u, w}))) {
          ok = false;
          mismatch = {u, w};
        }
      }
    }
    if (ok) {
      ConeRegion region{slope, u1, v1};
      // shrink offsets greedily
      auto valid_at = [&](Exp uu, Exp vv) {
        for (Exp w = vv; w <= v1 + 2 * side; ++w)
          for (Exp j = 0; j <= 2 * side; ++j) {
            const Exp u = slope * w + uu + j;
            if (poly.eval({BigInt(u), BigInt(w)}) != BigRat(cache.get({u, w})))
              return false;
          }
        return true;
      };
      while (region.v0 > 0 && valid_at(region.u0, region.v0 - 1)) --region.v0;
      while (region.u0 > 0 && valid_at(region.u0 - 1, region.v0)) --region.u0;
      return HilbertPolynomial{std::move(poly), region};
    }
    u1 += side;
    v1 += side;
  }
}

HilbertPolynomial fit_polynomial(const HilbertTable& T, int expected_degree,
                                 const std::vector<Exp>& corner_hypothesis) {
  const int s = T.arity();
  CellFn lookup = [&T](const std::vector<Exp>& u) { return T.at(u); };
  CellCache cache(lookup);
  MultiPoly poly = fit_window(cache, corner_hypothesis, s, expected_degree);
  // validate on every table point in the region
  for (std::size_t i = 0; i < T.cell_count(); ++i) {
    const std::vector<Exp> u = T.point_of(i);
    bool inside = true;
    for (int j = 0; j < s; ++j) inside = inside && u[j] >= corner_hypothesis[j];
    if (!inside) continue;
    std::vector<BigInt> pt(u.begin(), u.end());
    if (poly.eval(pt) != BigRat(T.at(u))) throw UnstableRegion(u);
  }
  // smallest corner within the table
  std::vector<Exp> corner = corner_hypothesis;
  bool changed = true;
  auto matches_from = [&](const std::vector<Exp>& c) {
    for (std::size_t i = 0; i < T.cell_count(); ++i) {
      const std::vector<Exp> u = T.point_of(i);
      bool inside = true;
      for (int j = 0; j < s; ++j) inside = inside && u[j] >= c[j];
      if (!inside) continue;
      std::vector<BigInt> pt(u.begin(), u.end());
      if (poly.eval(pt) != BigRat(T.at(u))) return false;
    }
    return true;
  };
  while (changed) {
    changed = false;
    for (int i = 0; i < s; ++i) {
      while (corner[i] > T.lower()[i]) {
        std::vector<Exp> c2 = corner;
        c2[i] -= 1;
        if (!matches_from(c2)) break;
        corner = c2;
        changed = true;
      }
    }
  }
  return HilbertPolynomial{std::move(poly), BoxRegion{corner}};
}

// ---------- presentation invariants ----------

MonomialIdeal saturate_by_irrelevant(const GradedPresentation& P) {
  if (!P.ring.is_standard_multigraded())
    throw std::invalid_argument("irrelevant saturation needs a standard multigrading");
  const int s = P.ring.grading_rank;
  std::vector<std::vector<int>> block_vars(s);
  const auto blk = P.ring.block_assignment();
  for (int v = 0; v < P.ring.nvars; ++v) block_vars[blk[v]].push_back(v);
  for (const auto& b : block_vars)
    if (b.empty())
      throw std::invalid_argument("empty grading block: irrelevant ideal is zero");
  // products of one variable of each unit degree
  std::vector<ExponentVector> gens;
  ExponentVector cur(P.ring.nvars);
  auto rec = [&](auto&& self, int b) -> void {
    if (b == s) { gens.push_back(cur); return; }
    for (int v : block_vars[b]) {
      cur[v] += 1;
      self(self, b + 1);
      cur[v] -= 1;
    }
  };
  rec(rec, 0);
  MonomialIdeal rplus = MonomialIdeal::from_generators(P.ring, std::move(gens));
  return saturate(P.relations, rplus);
}

int relevant_total_degree(const GradedPresentation& P) {
  if (!P.ring.is_standard_multigraded())
    throw std::invalid_argument("relevant dimension needs a standard multigrading");
  const int s = P.ring.grading_rank;
  const auto blk = P.ring.block_assignment();
  std::vector<int> sizes(s, 0);
  for (int v = 0; v < P.ring.nvars; ++v) sizes[blk[v]]++;
  for (int b = 0; b < s; ++b)
    if (sizes[b] == 0) return kZeroPolyDegree;
  MonomialIdeal sat = saturate_by_irrelevant(P);
  if (sat.is_unit()) return kZeroPolyDegree;
  return krull_dim(sat) - s;
}

std::pair<int, int> partial_degrees(const GradedPresentation& P) {
  if (P.ring.grading_rank != 2)
    throw std::invalid_argument("partial degrees need a bigraded presentation");
  if (!P.ring.is_standard_multigraded())
    throw std::invalid_argument("partial degrees need a standard bigrading");
  const auto blk = P.ring.block_assignment();
  std::vector<std::vector<int>> block_vars(2);
  for (int v = 0; v < P.ring.nvars; ++v) block_vars[blk[v]].push_back(v);
  if (block_vars[0].empty() || block_vars[1].empty())
    return {kZeroPolyDegree, kZeroPolyDegree};
  MonomialIdeal sat = saturate_by_irrelevant(P);
  auto block_ideal = [&](int b) {
    std::vector<ExponentVector> gens;
    for (int v : block_vars[b])
      gens.push_back(ExponentVector::unit(P.ring.nvars, v));
    return MonomialIdeal::from_generators(P.ring, std::move(gens));
  };
  auto dim_with = [&](int b) {
    MonomialIdeal s2 = sum(sat, block_ideal(b));
    return s2.is_unit() ? kZeroPolyDegree : krull_dim(s2) - 1;
  };
  return {dim_with(1), dim_with(0)};
}

MixedMultiplicityVector extract_mixed_multiplicities(const HilbertPolynomial& H) {
  MixedMultiplicityVector out;
  out.total_degree = H.poly.total_degree();
  if (out.total_degree == kZeroPolyDegree)
    throw std::invalid_argument("zero Hilbert polynomial has no mixed multiplicities");
  for (const auto& [k, v] : H.poly.top_part().coefficients()) {
    BigRat e = v;
    for (int a : k) e *= BigRat(factorial(static_cast<unsigned>(a)));
    if (boost::multiprecision::denominator(e) != 1)
      throw FitCorruption("non-integer normalized top coefficient");
    out.entries[k] = boost::multiprecision::numerator(e);
  }
  return out;
}

namespace {

std::vector<std::uint64_t> minimal_prime_masks(const MonomialIdeal& I) {
  const int n = I.ring().nvars;
  if (n > 24) throw std::invalid_argument("too many variables for prime search");
  std::vector<std::uint64_t> sup;
  for (const auto& g : I.generators()) sup.push_back(g.support_mask());
  std::vector<std::uint64_t> covers;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    bool covers_all = true;
    for (std::uint64_t s : sup)
      if ((s & mask) == 0) { covers_all = false; break; }
    if (covers_all) covers.push_back(mask);
  }
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t c : covers) {
    bool is_min = true;
    for (std::uint64_t d : covers)
      if (d != c && (d & ~c) == 0) { is_min = false; break; }
    if (is_min) minimal.push_back(c);
  }
  return minimal;
}

}  // namespace

BigInt total_grading_multiplicity(const GradedPresentation& P) {
  if (!P.ring.is_standard_multigraded())
    throw std::invalid_argument("total grading collapse needs a standard multigrading");
  const int s = P.ring.grading_rank;
  const auto blk = P.ring.block_assignment();
  // precondition: every degree-block ideal has positive height
  const auto primes = minimal_prime_masks(P.relations);
  for (int b = 0; b < s; ++b) {
    std::uint64_t block_mask = 0;
    for (int v = 0; v < P.ring.nvars; ++v)
      if (blk[v] == b) block_mask |= std::uint64_t(1) << v;
    if (block_mask == 0)
      throw std::invalid_argument("empty degree block violates the height hypothesis");
    for (std::uint64_t p : primes)
      if ((block_mask & ~p) == 0)
        throw std::invalid_argument("degree block ideal has height zero");
  }

  MonomialIdeal sat = saturate(P.relations, variable_ideal(P.ring));
  if (sat.is_unit()) return 0;
  const int deg = krull_dim(sat) - 1;

  BlockCounter counter(P);
  CellFn f = [&](const std::vector<Exp>& t) -> std::int64_t {
    std::int64_t total = 0;
    std::vector<Exp> u(s, 0);
    auto rec = [&](auto&& self, int b, Exp left) -> void {
      if (b == s - 1) {
        u[b] = left;
        total += counter.count(u);
        return;
      }
      for (Exp a = 0; a <= left; ++a) {
        u[b] = a;
        self(self, b + 1, left - a);
      }
    };
    rec(rec, 0, t[0]);
    return total;
  };
  HilbertPolynomial fit = fit_stable_box(f, 1, deg);
  BigRat lead = fit.poly.coeff({deg}) * BigRat(factorial(static_cast<unsigned>(deg)));
  if (boost::multiprecision::denominator(lead) != 1)
    throw FitCorruption("total multiplicity is not an integer");
  return boost::multiprecision::numerator(lead);
}

BigInt diagonal_multiplicity(const GradedPresentation& P,
                             const std::vector<Exp>& lambda) {
  for (Exp l : lambda)
    if (l == 0) throw std::invalid_argument("diagonal requires strictly positive lambda");
  const int r = relevant_total_degree(P);
  if (r == kZeroPolyDegree) return 0;
  BlockCounter counter(P);
  CellFn f = [&](const std::vector<Exp>& t) -> std::int64_t {
    std::vector<Exp> u(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) u[i] = t[0] * lambda[i];
    return counter.count(u);
  };
  HilbertPolynomial fit = fit_stable_box(f, 1, r);
  BigRat lead = fit.poly.coeff({r}) * BigRat(factorial(static_cast<unsigned>(r)));
  if (boost::multiprecision::denominator(lead) != 1)
    throw FitCorruption("diagonal multiplicity is not an integer");
  return boost::multiprecision::numerator(lead);
}

}  // namespace mm
