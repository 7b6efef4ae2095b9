#include "mixedmult/rees.hpp"

#include <map>

#include "mixedmult/kernel.hpp"
#include "mixedmult/multiplicities.hpp"

namespace mm {

namespace {

class ReesCells {
 public:
  explicit ReesCells(const MonomialIdeal& I) : ideal_(I) {
    powers_.push_back(unit_ideal(I.ring()));
  }

  std::int64_t operator()(const std::vector<Exp>& uv) {
    const std::size_t v = static_cast<std::size_t>(uv[1]);
    while (powers_.size() <= v) powers_.push_back(product(powers_.back(), ideal_));
    return static_cast<std::int64_t>(kernel::count_members_total(powers_[v], uv[0]));
  }

 private:
  MonomialIdeal ideal_;
  std::vector<MonomialIdeal> powers_;
};

}  // namespace

HilbertTable rees_hilbert(const MonomialIdeal& I, Exp u_lo, Exp u_hi, Exp v_lo,
                          Exp v_hi) {
  ReesCells cells(I);
  HilbertTable T({u_lo, v_lo}, {u_hi, v_hi});
  for (std::size_t i = 0; i < T.cell_count(); ++i) {
    const std::vector<Exp> uv = T.point_of(i);
    T.set(uv, cells(uv));
  }
  return T;
}

BigInt saturated_quotient_multiplicity(const MonomialIdeal& I) {
  MonomialIdeal sat = saturate(zero_ideal(I.ring()), I);
  if (sat.is_unit()) return 0;
  GradedPresentation P =
      GradedPresentation::make(RingContext::standard(I.ring().nvars), sat);
  const int deg = krull_dim(sat) - 1;
  CellFn f = [&](const std::vector<Exp>& t) {
    return graded_piece_dimension(P, t);
  };
  HilbertPolynomial fit = fit_stable_box(f, 1, deg);
  BigRat lead = fit.poly.coeff({deg}) * BigRat(factorial(static_cast<unsigned>(deg)));
  if (boost::multiprecision::denominator(lead) != 1)
    throw FitCorruption("quotient multiplicity is not an integer");
  return boost::multiprecision::numerator(lead);
}

ReesBigradedData rees_mixed_multiplicities(const MonomialIdeal& I,
                                           const FitOptions& opt) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("blowup data needs a nonzero proper ideal");
  ReesBigradedData R;
  R.ideal = I;
  R.slope = I.max_generator_degree();
  MonomialIdeal sat = saturate(zero_ideal(I.ring()), I);
  R.s = krull_dim(sat) - 1;

  ReesCells cells(I);
  CellFn f = [&cells](const std::vector<Exp>& uv) { return cells(uv); };
  R.fit = fit_stable_cone(f, R.s, R.slope, opt);

  R.e.assign(static_cast<std::size_t>(R.s) + 1, 0);
  for (int i = 0; i <= R.s; ++i) {
    BigRat v = R.fit.poly.coeff({i, R.s - i});
    v *= BigRat(factorial(static_cast<unsigned>(i)) *
                factorial(static_cast<unsigned>(R.s - i)));
    if (boost::multiprecision::denominator(v) != 1)
      throw FitCorruption("blowup mixed multiplicity is not an integer");
    R.e[static_cast<std::size_t>(i)] = boost::multiprecision::numerator(v);
  }
  R.rho = 0;
  for (int i = 0; i <= R.s; ++i)
    if (R.e[static_cast<std::size_t>(i)] != 0) R.rho = i;
  if (R.e[static_cast<std::size_t>(R.rho)] <= 0)
    throw InvariantFailure("top nonzero blowup multiplicity must be positive");
  if (R.e[static_cast<std::size_t>(R.s)] != saturated_quotient_multiplicity(I))
    throw InvariantFailure("top blowup multiplicity disagrees with the saturated quotient");
  return R;
}

MultiPoly quotient_hilbert_polynomial(const ReesBigradedData& R, Exp v) {
  const auto* cone = std::get_if<ConeRegion>(&R.fit.region);
  if (!cone) throw std::logic_error("blowup fit must carry a cone region");
  if (v < cone->v0)
    throw std::invalid_argument("power is below the validated cone region");
  const int n = R.ideal.ring().nvars;
  MultiPoly ambient = binomial_poly(n - 1, n - 1);  // C(u + n - 1, n - 1)
  MultiPoly at_v = R.fit.poly.partial_eval(1, BigInt(v));
  MultiPoly result = ambient - at_v;
  // spot-check against direct enumeration inside the cone
  ReesCells cells(R.ideal);
  for (Exp j = 0; j < 3; ++j) {
    const Exp u = cone->slope * v + cone->u0 + j;
    const BigInt direct =
        BigInt(binomial_u64(u + static_cast<Exp>(n) - 1, static_cast<Exp>(n) - 1)) -
        BigInt(cells({u, v}));
    if (result.eval({BigInt(u)}) != BigRat(direct))
      throw FitCorruption("quotient Hilbert polynomial failed its spot check");
  }
  return result;
}

BigInt embedded_degree(const ReesBigradedData& R, Exp c, Exp e) {
  if (e < 1) throw std::invalid_argument("embedding needs e >= 1");
  if (c <= R.slope * e)
    throw std::invalid_argument("embedding needs c > d*e");
  BigInt total = 0;
  for (int i = 0; i <= R.s; ++i) {
    total += binomial(BigInt(R.s), static_cast<unsigned>(i)) *
             R.e[static_cast<std::size_t>(i)] *
             ipow(BigInt(c), static_cast<unsigned>(i)) *
             ipow(BigInt(e), static_cast<unsigned>(R.s - i));
  }
  if (total <= 0) throw InvariantFailure("embedded degree must be positive");
  return total;
}

BigInt embedded_degree_diagonal_fit(const MonomialIdeal& I, Exp c, Exp e) {
  ReesCells cells(I);
  MonomialIdeal sat = saturate(zero_ideal(I.ring()), I);
  const int s = krull_dim(sat) - 1;
  CellFn f = [&](const std::vector<Exp>& t) -> std::int64_t {
    return cells({c * t[0], e * t[0]});
  };
  FitOptions opt;
  HilbertPolynomial fit = fit_stable_box(f, 1, s, opt);
  BigRat lead = fit.poly.coeff({s}) * BigRat(factorial(static_cast<unsigned>(s)));
  if (boost::multiprecision::denominator(lead) != 1)
    throw FitCorruption("diagonal degree is not an integer");
  return boost::multiprecision::numerator(lead);
}

}  // namespace mm
