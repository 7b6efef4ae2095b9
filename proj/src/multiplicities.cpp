#include "mixedmult/multiplicities.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mixedmult/kernel.hpp"

namespace mm {

namespace {

// powers of a fixed ideal, computed once
class PowerCache {
 public:
  explicit PowerCache(MonomialIdeal base) : base_(std::move(base)) {
    powers_.push_back(unit_ideal(base_.ring()));
  }
  const MonomialIdeal& get(std::size_t k) {
    while (powers_.size() <= k)
      powers_.push_back(product(powers_.back(), base_));
    return powers_[k];
  }

 private:
  MonomialIdeal base_;
  std::vector<MonomialIdeal> powers_;
};

BigInt count_total(const MonomialIdeal& I, Exp t) {
  return BigInt(kernel::count_members_total(I, t));
}

BigInt monomials_of_degree(const RingContext& ring, Exp t) {
  return BigInt(binomial_u64(t + ring.nvars - 1, ring.nvars - 1));
}

std::vector<int> key_of(const std::vector<Exp>& u) {
  return std::vector<int>(u.begin(), u.end());
}

BigInt factorial_of_key(const std::vector<int>& k) {
  BigInt f = 1;
  for (int a : k) f *= factorial(static_cast<unsigned>(a));
  return f;
}

}  // namespace

IdealTuple IdealTuple::make(MonomialIdeal primary,
                            std::vector<MonomialIdeal> others) {
  if (!is_primary_to_max_ideal(primary))
    throw std::invalid_argument("tuple head must be primary to the variable ideal");
  for (const auto& J : others) {
    if (!(J.ring() == primary.ring()))
      throw std::invalid_argument("tuple ideals live in different rings");
    if (J.is_zero() || J.is_unit())
      throw std::invalid_argument("tuple ideals must be nonzero and proper");
  }
  return IdealTuple{std::move(primary), std::move(others)};
}

BigInt quotient_length(const MonomialIdeal& K1, const MonomialIdeal& K2,
                       Exp degree_bound) {
  BigInt total = 0;
  for (Exp t = 0; t <= degree_bound; ++t)
    total += count_total(K1, t) - count_total(K2, t);
  return total;
}

BigInt colength(const MonomialIdeal& I) {
  if (I.is_unit()) return 0;
  if (!is_primary_to_max_ideal(I))
    throw std::invalid_argument("colength is infinite: ideal is not m-primary");
  BigInt total = 0;
  for (Exp t = 0;; ++t) {
    BigInt standard = monomials_of_degree(I.ring(), t) - count_total(I, t);
    if (standard == 0) return total;
    total += standard;
  }
}

BigInt bhattacharya_length(const IdealTuple& T, const std::vector<unsigned>& u) {
  if (u.size() != T.others.size() + 1)
    throw std::invalid_argument("power tuple arity mismatch");
  for (const auto& J : T.others)
    if (!is_primary_to_max_ideal(J))
      throw std::invalid_argument("length is infinite: tuple ideal is not m-primary");
  MonomialIdeal K = power(T.primary, u[0]);
  for (std::size_t i = 0; i < T.others.size(); ++i)
    K = product(K, power(T.others[i], u[i + 1]));
  return colength(K);
}

namespace {

// Cell evaluator for the standard multigraded algebra of (I | J_1..J_s):
// H(u0, u) = ell(I^{u0} prod J^{u_i} / I^{u0+1} prod J^{u_i}).
class TupleCells {
 public:
  explicit TupleCells(const IdealTuple& T)
      : tuple_(T), primary_powers_(T.primary) {
    for (const auto& J : T.others) other_powers_.emplace_back(J);
    primary_is_m_ =
        T.primary.generators() == variable_ideal(T.primary.ring()).generators();
    single_degree_ = primary_is_m_;
    for (const auto& J : T.others)
      single_degree_ = single_degree_ && J.generated_in_single_degree();
    containment_bound_ = primary_containment_bound(T.primary);
  }

  std::int64_t operator()(const std::vector<Exp>& u) {
    MonomialIdeal K = other_powers_[0].get(static_cast<std::size_t>(u[1]));
    for (std::size_t i = 1; i < other_powers_.size(); ++i)
      K = product(K, other_powers_[i].get(static_cast<std::size_t>(u[i + 1])));
    if (single_degree_) {
      // the quotient is concentrated in the minimal degree
      const Exp d = K.is_unit() ? u[0] : u[0] + K.min_generator_degree();
      MonomialIdeal KJ = K;
      return static_cast<std::int64_t>(kernel::count_members_total(KJ, d));
    }
    K = product(primary_powers_.get(static_cast<std::size_t>(u[0])), K);
    MonomialIdeal K2 = product(K, tuple_.primary);
    const Exp bound = checked_add(K.max_generator_degree(), containment_bound_);
    BigInt len = quotient_length(K, K2, bound);
    return static_cast<std::int64_t>(len);
  }

 private:
  const IdealTuple& tuple_;
  PowerCache primary_powers_;
  std::vector<PowerCache> other_powers_;
  bool primary_is_m_ = false;
  bool single_degree_ = false;
  Exp containment_bound_ = 1;
};

int tuple_fit_degree(const IdealTuple& T) {
  // deg P = dim A/0 : (prod J)^infty - 1; the saturation is zero for nonzero J
  MonomialIdeal Jprod = unit_ideal(T.primary.ring());
  for (const auto& J : T.others) Jprod = product(Jprod, J);
  MonomialIdeal sat = saturate(zero_ideal(T.primary.ring()), Jprod);
  if (sat.is_unit()) return kZeroPolyDegree;
  return krull_dim(sat) - 1;
}

}  // namespace

MixedMultiplicityResult mixed_multiplicities(const IdealTuple& T,
                                             const FitOptions& opt) {
  const int s = static_cast<int>(T.others.size()) + 1;
  const int degree = tuple_fit_degree(T);
  TupleCells cells(T);
  CellFn f = [&cells](const std::vector<Exp>& u) { return cells(u); };
  HilbertPolynomial fit = fit_stable_box(f, s, degree, opt);
  MixedMultiplicityResult out;
  out.fit = fit;
  out.degree = degree;
  out.top = extract_mixed_multiplicities(fit);
  return out;
}

std::vector<BigInt> mixed_e_list(const MonomialIdeal& I, const MonomialIdeal& J,
                                 const FitOptions& opt) {
  IdealTuple T = IdealTuple::make(I, {J});
  MixedMultiplicityResult r = mixed_multiplicities(T, opt);
  const int d = r.degree + 1;  // = dim of the ambient ring here
  std::vector<BigInt> e(static_cast<std::size_t>(d), 0);
  for (int j = 0; j < d; ++j)
    e[static_cast<std::size_t>(j)] = r.top.at({d - 1 - j, j});
  return e;
}

std::vector<BigInt> bhattacharya_e_full(const MonomialIdeal& I,
                                        const MonomialIdeal& J,
                                        const FitOptions& opt) {
  if (!is_primary_to_max_ideal(J))
    throw std::invalid_argument("full mixed multiplicity list needs m-primary J");
  std::vector<BigInt> e = mixed_e_list(I, J, opt);
  e.push_back(samuel_multiplicity(J));
  return e;
}

BigInt samuel_multiplicity(const MonomialIdeal& I) {
  if (!is_primary_to_max_ideal(I))
    throw std::invalid_argument("Samuel multiplicity needs an m-primary ideal");
  const int d = I.ring().nvars;
  PowerCache powers(I);
  CellFn f = [&](const std::vector<Exp>& t) -> std::int64_t {
    return static_cast<std::int64_t>(colength(powers.get(static_cast<std::size_t>(t[0]))));
  };
  HilbertPolynomial fit = fit_stable_box(f, 1, d);
  BigRat lead = fit.poly.coeff({d}) * BigRat(factorial(static_cast<unsigned>(d)));
  if (boost::multiprecision::denominator(lead) != 1)
    throw FitCorruption("Samuel leading coefficient is not an integer");
  BigInt e = boost::multiprecision::numerator(lead);
  if (e <= 0) throw InvariantFailure("Samuel multiplicity must be positive");
  return e;
}

int analytic_spread(const MonomialIdeal& J) {
  if (J.is_zero() || J.is_unit())
    throw std::invalid_argument("analytic spread needs a nonzero proper ideal");
  PowerCache powers(J);
  CellFn f = [&](const std::vector<Exp>& t) -> std::int64_t {
    return static_cast<std::int64_t>(
        powers.get(static_cast<std::size_t>(t[0])).num_generators());
  };
  const int n = J.ring().nvars;
  for (int deg = 0; deg < n; ++deg) {
    try {
      fit_stable_box(f, 1, deg);
      return deg + 1;
    } catch (const UnstableRegion&) {
      continue;
    }
  }
  throw InvariantFailure("fiber ring growth exceeded the ring dimension");
}

RigidityReport rigidity_check(const MonomialIdeal& I, const MonomialIdeal& J,
                              const FitOptions& opt) {
  RigidityReport rep;
  IdealTuple T = IdealTuple::make(I, {J});
  MixedMultiplicityResult r = mixed_multiplicities(T, opt);
  const int d = r.degree + 1;
  std::vector<BigInt> e(static_cast<std::size_t>(d), 0);
  for (int j = 0; j < d; ++j) e[static_cast<std::size_t>(j)] = r.top.at({d - 1 - j, j});

  rep.rho = -1;
  for (int j = 0; j < d; ++j)
    if (e[static_cast<std::size_t>(j)] != 0) rep.rho = j;
  rep.positivity_ok = true;
  for (int j = 0; j <= rep.rho; ++j)
    if (e[static_cast<std::size_t>(j)] <= 0) rep.positivity_ok = false;
  rep.height_lo = height(J) - 1;
  const int spread = analytic_spread(J);
  rep.spread_hi = spread - 1;
  rep.bracket_ok = rep.height_lo <= rep.rho && rep.rho <= rep.spread_hi;
  rep.degree_bound_ok = r.fit.poly.degree_in(1) < spread;
  return rep;
}

OrderFormulaReport order_formula_check(const MonomialIdeal& J,
                                       const FitOptions& opt) {
  if (height(J) < 2)
    throw std::invalid_argument("order formula needs height at least two");
  OrderFormulaReport rep;
  rep.order = order(J);
  std::vector<BigInt> e =
      mixed_e_list(variable_ideal(J.ring()), J, opt);
  rep.e1 = e.size() > 1 ? e[1] : BigInt(0);
  rep.ok = rep.e1 == BigInt(rep.order);
  return rep;
}

namespace {

// cells of the bigraded algebra whose double sum transform carries the
// multiplicity sequence
class SequenceCells {
 public:
  explicit SequenceCells(const MonomialIdeal& I)
      : ideal_(I), mpowers_(variable_ideal(I.ring())), ipowers_(I) {}

  std::int64_t base(Exp u, Exp v) {
    const auto key = std::make_pair(u, v);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const MonomialIdeal& Iv = ipowers_.get(static_cast<std::size_t>(v));
    const MonomialIdeal& Iv1 = ipowers_.get(static_cast<std::size_t>(v) + 1);
    MonomialIdeal K1 = sum(product(mpowers_.get(static_cast<std::size_t>(u)), Iv), Iv1);
    MonomialIdeal K2 =
        sum(product(mpowers_.get(static_cast<std::size_t>(u) + 1), Iv), Iv1);
    const Exp bound = checked_add(K1.max_generator_degree(), 1);
    std::int64_t val = static_cast<std::int64_t>(quotient_length(K1, K2, bound));
    memo_[key] = val;
    return val;
  }

  std::int64_t summed(Exp u, Exp v) {
    std::int64_t total = 0;
    for (Exp i = 0; i <= u; ++i)
      for (Exp j = 0; j <= v; ++j) total += base(i, j);
    return total;
  }

 private:
  const MonomialIdeal& ideal_;
  PowerCache mpowers_, ipowers_;
  std::map<std::pair<Exp, Exp>, std::int64_t> memo_;
};

}  // namespace

MultiplicitySequence multiplicity_sequence(const MonomialIdeal& I,
                                           const FitOptions& opt) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("multiplicity sequence needs a nonzero proper ideal");
  const int d = I.ring().nvars;
  SequenceCells cells(I);
  CellFn f = [&](const std::vector<Exp>& u) { return cells.summed(u[0], u[1]); };
  HilbertPolynomial fit = fit_stable_box(f, 2, d, opt);
  MultiplicitySequence seq;
  seq.c.assign(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i <= d; ++i) {
    BigRat v = fit.poly.coeff({i, d - i});
    v *= BigRat(factorial(static_cast<unsigned>(i)) *
                factorial(static_cast<unsigned>(d - i)));
    if (boost::multiprecision::denominator(v) != 1)
      throw FitCorruption("multiplicity sequence entry is not an integer");
    seq.c[static_cast<std::size_t>(i)] = boost::multiprecision::numerator(v);
  }
  // support bracket: c_j = 0 outside [d - s(I), dim A/I]
  const int spread = analytic_spread(I);
  const int quotient_dim = krull_dim(I);
  for (int j = 0; j <= d; ++j) {
    const BigInt& cj = seq.c[static_cast<std::size_t>(j)];
    if (cj < 0) throw InvariantFailure("negative multiplicity sequence entry");
    if ((j < d - spread || j > quotient_dim) && cj != 0)
      throw InvariantFailure("multiplicity sequence support violates its bracket");
  }
  return seq;
}

BigInt j_multiplicity(const MonomialIdeal& I) {
  return multiplicity_sequence(I).c[0];
}

namespace {

// ell(m^a I^b / m^{a+1} I^b) cells shared by the blowup filtrations
class BlowupCells {
 public:
  explicit BlowupCells(const MonomialIdeal& I)
      : mpowers_(variable_ideal(I.ring())), ipowers_(I) {}

  std::int64_t get(Exp a, Exp b) {
    const auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    MonomialIdeal K1 =
        product(mpowers_.get(static_cast<std::size_t>(a)),
                ipowers_.get(static_cast<std::size_t>(b)));
    MonomialIdeal K2 = product(K1, mpowers_.get(1));
    const Exp bound = checked_add(K1.max_generator_degree(), 1);
    std::int64_t v = static_cast<std::int64_t>(quotient_length(K1, K2, bound));
    memo_[key] = v;
    return v;
  }

 private:
  PowerCache mpowers_, ipowers_;
  std::map<std::pair<Exp, Exp>, std::int64_t> memo_;
};

BigInt leading_multiplicity(const HilbertPolynomial& fit, int degree) {
  BigRat lead = fit.poly.coeff(std::vector<int>(1, degree)) *
                BigRat(factorial(static_cast<unsigned>(degree)));
  if (boost::multiprecision::denominator(lead) != 1)
    throw FitCorruption("multiplicity is not an integer");
  return boost::multiprecision::numerator(lead);
}

}  // namespace

BigInt rees_algebra_multiplicity(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("Rees multiplicity needs a nonzero proper ideal");
  const int d = I.ring().nvars;  // dim of the Rees algebra minus one
  BlowupCells cells(I);
  CellFn f = [&](const std::vector<Exp>& t) -> std::int64_t {
    std::int64_t total = 0;
    for (Exp i = 0; i <= t[0]; ++i) total += cells.get(t[0] - i, i);
    return total;
  };
  HilbertPolynomial fit = fit_stable_box(f, 1, d);
  return leading_multiplicity(fit, d);
}

BigInt assoc_graded_multiplicity(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("associated graded multiplicity needs a proper ideal");
  const int d = I.ring().nvars;
  SequenceCells cells(I);
  CellFn f = [&](const std::vector<Exp>& t) -> std::int64_t {
    std::int64_t total = 0;
    for (Exp u = 0; u <= t[0]; ++u) total += cells.base(u, t[0] - u);
    return total;
  };
  HilbertPolynomial fit = fit_stable_box(f, 1, d - 1);
  return leading_multiplicity(fit, d - 1);
}

BigInt extended_rees_multiplicity(const MonomialIdeal& I) {
  const int d = I.ring().nvars;
  MonomialIdeal m2I = sum(power(variable_ideal(I.ring()), 2), I);
  BigInt front = samuel_multiplicity(m2I);
  std::vector<BigInt> e = mixed_e_list(m2I, I);
  BigRat rhs(front);
  for (int j = 0; j < d; ++j)
    rhs += BigRat(ipow(BigInt(2), static_cast<unsigned>(j)) *
                  e[static_cast<std::size_t>(j)]);
  rhs /= BigRat(ipow(BigInt(2), static_cast<unsigned>(d)));
  if (boost::multiprecision::denominator(rhs) != 1)
    throw FitCorruption("extended Rees multiplicity is not an integer");
  return boost::multiprecision::numerator(rhs);
}

std::vector<BigInt> stuckrad_vogel_degrees(const MonomialIdeal& I) {
  const int d = I.ring().nvars;
  std::vector<BigInt> e = mixed_e_list(variable_ideal(I.ring()), I);
  auto at = [&](int i) -> BigInt {
    if (i < 0 || i >= static_cast<int>(e.size())) return 0;
    return e[static_cast<std::size_t>(i)];
  };
  std::vector<BigInt> degs;
  for (int i = 1; i <= d; ++i) degs.push_back(at(i - 1) - at(i));
  return degs;
}

MilnorSequence milnor_sequence(const std::vector<unsigned>& exponents) {
  if (exponents.size() < 2)
    throw std::invalid_argument("need at least two exponents");
  for (unsigned a : exponents)
    if (a < 2) throw std::invalid_argument("Brieskorn exponents must be at least 2");
  const int n = static_cast<int>(exponents.size()) - 1;  // hypersurface dim
  RingContext ring = RingContext::standard(n + 1);
  std::vector<ExponentVector> gens;
  for (int i = 0; i <= n; ++i)
    gens.push_back(ExponentVector::unit(n + 1, i, exponents[static_cast<std::size_t>(i)] - 1));
  MonomialIdeal jac = MonomialIdeal::from_generators(ring, std::move(gens));
  std::vector<BigInt> e = mixed_e_list(variable_ideal(ring), jac);
  MilnorSequence seq;
  seq.mu = std::move(e);                       // mu^(0)..mu^(n)
  seq.mu.push_back(samuel_multiplicity(jac));  // mu^(n+1)
  if (seq.mu[0] != 1) throw InvariantFailure("mu^(0) must be 1");
  return seq;
}

namespace {

// exact test of c^(1/d) <= a^(1/d) + b^(1/d) for positive integers
std::pair<bool, std::string> minkowski_exact(const BigInt& a, const BigInt& b,
                                             const BigInt& c, unsigned d) {
  // proportional case: a/b a perfect d-th power makes everything rational
  BigRat ratio(a, b);
  BigInt p, q;
  if (is_perfect_power(boost::multiprecision::numerator(ratio), d, p) &&
      is_perfect_power(boost::multiprecision::denominator(ratio), d, q)) {
    // a^(1/d) + b^(1/d) = ((p+q)/q) * b^(1/d); compare d-th powers
    BigInt lhs = c * ipow(q, d);
    BigInt rhs = b * ipow(p + q, d);
    return {lhs <= rhs, "exact-rational"};
  }
  // strict inequality: bracket by integer d-th roots of scaled radicands
  for (unsigned k = 8; k <= 512; k *= 2) {
    const BigInt scale = ipow(BigInt(2), k);
    const BigInt scale_d = ipow(scale, d);
    BigInt A = iroot_floor(a * scale_d, d);
    BigInt B = iroot_floor(b * scale_d, d);
    if (c * scale_d <= ipow(A + B, d)) return {true, "root-bracketing"};
    if (c * scale_d > ipow(A + B + 2, d)) return {false, "root-bracketing"};
  }
  return {false, "inconclusive"};
}

}  // namespace

InequalityReport inequality_suite(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (!is_primary_to_max_ideal(I) || !is_primary_to_max_ideal(J))
    throw std::invalid_argument("inequality suite needs m-primary ideals");
  const unsigned d = static_cast<unsigned>(I.ring().nvars);
  InequalityReport rep;
  rep.e = bhattacharya_e_full(I, J);
  rep.e_product = samuel_multiplicity(product(I, J));

  BigInt expansion = 0;
  for (unsigned i = 0; i <= d; ++i)
    expansion += binomial(BigInt(d), i) * rep.e[i];
  rep.expansion_ok = expansion == rep.e_product;

  rep.teissier_ok = true;
  for (unsigned i = 0; i <= d; ++i) {
    BigInt lhs = ipow(rep.e[i], d);
    BigInt rhs = ipow(rep.e[0], d - i) * ipow(rep.e[d], i);
    if (lhs > rhs) rep.teissier_ok = false;
  }

  rep.logconvex_ok = true;
  for (unsigned i = 1; i + 1 <= d; ++i)
    if (rep.e[i] * rep.e[i] > rep.e[i - 1] * rep.e[i + 1])
      rep.logconvex_ok = false;

  auto [ok, method] = minkowski_exact(rep.e[0], rep.e[d], rep.e_product, d);
  if (method == "inconclusive" && rep.expansion_ok && rep.teissier_ok) {
    // the expansion identity plus the Teissier bounds force the inequality
    ok = true;
    method = "implied";
  }
  rep.minkowski_ok = ok;
  rep.minkowski_method = method;
  return rep;
}

BigInt multi_rees_multiplicity(const std::vector<MonomialIdeal>& Js,
                               const FitOptions& opt) {
  if (Js.empty()) throw std::invalid_argument("need at least one ideal");
  IdealTuple T = IdealTuple::make(variable_ideal(Js[0].ring()), Js);
  MixedMultiplicityResult r = mixed_multiplicities(T, opt);
  BigInt total = 0;
  for (const auto& [k, v] : r.top.entries) total += v;
  return total;
}

BigInt multi_rees_multiplicity_fit(const std::vector<MonomialIdeal>& Js) {
  if (Js.empty()) throw std::invalid_argument("need at least one ideal");
  const RingContext& ring = Js[0].ring();
  const int n = ring.nvars;
  const int s = static_cast<int>(Js.size());
  PowerCache mpowers(variable_ideal(ring));
  std::vector<PowerCache> jpowers;
  for (const auto& J : Js) jpowers.emplace_back(J);
  std::map<std::vector<Exp>, std::int64_t> memo;

  auto base = [&](const std::vector<Exp>& key) -> std::int64_t {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    MonomialIdeal K = mpowers.get(static_cast<std::size_t>(key[0]));
    for (int i = 0; i < s; ++i)
      K = product(K, jpowers[static_cast<std::size_t>(i)].get(
                         static_cast<std::size_t>(key[static_cast<std::size_t>(i) + 1])));
    MonomialIdeal K2 = product(K, mpowers.get(1));
    const Exp bound = checked_add(K.max_generator_degree(), 1);
    std::int64_t v = static_cast<std::int64_t>(quotient_length(K, K2, bound));
    memo[key] = v;
    return v;
  };

  const int deg = n + s - 1;
  CellFn f = [&](const std::vector<Exp>& t) -> std::int64_t {
    std::int64_t total = 0;
    std::vector<Exp> key(static_cast<std::size_t>(s) + 1, 0);
    auto rec = [&](auto&& self, int i, Exp left) -> void {
      if (i == s) {
        key[0] = left;
        total += base(key);
        return;
      }
      for (Exp a = 0; a <= left; ++a) {
        key[static_cast<std::size_t>(i) + 1] = a;
        self(self, i + 1, left - a);
      }
    };
    rec(rec, 0, t[0]);
    return total;
  };
  HilbertPolynomial fit = fit_stable_box(f, 1, deg);
  return leading_multiplicity(fit, deg);
}

BigInt pair_total_multiplicity(const MonomialIdeal& I, const MonomialIdeal& J) {
  IdealTuple T = IdealTuple::make(I, {J});
  TupleCells cells(T);
  const int deg = tuple_fit_degree(T) + 1;
  CellFn f = [&](const std::vector<Exp>& t) -> std::int64_t {
    std::int64_t total = 0;
    for (Exp u = 0; u <= t[0]; ++u) total += cells({u, t[0] - u});
    return total;
  };
  HilbertPolynomial fit = fit_stable_box(f, 1, deg);
  return leading_multiplicity(fit, deg);
}

}  // namespace mm
