#ifndef MIXEDMULT_POLYNOMIAL_HPP
#define MIXEDMULT_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "mixedmult/numeric.hpp"

namespace mm {

// Multivariate polynomial with exact rational coefficients in the power basis.
class MultiPoly {
 public:
  using Key = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  const std::map<Key, BigRat>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  void set(const Key& k, const BigRat& v);
  BigRat coeff(const Key& k) const;

  // -1 encodes the zero polynomial ("degree minus infinity"), distinct from
  // the degree-0 constants.
  int total_degree() const;
  int degree_in(int var) const;

  BigRat eval(const std::vector<BigInt>& p) const;
  BigInt eval_integer(const std::vector<BigInt>& p) const;  // throws if non-integer

  MultiPoly top_part() const;  // terms of maximal total degree
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly scaled(const BigRat& f) const;

  // substitute variable `var` by the constant value (arity drops by one)
  MultiPoly partial_eval(int var, const BigInt& value) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int arity_ = 0;
  std::map<Key, BigRat> c_;
};

// exponent tuples of total degree <= deg (resp. == deg), ordered
std::vector<std::vector<int>> monomials_up_to(int s, int deg);
std::vector<std::vector<int>> monomials_exact(int s, int deg);

// Exact interpolation of a total-degree <= deg polynomial through the given
// integer points/values; the system must be square and nonsingular.
MultiPoly fit_exact(const std::vector<std::vector<BigInt>>& points,
                    const std::vector<BigInt>& values, int s, int deg);

// Univariate binomial C(t + shift, k) expanded in the power basis.
MultiPoly binomial_poly(int k, int shift);

}  // namespace mm

#endif
