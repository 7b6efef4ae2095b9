#include "mixedmult/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mixedmult/linalg.hpp"

namespace mm {

void MultiPoly::set(const Key& k, const BigRat& v) {
  if (static_cast<int>(k.size()) != arity_)
    throw std::invalid_argument("exponent arity mismatch");
  if (v == 0) c_.erase(k);
  else c_[k] = v;
}

BigRat MultiPoly::coeff(const Key& k) const {
  auto it = c_.find(k);
  return it == c_.end() ? BigRat(0) : it->second;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, v] : c_)
    d = std::max(d, std::accumulate(k.begin(), k.end(), 0));
  return d;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [k, v] : c_) d = std::max(d, k[var]);
  return d;
}

BigRat MultiPoly::eval(const std::vector<BigInt>& p) const {
  BigRat total = 0;
  for (const auto& [k, v] : c_) {
    BigInt mono = 1;
    for (int i = 0; i < arity_; ++i)
      mono *= ipow(p[i], static_cast<unsigned>(k[i]));
    total += v * BigRat(mono);
  }
  return total;
}

BigInt MultiPoly::eval_integer(const std::vector<BigInt>& p) const {
  BigRat v = eval(p);
  if (boost::multiprecision::denominator(v) != 1)
    throw std::domain_error("polynomial value is not an integer");
  return boost::multiprecision::numerator(v);
}

MultiPoly MultiPoly::top_part() const {
  MultiPoly t(arity_);
  const int d = total_degree();
  for (const auto& [k, v] : c_)
    if (std::accumulate(k.begin(), k.end(), 0) == d) t.c_[k] = v;
  return t;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [k, v] : o.c_) r.set(k, r.coeff(k) + v);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [k, v] : o.c_) r.set(k, r.coeff(k) - v);
  return r;
}

MultiPoly MultiPoly::scaled(const BigRat& f) const {
  MultiPoly r(arity_);
  if (f == 0) return r;
  for (const auto& [k, v] : c_) r.c_[k] = v * f;
  return r;
}

MultiPoly MultiPoly::partial_eval(int var, const BigInt& value) const {
  MultiPoly r(arity_ - 1);
  for (const auto& [k, v] : c_) {
    Key nk;
    nk.reserve(arity_ - 1);
    for (int i = 0; i < arity_; ++i)
      if (i != var) nk.push_back(k[i]);
    BigRat term = v * BigRat(ipow(value, static_cast<unsigned>(k[var])));
    r.set(nk, r.coeff(nk) + term);
  }
  return r;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print high degree first
  std::vector<std::pair<Key, BigRat>> terms(c_.begin(), c_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [k, v] : terms) {
    const bool neg = v < 0;
    BigRat a = neg ? BigRat(-v) : v;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::string vars;
    for (int i = 0; i < arity_; ++i) {
      if (!k[i]) continue;
      if (!vars.empty()) vars += "*";
      vars += i < static_cast<int>(names.size()) ? names[i]
                                                 : "u" + std::to_string(i + 1);
      if (k[i] > 1) vars += "^" + std::to_string(k[i]);
    }
    if (vars.empty()) os << rat_string(a);
    else if (a == 1) os << vars;
    else os << rat_string(a) << "*" << vars;
  }
  return os.str();
}

std::vector<std::vector<int>> monomials_up_to(int s, int deg) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(s, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == s) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[i] = a;
      self(self, i + 1, left - a);
    }
    cur[i] = 0;
  };
  rec(rec, 0, deg);
  return out;
}

std::vector<std::vector<int>> monomials_exact(int s, int deg) {
  std::vector<std::vector<int>> out;
  for (auto& k : monomials_up_to(s, deg))
    if (std::accumulate(k.begin(), k.end(), 0) == deg) out.push_back(k);
  return out;
}

MultiPoly fit_exact(const std::vector<std::vector<BigInt>>& points,
                    const std::vector<BigInt>& values, int s, int deg) {
  const auto basis = monomials_up_to(s, deg);
  if (points.size() != basis.size() || values.size() != basis.size())
    throw std::invalid_argument("interpolation needs exactly one point per basis monomial");
  linalg::IntMatrix M(points.size(), std::vector<BigInt>(basis.size()));
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) {
      BigInt v = 1;
      for (int i = 0; i < s; ++i)
        v *= ipow(points[r][i], static_cast<unsigned>(basis[c][i]));
      M[r][c] = v;
    }
  std::vector<BigRat> sol = linalg::solve_exact(std::move(M), values);
  MultiPoly p(s);
  for (std::size_t c = 0; c < basis.size(); ++c) p.set(basis[c], sol[c]);
  return p;
}

MultiPoly binomial_poly(int k, int shift) {
  // C(t + shift, k) as a polynomial in t
  MultiPoly p(1);
  p.set({0}, BigRat(1));
  for (int i = 0; i < k; ++i) {
    // multiply by (t + shift - i)
    MultiPoly q(1);
    for (const auto& [key, v] : p.coefficients()) {
      std::vector<int> up = {key[0] + 1};
      q.set(up, q.coeff(up) + v);
      q.set(key, q.coeff(key) + v * BigRat(shift - i));
    }
    p = std::move(q);
  }
  return p.scaled(BigRat(1, factorial(static_cast<unsigned>(k))));
}

}  // namespace mm
