#ifndef MIXEDMULT_MONOMIAL_HPP
#define MIXEDMULT_MONOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mm {

using Exp = std::uint64_t;

inline Exp checked_add(Exp a, Exp b) {
  if (a > std::numeric_limits<Exp>::max() - b)
    throw std::overflow_error("exponent overflow");
  return a + b;
}

// Exponent vector of a monomial x1^a1 ... xn^an.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<Exp> init) : e_(init) {}
  explicit ExponentVector(std::vector<Exp> v) : e_(std::move(v)) {}

  static ExponentVector unit(std::size_t n, std::size_t i, Exp power = 1) {
    ExponentVector v(n);
    v.e_[i] = power;
    return v;
  }

  std::size_t size() const { return e_.size(); }
  Exp operator[](std::size_t i) const { return e_[i]; }
  Exp& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Exp>& entries() const { return e_; }

  Exp total_degree() const {
    Exp t = 0;
    for (Exp x : e_) t = checked_add(t, x);
    return t;
  }

  bool divides(const ExponentVector& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  ExponentVector operator+(const ExponentVector& o) const {
    ExponentVector r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r.e_[i] = checked_add(e_[i], o.e_[i]);
    return r;
  }

  ExponentVector lcm(const ExponentVector& o) const {
    ExponentVector r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r.e_[i] = std::max(e_[i], o.e_[i]);
    return r;
  }

  // exponent of the generator of (this) : x^t, i.e. max(this - t, 0)
  ExponentVector colon_by(const ExponentVector& t) const {
    ExponentVector r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r.e_[i] = e_[i] > t.e_[i] ? e_[i] - t.e_[i] : 0;
    return r;
  }

  ExponentVector support() const {  // exponents clamped to 1
    ExponentVector r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] ? 1 : 0;
    return r;
  }

  std::uint64_t support_mask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i]) m |= std::uint64_t(1) << i;
    return m;
  }

  bool operator==(const ExponentVector& o) const { return e_ == o.e_; }
  bool operator<(const ExponentVector& o) const { return e_ < o.e_; }  // lex

  std::string str() const;  // "x1^2*x3", "1" for the unit monomial

 private:
  std::vector<Exp> e_;
};

// Polynomial ring with an N^s degree assignment per variable.
struct RingContext {
  int nvars = 0;
  int grading_rank = 1;                    // s
  std::vector<std::vector<Exp>> grading;   // nvars rows of length s, each nonzero

  static RingContext standard(int n);
  // unit-vector grading by contiguous variable blocks
  static RingContext blocks(const std::vector<int>& sizes);

  bool operator==(const RingContext& o) const = default;
  bool is_standard_multigraded() const;     // every row a unit vector
  std::vector<int> block_assignment() const;  // var -> grading axis (unit rows only)
  void validate() const;
};

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(RingContext ring) : ring_(std::move(ring)) {}

  // canonical form: unique minimal generating set, sorted lex
  static MonomialIdeal from_generators(RingContext ring,
                                       std::vector<ExponentVector> gens);

  const RingContext& ring() const { return ring_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }

  bool contains(const ExponentVector& m) const;
  bool contains(const MonomialIdeal& other) const;  // other subset of this

  Exp max_generator_degree() const;
  Exp min_generator_degree() const;  // = m-adic order for nonzero proper ideals
  bool generated_in_single_degree() const;

  std::string str() const;  // "ideal(x1^2, x1*x2)"

 private:
  RingContext ring_;
  std::vector<ExponentVector> gens_;
};

MonomialIdeal zero_ideal(const RingContext& ring);
MonomialIdeal unit_ideal(const RingContext& ring);
MonomialIdeal variable_ideal(const RingContext& ring);  // m = (x1,...,xn)

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal power(const MonomialIdeal& I, unsigned k);
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal saturate(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal radical(const MonomialIdeal& I);

// dim k[x]/I; unit ideal gives -1 (empty scheme), zero ideal gives nvars
int krull_dim(const MonomialIdeal& I);
// min size of a variable set meeting the support of every generator
int height(const MonomialIdeal& I);
bool is_primary_to_max_ideal(const MonomialIdeal& I);
Exp order(const MonomialIdeal& I);  // largest k with I contained in m^k

// exponents of the minimal pure powers x_i^{a_i} in an m-primary ideal
std::vector<Exp> pure_power_exponents(const MonomialIdeal& I);
// bound B with m^B inside I, for m-primary I
Exp primary_containment_bound(const MonomialIdeal& I);

// text forms used by the CLI and job files
ExponentVector parse_monomial(const std::string& text, int nvars);
MonomialIdeal parse_ideal(const std::string& text, const RingContext& ring);

}  // namespace mm

#endif
