#ifndef MIXEDMULT_HILBERT_HPP
#define MIXEDMULT_HILBERT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "mixedmult/monomial.hpp"
#include "mixedmult/polynomial.hpp"

namespace mm {

// degree of the zero polynomial; kept distinct from degree 0
constexpr int kZeroPolyDegree = -1;

struct GradedPresentation {
  RingContext ring;
  MonomialIdeal relations;

  static GradedPresentation make(RingContext ring, MonomialIdeal relations);
};

class HilbertTable {
 public:
  HilbertTable() = default;
  HilbertTable(std::vector<Exp> lo, std::vector<Exp> hi);

  int arity() const { return static_cast<int>(lo_.size()); }
  const std::vector<Exp>& lower() const { return lo_; }
  const std::vector<Exp>& upper() const { return hi_; }
  std::size_t cell_count() const { return values_.size(); }

  std::int64_t at(const std::vector<Exp>& u) const;
  void set(const std::vector<Exp>& u, std::int64_t v);
  bool in_range(const std::vector<Exp>& u) const;

  // iteration helper: index <-> multidegree
  std::vector<Exp> point_of(std::size_t index) const;

 private:
  std::size_t offset(const std::vector<Exp>& u) const;
  std::vector<Exp> lo_, hi_;
  std::vector<std::int64_t> values_;
};

struct BoxRegion {
  std::vector<Exp> corner;  // valid on u >= corner componentwise
};
struct ConeRegion {
  Exp slope = 0;  // valid on u >= slope*v + u0, v >= v0
  Exp u0 = 0;
  Exp v0 = 0;
};
using StableRegion = std::variant<BoxRegion, ConeRegion>;

struct HilbertPolynomial {
  MultiPoly poly;
  StableRegion region;
};

struct UnstableRegion : std::runtime_error {
  explicit UnstableRegion(std::vector<Exp> point)
      : std::runtime_error("Hilbert fit failed to stabilize"),
        mismatch(std::move(point)) {}
  std::vector<Exp> mismatch;
};

struct FitCorruption : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MixedMultiplicityVector {
  int total_degree = kZeroPolyDegree;
  std::map<std::vector<int>, BigInt> entries;  // |alpha| = total_degree

  BigInt at(const std::vector<int>& alpha) const {
    auto it = entries.find(alpha);
    return it == entries.end() ? BigInt(0) : it->second;
  }
};

// ---- enumeration ----

// H(u) = number of monomials of multidegree u not lying in the relations.
std::int64_t graded_piece_dimension(const GradedPresentation& P,
                                    const std::vector<Exp>& u);

HilbertTable hilbert_function(const GradedPresentation& P,
                              const std::vector<Exp>& lo,
                              const std::vector<Exp>& hi);

HilbertTable sum_transform(const HilbertTable& T, const std::vector<int>& axes);

// ---- fitting ----

struct FitOptions {
  Exp box_cap = 40;          // largest box side explored
  Exp initial_corner = 0;    // standard case: first corner tried
  Exp cone_u1 = 1, cone_v1 = 1;  // cone case: initial offsets
};

using CellFn = std::function<std::int64_t(const std::vector<Exp>&)>;

// Fit an exact polynomial of total degree <= degree against the cell
// evaluator, growing the window until a validated stable box is found;
// reports the smallest validated corner.  degree = kZeroPolyDegree asks for
// the zero polynomial.
HilbertPolynomial fit_stable_box(const CellFn& f, int s, int degree,
                                 const FitOptions& opt = {});

// Non-standard bigraded case: fit on the cone u >= slope*v + u0, v >= v0.
HilbertPolynomial fit_stable_cone(const CellFn& f, int degree, Exp slope,
                                  const FitOptions& opt = {});

// Spec-facing wrapper: fit against an already-enumerated table (box corner
// hypothesis), validating on every remaining table point in the region.
HilbertPolynomial fit_polynomial(const HilbertTable& T, int expected_degree,
                                 const std::vector<Exp>& corner_hypothesis);

// ---- invariants of the presentation ----

// total degree of the Hilbert polynomial of a standard multigraded
// presentation (relevant dimension minus s); kZeroPolyDegree when the
// saturated quotient is empty
int relevant_total_degree(const GradedPresentation& P);

// (r_1, r_2) partial degrees, standard bigraded case
std::pair<int, int> partial_degrees(const GradedPresentation& P);

MixedMultiplicityVector extract_mixed_multiplicities(const HilbertPolynomial& H);

// multiplicity of the total-grading collapse R_t = sum_{|u| = t} R_u
BigInt total_grading_multiplicity(const GradedPresentation& P);

// e(R^lambda) of the diagonal subalgebra along lambda > 0
BigInt diagonal_multiplicity(const GradedPresentation& P,
                             const std::vector<Exp>& lambda);

// irrelevant-ideal saturation helper: relations : (products of one variable
// per grading block)^infty
MonomialIdeal saturate_by_irrelevant(const GradedPresentation& P);

}  // namespace mm

#endif
