#ifndef MIXEDMULT_LINALG_HPP
#define MIXEDMULT_LINALG_HPP

#include <vector>

#include "mixedmult/numeric.hpp"

namespace mm::linalg {

using IntMatrix = std::vector<std::vector<BigInt>>;

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("singular interpolation matrix") {}
};

// Solve the square integer system A x = b exactly (fraction-free elimination,
// rational back substitution).  Throws SingularMatrix.
std::vector<BigRat> solve_exact(IntMatrix A, std::vector<BigInt> b);

BigInt det_exact(IntMatrix A);

int rank_exact(IntMatrix A);

// Basis of the integer kernel { x in Z^n : A x = 0 }.  The result is a basis
// of the full (saturated) kernel lattice.
IntMatrix integer_kernel(const IntMatrix& A);

// Basis of Z^n intersected with the rational row span of M.
IntMatrix saturated_row_span(const IntMatrix& M);

// Coordinates of v in the row basis B (rows independent; v must lie in the
// rational row span).  Throws if v is outside the span.
std::vector<BigRat> coordinates_in_basis(const IntMatrix& B,
                                         const std::vector<BigInt>& v);

}  // namespace mm::linalg

#endif
