#include "mixedmult/linalg.hpp"

#include <algorithm>

namespace mm::linalg {

namespace {

// Bareiss fraction-free forward elimination on an augmented matrix.
// Returns the permutation sign, leaves the matrix upper triangular.
int bareiss(IntMatrix& M, std::size_t rows, std::size_t cols) {
  BigInt prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && M[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(M[p], M[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < M[i].size(); ++j)
        M[i][j] = (M[r][c] * M[i][j] - M[i][c] * M[r][j]) / prev;
      M[i][c] = 0;
    }
    prev = M[r][c];
    ++r;
  }
  return sign;
}

}  // namespace

std::vector<BigRat> solve_exact(IntMatrix A, std::vector<BigInt> b) {
  const std::size_t n = A.size();
  for (std::size_t i = 0; i < n; ++i) A[i].push_back(b[i]);
  bareiss(A, n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (A[i][i] == 0) throw SingularMatrix();
  std::vector<BigRat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    BigRat acc = BigRat(A[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= BigRat(A[i][j]) * x[j];
    x[i] = acc / BigRat(A[i][i]);
  }
  return x;
}

BigInt det_exact(IntMatrix A) {
  const std::size_t n = A.size();
  if (n == 0) return 1;
  int sign = bareiss(A, n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (A[i][i] == 0) return 0;
  return sign * A[n - 1][n - 1];  // Bareiss leaves det in the last pivot
}

int rank_exact(IntMatrix A) {
  if (A.empty()) return 0;
  const std::size_t rows = A.size(), cols = A[0].size();
  bareiss(A, rows, cols);
  int rank = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < cols; ++j)
      if (A[i][j] != 0) { nonzero = true; break; }
    if (nonzero) ++rank;
  }
  return rank;
}

namespace {

// Column-style Hermite reduction A*U = H with U unimodular, tracking U.
// Kernel basis = columns of U over the zero columns of H.
void column_hnf(IntMatrix& A, IntMatrix& U) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : (U.empty() ? 0 : U[0].size());
  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < rows && pivot_col < cols; ++r) {
    // gcd sweep on row r across columns >= pivot_col
    for (;;) {
      std::size_t best = cols;
      for (std::size_t c = pivot_col; c < cols; ++c) {
        if (A[r][c] == 0) continue;
        if (best == cols ||
            abs(A[r][c]) < abs(A[r][best])) best = c;
      }
      if (best == cols) break;  // row all zero from pivot_col on
      if (best != pivot_col) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(A[i][best], A[i][pivot_col]);
        for (std::size_t i = 0; i < U.size(); ++i) std::swap(U[i][best], U[i][pivot_col]);
      }
      bool reduced = true;
      for (std::size_t c = pivot_col + 1; c < cols; ++c) {
        if (A[r][c] == 0) continue;
        BigInt q = A[r][c] / A[r][pivot_col];
        if (q != 0) {
          for (std::size_t i = 0; i < rows; ++i) A[i][c] -= q * A[i][pivot_col];
          for (std::size_t i = 0; i < U.size(); ++i) U[i][c] -= q * U[i][pivot_col];
        }
        if (A[r][c] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (A[r][pivot_col] != 0) ++pivot_col;
  }
}

}  // namespace

IntMatrix integer_kernel(const IntMatrix& A) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  if (cols == 0) return {};
  IntMatrix M = A;
  IntMatrix U(cols, std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) U[i][i] = 1;
  column_hnf(M, U);
  IntMatrix kernel;
  for (std::size_t c = 0; c < cols; ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < rows; ++r)
      if (M[r][c] != 0) { zero = false; break; }
    if (!zero) continue;
    std::vector<BigInt> col(cols);
    for (std::size_t i = 0; i < cols; ++i) col[i] = U[i][c];
    kernel.push_back(std::move(col));
  }
  return kernel;
}

IntMatrix saturated_row_span(const IntMatrix& M) {
  if (M.empty()) return {};
  return integer_kernel(integer_kernel(M));
}

std::vector<BigRat> coordinates_in_basis(const IntMatrix& B,
                                         const std::vector<BigInt>& v) {
  const std::size_t r = B.size();
  const std::size_t n = v.size();
  // Gram system B B^T c = B v
  IntMatrix G(r, std::vector<BigInt>(r, 0));
  std::vector<BigInt> rhs(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < n; ++k) G[i][j] += B[i][k] * B[j][k];
    for (std::size_t k = 0; k < n; ++k) rhs[i] += B[i][k] * v[k];
  }
  std::vector<BigRat> c = solve_exact(G, rhs);
  // verify v really lies in the span
  for (std::size_t k = 0; k < n; ++k) {
    BigRat acc = 0;
    for (std::size_t i = 0; i < r; ++i) acc += c[i] * BigRat(B[i][k]);
    if (acc != BigRat(v[k]))
      throw std::invalid_argument("vector outside basis span");
  }
  return c;
}

}  // namespace mm::linalg
