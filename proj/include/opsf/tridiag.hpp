#pragma once

#include <vector>

namespace opsf {

// Symmetric tridiagonal matrix: diag has length N, offdiag length N-1 with
// entries sqrt(b_n) >= 0.
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> off;

  int size() const { return static_cast<int>(diag.size()); }
};

// All eigenvalues, ascending, by the implicit-shift QL iteration.
// Throws NoConvergence after the per-eigenvalue iteration cap.
std::vector<double> eigen_sym_tridiagonal(const TridiagonalMatrix& t);

// Householder reduction of a dense symmetric matrix (row-major n x n,
// upper triangle read) to tridiagonal form.
TridiagonalMatrix householder_tridiagonalize(const std::vector<double>& a, int n);

// Eigenvalues of a dense symmetric matrix, ascending.
std::vector<double> eigen_dense_symmetric(const std::vector<double>& a, int n);

}  // namespace opsf
