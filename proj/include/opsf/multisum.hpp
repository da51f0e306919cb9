#pragma once

#include <array>
#include <utility>

#include "opsf/rational.hpp"

namespace opsf {

// T(i,n) = sum_{j<=n} (-n)_j (1/2-n)_j / (j! (1/2)_j) * 1/(i+j+1/2), exact.
Rational t_inner(int i, int n);

// S(m,n) = sum_{i<=m} (-m)_i (n+1)_i / (i! (m+n+2)_i) * T(i,n), exact.
Rational s_terminating(int m, int n);

// 2^(2m+2n) m! (m+n)! (m+n+1)! (1/2)_n / (n! (n+2m+1)! (1/2)_{m+n+1}).
Rational s_closed(int m, int n);

// Exact residual of the second-order recurrence
//   (i+n+2)(2i+2n+5) T(i+2,n) = (4i^2+4in+12i+2n^2+5n+9) T(i+1,n)
//                               - (i+1)(2i+1) T(i,n).
bool check_t_recurrence(int i, int n);

// Exact residuals of the two first-order recurrences advancing S in n and m.
std::pair<bool, bool> check_s_recurrences(int m, int n);

struct SeriesValue {
  double value = 0.0;
  double err_bound = 0.0;
  long terms = 0;
};

// Nonterminating j-series with inner finite sum sum_i C(2n,2i)/(i+j+1/2).
// Requires beta > -1/2 (terms decay like j^(-2beta-2)) and beta not a
// nonnegative integer; stops once the integral tail bound drops below tol.
SeriesValue s_nonterminating(const Rational& beta, int n, double tol);

// 2^(2b+2n) B(b+1, n+1/2) Gamma(n+b+2) Gamma(n+b+1) / (n! Gamma(n+2b+2)),
// evaluated in ln-space.
double s_nonterm_closed(const Rational& beta, int n);

// Four nonnegative integers of equal parity plus a rational kappa.
class KdfPoint {
 public:
  KdfPoint(const std::array<int, 4>& alphas, const Rational& kappa);

  const std::array<int, 4>& alphas() const { return alphas_; }
  const Rational& kappa() const { return kappa_; }

  // b0 = (a2+a3)/2, b1 = (a1+a4)/2, b2 = (a2+a4)/2, b3 = (a3+a4)/2.
  long b(int i) const;

 private:
  std::array<int, 4> alphas_;
  Rational kappa_;
};

struct KdfDouble {
  Rational s;        // full double sum with its printed prefactor
  Rational s_prime;  // prefactor (2k)_{2b1}(2k)_{2b0}/(4k)_{2b1+2b0} stripped
};

// Double sum over i <= floor(a4/2), j <= floor(a3/2), exact.
KdfDouble kdf_double(const KdfPoint& p);

// Single-sum form: a balanced terminating 4F3 with its printed
// (1/2)_{b1}(1/2)_{b2}(1/2)_{b3} prefactor.
Rational kdf_single(const KdfPoint& p);

// s' agrees exactly across all 24 permutations of (a1,a2,a3,a4).
bool kdf_symmetry_check(const KdfPoint& p);

// Exact residual of the contiguous three-term relation shifting
// (a1,a2,a3,a4) by (-1,+1,+1,-1) and (+1,-1,-1,+1); a shifted evaluation
// is skipped when its scalar coefficient vanishes.
bool kdf_recurrence_check(const KdfPoint& p);

}  // namespace opsf
