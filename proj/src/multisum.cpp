#include "opsf/multisum.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "opsf/error.hpp"
#include "opsf/gammafn.hpp"
#include "opsf/hyp.hpp"

namespace opsf {

namespace {

const Rational kHalf(1, 2);

Rational outer_weight(int m, int n, int i) {
  // (-m)_i (n+1)_i / (i! (m+n+2)_i)
  return pochhammer(Rational(-m), i) * pochhammer(Rational(n + 1), i) /
         (factorial(static_cast<unsigned long>(i)) *
          pochhammer(Rational(m + n + 2), i));
}

}  // namespace

Rational t_inner(int i, int n) {
  if (i < 0 || n < 0) fail(ErrorKind::DomainError, "indices must be >= 0");
  Rational sum = 0;
  for (int j = 0; j <= n; ++j) {
    const Rational w = pochhammer(Rational(-n), j) * pochhammer(kHalf - n, j) /
                       (factorial(static_cast<unsigned long>(j)) *
                        pochhammer(kHalf, j));
    sum += w / (i + j + kHalf);
  }
  return sum;
}

Rational s_terminating(int m, int n) {
  if (m < 0 || n < 0) fail(ErrorKind::DomainError, "indices must be >= 0");
  Rational sum = 0;
  for (int i = 0; i <= m; ++i) sum += outer_weight(m, n, i) * t_inner(i, n);
  return sum;
}

Rational s_closed(int m, int n) {
  if (m < 0 || n < 0) fail(ErrorKind::DomainError, "indices must be >= 0");
  const Rational num = rational_pow(Rational(2), 2 * m + 2 * n) *
                       factorial(static_cast<unsigned long>(m)) *
                       factorial(static_cast<unsigned long>(m + n)) *
                       factorial(static_cast<unsigned long>(m + n + 1)) *
                       pochhammer(kHalf, n);
  const Rational den = factorial(static_cast<unsigned long>(n)) *
                       factorial(static_cast<unsigned long>(n + 2 * m + 1)) *
                       pochhammer(kHalf, m + n + 1);
  return num / den;
}

bool check_t_recurrence(int i, int n) {
  const Rational lhs =
      Rational((i + n + 2) * (2 * i + 2 * n + 5)) * t_inner(i + 2, n);
  const Rational rhs =
      Rational(4 * i * i + 4 * i * n + 12 * i + 2 * n * n + 5 * n + 9) *
          t_inner(i + 1, n) -
      Rational((i + 1) * (2 * i + 1)) * t_inner(i, n);
  return lhs == rhs;
}

std::pair<bool, bool> check_s_recurrences(int m, int n) {
  const Rational s = s_terminating(m, n);
  const bool in_n =
      Rational((n + 1) * (2 * m + n + 2) * (2 * m + 2 * n + 3)) *
          s_terminating(m, n + 1) ==
      Rational(4 * (2 * n + 1) * (m + n + 1) * (m + n + 2)) * s;
  const bool in_m =
      Rational((2 * m + n + 2) * (2 * m + n + 3) * (2 * m + 2 * n + 3)) *
          s_terminating(m + 1, n) ==
      Rational(8 * (m + 1) * (m + n + 1) * (m + n + 2)) * s;
  return {in_n, in_m};
}

SeriesValue s_nonterminating(const Rational& beta, int n, double tol) {
  if (n < 0) fail(ErrorKind::DomainError, "n must be >= 0");
  if (tol <= 0) fail(ErrorKind::DomainError, "tolerance must be positive");
  if (beta <= Rational(-1, 2))
    fail(ErrorKind::ConvergenceDomain,
         "series terms decay like j^(-2b-2); needs b > -1/2");
  if (is_integer(beta) && beta >= 0)
    fail(ErrorKind::ParameterDomain,
         "nonnegative integer b terminates the series; use the finite sum");

  // inner finite sum coefficients C(2n, 2i)
  std::vector<double> binom(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    binom[static_cast<size_t>(i)] =
        to_double(binomial(static_cast<unsigned long>(2 * n),
                           static_cast<unsigned long>(2 * i)));

  const double b = to_double(beta);
  constexpr long kCap = 10'000'000;
  SeriesValue out;
  double factor = 1.0;  // (-b)_j (n+1)_j / (j! (b+n+2)_j)
  for (long j = 0;; ++j) {
    double inner = 0.0;
    for (int i = 0; i <= n; ++i)
      inner += binom[static_cast<size_t>(i)] / (i + j + 0.5);
    const double term = factor * inner;
    out.value += term;
    out.terms = j + 1;
    if (j >= 2) {
      // integral tail comparison with C fitted to the last term:
      // |term_j| * j^(2b+2) * j^(-2b-1) / (2b+1)
      out.err_bound = std::abs(term) * static_cast<double>(j) / (2 * b + 1);
      if (out.err_bound < tol) return out;
    }
    if (j + 1 >= kCap)
      fail(ErrorKind::ToleranceNotReached,
           "tail bound still above tolerance after " + std::to_string(kCap) +
               " terms");
    factor *= (static_cast<double>(j) - b) * (static_cast<double>(j) + n + 1) /
              ((static_cast<double>(j) + 1) *
               (static_cast<double>(j) + b + n + 2));
  }
}

double s_nonterm_closed(const Rational& beta, int n) {
  if (n < 0) fail(ErrorKind::DomainError, "n must be >= 0");
  if (beta <= Rational(-1, 2))
    fail(ErrorKind::ConvergenceDomain, "closed form needs b > -1/2");
  const double b = to_double(beta);
  const double ln = (2 * b + 2 * n) * std::log(2.0) +
                    std::log(beta_fn(b + 1, n + 0.5)) + ln_gamma(n + b + 2) +
                    ln_gamma(n + b + 1) - ln_gamma(n + 1.0) -
                    ln_gamma(n + 2 * b + 2);
  return std::exp(ln);
}

KdfPoint::KdfPoint(const std::array<int, 4>& alphas, const Rational& kappa)
    : alphas_(alphas), kappa_(kappa) {
  for (int a : alphas_)
    if (a < 0) fail(ErrorKind::DomainError, "indices must be >= 0");
  const int parity = alphas_[0] % 2;
  for (int a : alphas_)
    if (a % 2 != parity)
      fail(ErrorKind::ParityViolation,
           "the four indices must be all even or all odd");
}

long KdfPoint::b(int i) const {
  switch (i) {
    case 0: return (alphas_[1] + alphas_[2]) / 2;
    case 1: return (alphas_[0] + alphas_[3]) / 2;
    case 2: return (alphas_[1] + alphas_[3]) / 2;
    case 3: return (alphas_[2] + alphas_[3]) / 2;
  }
  fail(ErrorKind::DomainError, "b index out of range");
}

namespace {

Rational kdf_double_sum(const KdfPoint& p) {
  const Rational& k = p.kappa();
  const int a3 = p.alphas()[2], a4 = p.alphas()[3];
  const long b0 = p.b(0), b1 = p.b(1), b3 = p.b(3);
  Rational sum = 0;
  for (int i = 0; i <= a4 / 2; ++i) {
    for (int j = 0; j <= a3 / 2; ++j) {
      const Rational num = pochhammer(Rational(-a4), 2 * i) *
                           pochhammer(Rational(-a3), 2 * j) *
                           pochhammer(k, i + j);
      const Rational den = factorial(static_cast<unsigned long>(i)) *
                           factorial(static_cast<unsigned long>(j)) *
                           pochhammer(kHalf - b1, i) *
                           pochhammer(kHalf - b0, j) *
                           pochhammer(kHalf - b3, i + j) *
                           rational_pow(Rational(2), 2 * i + 2 * j);
      sum += checked_div(num, den, ErrorKind::FormulaPole,
                         "double-sum term denominator");
    }
  }
  return sum;
}

// (1/2)_u (1/2)_v (1/2)_w / ((k+1/2)_u (k+1/2)_v (k+1/2)_w)
Rational half_ratio(const Rational& k, long u, long v, long w) {
  const Rational num =
      pochhammer(kHalf, u) * pochhammer(kHalf, v) * pochhammer(kHalf, w);
  const Rational den = pochhammer(k + kHalf, u) * pochhammer(k + kHalf, v) *
                       pochhammer(k + kHalf, w);
  return checked_div(num, den, ErrorKind::FormulaPole, "shifted half prefactor");
}

}  // namespace

KdfDouble kdf_double(const KdfPoint& p) {
  const Rational& k = p.kappa();
  const long b0 = p.b(0), b1 = p.b(1), b3 = p.b(3);
  const Rational dsum = kdf_double_sum(p);
  KdfDouble out;
  out.s_prime = half_ratio(k, b1, b0, b3) * dsum;
  const Rational kappa_ratio =
      checked_div(pochhammer(2 * k, 2 * b1) * pochhammer(2 * k, 2 * b0),
                  pochhammer(4 * k, 2 * b1 + 2 * b0), ErrorKind::FormulaPole,
                  "kappa prefactor");
  out.s = kappa_ratio * out.s_prime;
  return out;
}

Rational kdf_single(const KdfPoint& p) {
  const Rational& k = p.kappa();
  const int a4 = p.alphas()[3];
  const long b0 = p.b(0), b1 = p.b(1), b2 = p.b(2), b3 = p.b(3);
  Rational sum = 0;
  for (int i = 0; i <= a4 / 2; ++i) {
    const Rational num = pochhammer(Rational(-a4) / 2, i) *
                         pochhammer(Rational(1 - a4) / 2, i) *
                         pochhammer(k, i) * pochhammer(-k - b1 - b0, i);
    const Rational den = factorial(static_cast<unsigned long>(i)) *
                         pochhammer(kHalf - b1, i) * pochhammer(kHalf - b2, i) *
                         pochhammer(kHalf - b3, i);
    sum += checked_div(num, den, ErrorKind::FormulaPole,
                       "single-sum term denominator");
  }
  return half_ratio(k, b1, b2, b3) * sum;
}

bool kdf_symmetry_check(const KdfPoint& p) {
  std::array<int, 4> a = p.alphas();
  std::sort(a.begin(), a.end());
  const Rational reference = kdf_single(p);
  do {
    if (kdf_single(KdfPoint(a, p.kappa())) != reference) return false;
  } while (std::next_permutation(a.begin(), a.end()));
  return true;
}

bool kdf_recurrence_check(const KdfPoint& p) {
  const auto& a = p.alphas();
  const Rational& k = p.kappa();
  const long pair14 = static_cast<long>(a[0]) * a[3];
  const long pair23 = static_cast<long>(a[1]) * a[2];

  Rational lhs = (Rational(pair23 * (a[0] + a[3] + 1)) -
                  Rational(pair14 * (a[1] + a[2] + 1))) /
                 2 * kdf_single(p);
  if (pair14 != 0) {
    const KdfPoint down({a[0] - 1, a[1] + 1, a[2] + 1, a[3] - 1}, k);
    lhs += Rational(pair14) * (k + Rational(a[1] + a[2] + 1) / 2) *
           kdf_single(down);
  }
  Rational rhs = 0;
  if (pair23 != 0) {
    const KdfPoint up({a[0] + 1, a[1] - 1, a[2] - 1, a[3] + 1}, k);
    rhs = Rational(pair23) * (k + Rational(a[0] + a[3] + 1) / 2) *
          kdf_single(up);
  }
  return lhs == rhs;
}

}  // namespace opsf
