#pragma once

#include <string>
#include <vector>

#include "opsf/dense_poly.hpp"
#include "opsf/rational.hpp"

namespace opsf {

// Converts a polynomial in t that must lie in Q[t^3] to a polynomial in
// x = t^3. Throws StructureViolation when any omega part is nonzero or any
// t-power not divisible by 3 has a nonzero coefficient.
RPoly xpoly_from_t(const EPoly& p);

// B_0..B_N in x = t^3 from the three-term recurrence with B_0 = 1,
// B_1 = alpha^2.
std::vector<RPoly> b_poly_recurrence(const Rational& alpha, int n_max);

// B_n in x = t^3 from the explicit Pochhammer k-sum over Q(omega)[t],
// with the membership in Q[t^3] verified exactly.
RPoly b_poly_explicit(const Rational& alpha, int n);

struct APolys {
  std::vector<RPoly> a;        // A_0..A_N from its recursion
  std::vector<RPoly> a_tilde;  // from the independent end recursion
};

// Both sequences; verifies a_tilde[n] == a[0] + ... + a[n] exactly.
APolys a_polys(int n_max);

struct ProductValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

// prod_{j<=J} (1 + t^3 / (8 j^3)); tail bound exponentiates
// sum_{j>J} |t|^3/(8j^3) <= |t|^3/(16 J^2).
ProductValue product_truncation(double t, long long j_max);

struct LimitPoint {
  double t = 0.0;
  double series = 0.0;   // a_tilde[n] evaluated at x = t^3
  double product = 0.0;
  double diff = 0.0;     // |series - product|
  double tail_bound = 0.0;
};

struct LimitReport {
  int n = 0;
  long long j_max = 0;
  std::vector<LimitPoint> points;
};

LimitReport limit_check(const std::vector<double>& ts, int n, long long j_max);

struct ZeroReport {
  int degree = 0;
  int distinct_real_count = 0;  // exact count over the whole line
  int negative_count = 0;       // exact count on (-inf, 0)
  bool all_negative = false;    // negative_count == degree
  bool boundary_zero = false;   // x = 0 is a root
  std::vector<double> roots;    // distinct real roots, ascending
};

// Exact Sturm-sequence root location over Q; floating refinement only for
// the reported root values (verdicts never depend on rounding).
ZeroReport xpoly_real_zeros(const RPoly& p);

struct MzvSpec {
  std::vector<int> exponents;      // s_1..s_l, outermost first
  std::vector<bool> alternating;   // per index; empty means none
  long long limit = 0;             // truncation N
};

struct MzvValue {
  double value = 0.0;
  double tail_estimate = 0.0;  // first omitted shell times (1 + ln N)
};

// Truncated (alternating) multiple zeta sum over N >= n_1 > ... > n_l >= 1
// by the nested prefix-sum dynamic program: O(l N) time, O(N) space.
MzvValue mzv_truncated(const MzvSpec& spec);

// Both orientations of the printed 8^l relation between the alternating and
// plain (2,1,...,2,1) sums, per truncation limit. Reports differences only;
// nothing is asserted about which orientation converges.
struct AlternatingPoint {
  long long limit = 0;
  double alternating_sum = 0.0;  // signs (-1)^(n_1+...+n_l)
  double plain_sum = 0.0;
  double printed_diff = 0.0;     // alternating_sum - 8^l plain_sum
  double reversed_diff = 0.0;    // plain_sum - 8^l alternating_sum
};

struct AlternatingReport {
  int l = 0;
  std::vector<AlternatingPoint> points;
};

AlternatingReport alternating_identity_check(int l,
                                             const std::vector<long long>& limits);

}  // namespace opsf
