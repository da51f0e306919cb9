#pragma once

#include <string>
#include <vector>

namespace opsf {

struct QuadratureRule {
  std::vector<double> nodes;    // ascending, inside (-1, 1)
  std::vector<double> weights;  // positive, sum to 2
};

// Gauss-Legendre rule: exact for polynomial degree <= 2n-1.
QuadratureRule gauss_legendre(int n);

// C_n^lambda(x) by the floating-point three-term recurrence.
double gegenbauer_eval(int n, double lambda, double x);

struct IntegralValue {
  double value = 0.0;
  double err = 0.0;  // sum of two-level panel differences
};

// integral_0^t (t-theta)^delta C_n^lambda(cos theta) (sin theta)^(2 lambda)
// d theta by adaptive composite Gauss-Legendre; panels split toward the
// endpoint derivative singularities until the two-level difference drops
// under tol/4. Throws ToleranceNotReached (best value in the message) when
// the depth cap is hit first.
IntegralValue f_integral(int n, double lambda, double delta, double t,
                         double tol);

struct PositivityScanConfig {
  double lambda = 1.0;
  double delta = 2.0;
  int n_max = 20;
  int t_count = 200;  // grid t_j = j pi / t_count, j = 1..t_count
  double tol = 1e-10;
};

enum class SignClass { Positive, Negative, Indeterminate };
const char* sign_class_name(SignClass s);

struct ScanPoint {
  int n = 0;
  double t = 0.0;
  double value = 0.0;
  double err = 0.0;
  SignClass sign = SignClass::Indeterminate;
  bool ok = true;     // false when the integral failed; note has the reason
  std::string note;
};

enum class ScanVerdict { ConsistentWithConjecture, NegativeWitness, Inconclusive };
const char* scan_verdict_name(ScanVerdict v);

struct ScanReport {
  PositivityScanConfig config;
  std::vector<ScanPoint> points;  // n-major, then t ascending

  double min_value = 0.0;  // over points that evaluated
  int min_n = -1;
  double min_t = 0.0;

  long long positive_count = 0;
  long long negative_count = 0;
  long long indeterminate_count = 0;
  long long failure_count = 0;

  ScanVerdict verdict = ScanVerdict::Inconclusive;
  int witness_n = -1;  // first Negative point in (n, t) order, if any
  double witness_t = 0.0;
  double witness_value = 0.0;
};

// Signs are classified conservatively: Negative only below
// -max(tol, 4 err), Positive only above +max(tol, 4 err).
ScanReport positivity_scan(const PositivityScanConfig& cfg);

struct MonotonicityViolation {
  double delta_base = 0.0;
  double delta_cmp = 0.0;
  int n = 0;
  double t = 0.0;
  double base_value = 0.0;
  double cmp_value = 0.0;
};

struct MonotonicityReport {
  double lambda = 0.0;
  std::vector<double> deltas;  // strictly ascending
  std::vector<ScanReport> scans;
  std::vector<bool> all_positive;  // per delta: whole grid Positive
  std::vector<MonotonicityViolation> violations;
  bool pass = true;
};

// Wherever the scan at some delta is Positive on the whole grid, scans at
// every larger delta must not turn Negative at any grid point.
MonotonicityReport monotonicity_check(double lambda,
                                      const std::vector<double>& deltas,
                                      int n_max, int t_count, double tol);

}  // namespace opsf
