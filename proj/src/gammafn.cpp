#include "opsf/gammafn.hpp"

#include <cmath>

#include "opsf/error.hpp"

namespace opsf {

namespace {

// Lanczos g=7, n=9 coefficient set (Godfrey's published values).
constexpr double kG = 7.0;
constexpr double kCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // ln(2*pi)/2

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) fail(ErrorKind::DomainError, "ln_gamma requires x > 0");
  if (x < 0.5) {
    // Reflection; sin(pi x) > 0 on (0, 1/2).
    return std::log(M_PI / std::sin(M_PI * x)) - ln_gamma(1.0 - x);
  }
  const double xm1 = x - 1.0;
  double a = kCoef[0];
  for (int i = 1; i < 9; ++i) a += kCoef[i] / (xm1 + i);
  const double t = xm1 + kG + 0.5;
  return kHalfLogTwoPi + (xm1 + 0.5) * std::log(t) - t + std::log(a);
}

double beta_fn(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) fail(ErrorKind::DomainError, "beta_fn requires a, b > 0");
  return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

}  // namespace opsf
