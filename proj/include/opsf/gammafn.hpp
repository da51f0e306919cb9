#pragma once

namespace opsf {

// ln Gamma(x) for x > 0, Lanczos approximation (g=7, 9 coefficients),
// relative error below 1e-13 in double precision. Throws DomainError for x <= 0.
double ln_gamma(double x);

// B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b) via ln_gamma; a, b > 0.
double beta_fn(double a, double b);

}  // namespace opsf
