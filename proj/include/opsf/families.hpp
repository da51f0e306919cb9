#pragma once

#include <string>

#include "opsf/dense_poly.hpp"
#include "opsf/rational.hpp"
#include "opsf/tridiag.hpp"
#include "opsf/ttr.hpp"

namespace opsf {

enum class FamilyTag {
  ChebyshevT,
  ChebyshevU,
  Laguerre,
  Gegenbauer,
  Jacobi,
  QUltraspherical,
  Meixner,
  MeixnerPollaczek,
};

// A validated family-plus-parameters descriptor. Construct through the
// factories (they enforce the parameter domains) or parse() from strings
// like "gegenbauer:lambda=1/3" or "jacobi:alpha=1/2,beta=-1/3".
class FamilySpec {
 public:
  static FamilySpec chebyshev_t();
  static FamilySpec chebyshev_u();
  static FamilySpec laguerre(const Rational& alpha);
  static FamilySpec gegenbauer(const Rational& lambda);
  static FamilySpec jacobi(const Rational& alpha, const Rational& beta);
  static FamilySpec q_ultraspherical(const Rational& beta, const Rational& q);
  static FamilySpec meixner(const Rational& beta, const Rational& c);
  // phi is supplied as a rational point (cos phi, sin phi) on the unit circle.
  static FamilySpec meixner_pollaczek(const Rational& lambda,
                                      const Rational& cos_phi,
                                      const Rational& sin_phi);

  static FamilySpec parse(const std::string& text);

  FamilyTag tag() const { return tag_; }
  const Rational& param(int i) const;
  std::string str() const;

 private:
  FamilySpec(FamilyTag tag, std::vector<Rational> params)
      : tag_(tag), params_(std::move(params)) {}

  FamilyTag tag_;
  std::vector<Rational> params_;
};

// Classically normalized polynomial, exact coefficients.
// MeixnerPollaczek has no classical rational normalization here and
// reports ParameterDomain; use family_recurrence for it.
RPoly family_poly(const FamilySpec& f, int n);

// Monic three-term recurrence coefficients.
RecurrencePair family_recurrence(const FamilySpec& f);

// Truncated Jacobi operator: diag[i] = a_i, offdiag[i] = sqrt(b_{i+1}).
TridiagonalMatrix jacobi_matrix(const RecurrencePair& rec, int n);

// CSV with header "n,a_n,b_n", consecutive n from 0, rationals as "p/q".
// The b entry of the n=0 row is ignored and may be "-" or empty.
RecurrencePair load_recurrence_csv(const std::string& path);

}  // namespace opsf
