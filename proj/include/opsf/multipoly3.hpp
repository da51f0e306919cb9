#pragma once

#include <array>
#include <map>

#include "opsf/rational.hpp"

namespace opsf {

// Sparse trivariate polynomial over exact rationals; no zero coefficients stored.
class MultiPoly3 {
public:
  using Key = std::array<int, 3>;

  MultiPoly3() = default;

  static MultiPoly3 constant(const Rational& c) {
    MultiPoly3 p;
    p.add_term({0, 0, 0}, c);
    return p;
  }
  // axis 0 -> x, 1 -> y, 2 -> z.
  static MultiPoly3 variable(int axis);

  void add_term(const Key& k, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Key, Rational>& terms() const { return terms_; }

  friend MultiPoly3 operator+(const MultiPoly3& p, const MultiPoly3& q);
  friend MultiPoly3 operator-(const MultiPoly3& p, const MultiPoly3& q);
  friend MultiPoly3 operator*(const MultiPoly3& p, const MultiPoly3& q);
  MultiPoly3 scaled(const Rational& s) const;
  MultiPoly3 pow(int e) const;

  friend bool operator==(const MultiPoly3& p, const MultiPoly3& q) {
    return p.terms_ == q.terms_;
  }

  Rational eval(const Rational& x, const Rational& y, const Rational& z) const;

  // Floating evaluation together with the sum of absolute monomial values
  // (roundoff scale for sign thresholds).
  struct EvalWithScale {
    double value;
    double scale;
  };
  EvalWithScale eval_double(double x, double y, double z) const;

private:
  std::map<Key, Rational> terms_;
};

// x^n (x-y)(x-z) + y^n (y-x)(y-z) + z^n (z-x)(z-y), expanded exactly.
MultiPoly3 schur_lhs(int n);

// (1/4) [ (2x^2 - y^2 - z^2 + 2yz - xz - xy)^2 + 3 (y^2 - z^2 + xz - xy)^2 ].
MultiPoly3 sos_rhs();

}  // namespace opsf
