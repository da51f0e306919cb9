#pragma once

#include <string>

#include "opsf/rational.hpp"

namespace opsf {

// Number a + b*w where w is a primitive cube root of unity, w^2 = -1 - w.
// Field arithmetic over Q(w).
struct Eisenstein {
  Rational re;  // coefficient of 1
  Rational om;  // coefficient of w

  Eisenstein() : re(0), om(0) {}
  Eisenstein(Rational r) : re(std::move(r)), om(0) {}
  Eisenstein(Rational r, Rational o) : re(std::move(r)), om(std::move(o)) {}

  static Eisenstein omega() { return Eisenstein(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && om == 0; }

  friend Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) {
    return {x.re + y.re, x.om + y.om};
  }
  friend Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) {
    return {x.re - y.re, x.om - y.om};
  }
  friend Eisenstein operator-(const Eisenstein& x) { return {-x.re, -x.om}; }

  // (a+bw)(c+dw) = ac - bd + (ad + bc - bd) w, using w^2 = -1 - w.
  friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
    const Rational bd = x.om * y.om;
    return {x.re * y.re - bd, x.re * y.om + x.om * y.re - bd};
  }

  friend bool operator==(const Eisenstein& x, const Eisenstein& y) {
    return x.re == y.re && x.om == y.om;
  }

  Eisenstein& operator+=(const Eisenstein& y) { return *this = *this + y; }
  Eisenstein& operator-=(const Eisenstein& y) { return *this = *this - y; }
  Eisenstein& operator*=(const Eisenstein& y) { return *this = *this * y; }

  // Field norm a^2 - ab + b^2 (= x * conj(x), conj(a+bw) = a + b*w^2).
  Rational norm() const { return re * re - re * om + om * om; }

  Eisenstein conj() const { return {re - om, -om}; }
};

Eisenstein eisenstein_inv(const Eisenstein& x);

inline Eisenstein operator/(const Eisenstein& x, const Eisenstein& y) {
  return x * eisenstein_inv(y);
}

// Prints "a+b*w" (ASCII).
std::string eisenstein_str(const Eisenstein& x);

Eisenstein parse_eisenstein(const std::string& text);

}  // namespace opsf
