#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "opsf/eisenstein.hpp"
#include "opsf/rational.hpp"

namespace opsf {

// Dense univariate polynomial over an exact or floating coefficient field.
// Coefficients indexed by power; the zero polynomial has an empty list and
// degree() == -1 (the degree -infinity sentinel).
template <class T>
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
  static Poly identity() { return constant(T(1)); }
  static Poly variable() { return Poly(std::vector<T>{T(0), T(1)}); }

  // Monomial c * x^k.
  static Poly monomial(T coeff, size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = std::move(coeff);
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const T& coeff(size_t k) const {
    static const T zero{};
    return k < c_.size() ? c_[k] : zero;
  }
  const std::vector<T>& coeffs() const { return c_; }

  const T& leading() const { return c_.back(); }

  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] = p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
    return Poly(std::move(r));
  }

  friend Poly operator-(const Poly& p, const Poly& q) {
    std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] = p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) r[i] -= q.c_[i];
    return Poly(std::move(r));
  }

  friend Poly operator-(const Poly& p) {
    std::vector<T> r = p.c_;
    for (T& v : r) v = -v;
    return Poly(std::move(r));
  }

  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<T> r(p.c_.size() + q.c_.size() - 1, T(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
      for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    return Poly(std::move(r));
  }

  Poly scaled(const T& s) const {
    std::vector<T> r = c_;
    for (T& v : r) v = v * s;
    return Poly(std::move(r));
  }

  // Multiplication by x^k.
  Poly shifted(size_t k) const {
    if (is_zero()) return Poly();
    std::vector<T> r(c_.size() + k, T(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return Poly(std::move(r));
  }

  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<int>(i));
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }

  Poly& operator+=(const Poly& q) { return *this = *this + q; }
  Poly& operator-=(const Poly& q) { return *this = *this - q; }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using RPoly = Poly<Rational>;
using EPoly = Poly<Eisenstein>;
using DPoly = Poly<double>;

// Prints "c0 + c1*x + ...".
std::string poly_str(const RPoly& p, const std::string& var = "x");

DPoly poly_to_double(const RPoly& p);

}  // namespace opsf
