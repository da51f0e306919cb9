#include "opsf/multipoly3.hpp"

#include <cmath>

namespace opsf {

MultiPoly3 MultiPoly3::variable(int axis) {
  MultiPoly3 p;
  Key k{0, 0, 0};
  k[static_cast<size_t>(axis)] = 1;
  p.add_term(k, Rational(1));
  return p;
}

void MultiPoly3::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly3 operator+(const MultiPoly3& p, const MultiPoly3& q) {
  MultiPoly3 r = p;
  for (const auto& [k, c] : q.terms_) r.add_term(k, c);
  return r;
}

MultiPoly3 operator-(const MultiPoly3& p, const MultiPoly3& q) {
  MultiPoly3 r = p;
  for (const auto& [k, c] : q.terms_) r.add_term(k, -c);
  return r;
}

MultiPoly3 operator*(const MultiPoly3& p, const MultiPoly3& q) {
  MultiPoly3 r;
  for (const auto& [kp, cp] : p.terms_)
    for (const auto& [kq, cq] : q.terms_)
      r.add_term({kp[0] + kq[0], kp[1] + kq[1], kp[2] + kq[2]}, cp * cq);
  return r;
}

MultiPoly3 MultiPoly3::scaled(const Rational& s) const {
  MultiPoly3 r;
  if (s == 0) return r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
  return r;
}

MultiPoly3 MultiPoly3::pow(int e) const {
  MultiPoly3 r = constant(Rational(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Rational MultiPoly3::eval(const Rational& x, const Rational& y, const Rational& z) const {
  Rational acc(0);
  for (const auto& [k, c] : terms_) {
    acc += c * rational_pow(x, k[0]) * rational_pow(y, k[1]) * rational_pow(z, k[2]);
  }
  return acc;
}

MultiPoly3::EvalWithScale MultiPoly3::eval_double(double x, double y, double z) const {
  double acc = 0.0, scale = 0.0;
  for (const auto& [k, c] : terms_) {
    const double m = to_double(c) * std::pow(x, k[0]) * std::pow(y, k[1]) * std::pow(z, k[2]);
    acc += m;
    scale += std::fabs(m);
  }
  return {acc, scale};
}

MultiPoly3 schur_lhs(int n) {
  const MultiPoly3 x = MultiPoly3::variable(0);
  const MultiPoly3 y = MultiPoly3::variable(1);
  const MultiPoly3 z = MultiPoly3::variable(2);
  MultiPoly3 xn = MultiPoly3::constant(Rational(1));
  MultiPoly3 yn = xn, zn = xn;
  for (int i = 0; i < n; ++i) {
    xn = xn * x;
    yn = yn * y;
    zn = zn * z;
  }
  return xn * (x - y) * (x - z) + yn * (y - x) * (y - z) + zn * (z - x) * (z - y);
}

MultiPoly3 sos_rhs() {
  const MultiPoly3 x = MultiPoly3::variable(0);
  const MultiPoly3 y = MultiPoly3::variable(1);
  const MultiPoly3 z = MultiPoly3::variable(2);
  const MultiPoly3 x2 = x * x, y2 = y * y, z2 = z * z;
  const MultiPoly3 u =
      x2.scaled(Rational(2)) - y2 - z2 + (y * z).scaled(Rational(2)) - x * z - x * y;
  const MultiPoly3 v = y2 - z2 + x * z - x * y;
  return (u * u + (v * v).scaled(Rational(3))).scaled(Rational(1, 4));
}

}  // namespace opsf
