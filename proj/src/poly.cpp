#include "opsf/dense_poly.hpp"

#include <sstream>

namespace opsf {

std::string poly_str(const RPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coeff(static_cast<size_t>(k));
    if (c == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    os << rational_str(first ? c : Rational(abs(c)));
    if (k > 0) os << '*' << var;
    if (k > 1) os << '^' << k;
    first = false;
  }
  return os.str();
}

DPoly poly_to_double(const RPoly& p) {
  std::vector<double> c(p.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = to_double(p.coeffs()[i]);
  return DPoly(std::move(c));
}

}  // namespace opsf
