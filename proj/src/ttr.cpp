#include "opsf/ttr.hpp"

namespace opsf {

Rational RecurrencePair::a(int n) const {
  if (n < 0 || n > max_index)
    fail(ErrorKind::InvalidRecurrence,
         "a_n requested at n=" + std::to_string(n) + " beyond table (" + source + ")");
  return a_fn(n);
}

Rational RecurrencePair::b(int n) const {
  if (n < 1 || n > max_index)
    fail(ErrorKind::InvalidRecurrence,
         "b_n requested at n=" + std::to_string(n) + " beyond table (" + source + ")");
  return b_fn(n);
}

std::vector<RPoly> generate_from_ttr(const RecurrencePair& rec, int n_max) {
  if (n_max < 0) fail(ErrorKind::InvalidRecurrence, "n_max must be >= 0");
  std::vector<RPoly> polys;
  polys.reserve(static_cast<size_t>(n_max) + 1);
  polys.push_back(RPoly::identity());
  if (n_max == 0) return polys;

  const RPoly x = RPoly::variable();
  polys.push_back(x - RPoly::constant(rec.a(0)));
  for (int n = 1; n < n_max; ++n) {
    const Rational bn = rec.b(n);
    if (sgn(bn) <= 0)
      fail(ErrorKind::InvalidRecurrence,
           "b_" + std::to_string(n) + " = " + rational_str(bn) + " is not positive");
    RPoly next = (x - RPoly::constant(rec.a(n))) * polys.back() -
                 polys[static_cast<size_t>(n) - 1].scaled(bn);
    polys.push_back(std::move(next));
  }
  return polys;
}

std::vector<Rational> expand_in_basis(const RPoly& p, const std::vector<RPoly>& basis) {
  const int deg = p.degree();
  if (deg < 0) return {Rational(0)};
  if (static_cast<int>(basis.size()) <= deg)
    fail(ErrorKind::BasisNotGraded, "basis shorter than deg(p)+1");
  for (int k = 0; k <= deg; ++k)
    if (basis[static_cast<size_t>(k)].degree() != k)
      fail(ErrorKind::BasisNotGraded,
           "basis[" + std::to_string(k) + "] has degree " +
               std::to_string(basis[static_cast<size_t>(k)].degree()));

  std::vector<Rational> gamma(static_cast<size_t>(deg) + 1, Rational(0));
  RPoly rem = p;
  for (int k = deg; k >= 0; --k) {
    if (rem.degree() < k) continue;
    const RPoly& bk = basis[static_cast<size_t>(k)];
    const Rational g = rem.coeff(static_cast<size_t>(k)) / bk.leading();
    gamma[static_cast<size_t>(k)] = g;
    rem -= bk.scaled(g);
  }
  if (!rem.is_zero())
    fail(ErrorKind::BasisNotGraded, "back-substitution left a nonzero remainder");
  return gamma;
}

}  // namespace opsf
