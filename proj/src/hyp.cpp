#include "opsf/hyp.hpp"

#include <limits>

namespace opsf {

Rational pochhammer(const Rational& a, long n) {
  if (n < 0) fail(ErrorKind::DomainError, "pochhammer order must be >= 0");
  Rational prod(1);
  Rational factor = a;
  for (long i = 0; i < n; ++i) {
    prod *= factor;
    factor += 1;
  }
  return prod;
}

Rational q_pochhammer(const Rational& a, const Rational& q, long n) {
  if (n < 0) fail(ErrorKind::DomainError, "q-pochhammer order must be >= 0");
  Rational prod(1);
  Rational aq = a;
  for (long i = 0; i < n; ++i) {
    prod *= Rational(1) - aq;
    aq *= q;
  }
  return prod;
}

Rational hyp_pfq_terminating(const HypSeriesSpec& spec) {
  // Smallest nonpositive-integer numerator parameter in absolute value.
  long trunc = -1;
  for (const Rational& a : spec.num) {
    if (is_nonpositive_integer(a)) {
      const Rational abs_a = -a;
      if (!abs_a.get_num().fits_slong_p())
        fail(ErrorKind::DomainError, "termination index too large");
      const long n = abs_a.get_num().get_si();
      if (trunc < 0 || n < trunc) trunc = n;
    }
  }
  if (trunc < 0)
    fail(ErrorKind::NonTerminating, "no nonpositive-integer numerator parameter");

  Rational sum(1);
  Rational term(1);
  for (long k = 0; k < trunc; ++k) {
    Rational ratio_num(1);
    for (const Rational& a : spec.num) ratio_num *= a + k;
    Rational ratio_den(k + 1);
    for (const Rational& b : spec.den) {
      const Rational factor = b + k;
      if (factor == 0)
        fail(ErrorKind::DenominatorPole,
             "denominator Pochhammer vanishes at term " + std::to_string(k + 1));
      ratio_den *= factor;
    }
    term *= spec.z * ratio_num / ratio_den;
    sum += term;
  }
  return sum;
}

Rational hyp_qphiq_terminating(const std::vector<Rational>& num,
                               const std::vector<Rational>& den,
                               const Rational& q, const Rational& z) {
  if (q == 0) fail(ErrorKind::DomainError, "q must be nonzero");
  constexpr long kCap = 4096;

  // Terminates at the smallest N with some numerator parameter equal to q^{-N}.
  long trunc = -1;
  for (const Rational& a : num) {
    Rational x = a;
    for (long n = 0; n <= kCap; ++n) {
      if (x == 1) {
        if (trunc < 0 || n < trunc) trunc = n;
        break;
      }
      x *= q;
    }
  }
  if (trunc < 0)
    fail(ErrorKind::NonTerminating, "no numerator parameter of the form q^-N");

  const long r = static_cast<long>(num.size());
  const long s = static_cast<long>(den.size());
  const long wp = 1 + s - r;  // exponent of the (-1)^k q^C(k,2) factor

  Rational sum(1);
  Rational term(1);
  Rational qk(1);  // q^k
  for (long k = 0; k < trunc; ++k) {
    Rational ratio_num(1);
    for (const Rational& a : num) ratio_num *= Rational(1) - a * qk;
    Rational ratio_den = Rational(1) - qk * q;  // (q;q) factor: 1 - q^{k+1}
    for (const Rational& b : den) {
      const Rational factor = Rational(1) - b * qk;
      if (factor == 0)
        fail(ErrorKind::DenominatorPole,
             "q-Pochhammer denominator vanishes at term " + std::to_string(k + 1));
      ratio_den *= factor;
    }
    if (ratio_den == 0)
      fail(ErrorKind::DenominatorPole,
           "(q;q) factor vanishes at term " + std::to_string(k + 1));
    term *= z * ratio_num / ratio_den;
    term *= rational_pow(-qk, wp);
    sum += term;
    qk *= q;
  }
  return sum;
}

}  // namespace opsf
