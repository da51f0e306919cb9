#include "opsf/rational.hpp"

#include <cctype>
#include <sstream>

namespace opsf {

namespace {

bool looks_like_integer(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(ErrorKind::ParseError, "empty rational literal");

  const size_t slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!looks_like_integer(num) || !looks_like_integer(den))
    fail(ErrorKind::ParseError, "bad rational literal '" + text + "'");

  BigInt n(num), d(den);
  if (d == 0) fail(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  if (r.get_den() == 1)
    os << r.get_num();
  else
    os << r.get_num() << '/' << r.get_den();
  return os.str();
}

bool is_nonpositive_integer(const Rational& r) {
  return r.get_den() == 1 && sgn(r) <= 0;
}

long to_long(const Rational& r) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p())
    fail(ErrorKind::DomainError, "expected small integer, got " + rational_str(r));
  return r.get_num().get_si();
}

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) fail(ErrorKind::DivisionByZero, "0 raised to negative power");
    return Rational(0);
  }
  const unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), ae);
  mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), ae);
  Rational r = (e > 0) ? Rational(n, d) : Rational(d, n);
  r.canonicalize();
  return r;
}

Rational checked_div(const Rational& num, const Rational& den, ErrorKind kind,
                     const std::string& context) {
  if (den == 0) fail(kind, "zero denominator in " + context);
  return num / den;
}

Rational factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream is(csv);
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(parse_rational(item));
  return out;
}

}  // namespace opsf
