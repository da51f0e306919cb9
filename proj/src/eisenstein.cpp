#include "opsf/eisenstein.hpp"

#include <sstream>

namespace opsf {

Eisenstein eisenstein_inv(const Eisenstein& x) {
  const Rational n = x.norm();
  if (n == 0) fail(ErrorKind::DivisionByZero, "inverse of zero Eisenstein rational");
  const Eisenstein c = x.conj();
  return {c.re / n, c.om / n};
}

std::string eisenstein_str(const Eisenstein& x) {
  std::ostringstream os;
  os << rational_str(x.re);
  if (sgn(x.om) >= 0) os << '+';
  os << rational_str(x.om) << "*w";
  return os.str();
}

Eisenstein parse_eisenstein(const std::string& text) {
  // Accepts "a", "w", "b*w", and the combinations "a+b*w", "a-w", ...
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const size_t wpos = s.find('w');
  if (wpos == std::string::npos) return Eisenstein(parse_rational(s));
  if (wpos + 1 != s.size())
    fail(ErrorKind::ParseError, "bad Eisenstein literal '" + text + "'");

  std::string head = s.substr(0, wpos);
  std::string coef;
  if (!head.empty() && head.back() == '*') {
    head.pop_back();
    // the coefficient starts after the last sign that is not a leading sign
    // and not part of "p/-q"
    size_t split = 0;
    for (size_t i = 1; i < head.size(); ++i)
      if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') split = i;
    coef = head.substr(split);
    head = head.substr(0, split);
    if (coef == "+" || coef == "-") coef += "1";
  } else {
    coef = "1";
    if (!head.empty() && (head.back() == '+' || head.back() == '-')) {
      if (head.back() == '-') coef = "-1";
      head.pop_back();
    } else if (!head.empty()) {
      fail(ErrorKind::ParseError, "bad Eisenstein literal '" + text + "'");
    }
  }
  const Rational re = head.empty() ? Rational(0) : parse_rational(head);
  return Eisenstein(re, parse_rational(coef));
}

}  // namespace opsf
