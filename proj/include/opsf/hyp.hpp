#pragma once

#include <vector>

#include "opsf/rational.hpp"

namespace opsf {

// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, long n);

// (a;q)_n = prod_{i<n} (1 - a q^i); (a;q)_0 = 1.
Rational q_pochhammer(const Rational& a, const Rational& q, long n);

struct HypSeriesSpec {
  std::vector<Rational> num;
  std::vector<Rational> den;
  Rational z;
};

// Exact terminating pFq. Termination index is the smallest |a| over
// nonpositive-integer numerator parameters a. Throws NonTerminating when no
// such parameter exists, DenominatorPole when a denominator Pochhammer
// vanishes before termination.
Rational hyp_pfq_terminating(const HypSeriesSpec& spec);

inline Rational hyp_pfq_terminating(std::vector<Rational> num,
                                    std::vector<Rational> den, Rational z) {
  return hyp_pfq_terminating(HypSeriesSpec{std::move(num), std::move(den), std::move(z)});
}

// Exact terminating basic hypergeometric r-phi-s with the standard term
//   prod (a_j;q)_k / ((q;q)_k prod (b_j;q)_k) * [(-1)^k q^(k(k-1)/2)]^(1+s-r) z^k.
// Terminates via a numerator parameter of the form q^{-N}.
Rational hyp_qphiq_terminating(const std::vector<Rational>& num,
                               const std::vector<Rational>& den,
                               const Rational& q, const Rational& z);

}  // namespace opsf
