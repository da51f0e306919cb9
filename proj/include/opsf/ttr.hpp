#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "opsf/dense_poly.hpp"
#include "opsf/rational.hpp"

namespace opsf {

// Monic three-term recurrence coefficients:
//   P_{n+1} = (x - a_n) P_n - b_n P_{n-1},  P_{-1} = 0, P_0 = 1,
// with b_n > 0 for n >= 1 in the positive-definite case.
struct RecurrencePair {
  std::function<Rational(int)> a_fn;  // n >= 0
  std::function<Rational(int)> b_fn;  // n >= 1
  int max_index = std::numeric_limits<int>::max();  // finite for CSV tables
  std::string source;

  Rational a(int n) const;
  Rational b(int n) const;
};

// Monic P_0..P_N generated exactly from the recurrence.
// Throws InvalidRecurrence when a requested b_n <= 0.
std::vector<RPoly> generate_from_ttr(const RecurrencePair& rec, int n_max);

// Unique coefficients gamma_k with p = sum gamma_k basis[k], found by
// back-substitution from the top degree. basis[k] must have degree exactly k
// for all k <= deg(p); throws BasisNotGraded otherwise. Returns deg(p)+1
// coefficients (a single 0 for the zero polynomial).
std::vector<Rational> expand_in_basis(const RPoly& p, const std::vector<RPoly>& basis);

}  // namespace opsf
