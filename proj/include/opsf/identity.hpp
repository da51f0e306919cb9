#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opsf/families.hpp"
#include "opsf/rational.hpp"

namespace opsf {

// One coefficient as a printed closed form evaluates: either an exact value,
// or the reason the expression is ill-defined at this index (for example a
// vanishing denominator inside its hypergeometric factor).
struct FormulaTerm {
  std::optional<Rational> value;
  std::string error;

  static FormulaTerm of(Rational v) { return {std::move(v), {}}; }
  static FormulaTerm bad(std::string why) { return {std::nullopt, std::move(why)}; }
};

// Indexed by target degree 0..deg; entries outside the printed summation
// range are exact zeros.
using FormulaVector = std::vector<FormulaTerm>;

enum class IdentityKind {
  LaguerreLin,
  GegenbauerLin,
  RogersLin,
  JacobiLin,
  LaguerreConn,
  GegenbauerConn,
  RogersConn,
  JacobiConn,
  ChebyshevProduct,
};

IdentityKind parse_identity_kind(const std::string& name);
const char* identity_kind_name(IdentityKind k);

// Linearization kinds run over an (m,n) grid; connection kinds over n.
bool is_linearization_kind(IdentityKind k);

// Printed closed forms, evaluated verbatim over exact rationals.
FormulaVector laguerre_lin(const Rational& alpha, int m, int n);
FormulaVector gegenbauer_lin(const Rational& lambda, int m, int n);
FormulaVector rogers_lin(const Rational& beta, const Rational& q, int m, int n);
FormulaVector jacobi_lin(const Rational& alpha, const Rational& beta, int m, int n);
FormulaVector laguerre_conn(const Rational& alpha, const Rational& beta, int n);
FormulaVector gegenbauer_conn(const Rational& lambda, const Rational& mu, int n);
FormulaVector rogers_conn(const Rational& gamma, const Rational& beta,
                          const Rational& q, int n);
FormulaVector jacobi_conn(const Rational& gamma, const Rational& delta,
                          const Rational& alpha, const Rational& beta, int n);

// T_m T_n over the U basis with the conventions U_{-1} = 0, U_{-2} = -1.
std::vector<Rational> cheby_product_u(int m, int n);

// Exact linearization coefficients: expand P_m^f P_n^f over the target's
// classical basis. Verifies its own reconstruction.
std::vector<Rational> linearization_oracle(const FamilySpec& f, int m, int n,
                                           const FamilySpec& target);

// Exact connection coefficients of P_n^f over the target basis.
std::vector<Rational> connection_oracle(const FamilySpec& f, int n,
                                        const FamilySpec& target);

enum class Verdict { Match, FormulaError, Mismatch };
const char* verdict_name(Verdict v);

struct IndexEntry {
  int degree = 0;
  FormulaTerm formula;
  Rational oracle;
  Rational diff;  // formula - oracle when the formula value exists
};

struct CoefficientCase {
  int m = -1;  // -1 for connection kinds
  int n = 0;
  std::vector<IndexEntry> entries;
  Verdict verdict = Verdict::Match;
  int first_mismatch_degree = -1;
  std::string note;  // first per-index error, if any
};

struct CoefficientReport {
  IdentityKind kind;
  std::vector<Rational> params;
  int max = 0;
  std::vector<CoefficientCase> cases;
  Verdict verdict = Verdict::Match;
  int match_count = 0;
  int mismatch_count = 0;
  int error_count = 0;
};

// Parameter layout by kind:
//   laguerre-lin [alpha], gegenbauer-lin [lambda], rogers-lin [beta, q],
//   jacobi-lin [alpha, beta], laguerre-conn [alpha, beta],
//   gegenbauer-conn [lambda, mu], rogers-conn [gamma, beta, q],
//   jacobi-conn [gamma, delta, alpha, beta], cheby-product [].
// Grid: all (m,n) with 0 <= m,n <= max for linearizations (0 <= n <= m for
// cheby-product), 0 <= n <= max for connections. Cases evaluate in parallel;
// the report order is fixed.
CoefficientReport identity_check(IdentityKind kind,
                                 const std::vector<Rational>& params, int max);

struct SchurReport {
  int n = 0;
  int samples = 0;
  uint64_t seed = 0;
  bool exact_sos_checked = false;  // n == 2 only
  bool exact_sos_match = false;
  int strict_positive = 0;     // positive non-equal triples with value > tol
  int nonnegative = 0;         // real triples with value >= -tol (even n)
  bool nonnegative_checked = false;
  double min_positive_value = 0.0;
  bool pass = false;
};

SchurReport schur_check(int n, int samples, uint64_t seed);

}  // namespace opsf
