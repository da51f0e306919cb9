#include "opsf/identity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "opsf/error.hpp"
#include "opsf/hyp.hpp"
#include "opsf/multipoly3.hpp"
#include "opsf/parallel.hpp"
#include "opsf/ttr.hpp"

namespace opsf {

namespace {

// 1/k! with the convention 1/(negative integer)! := 0, which encodes the
// printed summation ranges.
Rational inv_factorial(long k) {
  if (k < 0) return Rational(0);
  return 1 / factorial(static_cast<unsigned long>(k));
}

template <class F>
FormulaTerm guarded(F&& eval) {
  try {
    return FormulaTerm::of(eval());
  } catch (const Error& e) {
    return FormulaTerm::bad(e.what());
  }
}

const FormulaTerm kZeroTerm = FormulaTerm::of(Rational(0));

}  // namespace

IdentityKind parse_identity_kind(const std::string& name) {
  if (name == "laguerre-lin") return IdentityKind::LaguerreLin;
  if (name == "gegenbauer-lin") return IdentityKind::GegenbauerLin;
  if (name == "rogers-lin") return IdentityKind::RogersLin;
  if (name == "jacobi-lin") return IdentityKind::JacobiLin;
  if (name == "laguerre-conn") return IdentityKind::LaguerreConn;
  if (name == "gegenbauer-conn") return IdentityKind::GegenbauerConn;
  if (name == "rogers-conn") return IdentityKind::RogersConn;
  if (name == "jacobi-conn") return IdentityKind::JacobiConn;
  if (name == "cheby-product") return IdentityKind::ChebyshevProduct;
  fail(ErrorKind::ParseError, "unknown identity kind: " + name);
}

const char* identity_kind_name(IdentityKind k) {
  switch (k) {
    case IdentityKind::LaguerreLin: return "laguerre-lin";
    case IdentityKind::GegenbauerLin: return "gegenbauer-lin";
    case IdentityKind::RogersLin: return "rogers-lin";
    case IdentityKind::JacobiLin: return "jacobi-lin";
    case IdentityKind::LaguerreConn: return "laguerre-conn";
    case IdentityKind::GegenbauerConn: return "gegenbauer-conn";
    case IdentityKind::RogersConn: return "rogers-conn";
    case IdentityKind::JacobiConn: return "jacobi-conn";
    case IdentityKind::ChebyshevProduct: return "cheby-product";
  }
  fail(ErrorKind::DomainError, "unknown identity kind");
}

bool is_linearization_kind(IdentityKind k) {
  switch (k) {
    case IdentityKind::LaguerreLin:
    case IdentityKind::GegenbauerLin:
    case IdentityKind::RogersLin:
    case IdentityKind::JacobiLin:
    case IdentityKind::ChebyshevProduct:
      return true;
    default:
      return false;
  }
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::FormulaError: return "formula-error";
    case Verdict::Mismatch: return "mismatch";
  }
  fail(ErrorKind::DomainError, "unknown verdict");
}

FormulaVector laguerre_lin(const Rational& alpha, int m, int n) {
  FormulaVector out(static_cast<size_t>(m + n) + 1, kZeroTerm);
  for (int k = std::abs(n - m); k <= m + n; ++k) {
    out[static_cast<size_t>(k)] = guarded([&]() -> Rational {
      const Rational f = hyp_pfq_terminating(
          {Rational(k - m - n) / 2, Rational(k - m - n + 1) / 2, alpha + k + 1},
          {Rational(k - n + 1), Rational(k - m + 1)}, Rational(1));
      const Rational pref = rational_pow(Rational(2), m + n - k) *
                            factorial(static_cast<unsigned long>(n)) *
                            factorial(static_cast<unsigned long>(m)) *
                            inv_factorial(m + n - k) * inv_factorial(k - n) *
                            inv_factorial(k - m);
      return pref * f;
    });
  }
  return out;
}

FormulaVector gegenbauer_lin(const Rational& lambda, int m, int n) {
  FormulaVector out(static_cast<size_t>(m + n) + 1, kZeroTerm);
  for (int k = 0; k <= std::min(m, n); ++k) {
    const int d = m + n - 2 * k;
    out[static_cast<size_t>(d)] = guarded([&]() -> Rational {
      const Rational num = (m + n + lambda - 2 * k) *
                           factorial(static_cast<unsigned long>(d)) *
                           pochhammer(lambda, k) * pochhammer(lambda, m - k) *
                           pochhammer(lambda, n - k) *
                           pochhammer(2 * lambda, m + n - k);
      const Rational den = (m + n + lambda - k) *
                           factorial(static_cast<unsigned long>(k)) *
                           factorial(static_cast<unsigned long>(m - k)) *
                           factorial(static_cast<unsigned long>(n - k)) *
                           pochhammer(lambda, m + n - k) *
                           pochhammer(2 * lambda, d);
      return checked_div(num, den, ErrorKind::FormulaPole,
                         "gegenbauer linearization coefficient");
    });
  }
  return out;
}

FormulaVector rogers_lin(const Rational& beta, const Rational& q, int m, int n) {
  FormulaVector out(static_cast<size_t>(m + n) + 1, kZeroTerm);
  for (int k = 0; k <= std::min(m, n); ++k) {
    const int d = m + n - 2 * k;
    out[static_cast<size_t>(d)] = guarded([&]() -> Rational {
      const Rational num = q_pochhammer(q, q, d) * q_pochhammer(beta, q, m - k) *
                           q_pochhammer(beta, q, n - k) * q_pochhammer(beta, q, k) *
                           q_pochhammer(beta * beta, q, m + n - k) *
                           (1 - beta * rational_pow(q, d));
      const Rational den = q_pochhammer(q, q, k) * q_pochhammer(q, q, m - k) *
                           q_pochhammer(q, q, n - k) *
                           q_pochhammer(beta * q, q, m + n - k) *
                           q_pochhammer(beta * beta, q, d) * (1 - beta);
      return checked_div(num, den, ErrorKind::FormulaPole,
                         "rogers linearization coefficient");
    });
  }
  return out;
}

FormulaVector jacobi_lin(const Rational& alpha, const Rational& beta, int m, int n) {
  if (m > n) std::swap(m, n);
  const int s = n - m;
  FormulaVector out(static_cast<size_t>(m + n) + 1, kZeroTerm);
  for (int j = 0; j <= 2 * (n - s); ++j) {
    const int k = s + j;
    out[static_cast<size_t>(k)] = guarded([&]() -> Rational {
      const Rational nfac = factorial(static_cast<unsigned long>(n));
      const Rational head_num = (alpha + beta + 1 + 2 * s + 2 * j) * nfac * nfac *
                                factorial(static_cast<unsigned long>(n - s)) *
                                factorial(static_cast<unsigned long>(s + j));
      const Rational head_den = (alpha + beta + 1) * (2 * s - 2 * n - alpha - beta) *
                                factorial(static_cast<unsigned long>(s)) *
                                factorial(static_cast<unsigned long>(j));
      const Rational head = checked_div(head_num, head_den, ErrorKind::FormulaPole,
                                        "jacobi linearization prefactor");
      const Rational mid_num =
          pochhammer(beta + 1, n) * pochhammer(alpha + beta + 1, 2 * n - 2 * s) *
          pochhammer(alpha + beta + 1, 2 * s + j) *
          pochhammer(Rational(2 * s - 2 * n), j) *
          pochhammer(2 * alpha + 2 * beta + 2 * n + 2, j) *
          pochhammer(alpha - beta, j);
      const Rational mid_den =
          pochhammer(alpha + 1, n) * pochhammer(alpha + 1, n - s) *
          pochhammer(alpha + 1, s + j) * pochhammer(alpha + 1, n - s) *
          pochhammer(beta + 1, s) * pochhammer(alpha + beta + 1, n - s) *
          pochhammer(alpha + beta + 2, 2 * n + j) *
          pochhammer(2 * beta + 2 * s + 2, j);
      const Rational mid = checked_div(mid_num, mid_den, ErrorKind::FormulaPole,
                                       "jacobi linearization shifted factorials");
      const Rational f = hyp_pfq_terminating(
          {beta + s + Rational(1, 2), (beta + s + Rational(3, 2)) / 2,
           (2 * beta + 1) / Rational(2), beta + n + 1,
           (beta + s + Rational(1, 2)) / 2, Rational(s + 1),
           Rational(2 * s - 2 * n + 1) / 2, (alpha + beta + j + 2 * s + 2) / 2,
           Rational(1 - j) / 2, Rational(-j) / 2},
          {s - n - alpha, (alpha + beta + j + 2 * s + 1) / 2,
           alpha + beta + n + Rational(3, 2), (beta - alpha - j + 2) / 2,
           (beta - alpha - j + 1) / 2, (2 * beta + 2 * s + 2 + j) / Rational(2),
           (2 * beta + 2 * s + 3 + j) / Rational(2)},
          Rational(1));
      return head * mid * f;
    });
  }
  return out;
}

FormulaVector laguerre_conn(const Rational& alpha, const Rational& beta, int n) {
  FormulaVector out(static_cast<size_t>(n) + 1, kZeroTerm);
  for (int k = 0; k <= n; ++k)
    out[static_cast<size_t>(k)] =
        FormulaTerm::of(pochhammer(alpha - beta, n - k) * inv_factorial(n - k));
  return out;
}

FormulaVector gegenbauer_conn(const Rational& lambda, const Rational& mu, int n) {
  FormulaVector out(static_cast<size_t>(n) + 1, kZeroTerm);
  for (int k = 0; k <= n / 2; ++k) {
    const int d = n - 2 * k;
    out[static_cast<size_t>(d)] = guarded([&]() -> Rational {
      const Rational num = (mu + d) * pochhammer(lambda, n - k) *
                           pochhammer(lambda - mu, k);
      const Rational den = mu * factorial(static_cast<unsigned long>(k)) *
                           pochhammer(mu + 1, n - k);
      return checked_div(num, den, ErrorKind::FormulaPole,
                         "gegenbauer connection coefficient");
    });
  }
  return out;
}

FormulaVector rogers_conn(const Rational& gamma, const Rational& beta,
                          const Rational& q, int n) {
  FormulaVector out(static_cast<size_t>(n) + 1, kZeroTerm);
  for (int k = 0; k <= n / 2; ++k) {
    const int d = n - 2 * k;
    out[static_cast<size_t>(d)] = guarded([&]() -> Rational {
      // (gamma/beta; q)_0 = 1 regardless, so the ratio only forms for k >= 1
      const Rational ratio =
          k == 0 ? Rational(0)
                 : checked_div(gamma, beta, ErrorKind::FormulaPole,
                               "rogers connection gamma/beta");
      const Rational num = rational_pow(beta, k) * q_pochhammer(ratio, q, k) *
                           q_pochhammer(gamma, q, n - k) *
                           (1 - beta * rational_pow(q, d));
      const Rational den = q_pochhammer(q, q, k) * q_pochhammer(beta * q, q, n - k) *
                           (1 - beta);
      return checked_div(num, den, ErrorKind::FormulaPole,
                         "rogers connection coefficient");
    });
  }
  return out;
}

FormulaVector jacobi_conn(const Rational& gamma, const Rational& delta,
                          const Rational& alpha, const Rational& beta, int n) {
  FormulaVector out(static_cast<size_t>(n) + 1, kZeroTerm);
  for (int k = 0; k <= n; ++k) {
    out[static_cast<size_t>(k)] = guarded([&]() -> Rational {
      // Gamma(a+b+k+1)/Gamma(a+b+2k+1) reduced to 1/(a+b+k+1)_k
      const Rational gratio =
          checked_div(Rational(1), pochhammer(alpha + beta + k + 1, k),
                      ErrorKind::FormulaPole, "jacobi connection gamma ratio");
      const Rational pref = pochhammer(gamma + k + 1, n - k) *
                            pochhammer(n + gamma + delta + 1, k) *
                            inv_factorial(n - k) * gratio;
      const Rational f = hyp_pfq_terminating(
          {Rational(-n + k), n + k + gamma + delta + 1, alpha + k + 1},
          {gamma + k + 1, alpha + beta + 2 * k + 2}, Rational(1));
      return pref * f;
    });
  }
  return out;
}

std::vector<Rational> cheby_product_u(int m, int n) {
  if (m < n) std::swap(m, n);
  std::vector<Rational> out(static_cast<size_t>(m + n) + 1, Rational(0));
  const Rational quarter(1, 4);
  auto add = [&](int degree, const Rational& c) {
    if (degree >= 0) {
      out[static_cast<size_t>(degree)] += c;
    } else if (degree == -2) {
      out[0] -= c;  // U_{-2} = -1 = -U_0
    }
    // U_{-1} = 0 contributes nothing
  };
  add(m + n, quarter);
  add(m + n - 2, -quarter);
  add(m - n, quarter);
  add(m - n - 2, -quarter);
  return out;
}

namespace {

std::vector<Rational> expand_product(const RPoly& p, const FamilySpec& target,
                                     int top_degree) {
  std::vector<RPoly> basis;
  basis.reserve(static_cast<size_t>(top_degree) + 1);
  for (int k = 0; k <= top_degree; ++k) basis.push_back(family_poly(target, k));
  auto gamma = expand_in_basis(p, basis);
  gamma.resize(static_cast<size_t>(top_degree) + 1, Rational(0));
  RPoly recon;
  for (size_t k = 0; k < gamma.size(); ++k) recon += basis[k].scaled(gamma[k]);
  if (!(recon == p))
    fail(ErrorKind::BasisNotGraded, "oracle reconstruction mismatch");
  return gamma;
}

}  // namespace

std::vector<Rational> linearization_oracle(const FamilySpec& f, int m, int n,
                                           const FamilySpec& target) {
  if (m < 0 || n < 0) fail(ErrorKind::DomainError, "degrees must be >= 0");
  return expand_product(family_poly(f, m) * family_poly(f, n), target, m + n);
}

std::vector<Rational> connection_oracle(const FamilySpec& f, int n,
                                        const FamilySpec& target) {
  if (n < 0) fail(ErrorKind::DomainError, "degree must be >= 0");
  return expand_product(family_poly(f, n), target, n);
}

namespace {

void require_params(const std::vector<Rational>& params, size_t want,
                    const char* kind) {
  if (params.size() != want)
    fail(ErrorKind::UsageError, std::string(kind) + " needs " +
                                    std::to_string(want) + " parameter(s), got " +
                                    std::to_string(params.size()));
}

struct CasePlan {
  FormulaVector formula;
  std::vector<Rational> oracle;
};

CasePlan evaluate_point(IdentityKind kind, const std::vector<Rational>& p,
                        int m, int n) {
  CasePlan plan;
  switch (kind) {
    case IdentityKind::LaguerreLin: {
      const FamilySpec f = FamilySpec::laguerre(p[0]);
      plan.formula = laguerre_lin(p[0], m, n);
      plan.oracle = linearization_oracle(f, m, n, f);
      break;
    }
    case IdentityKind::GegenbauerLin: {
      const FamilySpec f = FamilySpec::gegenbauer(p[0]);
      plan.formula = gegenbauer_lin(p[0], m, n);
      plan.oracle = linearization_oracle(f, m, n, f);
      break;
    }
    case IdentityKind::RogersLin: {
      const FamilySpec f = FamilySpec::q_ultraspherical(p[0], p[1]);
      plan.formula = rogers_lin(p[0], p[1], m, n);
      plan.oracle = linearization_oracle(f, m, n, f);
      break;
    }
    case IdentityKind::JacobiLin: {
      const FamilySpec f = FamilySpec::jacobi(p[0], p[1]);
      plan.formula = jacobi_lin(p[0], p[1], m, n);
      plan.oracle = linearization_oracle(f, m, n, f);
      break;
    }
    case IdentityKind::ChebyshevProduct: {
      const auto coeffs = cheby_product_u(m, n);
      plan.formula.reserve(coeffs.size());
      for (const Rational& c : coeffs) plan.formula.push_back(FormulaTerm::of(c));
      plan.oracle = linearization_oracle(FamilySpec::chebyshev_t(), m, n,
                                         FamilySpec::chebyshev_u());
      break;
    }
    case IdentityKind::LaguerreConn: {
      plan.formula = laguerre_conn(p[0], p[1], n);
      plan.oracle = connection_oracle(FamilySpec::laguerre(p[0]), n,
                                      FamilySpec::laguerre(p[1]));
      break;
    }
    case IdentityKind::GegenbauerConn: {
      plan.formula = gegenbauer_conn(p[0], p[1], n);
      plan.oracle = connection_oracle(FamilySpec::gegenbauer(p[0]), n,
                                      FamilySpec::gegenbauer(p[1]));
      break;
    }
    case IdentityKind::RogersConn: {
      plan.formula = rogers_conn(p[0], p[1], p[2], n);
      plan.oracle = connection_oracle(FamilySpec::q_ultraspherical(p[0], p[2]), n,
                                      FamilySpec::q_ultraspherical(p[1], p[2]));
      break;
    }
    case IdentityKind::JacobiConn: {
      plan.formula = jacobi_conn(p[0], p[1], p[2], p[3], n);
      plan.oracle = connection_oracle(FamilySpec::jacobi(p[0], p[1]), n,
                                      FamilySpec::jacobi(p[2], p[3]));
      break;
    }
  }
  return plan;
}

CoefficientCase judge(int m, int n, CasePlan plan) {
  CoefficientCase c;
  c.m = m;
  c.n = n;
  const size_t len = plan.oracle.size();
  c.entries.reserve(len);
  bool any_error = false;
  for (size_t d = 0; d < len; ++d) {
    IndexEntry e;
    e.degree = static_cast<int>(d);
    e.formula = plan.formula[d];
    e.oracle = plan.oracle[d];
    if (e.formula.value) {
      e.diff = *e.formula.value - e.oracle;
      if (e.diff != 0 && c.first_mismatch_degree < 0)
        c.first_mismatch_degree = e.degree;
    } else {
      any_error = true;
      if (c.note.empty()) c.note = e.formula.error;
    }
    c.entries.push_back(std::move(e));
  }
  if (c.first_mismatch_degree >= 0)
    c.verdict = Verdict::Mismatch;
  else if (any_error)
    c.verdict = Verdict::FormulaError;
  else
    c.verdict = Verdict::Match;
  return c;
}

void validate_params(IdentityKind kind, const std::vector<Rational>& p) {
  switch (kind) {
    case IdentityKind::LaguerreLin:
      require_params(p, 1, "laguerre-lin");
      FamilySpec::laguerre(p[0]);
      break;
    case IdentityKind::GegenbauerLin:
      require_params(p, 1, "gegenbauer-lin");
      FamilySpec::gegenbauer(p[0]);
      break;
    case IdentityKind::RogersLin:
      require_params(p, 2, "rogers-lin");
      FamilySpec::q_ultraspherical(p[0], p[1]);
      break;
    case IdentityKind::JacobiLin:
      require_params(p, 2, "jacobi-lin");
      FamilySpec::jacobi(p[0], p[1]);
      break;
    case IdentityKind::LaguerreConn:
      require_params(p, 2, "laguerre-conn");
      FamilySpec::laguerre(p[0]);
      FamilySpec::laguerre(p[1]);
      break;
    case IdentityKind::GegenbauerConn:
      require_params(p, 2, "gegenbauer-conn");
      FamilySpec::gegenbauer(p[0]);
      FamilySpec::gegenbauer(p[1]);
      break;
    case IdentityKind::RogersConn:
      require_params(p, 3, "rogers-conn");
      FamilySpec::q_ultraspherical(p[0], p[2]);
      FamilySpec::q_ultraspherical(p[1], p[2]);
      break;
    case IdentityKind::JacobiConn: {
      require_params(p, 4, "jacobi-conn");
      FamilySpec::jacobi(p[0], p[1]);
      FamilySpec::jacobi(p[2], p[3]);
      const Rational &g = p[0], &d = p[1];
      if (g > -1 && g < 0 && d > -1 && d < 0 && g + d + 1 == 0)
        fail(ErrorKind::ParameterDomain,
             "jacobi connection needs gamma+delta+1 != 0 when both lie in (-1,0)");
      break;
    }
    case IdentityKind::ChebyshevProduct:
      require_params(p, 0, "cheby-product");
      break;
  }
}

}  // namespace

CoefficientReport identity_check(IdentityKind kind,
                                 const std::vector<Rational>& params, int max) {
  if (max < 0) fail(ErrorKind::DomainError, "grid bound must be >= 0");
  validate_params(kind, params);

  std::vector<std::pair<int, int>> grid;
  if (kind == IdentityKind::ChebyshevProduct) {
    for (int m = 0; m <= max; ++m)
      for (int n = 0; n <= m; ++n) grid.emplace_back(m, n);
  } else if (is_linearization_kind(kind)) {
    for (int m = 0; m <= max; ++m)
      for (int n = 0; n <= max; ++n) grid.emplace_back(m, n);
  } else {
    for (int n = 0; n <= max; ++n) grid.emplace_back(-1, n);
  }

  std::vector<CoefficientCase> cases(grid.size());
  parallel_for(grid.size(), [&](size_t i) {
    const auto [m, n] = grid[i];
    cases[i] = judge(m, n, evaluate_point(kind, params, m, n));
  });

  CoefficientReport report;
  report.kind = kind;
  report.params = params;
  report.max = max;
  report.cases = std::move(cases);
  for (const CoefficientCase& c : report.cases) {
    switch (c.verdict) {
      case Verdict::Match: ++report.match_count; break;
      case Verdict::FormulaError: ++report.error_count; break;
      case Verdict::Mismatch: ++report.mismatch_count; break;
    }
  }
  if (report.mismatch_count > 0)
    report.verdict = Verdict::Mismatch;
  else if (report.error_count > 0)
    report.verdict = Verdict::FormulaError;
  else
    report.verdict = Verdict::Match;
  return report;
}

SchurReport schur_check(int n, int samples, uint64_t seed) {
  if (n < 0) fail(ErrorKind::DomainError, "exponent must be >= 0");
  SchurReport r;
  r.n = n;
  r.samples = samples;
  r.seed = seed;
  if (n == 2) {
    r.exact_sos_checked = true;
    r.exact_sos_match = (schur_lhs(2) - sos_rhs()).is_zero();
  }
  const MultiPoly3 p = schur_lhs(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> positive(0.0, 3.0);
  std::uniform_real_distribution<double> real(-2.0, 2.0);
  r.min_positive_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double x = positive(rng), y = positive(rng), z = positive(rng);
    const auto e = p.eval_double(x, y, z);
    if (e.value > 1e-12 * e.scale) ++r.strict_positive;
    r.min_positive_value = std::min(r.min_positive_value, e.value);
  }
  if (n % 2 == 0) {
    r.nonnegative_checked = true;
    for (int i = 0; i < samples; ++i) {
      const double x = real(rng), y = real(rng), z = real(rng);
      const auto e = p.eval_double(x, y, z);
      if (e.value >= -1e-12 * e.scale) ++r.nonnegative;
    }
  }
  r.pass = (!r.exact_sos_checked || r.exact_sos_match) &&
           r.strict_positive == samples &&
           (!r.nonnegative_checked || r.nonnegative == samples);
  return r;
}

}  // namespace opsf
