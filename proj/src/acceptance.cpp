#include "opsf/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include "opsf/families.hpp"
#include "opsf/identity.hpp"
#include "opsf/multipoly3.hpp"
#include "opsf/multisum.hpp"
#include "opsf/mzv.hpp"
#include "opsf/positivity.hpp"
#include "opsf/spectra.hpp"
#include "opsf/ttr.hpp"

namespace opsf {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr uint64_t kBatterySeed = 424242;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_e(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Outcome schur_square() {
  const bool eq = schur_lhs(2) == sos_rhs();
  return {eq, eq ? "exact trivariate equality" : "polynomials differ"};
}

Outcome closed_form_grid() {
  int checked = 0;
  for (int m = 0; m <= 20; ++m)
    for (int n = 0; n <= 20; ++n) {
      if (!(s_terminating(m, n) == s_closed(m, n)))
        return {false, "first inequality at m=" + std::to_string(m) +
                           ", n=" + std::to_string(n)};
      ++checked;
    }
  return {true, std::to_string(checked) + " exact equalities"};
}

Outcome sum_recurrences() {
  for (int i = 0; i <= 20; ++i)
    for (int n = 0; n <= 20; ++n)
      if (!check_t_recurrence(i, n))
        return {false, "inner recurrence residual at i=" + std::to_string(i) +
                           ", n=" + std::to_string(n)};
  for (int m = 0; m <= 20; ++m)
    for (int n = 0; n <= 20; ++n) {
      const auto [in_n, in_m] = check_s_recurrences(m, n);
      if (!in_n || !in_m)
        return {false, "double-sum recurrence residual at m=" +
                           std::to_string(m) + ", n=" + std::to_string(n)};
    }
  return {true, "441 + 882 zero residuals"};
}

Outcome four_index_reduction() {
  const Rational kappas[] = {Rational(1, 2), Rational(1), Rational(3)};
  int points = 0;
  for (int parity = 0; parity <= 1; ++parity)
    for (int a1 = parity; a1 <= 10; a1 += 2)
      for (int a2 = parity; a1 + a2 <= 10; a2 += 2)
        for (int a3 = parity; a1 + a2 + a3 <= 10; a3 += 2)
          for (int a4 = parity; a1 + a2 + a3 + a4 <= 10; a4 += 2)
            for (const Rational& kappa : kappas) {
              const KdfPoint p({a1, a2, a3, a4}, kappa);
              const std::string at = "(" + std::to_string(a1) + "," +
                                     std::to_string(a2) + "," +
                                     std::to_string(a3) + "," +
                                     std::to_string(a4) + "), kappa=" +
                                     rational_str(kappa);
              if (!(kdf_double(p).s_prime == kdf_single(p)))
                return {false, "double vs single mismatch at " + at};
              if (!kdf_symmetry_check(p))
                return {false, "permutation asymmetry at " + at};
              if (!kdf_recurrence_check(p))
                return {false, "contiguous relation residual at " + at};
              ++points;
            }
  return {true, std::to_string(points) + " points, all three checks exact"};
}

Outcome nonterminating_series() {
  const std::pair<Rational, int> pts[] = {{Rational(5, 2), 0},
                                          {Rational(1, 3), 2}};
  std::string gaps;
  for (const auto& [beta, n] : pts) {
    const double series = s_nonterminating(beta, n, 1e-10).value;
    const double gap = std::fabs(series - s_nonterm_closed(beta, n));
    if (!gaps.empty()) gaps += ", ";
    gaps += "|gap(" + rational_str(beta) + "," + std::to_string(n) +
            ")| = " + fmt_e(gap);
    if (!(gap <= 1e-8)) return {false, gaps + " exceeds 1e-8"};
  }
  return {true, gaps};
}

bool all_match(const CoefficientReport& rep) {
  return rep.verdict == Verdict::Match && rep.mismatch_count == 0 &&
         rep.error_count == 0;
}

Outcome gegenbauer_identities() {
  for (const Rational& lambda :
       {Rational(1, 3), Rational(1, 2), Rational(2), Rational(7, 5)}) {
    const auto rep = identity_check(IdentityKind::GegenbauerLin, {lambda}, 8);
    if (!all_match(rep))
      return {false, "linearization mismatch at lambda=" + rational_str(lambda)};
  }
  const std::pair<Rational, Rational> pairs[] = {
      {Rational(1), Rational(1, 3)},
      {Rational(2), Rational(1, 2)},
      {Rational(7, 5), Rational(7, 5)}};
  for (const auto& [lambda, mu] : pairs) {
    const auto rep =
        identity_check(IdentityKind::GegenbauerConn, {lambda, mu}, 10);
    if (!all_match(rep))
      return {false, "connection mismatch at lambda=" + rational_str(lambda) +
                         ", mu=" + rational_str(mu)};
  }
  return {true, "4 linearization grids (m,n <= 8) and 3 connection runs"};
}

Outcome connection_identities() {
  const std::pair<Rational, Rational> laguerre_pairs[] = {
      {Rational(0), Rational(1)},
      {Rational(1, 2), Rational(3, 2)},
      {Rational(2), Rational(0)}};
  for (const auto& [alpha, beta] : laguerre_pairs) {
    const auto rep =
        identity_check(IdentityKind::LaguerreConn, {alpha, beta}, 12);
    if (!all_match(rep))
      return {false, "laguerre mismatch at alpha=" + rational_str(alpha) +
                         ", beta=" + rational_str(beta)};
  }
  const std::vector<Rational> quads[] = {
      {Rational(1, 2), Rational(1, 3), Rational(2), Rational(0)},
      {Rational(3, 2), Rational(1, 4), Rational(1, 4), Rational(3, 2)}};
  for (const auto& quad : quads) {
    const auto rep = identity_check(IdentityKind::JacobiConn, quad, 8);
    if (!all_match(rep)) return {false, "jacobi connection mismatch"};
  }
  const auto cheb = identity_check(IdentityKind::ChebyshevProduct, {}, 10);
  if (!all_match(cheb)) return {false, "chebyshev product mismatch"};
  return {true, "laguerre n <= 12, jacobi n <= 8 (two quadruples), products"};
}

Outcome survey_discrepancies() {
  const auto lag_a = identity_check(IdentityKind::LaguerreLin, {Rational(0)}, 6);
  const auto lag_b = identity_check(IdentityKind::LaguerreLin, {Rational(0)}, 6);
  if (lag_a.mismatch_count != lag_b.mismatch_count ||
      lag_a.error_count != lag_b.error_count ||
      lag_a.match_count != lag_b.match_count)
    return {false, "repeat runs disagree"};
  bool seen_11 = false;
  for (const auto& c : lag_a.cases)
    if (c.m == 1 && c.n == 1 && c.verdict == Verdict::Mismatch) seen_11 = true;
  if (!seen_11)
    return {false, "expected recorded mismatch at m=n=1 is missing"};
  const auto jac = identity_check(IdentityKind::JacobiLin,
                                  {Rational(1, 2), Rational(1, 3)}, 6);
  if (jac.cases.size() != 49)
    return {false, "jacobi survey did not cover the full grid"};
  return {true, "laguerre: " + std::to_string(lag_a.mismatch_count) +
                    " mismatches recorded (m=n=1 included); jacobi: " +
                    std::to_string(jac.mismatch_count) + " mismatches, " +
                    std::to_string(jac.error_count) + " pole cases"};
}

Outcome positivity_proved_cases() {
  const std::pair<double, double> cases[] = {{1, 2}, {2, 3}, {3, 4}};
  std::string mins;
  for (const auto& [lambda, delta] : cases) {
    PositivityScanConfig cfg;
    cfg.lambda = lambda;
    cfg.delta = delta;
    cfg.n_max = 20;
    cfg.t_count = 200;
    cfg.tol = 1e-10;
    const auto rep = positivity_scan(cfg);
    if (!mins.empty()) mins += ", ";
    mins += "min(" + fmt(lambda) + "," + fmt(delta) + ") = " +
            fmt_e(rep.min_value);
    if (rep.failure_count > 0)
      return {false, mins + " with " + std::to_string(rep.failure_count) +
                         " unevaluated points"};
    if (!(rep.min_value >= -1e-10)) return {false, mins + " below -1e-10"};
  }
  return {true, mins};
}

Outcome cubic_family_exact() {
  for (const Rational& alpha :
       {Rational(1, 2), Rational(1), Rational(3, 2), Rational(5, 2)}) {
    const auto rec = b_poly_recurrence(alpha, 12);
    for (int n = 0; n <= 12; ++n)
      if (!(b_poly_explicit(alpha, n) == rec[n]))
        return {false, "explicit sum differs from recurrence at alpha=" +
                           rational_str(alpha) + ", n=" + std::to_string(n)};
    const auto deg = b_poly_recurrence(alpha, 20);
    for (int n = 0; n <= 20; ++n)
      if (deg[n].degree() != n / 2)
        return {false, "degree law fails at alpha=" + rational_str(alpha) +
                           ", n=" + std::to_string(n)};
  }
  const auto ap = a_polys(40);
  RPoly partial;
  for (int n = 0; n <= 40; ++n) {
    partial += ap.a[n];
    if (!(partial == ap.a_tilde[n]))
      return {false, "partial-sum identity fails at n=" + std::to_string(n)};
  }
  return {true, "52 explicit/recurrence pairs, degree law to 20, sums to 40"};
}

Outcome limit_gap_and_zero_signs() {
  const auto ap = a_polys(40);
  const double series = poly_to_double(ap.a_tilde[40]).eval(1.0);
  const double product = product_truncation(1.0, 100000).value;
  const double gap = std::fabs(series - product);
  const bool gap_ok = gap < 1e-6;

  const auto b = b_poly_recurrence(Rational(1), 30);
  int negative_runs = 0;
  std::string findings;
  for (int n = 3; n <= 30; ++n) {
    const auto rep = xpoly_real_zeros(b[n]);
    if (rep.all_negative && rep.negative_count == n / 2) {
      ++negative_runs;
    } else {
      if (!findings.empty()) findings += ", ";
      findings += "n=" + std::to_string(n) + " verdict false";
    }
  }
  std::string detail = "|A~_40(1) - product| = " + fmt_e(gap) +
                       " against the pinned 1e-6 (the gap decays like "
                       "ln n / n^2; still 6.4e-6 at n = 800)";
  detail += "; all-negative verdict ";
  detail += findings.empty()
                ? "true for every n in [3,30]"
                : ("false cases reported: " + findings);
  return {gap_ok, detail};
}

Outcome zeta_identities_large_n() {
  MzvSpec z3;
  z3.exponents = {3};
  z3.limit = 1000000;
  MzvSpec z21 = z3;
  z21.exponents = {2, 1};
  const double gap2 =
      std::fabs(mzv_truncated(z21).value - mzv_truncated(z3).value);
  MzvSpec z33 = z3;
  z33.exponents = {3, 3};
  MzvSpec z2121 = z3;
  z2121.exponents = {2, 1, 2, 1};
  const double gap4 =
      std::fabs(mzv_truncated(z33).value - mzv_truncated(z2121).value);
  const std::string detail =
      "depth-2 gap = " + fmt_e(gap2) + ", depth-4 gap = " + fmt_e(gap4);
  return {gap2 < 1e-4 && gap4 < 1e-4, detail};
}

Outcome extreme_zero_trends() {
  const auto cheb = family_recurrence(FamilySpec::chebyshev_t());
  const auto zeros = op_zeros(cheb, 100);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double expected = std::cos((2.0 * (100 - i) - 1.0) * kPi / 200.0);
    worst = std::max(worst, std::fabs(zeros[static_cast<size_t>(i)] - expected));
  }
  if (!(worst < 1e-12))
    return {false, "chebyshev zero deviation " + fmt_e(worst)};

  RecurrencePair quarter;
  quarter.a_fn = [](int) -> Rational { return Rational(0); };
  quarter.b_fn = [](int) -> Rational { return Rational(1, 4); };
  quarter.source = "a = 0, b = 1/4";
  const double lowest = op_zeros(quarter, 100).front();
  if (!(std::fabs(lowest + 1.0) < 0.01))
    return {false, "quarter-recurrence lowest zero " + fmt(lowest)};

  const auto mp = family_recurrence(
      FamilySpec::meixner_pollaczek(Rational(1), Rational(0), Rational(1)));
  const auto trend = blumenthal_experiment(mp, {25, 50, 100, 200});
  for (size_t i = 1; i < trend.points.size(); ++i) {
    if (!(trend.points[i].lowest < trend.points[i - 1].lowest) ||
        !(trend.points[i].highest > trend.points[i - 1].highest))
      return {false, "edge growth is not monotone across sizes"};
  }
  if (trend.lower_trend != EdgeTrend::MinusInfinity ||
      trend.upper_trend != EdgeTrend::PlusInfinity)
    return {false, "edges did not diverge in both directions"};
  return {true, "chebyshev dev " + fmt_e(worst) + ", quarter lowest " +
                    fmt(lowest) + ", both edges diverge monotonically"};
}

Outcome sign_matrix_spectra() {
  const auto tiny = bernoulli_exhaustive(2);
  if (tiny.matrix_count != 8 || tiny.distinct_count != 3 ||
      tiny.spectra.size() != 3)
    return {false, "n=2 enumeration shape is wrong"};
  const double r2 = std::sqrt(2.0);
  const auto near = [](double a, double b) { return std::fabs(a - b) < 1e-9; };
  const auto& s0 = tiny.spectra[0];
  const auto& s1 = tiny.spectra[1];
  const auto& s2 = tiny.spectra[2];
  const bool hand =
      s0.count == 4 && near(s0.eigenvalues[0], -r2) &&
      near(s0.eigenvalues[1], r2) && s1.count == 2 &&
      near(s1.eigenvalues[0], -2.0) && near(s1.eigenvalues[1], 0.0) &&
      s2.count == 2 && near(s2.eigenvalues[0], 0.0) &&
      near(s2.eigenvalues[1], 2.0);
  if (!hand) return {false, "n=2 spectra differ from the hand enumeration"};

  const auto t0 = std::chrono::steady_clock::now();
  const auto mid = bernoulli_exhaustive(4);
  const double exhaustive_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - t0)
          .count();
  if (mid.matrix_count != 1024)
    return {false, "n=4 enumeration count is wrong"};
  if (exhaustive_ms >= 5000)
    return {false, "n=4 enumeration took " + fmt(exhaustive_ms) + " ms"};

  const auto mc_a = bernoulli_montecarlo(50, 10000, kBatterySeed);
  const auto mc_b = bernoulli_montecarlo(50, 10000, kBatterySeed);
  const bool identical = mc_a.ks_distance == mc_b.ks_distance &&
                         mc_a.esd.counts == mc_b.esd.counts &&
                         mc_a.esd.edges == mc_b.esd.edges &&
                         mc_a.esd.total == mc_b.esd.total;
  if (!identical) return {false, "repeat sampling runs disagree"};
  if (!(mc_a.ks_distance < 0.05))
    return {false, "semicircle distance " + fmt_e(mc_a.ks_distance)};
  return {true, "hand enumeration reproduced; n=4 in " + fmt(exhaustive_ms) +
                    " ms; KS = " + fmt_e(mc_a.ks_distance) +
                    ", reruns identical"};
}

struct Criterion {
  const char* label;
  double budget_ms;
  std::function<Outcome()> fn;
};

const Criterion kBattery[] = {
    {"exact power-sum square identity", 1000, schur_square},
    {"terminating double sum equals its closed form on the 21x21 grid", 10000,
     closed_form_grid},
    {"inner and double-sum recurrences have zero residual", 10000,
     sum_recurrences},
    {"four-index reduction: double vs single sum, symmetry, contiguous relation",
     60000, four_index_reduction},
    {"nonterminating series matches its closed form", 5000,
     nonterminating_series},
    {"gegenbauer linearization and connection formulas match the oracle", 60000,
     gegenbauer_identities},
    {"laguerre/jacobi connections and chebyshev products match the oracle",
     60000, connection_identities},
    {"survey mode records formula discrepancies deterministically", 60000,
     survey_discrepancies},
    {"kernel positivity scans stay nonnegative on the proved pairs", 300000,
     positivity_proved_cases},
    {"cubic-variable polynomial family: exact identities and degree law", 60000,
     cubic_family_exact},
    {"series-to-product gap at n = 40 and zero-sign verdicts", 120000,
     limit_gap_and_zero_signs},
    {"truncated nested zeta identities at N = 10^6", 60000,
     zeta_identities_large_n},
    {"extreme zero trends for classical recurrences", 30000,
     extreme_zero_trends},
    {"sign-matrix spectra: enumeration, timing, semicircle distance", 120000,
     sign_matrix_spectra},
};

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> results;
  int index = 0;
  for (const Criterion& c : kBattery) {
    CriterionResult r;
    r.index = ++index;
    r.label = c.label;
    r.budget_ms = c.budget_ms;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome out = c.fn();
      r.pass = out.pass;
      r.detail = out.detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
               .count();
    if (r.ms > r.budget_ms) {
      r.pass = false;
      r.detail += " [overran " + fmt(c.budget_ms) + " ms budget]";
    }
    results.push_back(std::move(r));
  }
  return results;
}

int print_acceptance(std::ostream& os) {
  int failures = 0;
  for (const CriterionResult& r : run_acceptance()) {
    if (!r.pass) ++failures;
    char head[16];
    std::snprintf(head, sizeof head, "%2d", r.index);
    os << (r.pass ? "PASS" : "FAIL") << "  criterion " << head << ": "
       << r.label << " (" << r.detail << ") [" << fmt(r.ms) << " ms]\n";
  }
  return failures;
}

}  // namespace opsf
