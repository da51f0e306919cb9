#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "opsf/acceptance.hpp"
#include "opsf/error.hpp"
#include "opsf/families.hpp"
#include "opsf/identity.hpp"
#include "opsf/multisum.hpp"
#include "opsf/mzv.hpp"
#include "opsf/positivity.hpp"
#include "opsf/report.hpp"
#include "opsf/spectra.hpp"
#include "opsf/ttr.hpp"

namespace {

using namespace opsf;

constexpr uint64_t kDefaultSeed = 12345;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NoConvergence:
    case ErrorKind::ToleranceNotReached:
      return 3;
    default:
      return 2;
  }
}

std::string fd(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fcsv(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json double_list_json(const std::vector<double>& vs) {
  Json arr = Json::array();
  for (double v : vs) arr.push_back(v);
  return arr;
}

// ---------------------------------------------------------------- schur ----

struct SchurArgs {
  int n = 2;
  int samples = 200;
  uint64_t seed = kDefaultSeed;
  std::string json_path;
};

int run_schur(const SchurArgs& a) {
  const SchurReport rep = schur_check(a.n, a.samples, a.seed);
  std::cout << "n = " << rep.n << ", samples = " << rep.samples
            << ", seed = " << rep.seed << "\n";
  if (rep.exact_sos_checked)
    std::cout << "exact square decomposition: "
              << (rep.exact_sos_match ? "match" : "MISMATCH") << "\n";
  std::cout << "strictly positive samples: " << rep.strict_positive << "/"
            << rep.samples << "\n";
  if (rep.nonnegative_checked)
    std::cout << "nonnegative samples: " << rep.nonnegative << "/"
              << rep.samples << "\n";
  std::cout << "smallest strictly-positive value: "
            << fd(rep.min_positive_value) << "\n";
  std::cout << "verdict: " << (rep.pass ? "pass" : "fail") << "\n";

  if (!a.json_path.empty()) {
    Json config;
    config["n"] = a.n;
    config["samples"] = a.samples;
    config["seed"] = a.seed;
    Json doc = report_header("schur", config);
    doc["exact_sos_checked"] = rep.exact_sos_checked;
    doc["exact_sos_match"] = rep.exact_sos_match;
    doc["strict_positive"] = rep.strict_positive;
    doc["nonnegative_checked"] = rep.nonnegative_checked;
    doc["nonnegative"] = rep.nonnegative;
    doc["min_positive_value"] = rep.min_positive_value;
    doc["pass"] = rep.pass;
    write_json_file(doc, a.json_path);
  }
  return rep.pass ? 0 : 1;
}

// ------------------------------------------------------- identity checks ----

struct IdentityArgs {
  std::string kind;
  std::string lambda, mu, alpha, beta, gamma, delta, q;
  int max = 8;
  std::string mode = "strict";
  std::string json_path;
};

Rational need(const std::string& text, const char* flag,
              const std::string& kind) {
  if (text.empty())
    fail(ErrorKind::UsageError,
         "kind " + kind + " requires " + std::string(flag));
  return parse_rational(text);
}

std::vector<std::pair<std::string, Rational>> params_for(
    const IdentityArgs& a, IdentityKind kind) {
  switch (kind) {
    case IdentityKind::LaguerreLin:
      return {{"alpha", need(a.alpha, "--alpha", a.kind)}};
    case IdentityKind::GegenbauerLin:
      return {{"lambda", need(a.lambda, "--lambda", a.kind)}};
    case IdentityKind::RogersLin:
      return {{"beta", need(a.beta, "--beta", a.kind)},
              {"q", need(a.q, "--q", a.kind)}};
    case IdentityKind::JacobiLin:
      return {{"alpha", need(a.alpha, "--alpha", a.kind)},
              {"beta", need(a.beta, "--beta", a.kind)}};
    case IdentityKind::LaguerreConn:
      return {{"alpha", need(a.alpha, "--alpha", a.kind)},
              {"beta", need(a.beta, "--beta", a.kind)}};
    case IdentityKind::GegenbauerConn:
      return {{"lambda", need(a.lambda, "--lambda", a.kind)},
              {"mu", need(a.mu, "--mu", a.kind)}};
    case IdentityKind::RogersConn:
      return {{"gamma", need(a.gamma, "--gamma", a.kind)},
              {"beta", need(a.beta, "--beta", a.kind)},
              {"q", need(a.q, "--q", a.kind)}};
    case IdentityKind::JacobiConn:
      return {{"gamma", need(a.gamma, "--gamma", a.kind)},
              {"delta", need(a.delta, "--delta", a.kind)},
              {"alpha", need(a.alpha, "--alpha", a.kind)},
              {"beta", need(a.beta, "--beta", a.kind)}};
    case IdentityKind::ChebyshevProduct:
      return {};
  }
  fail(ErrorKind::UsageError, "unhandled kind");
}

int run_identity(const IdentityArgs& a) {
  const IdentityKind kind = parse_identity_kind(a.kind);
  const auto named = params_for(a, kind);
  std::vector<Rational> params;
  for (const auto& [name, value] : named) params.push_back(value);

  const CoefficientReport rep = identity_check(kind, params, a.max);

  std::ostringstream headline;
  headline << "kind " << identity_kind_name(rep.kind);
  for (const auto& [name, value] : named)
    headline << ", " << name << " = " << rational_str(value);
  headline << ", max " << rep.max << ", mode " << a.mode;
  std::cout << headline.str() << "\n";
  std::cout << "cases: " << rep.match_count << " match, " << rep.mismatch_count
            << " mismatch, " << rep.error_count << " with formula poles\n";
  std::cout << "verdict: " << verdict_name(rep.verdict) << "\n";

  for (const auto& c : rep.cases) {
    if (c.verdict != Verdict::Mismatch) continue;
    std::cout << "first mismatch:";
    if (c.m >= 0) std::cout << " m = " << c.m << ",";
    std::cout << " n = " << c.n << ", degree " << c.first_mismatch_degree;
    const auto& entry =
        c.entries[static_cast<size_t>(c.first_mismatch_degree)];
    if (entry.formula.value)
      std::cout << ": formula " << rational_str(*entry.formula.value)
                << ", oracle " << rational_str(entry.oracle) << ", diff "
                << rational_str(entry.diff);
    else
      std::cout << ": formula error [" << entry.formula.error << "], oracle "
                << rational_str(entry.oracle);
    std::cout << "\n";
    break;
  }

  if (!a.json_path.empty()) {
    Json config;
    config["kind"] = a.kind;
    for (const auto& [name, value] : named)
      config[name] = rational_str(value);
    config["max"] = a.max;
    config["mode"] = a.mode;
    Json doc = report_header("identity-check", config);
    doc["verdict"] = verdict_name(rep.verdict);
    doc["match_count"] = rep.match_count;
    doc["mismatch_count"] = rep.mismatch_count;
    doc["error_count"] = rep.error_count;
    Json cases = Json::array();
    for (const auto& c : rep.cases) {
      Json jc;
      if (c.m >= 0) jc["m"] = c.m;
      jc["n"] = c.n;
      jc["verdict"] = verdict_name(c.verdict);
      if (c.first_mismatch_degree >= 0)
        jc["first_mismatch_degree"] = c.first_mismatch_degree;
      if (!c.note.empty()) jc["note"] = c.note;
      Json entries = Json::array();
      for (const auto& e : c.entries) {
        Json je;
        je["degree"] = e.degree;
        if (e.formula.value) {
          je["formula"] = rational_str(*e.formula.value);
          je["diff"] = rational_str(e.diff);
        } else {
          je["formula"] = nullptr;
          je["error"] = e.formula.error;
        }
        je["oracle"] = rational_str(e.oracle);
        entries.push_back(std::move(je));
      }
      jc["entries"] = std::move(entries);
      cases.push_back(std::move(jc));
    }
    doc["cases"] = std::move(cases);
    write_json_file(doc, a.json_path);
  }

  if (a.mode == "strict" && rep.mismatch_count > 0) return 1;
  return 0;
}

// ------------------------------------------------------------- multisum ----

struct MultisumArgs {
  std::string check = "all";
  int max = 20;
  int alpha_sum = 10;
  std::vector<int> kdf_point;
  std::string kappa = "1";
  double tol = 1e-10;
  std::string json_path;
};

int run_kdf_point(const MultisumArgs& a, Json& config) {
  if (a.kdf_point.size() != 4)
    fail(ErrorKind::UsageError, "--kdf needs four comma-separated integers");
  const Rational kappa = parse_rational(a.kappa);
  const KdfPoint p(
      {a.kdf_point[0], a.kdf_point[1], a.kdf_point[2], a.kdf_point[3]}, kappa);
  const KdfDouble dbl = kdf_double(p);
  const Rational single = kdf_single(p);
  const bool same = dbl.s_prime == single;
  const bool symmetric = kdf_symmetry_check(p);
  const bool contiguous = kdf_recurrence_check(p);

  std::cout << "point (" << a.kdf_point[0] << "," << a.kdf_point[1] << ","
            << a.kdf_point[2] << "," << a.kdf_point[3]
            << "), kappa = " << rational_str(kappa) << "\n";
  std::cout << "double sum: s = " << rational_str(dbl.s)
            << ", s' = " << rational_str(dbl.s_prime) << "\n";
  std::cout << "single sum: s' = " << rational_str(single) << "\n";
  std::cout << "double vs single: " << (same ? "exact match" : "MISMATCH")
            << "\n";
  std::cout << "permutation symmetry: " << (symmetric ? "pass" : "FAIL")
            << "\n";
  std::cout << "contiguous relation: "
            << (contiguous ? "zero residual" : "NONZERO residual") << "\n";

  if (!a.json_path.empty()) {
    Json doc = report_header("multisum", config);
    doc["alphas"] = a.kdf_point;
    doc["kappa"] = rational_str(kappa);
    doc["s"] = rational_str(dbl.s);
    doc["s_prime_double"] = rational_str(dbl.s_prime);
    doc["s_prime_single"] = rational_str(single);
    doc["double_equals_single"] = same;
    doc["symmetry"] = symmetric;
    doc["contiguous_relation"] = contiguous;
    write_json_file(doc, a.json_path);
  }
  return same && symmetric && contiguous ? 0 : 1;
}

int run_multisum(const MultisumArgs& a) {
  Json config;
  config["check"] = a.check;
  config["max"] = a.max;
  config["alpha_sum"] = a.alpha_sum;
  config["tol"] = a.tol;

  if (!a.kdf_point.empty()) return run_kdf_point(a, config);

  if (a.check != "all" && a.check != "closed" && a.check != "recurrences" &&
      a.check != "nonterminating" && a.check != "kdf")
    fail(ErrorKind::UsageError, "unknown --check " + a.check);
  const auto wants = [&](const char* name) {
    return a.check == "all" || a.check == name;
  };

  bool all_pass = true;
  Json checks = Json::array();

  if (wants("closed")) {
    int cases = 0, failures = 0;
    for (int m = 0; m <= a.max; ++m)
      for (int n = 0; n <= a.max; ++n) {
        ++cases;
        if (!(s_terminating(m, n) == s_closed(m, n))) ++failures;
      }
    const bool pass = failures == 0;
    all_pass = all_pass && pass;
    std::cout << "closed form: " << cases << " grid points, " << failures
              << " failures\n";
    Json jc;
    jc["name"] = "closed-form";
    jc["cases"] = cases;
    jc["failures"] = failures;
    jc["pass"] = pass;
    checks.push_back(std::move(jc));
  }

  if (wants("recurrences")) {
    int cases = 0, failures = 0;
    for (int i = 0; i <= a.max; ++i)
      for (int n = 0; n <= a.max; ++n) {
        ++cases;
        if (!check_t_recurrence(i, n)) ++failures;
      }
    for (int m = 0; m <= a.max; ++m)
      for (int n = 0; n <= a.max; ++n) {
        const auto [in_n, in_m] = check_s_recurrences(m, n);
        cases += 2;
        if (!in_n) ++failures;
        if (!in_m) ++failures;
      }
    const bool pass = failures == 0;
    all_pass = all_pass && pass;
    std::cout << "recurrences: " << cases << " residuals, " << failures
              << " nonzero\n";
    Json jc;
    jc["name"] = "recurrences";
    jc["cases"] = cases;
    jc["failures"] = failures;
    jc["pass"] = pass;
    checks.push_back(std::move(jc));
  }

  if (wants("nonterminating")) {
    const std::pair<Rational, int> pts[] = {{Rational(5, 2), 0},
                                            {Rational(1, 3), 2}};
    bool pass = true;
    Json points = Json::array();
    for (const auto& [beta, n] : pts) {
      const SeriesValue sv = s_nonterminating(beta, n, a.tol);
      const double closed = s_nonterm_closed(beta, n);
      const double gap = std::fabs(sv.value - closed);
      pass = pass && gap <= 1e-8;
      std::cout << "nonterminating beta = " << rational_str(beta)
                << ", n = " << n << ": series " << fd(sv.value) << ", closed "
                << fd(closed) << ", |gap| " << fd(gap) << " (" << sv.terms
                << " terms)\n";
      Json jp;
      jp["beta"] = rational_str(beta);
      jp["n"] = n;
      jp["series"] = sv.value;
      jp["closed"] = closed;
      jp["gap"] = gap;
      jp["err_bound"] = sv.err_bound;
      jp["terms"] = sv.terms;
      points.push_back(std::move(jp));
    }
    all_pass = all_pass && pass;
    Json jc;
    jc["name"] = "nonterminating";
    jc["tol"] = a.tol;
    jc["threshold"] = 1e-8;
    jc["points"] = std::move(points);
    jc["pass"] = pass;
    checks.push_back(std::move(jc));
  }

  if (wants("kdf")) {
    const Rational kappas[] = {Rational(1, 2), Rational(1), Rational(3)};
    int points = 0, failures = 0;
    for (int parity = 0; parity <= 1; ++parity)
      for (int a1 = parity; a1 <= a.alpha_sum; a1 += 2)
        for (int a2 = parity; a1 + a2 <= a.alpha_sum; a2 += 2)
          for (int a3 = parity; a1 + a2 + a3 <= a.alpha_sum; a3 += 2)
            for (int a4 = parity; a1 + a2 + a3 + a4 <= a.alpha_sum; a4 += 2)
              for (const Rational& kappa : kappas) {
                const KdfPoint p({a1, a2, a3, a4}, kappa);
                ++points;
                if (!(kdf_double(p).s_prime == kdf_single(p)) ||
                    !kdf_symmetry_check(p) || !kdf_recurrence_check(p))
                  ++failures;
              }
    const bool pass = failures == 0;
    all_pass = all_pass && pass;
    std::cout << "four-index sweep (sum <= " << a.alpha_sum << "): " << points
              << " points, " << failures << " failures\n";
    Json jc;
    jc["name"] = "four-index";
    jc["alpha_sum"] = a.alpha_sum;
    jc["points"] = points;
    jc["failures"] = failures;
    jc["pass"] = pass;
    checks.push_back(std::move(jc));
  }

  std::cout << "verdict: " << (all_pass ? "pass" : "fail") << "\n";
  if (!a.json_path.empty()) {
    Json doc = report_header("multisum", config);
    doc["checks"] = std::move(checks);
    doc["pass"] = all_pass;
    write_json_file(doc, a.json_path);
  }
  return all_pass ? 0 : 1;
}

// -------------------------------------------------------------- spectra ----

struct SpectraArgs {
  std::string family;
  std::string recurrence_csv;
  std::vector<int> sizes;
  int tracked = 3;
  std::string json_path;
  std::string csv_path;
};

int run_spectra(const SpectraArgs& a) {
  if (a.family.empty() == a.recurrence_csv.empty())
    fail(ErrorKind::UsageError,
         "give exactly one of --family or --recurrence");
  const RecurrencePair rec = a.family.empty()
                                 ? load_recurrence_csv(a.recurrence_csv)
                                 : family_recurrence(FamilySpec::parse(a.family));
  const SpectrumTrendReport rep =
      blumenthal_experiment(rec, a.sizes, a.tracked);

  std::cout << "recurrence: " << rep.source << "\n";
  for (const auto& pt : rep.points)
    std::cout << "size " << pt.size << ": lowest " << fd(pt.lowest)
              << ", highest " << fd(pt.highest) << "\n";
  std::cout << "lower edge trend: " << edge_trend_name(rep.lower_trend)
            << ", upper edge trend: " << edge_trend_name(rep.upper_trend)
            << "\n";
  if (rep.ratio_has_limit)
    std::cout << "ratio b(n+1)/(a(n) a(n+1)) settles near "
              << fd(rep.ratio_estimate) << "\n";
  else
    std::cout << "ratio b(n+1)/(a(n) a(n+1)) shows no numeric limit\n";
  if (rep.coefficients_bounded) {
    std::cout << "coefficient limits: c = " << fd(rep.c_limit)
              << ", lambda = " << fd(rep.lambda_limit) << "\n";
    std::cout << "support edges (standard): [" << fd(rep.sigma_standard)
              << ", " << fd(rep.tau_standard) << "]\n";
    std::cout << "support edges (halved):   [" << fd(rep.sigma_halved) << ", "
              << fd(rep.tau_halved) << "]\n";
  } else {
    std::cout << "recurrence coefficients do not look convergent\n";
  }
  std::cout << "extreme zeros at size " << rep.points.back().size << ": ["
            << fd(rep.sigma_hat) << ", " << fd(rep.tau_hat) << "]\n";

  Json config;
  config["family"] = a.family;
  config["recurrence"] = a.recurrence_csv;
  config["sizes"] = a.sizes;
  config["tracked"] = a.tracked;
  if (!a.json_path.empty()) {
    Json doc = report_header("spectra", config);
    doc["source"] = rep.source;
    Json points = Json::array();
    for (const auto& pt : rep.points) {
      Json jp;
      jp["size"] = pt.size;
      jp["lowest"] = pt.lowest;
      jp["highest"] = pt.highest;
      jp["lower_zeros"] = double_list_json(pt.lower_zeros);
      jp["upper_zeros"] = double_list_json(pt.upper_zeros);
      points.push_back(std::move(jp));
    }
    doc["points"] = std::move(points);
    Json ratios = Json::array();
    for (const auto& r : rep.ratios) {
      Json jr;
      jr["n"] = r.n;
      jr["defined"] = r.defined;
      if (r.defined) jr["value"] = r.value;
      ratios.push_back(std::move(jr));
    }
    doc["ratios"] = std::move(ratios);
    doc["ratio_has_limit"] = rep.ratio_has_limit;
    doc["ratio_estimate"] = rep.ratio_estimate;
    doc["coefficients_bounded"] = rep.coefficients_bounded;
    doc["c_limit"] = rep.c_limit;
    doc["lambda_limit"] = rep.lambda_limit;
    doc["sigma_standard"] = rep.sigma_standard;
    doc["tau_standard"] = rep.tau_standard;
    doc["sigma_halved"] = rep.sigma_halved;
    doc["tau_halved"] = rep.tau_halved;
    doc["sigma_hat"] = rep.sigma_hat;
    doc["tau_hat"] = rep.tau_hat;
    doc["lower_trend"] = edge_trend_name(rep.lower_trend);
    doc["upper_trend"] = edge_trend_name(rep.upper_trend);
    write_json_file(doc, a.json_path);
  }
  if (!a.csv_path.empty()) {
    std::vector<std::string> rows;
    for (const auto& pt : rep.points)
      rows.push_back(std::to_string(pt.size) + "," + fcsv(pt.lowest) + "," +
                     fcsv(pt.highest));
    write_csv_file(a.csv_path, "size,lowest,highest", rows);
  }
  return 0;
}

// ------------------------------------------------------------ bernoulli ----

struct BernoulliArgs {
  int n = 0;
  bool exhaustive = false;
  long long samples = 10000;
  uint64_t seed = kDefaultSeed;
  int max_spectra = 32;
  std::string json_path;
  std::string csv_path;
};

std::vector<std::string> histogram_rows(const SpectrumHistogram& h) {
  std::vector<std::string> rows;
  for (size_t i = 0; i < h.counts.size(); ++i)
    rows.push_back(fcsv(h.edges[i]) + "," + fcsv(h.edges[i + 1]) + "," +
                   std::to_string(h.counts[i]));
  return rows;
}

Json histogram_json(const SpectrumHistogram& h) {
  Json doc;
  doc["edges"] = double_list_json(h.edges);
  doc["counts"] = h.counts;
  doc["total"] = h.total;
  return doc;
}

int run_bernoulli(const BernoulliArgs& a) {
  Json config;
  config["n"] = a.n;
  config["exhaustive"] = a.exhaustive;
  config["samples"] = a.samples;
  config["seed"] = a.seed;
  config["max_spectra"] = a.max_spectra;

  if (a.exhaustive) {
    const BernoulliExhaustiveReport rep = bernoulli_exhaustive(a.n, a.max_spectra);
    std::cout << "n = " << rep.n << ": " << rep.matrix_count
              << " sign matrices, " << rep.distinct_count
              << " distinct spectra, max trace residual "
              << fd(rep.max_trace_residual) << "\n";
    std::cout << "most frequent spectra:\n";
    for (const auto& s : rep.spectra) {
      std::cout << "  count " << s.count << ":";
      for (double v : s.eigenvalues) std::cout << " " << fd(v);
      std::cout << "\n";
    }
    if (!a.json_path.empty()) {
      Json doc = report_header("bernoulli", config);
      doc["matrix_count"] = rep.matrix_count;
      doc["distinct_count"] = rep.distinct_count;
      doc["max_trace_residual"] = rep.max_trace_residual;
      doc["histogram"] = histogram_json(rep.histogram);
      Json spectra = Json::array();
      for (const auto& s : rep.spectra) {
        Json js;
        js["count"] = s.count;
        js["eigenvalues"] = double_list_json(s.eigenvalues);
        spectra.push_back(std::move(js));
      }
      doc["spectra"] = std::move(spectra);
      write_json_file(doc, a.json_path);
    }
    if (!a.csv_path.empty())
      write_csv_file(a.csv_path, "bin_lo,bin_hi,count",
                     histogram_rows(rep.histogram));
    return 0;
  }

  const BernoulliMonteCarloReport rep =
      bernoulli_montecarlo(a.n, a.samples, a.seed);
  std::cout << "n = " << rep.n << ", samples = " << rep.samples
            << ", seed = " << rep.seed << "\n";
  std::cout << "kolmogorov distance to the semicircle: " << fd(rep.ks_distance)
            << "\n";
  if (!a.json_path.empty()) {
    Json doc = report_header("bernoulli", config);
    doc["ks_distance"] = rep.ks_distance;
    doc["esd"] = histogram_json(rep.esd);
    write_json_file(doc, a.json_path);
  }
  if (!a.csv_path.empty())
    write_csv_file(a.csv_path, "bin_lo,bin_hi,count", histogram_rows(rep.esd));
  return 0;
}

// ----------------------------------------------------------- positivity ----

struct PositivityArgs {
  double lambda = 1.0;
  double delta = 2.0;
  int n_max = 20;
  int t_grid = 200;
  double tol = 1e-10;
  std::string json_path;
  std::string csv_path;
};

int run_positivity(const PositivityArgs& a) {
  PositivityScanConfig cfg;
  cfg.lambda = a.lambda;
  cfg.delta = a.delta;
  cfg.n_max = a.n_max;
  cfg.t_count = a.t_grid;
  cfg.tol = a.tol;
  const ScanReport rep = positivity_scan(cfg);

  std::cout << "lambda = " << fd(a.lambda) << ", delta = " << fd(a.delta)
            << ", n <= " << a.n_max << ", " << a.t_grid
            << " t-points, tol = " << fd(a.tol) << "\n";
  std::cout << "points: " << rep.points.size() << " total, "
            << rep.positive_count << " positive, " << rep.negative_count
            << " negative, " << rep.indeterminate_count << " indeterminate, "
            << rep.failure_count << " failed\n";
  if (rep.min_n >= 0)
    std::cout << "minimum value " << fd(rep.min_value) << " at n = "
              << rep.min_n << ", t = " << fd(rep.min_t) << "\n";
  if (rep.witness_n >= 0)
    std::cout << "first negative point: n = " << rep.witness_n << ", t = "
              << fd(rep.witness_t) << ", value " << fd(rep.witness_value)
              << "\n";
  std::cout << "verdict: " << scan_verdict_name(rep.verdict) << "\n";

  Json config;
  config["lambda"] = a.lambda;
  config["delta"] = a.delta;
  config["nmax"] = a.n_max;
  config["tgrid"] = a.t_grid;
  config["tol"] = a.tol;
  if (!a.json_path.empty()) {
    Json doc = report_header("positivity", config);
    doc["verdict"] = scan_verdict_name(rep.verdict);
    doc["positive_count"] = rep.positive_count;
    doc["negative_count"] = rep.negative_count;
    doc["indeterminate_count"] = rep.indeterminate_count;
    doc["failure_count"] = rep.failure_count;
    doc["min_value"] = rep.min_value;
    doc["min_n"] = rep.min_n;
    doc["min_t"] = rep.min_t;
    doc["witness_n"] = rep.witness_n;
    doc["witness_t"] = rep.witness_t;
    doc["witness_value"] = rep.witness_value;
    Json points = Json::array();
    for (const auto& pt : rep.points) {
      Json jp;
      jp["n"] = pt.n;
      jp["t"] = pt.t;
      jp["value"] = pt.value;
      jp["err"] = pt.err;
      jp["sign"] = sign_class_name(pt.sign);
      if (!pt.ok) jp["note"] = pt.note;
      points.push_back(std::move(jp));
    }
    doc["points"] = std::move(points);
    write_json_file(doc, a.json_path);
  }
  if (!a.csv_path.empty()) {
    std::vector<std::string> rows;
    for (const auto& pt : rep.points)
      rows.push_back(std::to_string(pt.n) + "," + fcsv(pt.t) + "," +
                     fcsv(pt.value) + "," + fcsv(pt.err) + "," +
                     sign_class_name(pt.sign));
    write_csv_file(a.csv_path, "n,t,value,err,sign", rows);
  }

  const bool in_claimed_region = a.delta >= a.lambda + 1.0 - 1e-12;
  if (rep.verdict == ScanVerdict::NegativeWitness && in_claimed_region)
    return 1;
  if (rep.failure_count > 0) return 3;
  return 0;
}

// ------------------------------------------------------------------ mzv ----

struct MzvArgs {
  std::string identity;
  long long big_n = 1000000;
  std::string family;
  std::string alpha = "1";
  int n = 30;
  bool zeros = false;
  std::vector<double> ts;
  long long j_max = 100000;
  std::string json_path;
  std::string csv_path;
};

MzvSpec parse_side(const std::string& text, long long limit) {
  MzvSpec spec;
  spec.limit = limit;
  bool any_alt = false;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    bool alt = false;
    if (!token.empty() && token.back() == '~') {
      alt = true;
      any_alt = true;
      token.pop_back();
    }
    size_t used = 0;
    int s = 0;
    try {
      s = std::stoi(token, &used);
    } catch (...) {
      fail(ErrorKind::UsageError, "bad exponent '" + token + "'");
    }
    if (used != token.size())
      fail(ErrorKind::UsageError, "bad exponent '" + token + "'");
    spec.exponents.push_back(s);
    spec.alternating.push_back(alt);
  }
  if (spec.exponents.empty())
    fail(ErrorKind::UsageError, "empty exponent list in --identity");
  if (!any_alt) spec.alternating.clear();
  return spec;
}

Json zero_report_json(const ZeroReport& rep) {
  Json doc;
  doc["degree"] = rep.degree;
  doc["distinct_real_count"] = rep.distinct_real_count;
  doc["negative_count"] = rep.negative_count;
  doc["all_negative"] = rep.all_negative;
  doc["boundary_zero"] = rep.boundary_zero;
  doc["roots"] = double_list_json(rep.roots);
  return doc;
}

void print_zero_line(int n, const ZeroReport& rep) {
  std::cout << "  n = " << n << ": " << rep.distinct_real_count
            << " distinct real root(s), " << rep.negative_count
            << " negative, all negative: "
            << (rep.all_negative ? "yes" : "no");
  if (rep.boundary_zero) std::cout << " (root at 0)";
  std::cout << ";";
  for (double r : rep.roots) std::cout << " " << fd(r);
  std::cout << "\n";
}

int run_mzv(const MzvArgs& a) {
  if (a.identity.empty() == a.family.empty())
    fail(ErrorKind::UsageError, "give exactly one of --identity or --family");

  if (!a.identity.empty()) {
    const size_t eq = a.identity.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::UsageError,
           "--identity wants 'lhs=rhs', e.g. 2,1=3 (suffix ~ alternates a slot)");
    const MzvSpec lhs = parse_side(a.identity.substr(0, eq), a.big_n);
    const MzvSpec rhs = parse_side(a.identity.substr(eq + 1), a.big_n);
    const MzvValue lv = mzv_truncated(lhs);
    const MzvValue rv = mzv_truncated(rhs);
    const double gap = std::fabs(lv.value - rv.value);
    std::cout << "lhs (" << a.identity.substr(0, eq) << ") at N = " << a.big_n
              << ": " << fd(lv.value) << " (tail scale " << fd(lv.tail_estimate)
              << ")\n";
    std::cout << "rhs (" << a.identity.substr(eq + 1) << ") at N = " << a.big_n
              << ": " << fd(rv.value) << " (tail scale " << fd(rv.tail_estimate)
              << ")\n";
    std::cout << "|difference| = " << fd(gap) << "\n";
    if (!a.json_path.empty()) {
      Json config;
      config["identity"] = a.identity;
      config["N"] = a.big_n;
      Json doc = report_header("mzv", config);
      doc["lhs_value"] = lv.value;
      doc["lhs_tail_estimate"] = lv.tail_estimate;
      doc["rhs_value"] = rv.value;
      doc["rhs_tail_estimate"] = rv.tail_estimate;
      doc["gap"] = gap;
      write_json_file(doc, a.json_path);
    }
    return 0;
  }

  Json config;
  config["family"] = a.family;
  config["alpha"] = a.alpha;
  config["n"] = a.n;
  config["zeros"] = a.zeros;
  config["t"] = a.ts;
  config["jmax"] = a.j_max;

  std::vector<std::string> csv_rows;
  if (a.family == "B") {
    const Rational alpha = parse_rational(a.alpha);
    const auto b = b_poly_recurrence(alpha, a.n);
    std::cout << "B family at alpha = " << rational_str(alpha) << ", n <= "
              << a.n << "\n";
    for (int k = 0; k <= std::min(a.n, 6); ++k)
      std::cout << "B_" << k << " = " << poly_str(b[k], "x") << "\n";
    if (a.n > 6) std::cout << "(higher indices in the JSON table)\n";

    Json polys = Json::array();
    std::vector<ZeroReport> reports(static_cast<size_t>(a.n) + 1);
    std::vector<bool> has_report(static_cast<size_t>(a.n) + 1, false);
    if (a.zeros) std::cout << "zeros:\n";
    for (int k = 0; k <= a.n; ++k) {
      Json jp;
      jp["n"] = k;
      jp["variable"] = "x=t^3";
      jp["coefficients"] = xpoly_json(b[k]);
      if (a.zeros && !b[k].is_zero()) {
        reports[k] = xpoly_real_zeros(b[k]);
        has_report[k] = true;
        jp["zeros"] = zero_report_json(reports[k]);
        if (reports[k].degree > 0) print_zero_line(k, reports[k]);
        for (double r : reports[k].roots)
          csv_rows.push_back(std::to_string(k) + "," + fcsv(r));
      }
      polys.push_back(std::move(jp));
    }
    if (!a.json_path.empty()) {
      Json doc = report_header("mzv", config);
      doc["polynomials"] = std::move(polys);
      write_json_file(doc, a.json_path);
    }
    if (!a.csv_path.empty()) write_csv_file(a.csv_path, "n,root", csv_rows);
    return 0;
  }

  if (a.family != "A")
    fail(ErrorKind::UsageError, "--family must be B or A");

  const APolys ap = a_polys(a.n);
  std::cout << "A family, n <= " << a.n << "\n";
  for (int k = 0; k <= std::min(a.n, 6); ++k)
    std::cout << "A_" << k << " = " << poly_str(ap.a[k], "x")
              << "; partial sum = " << poly_str(ap.a_tilde[k], "x") << "\n";
  if (a.n > 6) std::cout << "(higher indices in the JSON table)\n";

  Json polys = Json::array();
  for (int k = 0; k <= a.n; ++k) {
    Json jp;
    jp["n"] = k;
    jp["variable"] = "x=t^3";
    jp["coefficients"] = xpoly_json(ap.a[k]);
    jp["partial_sum_coefficients"] = xpoly_json(ap.a_tilde[k]);
    if (a.zeros && !ap.a[k].is_zero()) {
      const ZeroReport rep = xpoly_real_zeros(ap.a[k]);
      jp["zeros"] = zero_report_json(rep);
      if (rep.degree > 0) print_zero_line(k, rep);
      for (double r : rep.roots)
        csv_rows.push_back(std::to_string(k) + "," + fcsv(r));
    }
    polys.push_back(std::move(jp));
  }

  Json limit_block;
  if (!a.ts.empty()) {
    const LimitReport rep = limit_check(a.ts, a.n, a.j_max);
    std::cout << "partial sums against the infinite product (j <= " << a.j_max
              << "):\n";
    Json points = Json::array();
    for (const auto& pt : rep.points) {
      std::cout << "  t = " << fd(pt.t) << ": series " << fd(pt.series)
                << ", product " << fd(pt.product) << ", |diff| " << fd(pt.diff)
                << " (product tail <= " << fd(pt.tail_bound) << ")\n";
      Json jp;
      jp["t"] = pt.t;
      jp["series"] = pt.series;
      jp["product"] = pt.product;
      jp["diff"] = pt.diff;
      jp["product_tail_bound"] = pt.tail_bound;
      points.push_back(std::move(jp));
    }
    limit_block["jmax"] = rep.j_max;
    limit_block["points"] = std::move(points);
  }

  if (!a.json_path.empty()) {
    Json doc = report_header("mzv", config);
    doc["polynomials"] = std::move(polys);
    if (!a.ts.empty()) doc["limit_check"] = std::move(limit_block);
    write_json_file(doc, a.json_path);
  }
  if (!a.csv_path.empty()) write_csv_file(a.csv_path, "n,root", csv_rows);
  return 0;
}

// ---------------------------------------------------------------- zeros ----

struct ZerosArgs {
  std::string family;
  int n = 0;
  int count = 0;
  std::string json_path;
  std::string csv_path;
};

int run_zeros(const ZerosArgs& a) {
  const FamilySpec spec = FamilySpec::parse(a.family);
  const auto zeros = op_zeros(family_recurrence(spec), a.n);
  std::cout << "family " << spec.str() << ", n = " << a.n << "\n";
  if (a.count > 0 && 2 * a.count < static_cast<int>(zeros.size())) {
    std::cout << "lowest:";
    for (int i = 0; i < a.count; ++i) std::cout << " " << fd(zeros[i]);
    std::cout << "\nhighest:";
    for (int i = static_cast<int>(zeros.size()) - a.count;
         i < static_cast<int>(zeros.size()); ++i)
      std::cout << " " << fd(zeros[i]);
    std::cout << "\n";
  } else {
    for (size_t i = 0; i < zeros.size(); ++i)
      std::cout << "zero[" << i << "] = " << fd(zeros[i]) << "\n";
  }
  if (!a.json_path.empty()) {
    Json config;
    config["family"] = a.family;
    config["n"] = a.n;
    config["count"] = a.count;
    Json doc = report_header("zeros", config);
    doc["zeros"] = double_list_json(zeros);
    write_json_file(doc, a.json_path);
  }
  if (!a.csv_path.empty()) {
    std::vector<std::string> rows;
    for (size_t i = 0; i < zeros.size(); ++i)
      rows.push_back(std::to_string(i) + "," + fcsv(zeros[i]));
    write_csv_file(a.csv_path, "index,zero", rows);
  }
  return 0;
}

int guarded(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    std::cerr << "opsf: error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "opsf: error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numerical checks for orthogonal-polynomial "
               "identities, kernel positivity, nested sums, and sign-matrix "
               "spectra"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "configuration file: one 'key = value' per line, '#' "
                 "comments; command-line flags override");

  int rc = 0;
  const auto start = std::chrono::steady_clock::now();

  SchurArgs schur_args;
  auto* schur = app.add_subcommand(
      "schur", "exact square decomposition plus random positivity samples");
  schur->add_option("--n", schur_args.n, "power-sum index")
      ->capture_default_str();
  schur->add_option("--samples", schur_args.samples,
                    "random rational triples to test")
      ->capture_default_str();
  schur->add_option("--seed", schur_args.seed, "sampling seed")
      ->capture_default_str();
  schur->add_option("--json", schur_args.json_path, "write a JSON report");
  schur->callback([&] { rc = guarded([&] { return run_schur(schur_args); }); });

  IdentityArgs id_args;
  auto* idchk = app.add_subcommand(
      "identity-check",
      "printed linearization/connection formulas against exact oracles");
  idchk->add_option("--kind", id_args.kind,
                    "one of laguerre-lin, gegenbauer-lin, rogers-lin, "
                    "jacobi-lin, laguerre-conn, gegenbauer-conn, rogers-conn, "
                    "jacobi-conn, cheby-product")
      ->required();
  idchk->add_option("--lambda", id_args.lambda, "rational parameter");
  idchk->add_option("--mu", id_args.mu, "rational parameter");
  idchk->add_option("--alpha", id_args.alpha, "rational parameter");
  idchk->add_option("--beta", id_args.beta, "rational parameter");
  idchk->add_option("--gamma", id_args.gamma, "rational parameter");
  idchk->add_option("--delta", id_args.delta, "rational parameter");
  idchk->add_option("--q", id_args.q, "rational base");
  idchk->add_option("--max", id_args.max, "grid bound")->capture_default_str();
  idchk
      ->add_option("--mode", id_args.mode,
                   "strict exits 1 on any coefficient mismatch; survey only "
                   "records findings")
      ->check(CLI::IsMember({"strict", "survey"}))
      ->capture_default_str();
  idchk->add_option("--json", id_args.json_path, "write a JSON report");
  idchk->callback([&] { rc = guarded([&] { return run_identity(id_args); }); });

  IdentityArgs conn_args;
  auto* connect = app.add_subcommand(
      "connect", "connection-coefficient formulas against exact expansion");
  connect
      ->add_option("--kind", conn_args.kind,
                   "laguerre, gegenbauer, rogers, or jacobi")
      ->required();
  connect->add_option("--lambda", conn_args.lambda, "rational parameter");
  connect->add_option("--mu", conn_args.mu, "rational parameter");
  connect->add_option("--alpha", conn_args.alpha, "rational parameter");
  connect->add_option("--beta", conn_args.beta, "rational parameter");
  connect->add_option("--gamma", conn_args.gamma, "rational parameter");
  connect->add_option("--delta", conn_args.delta, "rational parameter");
  connect->add_option("--q", conn_args.q, "rational base");
  connect->add_option("--max", conn_args.max, "degree bound")
      ->capture_default_str();
  connect
      ->add_option("--mode", conn_args.mode, "strict or survey")
      ->check(CLI::IsMember({"strict", "survey"}))
      ->capture_default_str();
  connect->add_option("--json", conn_args.json_path, "write a JSON report");
  connect->callback([&] {
    rc = guarded([&] {
      conn_args.kind += "-conn";
      return run_identity(conn_args);
    });
  });

  IdentityArgs lin_args;
  auto* linearize = app.add_subcommand(
      "linearize", "product linearization formulas against exact expansion");
  linearize
      ->add_option("--kind", lin_args.kind,
                   "laguerre, gegenbauer, rogers, jacobi, or cheby-product")
      ->required();
  linearize->add_option("--lambda", lin_args.lambda, "rational parameter");
  linearize->add_option("--alpha", lin_args.alpha, "rational parameter");
  linearize->add_option("--beta", lin_args.beta, "rational parameter");
  linearize->add_option("--q", lin_args.q, "rational base");
  linearize->add_option("--max", lin_args.max, "grid bound")
      ->capture_default_str();
  linearize
      ->add_option("--mode", lin_args.mode, "strict or survey")
      ->check(CLI::IsMember({"strict", "survey"}))
      ->capture_default_str();
  linearize->add_option("--json", lin_args.json_path, "write a JSON report");
  linearize->callback([&] {
    rc = guarded([&] {
      if (lin_args.kind != "cheby-product") lin_args.kind += "-lin";
      return run_identity(lin_args);
    });
  });

  MultisumArgs ms_args;
  auto* multisum = app.add_subcommand(
      "multisum", "binomial double-sum closed forms, recurrences, and the "
                  "four-index reduction");
  multisum
      ->add_option("--check", ms_args.check,
                   "closed, recurrences, nonterminating, kdf, or all")
      ->capture_default_str();
  multisum->add_option("--max", ms_args.max, "grid bound for m, n")
      ->capture_default_str();
  multisum
      ->add_option("--alpha-sum", ms_args.alpha_sum,
                   "four-index sweep bound on a1+a2+a3+a4")
      ->capture_default_str();
  multisum
      ->add_option("--kdf", ms_args.kdf_point,
                   "single four-index point, e.g. 3,1,1,1")
      ->delimiter(',')
      ->expected(4);
  multisum->add_option("--kappa", ms_args.kappa, "rational kappa for --kdf")
      ->capture_default_str();
  multisum->add_option("--tol", ms_args.tol, "nonterminating series tolerance")
      ->capture_default_str();
  multisum->add_option("--json", ms_args.json_path, "write a JSON report");
  multisum->callback(
      [&] { rc = guarded([&] { return run_multisum(ms_args); }); });

  SpectraArgs sp_args;
  auto* spectra = app.add_subcommand(
      "spectra", "zero trends and support-edge estimates for a recurrence");
  spectra->add_option("--family", sp_args.family,
                      "family spec, e.g. meixner:beta=1,c=1/2");
  spectra->add_option("--recurrence", sp_args.recurrence_csv,
                      "CSV file: header n,a_n,b_n, rational entries");
  spectra->add_option("--sizes", sp_args.sizes, "matrix sizes, e.g. 25,50,100")
      ->delimiter(',')
      ->required();
  spectra->add_option("--tracked", sp_args.tracked,
                      "extreme zeros to keep per side")
      ->capture_default_str();
  spectra->add_option("--json", sp_args.json_path, "write a JSON report");
  spectra->add_option("--csv", sp_args.csv_path,
                      "write size,lowest,highest rows");
  spectra->callback([&] { rc = guarded([&] { return run_spectra(sp_args); }); });

  BernoulliArgs be_args;
  auto* bernoulli = app.add_subcommand(
      "bernoulli", "symmetric sign-matrix spectra, exhaustive or sampled");
  bernoulli->add_option("--n", be_args.n, "matrix size")->required();
  bernoulli->add_flag("--exhaustive", be_args.exhaustive,
                      "enumerate every matrix (n <= 6)");
  bernoulli->add_option("--samples", be_args.samples, "Monte Carlo samples")
      ->capture_default_str();
  bernoulli->add_option("--seed", be_args.seed, "sampling seed")
      ->capture_default_str();
  bernoulli
      ->add_option("--max-spectra", be_args.max_spectra,
                   "distinct spectra to report")
      ->capture_default_str();
  bernoulli->add_option("--json", be_args.json_path, "write a JSON report");
  bernoulli->add_option("--csv", be_args.csv_path,
                        "write bin_lo,bin_hi,count histogram rows");
  bernoulli->callback(
      [&] { rc = guarded([&] { return run_bernoulli(be_args); }); });

  PositivityArgs po_args;
  auto* positivity = app.add_subcommand(
      "positivity", "sign scan of the endpoint kernel integral over (n, t)");
  positivity->add_option("--lambda", po_args.lambda, "weight exponent half")
      ->capture_default_str();
  positivity->add_option("--delta", po_args.delta, "endpoint gap exponent")
      ->capture_default_str();
  positivity->add_option("--nmax", po_args.n_max, "highest polynomial degree")
      ->capture_default_str();
  positivity->add_option("--tgrid", po_args.t_grid, "t-grid point count")
      ->capture_default_str();
  positivity->add_option("--tol", po_args.tol, "integration tolerance")
      ->capture_default_str();
  positivity->add_option("--json", po_args.json_path, "write a JSON report");
  positivity->add_option("--csv", po_args.csv_path,
                         "write n,t,value,err,sign rows");
  positivity->callback(
      [&] { rc = guarded([&] { return run_positivity(po_args); }); });

  MzvArgs mzv_args;
  auto* mzv = app.add_subcommand(
      "mzv", "cubic-variable polynomial families and truncated nested sums");
  mzv->add_option("--identity", mzv_args.identity,
                  "truncated comparison 'lhs=rhs', e.g. 2,1=3; suffix ~ "
                  "alternates a slot");
  mzv->add_option("--N", mzv_args.big_n, "truncation for --identity")
      ->capture_default_str();
  mzv->add_option("--family", mzv_args.family, "B or A");
  mzv->add_option("--alpha", mzv_args.alpha, "rational alpha for family B")
      ->capture_default_str();
  mzv->add_option("--n", mzv_args.n, "highest index")->capture_default_str();
  mzv->add_flag("--zeros", mzv_args.zeros, "attach exact real-zero reports");
  mzv->add_option("--t", mzv_args.ts,
                  "family A: compare partial sums to the product at these t")
      ->delimiter(',');
  mzv->add_option("--jmax", mzv_args.j_max, "product truncation for --t")
      ->capture_default_str();
  mzv->add_option("--json", mzv_args.json_path, "write a JSON report");
  mzv->add_option("--csv", mzv_args.csv_path, "write n,root rows (--zeros)");
  mzv->callback([&] { rc = guarded([&] { return run_mzv(mzv_args); }); });

  ZerosArgs ze_args;
  auto* zeros = app.add_subcommand("zeros",
                                   "zeros of one polynomial from a family");
  zeros->add_option("--family", ze_args.family, "family spec")->required();
  zeros->add_option("--n", ze_args.n, "degree")->required();
  zeros->add_option("--count", ze_args.count,
                    "print only this many extreme zeros per side")
      ->capture_default_str();
  zeros->add_option("--json", ze_args.json_path, "write a JSON report");
  zeros->add_option("--csv", ze_args.csv_path, "write index,zero rows");
  zeros->callback([&] { rc = guarded([&] { return run_zeros(ze_args); }); });

  auto* all = app.add_subcommand("all", "run the full release battery");
  all->callback([&] {
    rc = guarded([&] {
      const int failures = print_acceptance(std::cout);
      return failures == 0 ? 0 : 1;
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  std::fprintf(stderr, "opsf: finished in %.1f ms\n", ms);
  return rc;
}
