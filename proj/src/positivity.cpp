#include "opsf/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "opsf/error.hpp"
#include "opsf/parallel.hpp"
#include "opsf/tridiag.hpp"

namespace opsf {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kBasePanels = 8;
constexpr int kMaxDepth = 48;
constexpr long kMaxPanels = 200000;

// Legendre value and derivative via the standard (2n+1) recurrence.
void legendre_pair(int n, double x, double& p, double& dp) {
  double prev = 1.0, cur = x;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  p = cur;
  dp = n * (x * cur - prev) / (x * x - 1.0);
}

template <class F>
double panel_integral(const QuadratureRule& r, double a, double b, F&& f) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s = 0.0;
  for (size_t i = 0; i < r.nodes.size(); ++i)
    s += r.weights[i] * f(mid + half * r.nodes[i]);
  return s * half;
}

const QuadratureRule& rule16() {
  static const QuadratureRule r = gauss_legendre(16);
  return r;
}

const QuadratureRule& rule32() {
  static const QuadratureRule r = gauss_legendre(32);
  return r;
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  if (n < 1) fail(ErrorKind::DomainError, "quadrature rule needs n >= 1");
  TridiagonalMatrix t;
  t.diag.assign(static_cast<size_t>(n), 0.0);
  for (int k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    t.off.push_back(std::sqrt(kk * kk / (4.0 * kk * kk - 1.0)));
  }
  QuadratureRule rule;
  rule.nodes = eigen_sym_tridiagonal(t);
  rule.weights.resize(rule.nodes.size());
  for (int i = 0; i < n; ++i) {
    double x = rule.nodes[static_cast<size_t>(i)];
    double p = 0.0, dp = 0.0;
    for (int pass = 0; pass < 2; ++pass) {  // Newton polish of the eigenvalue
      legendre_pair(n, x, p, dp);
      if (dp != 0.0) x -= p / dp;
    }
    legendre_pair(n, x, p, dp);
    rule.nodes[static_cast<size_t>(i)] = x;
    rule.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

double gegenbauer_eval(int n, double lambda, double x) {
  if (n < 0) fail(ErrorKind::DomainError, "gegenbauer degree must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * lambda * x;
  for (int k = 1; k < n; ++k) {
    const double next =
        (2.0 * (k + lambda) * x * cur - (k + 2.0 * lambda - 1.0) * prev) /
        (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

IntegralValue f_integral(int n, double lambda, double delta, double t,
                         double tol) {
  if (n < 0) fail(ErrorKind::DomainError, "degree must be >= 0");
  if (!(lambda > 0.0)) fail(ErrorKind::DomainError, "lambda must be > 0");
  if (!(delta > 0.0)) fail(ErrorKind::DomainError, "delta must be > 0");
  if (!(t > 0.0) || !(t <= kPi))
    fail(ErrorKind::DomainError, "t must lie in (0, pi]");
  if (!(tol > 0.0)) fail(ErrorKind::DomainError, "tol must be > 0");

  const auto integrand = [&](double theta) -> double {
    const double gap = t - theta;
    if (gap <= 0.0) return 0.0;
    const double s = std::sin(theta);
    if (s <= 0.0) return 0.0;
    return std::pow(gap, delta) * gegenbauer_eval(n, lambda, std::cos(theta)) *
           std::pow(s, 2.0 * lambda);
  };

  struct Panel {
    double a, b;
    int depth;
  };
  std::vector<Panel> work;
  for (int i = 0; i < kBasePanels; ++i)
    work.push_back({t * i / kBasePanels, t * (i + 1) / kBasePanels, 0});

  double value = 0.0, err = 0.0;
  bool reached = true;
  long processed = 0;
  while (!work.empty()) {
    const Panel p = work.back();
    work.pop_back();
    ++processed;
    const double coarse = panel_integral(rule16(), p.a, p.b, integrand);
    const double fine = panel_integral(rule32(), p.a, p.b, integrand);
    const double e = std::fabs(fine - coarse);
    // the two-level difference cannot certify below rounding noise
    const double fp_floor = 1e-16 * (std::fabs(fine) + std::fabs(coarse));
    if (e <= 0.25 * tol || e <= fp_floor || p.depth >= kMaxDepth ||
        processed >= kMaxPanels) {
      value += fine;
      err += e;
      if (e > 0.25 * tol) reached = false;
    } else {
      const double m = 0.5 * (p.a + p.b);
      work.push_back({p.a, m, p.depth + 1});
      work.push_back({m, p.b, p.depth + 1});
    }
  }
  if (!reached) {
    std::ostringstream os;
    os << "tolerance " << tol << " unreachable; best value " << value
       << ", err estimate " << err;
    fail(ErrorKind::ToleranceNotReached, os.str());
  }
  return {value, err};
}

const char* sign_class_name(SignClass s) {
  switch (s) {
    case SignClass::Positive: return "positive";
    case SignClass::Negative: return "negative";
    case SignClass::Indeterminate: return "indeterminate";
  }
  return "?";
}

const char* scan_verdict_name(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::ConsistentWithConjecture: return "consistent-with-conjecture";
    case ScanVerdict::NegativeWitness: return "negative-witness";
    case ScanVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

ScanReport positivity_scan(const PositivityScanConfig& cfg) {
  if (!(cfg.lambda > 0.0)) fail(ErrorKind::DomainError, "lambda must be > 0");
  if (!(cfg.delta > 0.0)) fail(ErrorKind::DomainError, "delta must be > 0");
  if (cfg.n_max < 0) fail(ErrorKind::DomainError, "n_max must be >= 0");
  if (cfg.t_count < 1) fail(ErrorKind::DomainError, "t grid needs >= 1 point");
  if (!(cfg.tol > 0.0)) fail(ErrorKind::DomainError, "tol must be > 0");

  ScanReport rep;
  rep.config = cfg;
  const size_t per_n = static_cast<size_t>(cfg.t_count);
  rep.points.resize(static_cast<size_t>(cfg.n_max + 1) * per_n);

  parallel_for(rep.points.size(), [&](size_t idx) {
    ScanPoint& pt = rep.points[idx];
    pt.n = static_cast<int>(idx / per_n);
    const int j = static_cast<int>(idx % per_n) + 1;
    pt.t = kPi * j / cfg.t_count;
    try {
      const IntegralValue iv =
          f_integral(pt.n, cfg.lambda, cfg.delta, pt.t, cfg.tol);
      pt.value = iv.value;
      pt.err = iv.err;
      const double band = std::max(cfg.tol, 4.0 * iv.err);
      if (pt.value < -band)
        pt.sign = SignClass::Negative;
      else if (pt.value > band)
        pt.sign = SignClass::Positive;
      else
        pt.sign = SignClass::Indeterminate;
    } catch (const Error& e) {
      pt.ok = false;
      pt.sign = SignClass::Indeterminate;
      pt.note = e.what();
    }
  });

  bool have_min = false;
  for (const ScanPoint& pt : rep.points) {
    if (!pt.ok) {
      ++rep.failure_count;
      continue;
    }
    switch (pt.sign) {
      case SignClass::Positive: ++rep.positive_count; break;
      case SignClass::Negative: ++rep.negative_count; break;
      case SignClass::Indeterminate: ++rep.indeterminate_count; break;
    }
    if (!have_min || pt.value < rep.min_value) {
      have_min = true;
      rep.min_value = pt.value;
      rep.min_n = pt.n;
      rep.min_t = pt.t;
    }
    if (pt.sign == SignClass::Negative && rep.witness_n < 0) {
      rep.witness_n = pt.n;
      rep.witness_t = pt.t;
      rep.witness_value = pt.value;
    }
  }

  if (rep.negative_count > 0)
    rep.verdict = ScanVerdict::NegativeWitness;
  else if (cfg.delta >= cfg.lambda + 1.0 - 1e-12)
    rep.verdict = ScanVerdict::ConsistentWithConjecture;
  else
    rep.verdict = ScanVerdict::Inconclusive;
  return rep;
}

MonotonicityReport monotonicity_check(double lambda,
                                      const std::vector<double>& deltas,
                                      int n_max, int t_count, double tol) {
  if (deltas.empty()) fail(ErrorKind::DomainError, "need at least one delta");
  for (size_t i = 1; i < deltas.size(); ++i)
    if (!(deltas[i] > deltas[i - 1]))
      fail(ErrorKind::DomainError, "deltas must be strictly ascending");

  MonotonicityReport rep;
  rep.lambda = lambda;
  rep.deltas = deltas;
  for (double d : deltas) {
    PositivityScanConfig cfg;
    cfg.lambda = lambda;
    cfg.delta = d;
    cfg.n_max = n_max;
    cfg.t_count = t_count;
    cfg.tol = tol;
    rep.scans.push_back(positivity_scan(cfg));
    const ScanReport& s = rep.scans.back();
    rep.all_positive.push_back(s.failure_count == 0 &&
                               s.positive_count ==
                                   static_cast<long long>(s.points.size()));
  }

  for (size_t i = 0; i < deltas.size(); ++i) {
    if (!rep.all_positive[i]) continue;
    for (size_t j = i + 1; j < deltas.size(); ++j) {
      for (const ScanPoint& pt : rep.scans[j].points) {
        if (pt.ok && pt.sign == SignClass::Negative) {
          MonotonicityViolation v;
          v.delta_base = deltas[i];
          v.delta_cmp = deltas[j];
          v.n = pt.n;
          v.t = pt.t;
          const size_t idx =
              static_cast<size_t>(pt.n) * static_cast<size_t>(t_count) +
              static_cast<size_t>(std::lround(pt.t * t_count / kPi)) - 1;
          v.base_value = rep.scans[i].points[idx].value;
          v.cmp_value = pt.value;
          rep.violations.push_back(v);
        }
      }
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

}  // namespace opsf
