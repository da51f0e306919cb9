#include "opsf/mzv.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "opsf/error.hpp"

namespace opsf {
namespace {

constexpr long long kMzvLimitCap = 10'000'000;

Rational cube(const Rational& v) { return v * v * v; }

// Compensated accumulation; the sums below mix 10^6 terms spanning many
// orders of magnitude and plain += drifts by ~1e-11 at that length.
void kahan_add(double& sum, double& comp, double term) {
  const double y = term - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

// Remainder of a by b over Q.
RPoly poly_rem(RPoly a, const RPoly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial remainder by zero");
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const Rational q = a.leading() / b.leading();
    const size_t shift = static_cast<size_t>(a.degree() - b.degree());
    a -= b.scaled(q).shifted(shift);
  }
  return a;
}

std::vector<RPoly> sturm_chain(const RPoly& p) {
  std::vector<RPoly> chain;
  chain.push_back(p);
  RPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    RPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int variations(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int variations_at(const std::vector<RPoly>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const RPoly& q : chain) signs.push_back(sign_of(q.eval(x)));
  return variations(signs);
}

int variations_at_infinity(const std::vector<RPoly>& chain, int direction) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const RPoly& q : chain) {
    if (q.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = sign_of(q.leading());
    if (direction < 0 && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

// Distinct roots in (a, b], assuming p(a) != 0 and p(b) != 0.
int roots_between(const std::vector<RPoly>& chain, const Rational& a,
                  const Rational& b) {
  return variations_at(chain, a) - variations_at(chain, b);
}

void isolate_roots(const std::vector<RPoly>& chain, const Rational& lo,
                   const Rational& hi, int count, std::vector<double>& out) {
  if (count == 0) return;
  if (count == 1) {
    Rational a = lo, b = hi;
    const int va = variations_at(chain, a);
    while (to_double(b - a) > 1e-12 * std::max(1.0, std::fabs(to_double(b)))) {
      const Rational mid = (a + b) / 2;
      if (va - variations_at(chain, mid) == 1)
        b = mid;
      else
        a = mid;
    }
    out.push_back(to_double((a + b) / 2));
    return;
  }
  const Rational mid = (lo + hi) / 2;
  const int left = roots_between(chain, lo, mid);
  isolate_roots(chain, lo, mid, left, out);
  isolate_roots(chain, mid, hi, count - left, out);
}

}  // namespace

RPoly xpoly_from_t(const EPoly& p) {
  std::vector<Rational> out;
  for (int i = 0; i <= p.degree(); ++i) {
    const Eisenstein& c = p.coeff(static_cast<size_t>(i));
    if (c.om != 0)
      fail(ErrorKind::StructureViolation,
           "coefficient of t^" + std::to_string(i) + " has omega part " +
               rational_str(c.om));
    if (i % 3 != 0) {
      if (c.re != 0)
        fail(ErrorKind::StructureViolation,
             "t^" + std::to_string(i) + " coefficient " + rational_str(c.re) +
                 " breaks membership in Q[t^3]");
      continue;
    }
    out.resize(static_cast<size_t>(i / 3) + 1, Rational(0));
    out[static_cast<size_t>(i / 3)] = c.re;
  }
  return RPoly(std::move(out));
}

std::vector<RPoly> b_poly_recurrence(const Rational& alpha, int n_max) {
  if (n_max < 0) fail(ErrorKind::DomainError, "need n_max >= 0");
  std::vector<RPoly> b;
  b.push_back(RPoly::constant(Rational(1)));
  if (n_max >= 1) b.push_back(RPoly::constant(alpha * alpha));
  for (int n = 0; n + 2 <= n_max; ++n) {
    const Rational mid = Rational(n + 1) * (Rational(2) * n * n +
                                            Rational(3) * n * (alpha + 1) +
                                            alpha * alpha + 3 * alpha + 1);
    const Rational head = cube(n + alpha);
    // ((n+alpha)^3 - x) B_n - mid B_{n+1} + (n+2)^2 (n+1) B_{n+2} = 0
    RPoly top = b[static_cast<size_t>(n) + 1].scaled(mid) -
                b[static_cast<size_t>(n)].scaled(head) +
                b[static_cast<size_t>(n)].shifted(1);
    const Rational lead = Rational((n + 2)) * (n + 2) * (n + 1);
    b.push_back(top.scaled(Rational(1) / lead));
  }
  return b;
}

RPoly b_poly_explicit(const Rational& alpha, int n) {
  if (n < 0) fail(ErrorKind::DomainError, "need n >= 0");
  const Eisenstein w = Eisenstein::omega();
  const Eisenstein w2 = w * w;
  const EPoly t = EPoly::variable();
  const EPoly wt = t.scaled(w);
  const EPoly w2t = t.scaled(w2);

  // prefix[m] = (alpha + t)_m
  std::vector<EPoly> prefix(static_cast<size_t>(n) + 1);
  prefix[0] = EPoly::identity();
  for (int m = 1; m <= n; ++m)
    prefix[static_cast<size_t>(m)] =
        prefix[static_cast<size_t>(m) - 1] *
        (t + EPoly::constant(Eisenstein(alpha + (m - 1))));

  // suffix[k] = (alpha - t + k)_{n-k} = prod_{j=k}^{n-1} (alpha - t + j)
  std::vector<EPoly> suffix(static_cast<size_t>(n) + 1);
  suffix[static_cast<size_t>(n)] = EPoly::identity();
  for (int k = n - 1; k >= 0; --k)
    suffix[static_cast<size_t>(k)] =
        suffix[static_cast<size_t>(k) + 1] *
        (EPoly::constant(Eisenstein(alpha + k)) - t);

  EPoly sum;
  EPoly pair = EPoly::identity();  // (w t)_k (w^2 t)_k
  Rational k_fact(1), nk_fact(factorial(static_cast<unsigned long>(n)));
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      pair = pair * (wt + EPoly::constant(Eisenstein(Rational(k - 1)))) *
             (w2t + EPoly::constant(Eisenstein(Rational(k - 1))));
      k_fact *= k;
      nk_fact /= n - k + 1;
    }
    const Eisenstein scale(Rational(1) / (k_fact * nk_fact));
    sum += (pair * prefix[static_cast<size_t>(n - k)] *
            suffix[static_cast<size_t>(k)])
               .scaled(scale);
  }
  const Eisenstein inv_n_fact(Rational(1) /
                              Rational(factorial(static_cast<unsigned long>(n))));
  return xpoly_from_t(sum.scaled(inv_n_fact));
}

APolys a_polys(int n_max) {
  if (n_max < 0) fail(ErrorKind::DomainError, "need n_max >= 0");
  APolys out;
  out.a.push_back(RPoly::constant(Rational(1)));
  if (n_max >= 1) out.a.push_back(RPoly());
  for (int n = 0; n + 2 <= n_max; ++n) {
    // (n^3 - (-1)^n x) A_n + (n+1)^2 (2n+1) A_{n+1} + (n+2)^2 (n+1) A_{n+2} = 0
    const Rational n3 = Rational(n) * n * n;
    const int sign = n % 2 == 0 ? 1 : -1;
    RPoly top = out.a[static_cast<size_t>(n)].scaled(n3) -
                out.a[static_cast<size_t>(n)].shifted(1).scaled(Rational(sign)) +
                out.a[static_cast<size_t>(n) + 1].scaled(
                    Rational(n + 1) * (n + 1) * (2 * n + 1));
    const Rational lead = Rational(n + 2) * (n + 2) * (n + 1);
    out.a.push_back(top.scaled(Rational(-1) / lead));
  }

  out.a_tilde.push_back(RPoly::constant(Rational(1)));
  if (n_max >= 1) out.a_tilde.push_back(RPoly::constant(Rational(1)));
  for (int n = 1; n + 1 <= n_max; ++n) {
    // (n^3 - (-1)^n x) A~_{n-1} + (2n+1) n A~_n - (n+1)^2 n A~_{n+1} = 0
    const Rational n3 = Rational(n) * n * n;
    const int sign = n % 2 == 0 ? 1 : -1;
    RPoly top = out.a_tilde[static_cast<size_t>(n) - 1].scaled(n3) -
                out.a_tilde[static_cast<size_t>(n) - 1].shifted(1).scaled(
                    Rational(sign)) +
                out.a_tilde[static_cast<size_t>(n)].scaled(
                    Rational(2 * n + 1) * n);
    const Rational lead = Rational(n + 1) * (n + 1) * n;
    out.a_tilde.push_back(top.scaled(Rational(1) / lead));
  }

  RPoly partial;
  for (int n = 0; n <= n_max; ++n) {
    partial += out.a[static_cast<size_t>(n)];
    if (!(partial == out.a_tilde[static_cast<size_t>(n)]))
      fail(ErrorKind::StructureViolation,
           "partial sum of A_0..A_" + std::to_string(n) +
               " disagrees with the end recursion");
  }
  return out;
}

ProductValue product_truncation(double t, long long j_max) {
  if (j_max < 1) fail(ErrorKind::DomainError, "need at least one factor");
  const double t3 = t * t * t;
  double p = 1.0;
  for (long long j = 1; j <= j_max; ++j) {
    const double jj = static_cast<double>(j);
    p *= 1.0 + t3 / (8.0 * jj * jj * jj);
  }
  const double abs_t3 = std::fabs(t3);
  const double tail_sum = abs_t3 / (16.0 * static_cast<double>(j_max) *
                                    static_cast<double>(j_max));
  return {p, std::fabs(p) * std::expm1(tail_sum)};
}

LimitReport limit_check(const std::vector<double>& ts, int n, long long j_max) {
  if (ts.empty()) fail(ErrorKind::DomainError, "need at least one t");
  LimitReport rep;
  rep.n = n;
  rep.j_max = j_max;
  const DPoly tail = poly_to_double(a_polys(n).a_tilde.back());
  for (double t : ts) {
    LimitPoint pt;
    pt.t = t;
    pt.series = tail.eval(t * t * t);
    const ProductValue pv = product_truncation(t, j_max);
    pt.product = pv.value;
    pt.tail_bound = pv.tail_bound;
    pt.diff = std::fabs(pt.series - pt.product);
    rep.points.push_back(pt);
  }
  return rep;
}

ZeroReport xpoly_real_zeros(const RPoly& p) {
  if (p.is_zero()) fail(ErrorKind::DomainError, "zero polynomial");
  ZeroReport rep;
  rep.degree = p.degree();

  // strip the x^m factor so Sturm counts run on q with q(0) != 0
  size_t shift = 0;
  while (shift <= static_cast<size_t>(p.degree()) &&
         p.coeff(shift) == Rational(0))
    ++shift;
  rep.boundary_zero = shift > 0;
  std::vector<Rational> qc;
  for (size_t i = shift; i <= static_cast<size_t>(p.degree()); ++i)
    qc.push_back(p.coeff(i));
  const RPoly q(std::move(qc));

  if (q.degree() == 0) {
    if (rep.boundary_zero) {
      rep.distinct_real_count = 1;
      rep.roots.push_back(0.0);
    }
    return rep;
  }

  const auto chain = sturm_chain(q);
  const int v_minus = variations_at_infinity(chain, -1);
  const int v_plus = variations_at_infinity(chain, +1);
  const int v_zero = variations_at(chain, Rational(0));
  rep.negative_count = v_minus - v_zero;
  rep.distinct_real_count =
      v_minus - v_plus + (rep.boundary_zero ? 1 : 0);
  rep.all_negative = rep.negative_count == rep.degree;

  // Cauchy bound on root magnitudes
  Rational bound(1);
  for (int i = 0; i < q.degree(); ++i) {
    Rational ratio = q.coeff(static_cast<size_t>(i)) / q.leading();
    if (ratio < 0) ratio = -ratio;
    if (ratio > bound) bound = ratio;
  }
  bound += 1;

  std::vector<double> negative, positive;
  isolate_roots(chain, -bound, Rational(0), rep.negative_count, negative);
  isolate_roots(chain, Rational(0), bound,
                v_zero - v_plus, positive);
  rep.roots = std::move(negative);
  if (rep.boundary_zero) rep.roots.push_back(0.0);
  rep.roots.insert(rep.roots.end(), positive.begin(), positive.end());
  return rep;
}

MzvValue mzv_truncated(const MzvSpec& spec) {
  const size_t l = spec.exponents.size();
  if (l == 0) fail(ErrorKind::DomainError, "need at least one exponent");
  for (int s : spec.exponents)
    if (s < 1) fail(ErrorKind::DomainError, "exponents must be >= 1");
  if (!spec.alternating.empty() && spec.alternating.size() != l)
    fail(ErrorKind::DomainError, "alternating flags must match the exponents");
  if (spec.limit < 10) fail(ErrorKind::DomainError, "truncation must be >= 10");
  if (spec.limit > kMzvLimitCap)
    fail(ErrorKind::SizeTooLarge, "truncation capped at 10^7");
  const auto alt = [&](size_t i) {
    return !spec.alternating.empty() && spec.alternating[i];
  };
  if (spec.exponents[0] <= 1 && !alt(0))
    fail(ErrorKind::DivergentSpec,
         "leading exponent 1 without alternation does not converge");

  const size_t n = static_cast<size_t>(spec.limit);
  // G_r(k): sum over chains k > j_1 > ... > j_r >= 1 of the innermost r
  // factors; computed as prefix sums, innermost exponent first.
  std::vector<double> prev(n + 2, 1.0), prev_abs(n + 2, 1.0);
  std::vector<double> cur(n + 2, 0.0), cur_abs(n + 2, 0.0);
  for (size_t r = 1; r < l; ++r) {
    const size_t idx = l - r;  // s_{idx+1} in 1-based terms
    const int s = spec.exponents[idx];
    const bool a = alt(idx);
    cur[1] = 0.0;
    cur_abs[1] = 0.0;
    double run = 0.0, comp = 0.0, run_abs = 0.0, comp_abs = 0.0;
    for (size_t k = 1; k <= n; ++k) {
      double term = 1.0;
      for (int e = 0; e < s; ++e) term /= static_cast<double>(k);
      const double signed_term = (a && (k % 2 == 1)) ? -term : term;
      kahan_add(run, comp, signed_term * prev[k]);
      cur[k + 1] = run;
      kahan_add(run_abs, comp_abs, term * prev_abs[k]);
      cur_abs[k + 1] = run_abs;
    }
    std::swap(prev, cur);
    std::swap(prev_abs, cur_abs);
  }

  const int s0 = spec.exponents[0];
  const bool a0 = alt(0);
  double value = 0.0, value_comp = 0.0;
  for (size_t k = 1; k <= n; ++k) {
    double term = 1.0;
    for (int e = 0; e < s0; ++e) term /= static_cast<double>(k);
    kahan_add(value, value_comp,
              ((a0 && (k % 2 == 1)) ? -term : term) * prev[k]);
  }

  double shell = 1.0;
  for (int e = 0; e < s0; ++e) shell /= static_cast<double>(n + 1);
  shell *= prev_abs[n + 1];
  MzvValue out;
  out.value = value;
  out.tail_estimate = shell * (1.0 + std::log(static_cast<double>(n)));
  return out;
}

AlternatingReport alternating_identity_check(
    int l, const std::vector<long long>& limits) {
  if (l < 1) fail(ErrorKind::DomainError, "depth must be >= 1");
  if (limits.empty()) fail(ErrorKind::DomainError, "need at least one limit");
  AlternatingReport rep;
  rep.l = l;
  double scale = 1.0;
  for (int i = 0; i < l; ++i) scale *= 8.0;
  for (long long limit : limits) {
    MzvSpec plain;
    for (int i = 0; i < l; ++i) {
      plain.exponents.push_back(2);
      plain.exponents.push_back(1);
    }
    plain.limit = limit;
    MzvSpec signed_spec = plain;
    signed_spec.alternating.assign(static_cast<size_t>(2 * l), false);
    for (int i = 0; i < l; ++i)
      signed_spec.alternating[static_cast<size_t>(2 * i)] = true;

    AlternatingPoint pt;
    pt.limit = limit;
    pt.alternating_sum = mzv_truncated(signed_spec).value;
    pt.plain_sum = mzv_truncated(plain).value;
    pt.printed_diff = pt.alternating_sum - scale * pt.plain_sum;
    pt.reversed_diff = pt.plain_sum - scale * pt.alternating_sum;
    rep.points.push_back(pt);
  }
  return rep;
}

}  // namespace opsf
