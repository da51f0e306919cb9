#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstddef>
#include <vector>

#include "doctest.h"
#include "opsf/dense_poly.hpp"
#include "opsf/eisenstein.hpp"
#include "opsf/mzv.hpp"
#include "test_util.hpp"

using namespace opsf;

namespace {

RPoly b2_closed(const Rational& alpha) {
  const Rational c = alpha * alpha * (alpha + 1) * (alpha + 1);
  return RPoly({c / 4, Rational(1, 4)});
}

// Exact sign change across a simple root reported as a double.
bool straddles_root(const RPoly& p, double r, double h = 1e-6) {
  return p.eval(Rational(r - h)) * p.eval(Rational(r + h)) < 0;
}

double direct_sum1(int s0, bool a0, long long N) {
  double v = 0.0;
  for (long long k = 1; k <= N; ++k) {
    double t = std::pow(static_cast<double>(k), -s0);
    if (a0 && k % 2 == 1) t = -t;
    v += t;
  }
  return v;
}

double direct_sum2(int s0, bool a0, int s1, bool a1, long long N) {
  double v = 0.0;
  for (long long k1 = 2; k1 <= N; ++k1) {
    double outer = std::pow(static_cast<double>(k1), -s0);
    if (a0 && k1 % 2 == 1) outer = -outer;
    double inner = 0.0;
    for (long long k2 = 1; k2 < k1; ++k2) {
      double t = std::pow(static_cast<double>(k2), -s1);
      if (a1 && k2 % 2 == 1) t = -t;
      inner += t;
    }
    v += outer * inner;
  }
  return v;
}

double direct_sum3(int s0, bool a0, int s1, bool a1, int s2, bool a2,
                   long long N) {
  double v = 0.0;
  for (long long k1 = 3; k1 <= N; ++k1)
    for (long long k2 = 2; k2 < k1; ++k2)
      for (long long k3 = 1; k3 < k2; ++k3) {
        double t = std::pow(static_cast<double>(k1), -s0) *
                   std::pow(static_cast<double>(k2), -s1) *
                   std::pow(static_cast<double>(k3), -s2);
        int parity = 0;
        if (a0 && k1 % 2 == 1) ++parity;
        if (a1 && k2 % 2 == 1) ++parity;
        if (a2 && k3 % 2 == 1) ++parity;
        if (parity % 2 == 1) t = -t;
        v += t;
      }
  return v;
}

}  // namespace

TEST_CASE("cube-variable conversion enforces membership") {
  const EPoly t = EPoly::variable();
  const EPoly p = t * t * t + EPoly::constant(Eisenstein(Rational(2)));
  CHECK(xpoly_from_t(p) == RPoly({Rational(2), Rational(1)}));
  CHECK(xpoly_from_t(EPoly()) == RPoly());

  CHECK(error_kind_of([&] { xpoly_from_t(t * t); }) ==
        ErrorKind::StructureViolation);
  const EPoly skew =
      (t * t * t).scaled(Eisenstein(Rational(0), Rational(1)));
  CHECK(error_kind_of([&] { xpoly_from_t(skew); }) ==
        ErrorKind::StructureViolation);
}

TEST_CASE("first B polynomials have their closed forms") {
  const std::vector<Rational> alphas = {Rational(1), Rational(1, 2),
                                        Rational(3, 2), Rational(5, 2)};
  for (const Rational& alpha : alphas) {
    const auto b = b_poly_recurrence(alpha, 2);
    REQUIRE(b.size() == 3);
    CHECK(b[0] == RPoly::constant(Rational(1)));
    CHECK(b[1] == RPoly::constant(alpha * alpha));
    CHECK(b[2] == b2_closed(alpha));
  }

  const auto b1 = b_poly_recurrence(Rational(1), 5);
  CHECK(b1[3] == RPoly({Rational(1), Rational(5, 12)}));
  CHECK(b1[4] == RPoly({Rational(1), Rational(17, 32), Rational(1, 192)}));
  CHECK(b1[5] == RPoly({Rational(1), Rational(59, 96), Rational(61, 4800)}));

  CHECK(error_kind_of([] { b_poly_recurrence(Rational(1), -1); }) ==
        ErrorKind::DomainError);
}

TEST_CASE("explicit double sum reproduces the recurrence") {
  const std::vector<Rational> alphas = {Rational(1), Rational(1, 2),
                                        Rational(3, 2), Rational(5, 2)};
  for (const Rational& alpha : alphas) {
    const auto b = b_poly_recurrence(alpha, 12);
    for (int n = 0; n <= 12; ++n) CHECK(b_poly_explicit(alpha, n) == b[n]);
  }
  CHECK(error_kind_of([] { b_poly_explicit(Rational(1), -2); }) ==
        ErrorKind::DomainError);
}

TEST_CASE("B degree grows by one every second index") {
  for (const Rational& alpha : {Rational(1), Rational(1, 2)}) {
    const auto b = b_poly_recurrence(alpha, 20);
    for (int n = 0; n <= 20; ++n) CHECK(b[n].degree() == n / 2);
  }
}

TEST_CASE("A sequences satisfy both printed recursions exactly") {
  const auto ap = a_polys(24);
  REQUIRE(ap.a.size() == 25);
  REQUIRE(ap.a_tilde.size() == 25);

  CHECK(ap.a[0] == RPoly::constant(Rational(1)));
  CHECK(ap.a[1] == RPoly());
  CHECK(ap.a[2] == RPoly({Rational(0), Rational(1, 4)}));
  CHECK(ap.a[3] == RPoly({Rational(0), Rational(-1, 6)}));
  CHECK(ap.a_tilde[2] == RPoly({Rational(1), Rational(1, 4)}));
  CHECK(ap.a_tilde[3] == RPoly({Rational(1), Rational(1, 12)}));

  for (int n = 0; n + 2 <= 24; ++n) {
    const Rational n3 = Rational(n) * n * n;
    const Rational sgn(n % 2 == 0 ? 1 : -1);
    const RPoly res = ap.a[n].scaled(n3) - ap.a[n].shifted(1).scaled(sgn) +
                      ap.a[n + 1].scaled(Rational(n + 1) * (n + 1) * (2 * n + 1)) +
                      ap.a[n + 2].scaled(Rational(n + 2) * (n + 2) * (n + 1));
    CHECK(res.is_zero());
  }
  for (int n = 1; n + 1 <= 24; ++n) {
    const Rational n3 = Rational(n) * n * n;
    const Rational sgn(n % 2 == 0 ? 1 : -1);
    const RPoly res = ap.a_tilde[n - 1].scaled(n3) -
                      ap.a_tilde[n - 1].shifted(1).scaled(sgn) +
                      ap.a_tilde[n].scaled(Rational(2 * n + 1) * n) -
                      ap.a_tilde[n + 1].scaled(Rational(n + 1) * (n + 1) * n);
    CHECK(res.is_zero());
  }

  CHECK(error_kind_of([] { a_polys(-1); }) == ErrorKind::DomainError);
}

TEST_CASE("partial sums of A match the end recursion through n = 40") {
  const auto ap = a_polys(40);
  RPoly partial;
  for (int n = 0; n <= 40; ++n) {
    partial += ap.a[n];
    CHECK(partial == ap.a_tilde[n]);
    if (n >= 1) CHECK(ap.a_tilde[n] - ap.a_tilde[n - 1] == ap.a[n]);
  }
}

TEST_CASE("product truncation carries a certified tail") {
  const auto one = product_truncation(0.0, 50);
  CHECK(one.value == 1.0);
  CHECK(one.tail_bound == 0.0);

  const auto coarse = product_truncation(1.0, 100);
  const auto fine = product_truncation(1.0, 100000);
  CHECK(std::fabs(fine.value - 1.153621296847) < 1e-9);
  CHECK(std::fabs(coarse.value - fine.value) <= coarse.tail_bound);

  const auto neg = product_truncation(-1.0, 1000);
  CHECK(neg.value > 0.0);
  CHECK(neg.value < 1.0);
  CHECK(neg.tail_bound > 0.0);

  CHECK(error_kind_of([] { product_truncation(1.0, 0); }) ==
        ErrorKind::DomainError);
}

TEST_CASE("partial sums drift toward the product, slowly") {
  const auto rep = limit_check({0.5, 1.0, 2.0}, 40, 10000);
  CHECK(rep.n == 40);
  CHECK(rep.j_max == 10000);
  REQUIRE(rep.points.size() == 3);
  for (const auto& pt : rep.points) {
    CHECK(pt.diff == std::fabs(pt.series - pt.product));
    CHECK(pt.tail_bound > 0.0);
  }
  CHECK(std::fabs(rep.points[1].series - 1.155056910051) < 1e-9);
  CHECK(rep.points[0].diff > 1.5e-4);
  CHECK(rep.points[0].diff < 1.8e-4);
  CHECK(rep.points[1].diff > 1.43e-3);
  CHECK(rep.points[1].diff < 1.44e-3);
  CHECK(rep.points[2].diff > 1.9e-2);
  CHECK(rep.points[2].diff < 2.1e-2);

  CHECK(error_kind_of([] { limit_check({}, 10, 100); }) ==
        ErrorKind::DomainError);
}

TEST_CASE("distance to the product shrinks monotonically past n = 10") {
  const auto ap = a_polys(40);
  for (double t : {0.5, 1.0, 2.0}) {
    const double target = product_truncation(t, 10000).value;
    double last = 0.0;
    for (int n = 10; n <= 40; ++n) {
      const double d =
          std::fabs(poly_to_double(ap.a_tilde[n]).eval(t * t * t) - target);
      if (n > 10) CHECK(d <= last + 1e-15);
      last = d;
    }
  }
}

TEST_CASE("sturm reports are exact on known polynomials") {
  const auto boundary = xpoly_real_zeros(RPoly({Rational(0), Rational(1, 4)}));
  CHECK(boundary.degree == 1);
  CHECK(boundary.boundary_zero);
  CHECK(boundary.distinct_real_count == 1);
  CHECK(boundary.negative_count == 0);
  CHECK_FALSE(boundary.all_negative);
  REQUIRE(boundary.roots.size() == 1);
  CHECK(boundary.roots[0] == 0.0);

  const RPoly b2 = RPoly({Rational(1), Rational(1, 4)});
  const auto lin = xpoly_real_zeros(b2);
  CHECK(lin.all_negative);
  CHECK(lin.distinct_real_count == 1);
  REQUIRE(lin.roots.size() == 1);
  CHECK(std::fabs(lin.roots[0] + 4.0) < 1e-9);
  CHECK(straddles_root(b2, lin.roots[0]));

  const RPoly cubic = RPoly({Rational(6), Rational(11), Rational(6), Rational(1)});
  const auto three = xpoly_real_zeros(cubic);
  CHECK(three.all_negative);
  CHECK(three.distinct_real_count == 3);
  CHECK(three.negative_count == 3);
  REQUIRE(three.roots.size() == 3);
  CHECK(std::fabs(three.roots[0] + 3.0) < 1e-9);
  CHECK(std::fabs(three.roots[1] + 2.0) < 1e-9);
  CHECK(std::fabs(three.roots[2] + 1.0) < 1e-9);

  const RPoly mixed = RPoly({Rational(-2), Rational(1), Rational(1)});
  const auto split = xpoly_real_zeros(mixed);
  CHECK_FALSE(split.all_negative);
  CHECK(split.distinct_real_count == 2);
  CHECK(split.negative_count == 1);
  REQUIRE(split.roots.size() == 2);
  CHECK(std::fabs(split.roots[0] + 2.0) < 1e-9);
  CHECK(std::fabs(split.roots[1] - 1.0) < 1e-9);

  // squarefree failure: a doubled root is counted once and spoils the verdict
  const auto dbl = xpoly_real_zeros(
      RPoly({Rational(1), Rational(2), Rational(1)}));
  CHECK(dbl.distinct_real_count == 1);
  CHECK(dbl.negative_count == 1);
  CHECK_FALSE(dbl.all_negative);

  const auto mono = xpoly_real_zeros(RPoly::monomial(Rational(1), 2));
  CHECK(mono.boundary_zero);
  CHECK(mono.distinct_real_count == 1);
  CHECK(mono.negative_count == 0);
  REQUIRE(mono.roots.size() == 1);
  CHECK(mono.roots[0] == 0.0);

  const RPoly shifted_cube = RPoly({Rational(-2), Rational(0), Rational(0), Rational(1)});
  const auto cbrt = xpoly_real_zeros(shifted_cube);
  CHECK(cbrt.distinct_real_count == 1);
  CHECK(cbrt.negative_count == 0);
  REQUIRE(cbrt.roots.size() == 1);
  CHECK(std::fabs(cbrt.roots[0] - std::cbrt(2.0)) < 1e-9);
  CHECK(straddles_root(shifted_cube, cbrt.roots[0]));

  const auto flat = xpoly_real_zeros(RPoly::constant(Rational(5)));
  CHECK(flat.degree == 0);
  CHECK(flat.distinct_real_count == 0);
  CHECK(flat.roots.empty());

  CHECK(error_kind_of([] { xpoly_real_zeros(RPoly()); }) ==
        ErrorKind::DomainError);
}

TEST_CASE("B zeros stay simple, real, and negative") {
  const auto b = b_poly_recurrence(Rational(1), 16);
  for (int n = 3; n <= 16; ++n) {
    const auto rep = xpoly_real_zeros(b[n]);
    CHECK(rep.all_negative);
    CHECK_FALSE(rep.boundary_zero);
    CHECK(rep.negative_count == n / 2);
    CHECK(rep.distinct_real_count == n / 2);
    REQUIRE(static_cast<int>(rep.roots.size()) == n / 2);
    for (size_t i = 0; i < rep.roots.size(); ++i) {
      CHECK(rep.roots[i] < 0.0);
      if (i > 0) CHECK(rep.roots[i - 1] < rep.roots[i]);
      CHECK(straddles_root(b[n], rep.roots[i],
                           1e-6 * std::max(1.0, std::fabs(rep.roots[i]))));
    }
  }
}

TEST_CASE("nested prefix sums agree with direct summation") {
  const long long N = 50;

  MzvSpec z3;
  z3.exponents = {3};
  z3.limit = N;
  CHECK(mzv_truncated(z3).value ==
        doctest::Approx(direct_sum1(3, false, N)).epsilon(1e-12));

  MzvSpec z21;
  z21.exponents = {2, 1};
  z21.limit = N;
  CHECK(mzv_truncated(z21).value ==
        doctest::Approx(direct_sum2(2, false, 1, false, N)).epsilon(1e-12));

  MzvSpec alt21;
  alt21.exponents = {2, 1};
  alt21.alternating = {true, false};
  alt21.limit = N;
  CHECK(mzv_truncated(alt21).value ==
        doctest::Approx(direct_sum2(2, true, 1, false, N)).epsilon(1e-12));

  MzvSpec deep;
  deep.exponents = {3, 1, 2};
  deep.alternating = {false, false, true};
  deep.limit = N;
  CHECK(mzv_truncated(deep).value ==
        doctest::Approx(direct_sum3(3, false, 1, false, 2, true, N))
            .epsilon(1e-12));
  CHECK(mzv_truncated(deep).tail_estimate > 0.0);
}

TEST_CASE("truncated zeta values sit at the classical rate") {
  constexpr double kZeta3 = 1.2020569031595943;

  MzvSpec z3;
  z3.exponents = {3};
  z3.limit = 10000;
  const double gap3 = std::fabs(mzv_truncated(z3).value - kZeta3);
  CHECK(gap3 > 4e-9);
  CHECK(gap3 < 6e-9);

  MzvSpec z21 = z3;
  z21.exponents = {2, 1};
  const double gap21 =
      std::fabs(mzv_truncated(z21).value - mzv_truncated(z3).value);
  CHECK(gap21 > 5e-4);
  CHECK(gap21 < 2e-3);

  MzvSpec z33 = z3;
  z33.exponents = {3, 3};
  MzvSpec z2121 = z3;
  z2121.exponents = {2, 1, 2, 1};
  const double gap33 =
      std::fabs(mzv_truncated(z33).value - mzv_truncated(z2121).value);
  CHECK(gap33 > 3e-4);
  CHECK(gap33 < 3e-3);

  MzvSpec eta;
  eta.exponents = {1};
  eta.alternating = {true};
  eta.limit = 10000;
  CHECK(std::fabs(mzv_truncated(eta).value + std::log(2.0)) < 1e-4);

  // depth-2 truncation error empirically tracks (ln N)/N
  for (long long N : {10000LL, 100000LL}) {
    MzvSpec a = z21;
    a.limit = N;
    MzvSpec b = z3;
    b.limit = N;
    const double d =
        std::fabs(mzv_truncated(a).value - mzv_truncated(b).value);
    const double rate = d * static_cast<double>(N) /
                        std::log(static_cast<double>(N));
    CHECK(rate > 0.8);
    CHECK(rate < 1.6);
  }
}

TEST_CASE("sum specs are validated before running") {
  const auto kind = [](MzvSpec s) {
    return error_kind_of([&] { mzv_truncated(s); });
  };

  MzvSpec empty;
  empty.limit = 100;
  CHECK(kind(empty) == ErrorKind::DomainError);

  MzvSpec bad_exp;
  bad_exp.exponents = {2, 0};
  bad_exp.limit = 100;
  CHECK(kind(bad_exp) == ErrorKind::DomainError);

  MzvSpec bad_flags;
  bad_flags.exponents = {2, 1};
  bad_flags.alternating = {true};
  bad_flags.limit = 100;
  CHECK(kind(bad_flags) == ErrorKind::DomainError);

  MzvSpec small;
  small.exponents = {3};
  small.limit = 9;
  CHECK(kind(small) == ErrorKind::DomainError);

  MzvSpec huge;
  huge.exponents = {3};
  huge.limit = 10000001;
  CHECK(kind(huge) == ErrorKind::SizeTooLarge);

  MzvSpec divergent;
  divergent.exponents = {1};
  divergent.limit = 100;
  CHECK(kind(divergent) == ErrorKind::DivergentSpec);

  MzvSpec divergent2;
  divergent2.exponents = {1, 2};
  divergent2.limit = 100;
  CHECK(kind(divergent2) == ErrorKind::DivergentSpec);

  MzvSpec ok_alternating;
  ok_alternating.exponents = {1};
  ok_alternating.alternating = {true};
  ok_alternating.limit = 100;
  CHECK_NOTHROW(mzv_truncated(ok_alternating));
}

TEST_CASE("power-of-eight identity only closes in one orientation") {
  const auto rep = alternating_identity_check(1, {1000, 10000});
  CHECK(rep.l == 1);
  REQUIRE(rep.points.size() == 2);
  CHECK(rep.points[0].limit == 1000);
  CHECK(rep.points[1].limit == 10000);

  // plain == 8 * alternating closes; the transposed scaling does not
  CHECK(std::fabs(rep.points[1].reversed_diff) <
        std::fabs(rep.points[0].reversed_diff));
  CHECK(std::fabs(rep.points[1].reversed_diff) < 2e-3);
  for (const auto& pt : rep.points) {
    CHECK(pt.printed_diff < -9.0);
    CHECK(pt.printed_diff > -10.0);
    CHECK(pt.printed_diff ==
          doctest::Approx(pt.alternating_sum - 8.0 * pt.plain_sum));
    CHECK(pt.reversed_diff ==
          doctest::Approx(pt.plain_sum - 8.0 * pt.alternating_sum));
  }

  const auto deep = alternating_identity_check(2, {10000});
  REQUIRE(deep.points.size() == 1);
  CHECK(std::fabs(deep.points[0].reversed_diff) < 2e-3);
  CHECK(deep.points[0].printed_diff < -13.0);
  CHECK(deep.points[0].printed_diff > -14.0);

  CHECK(error_kind_of([] { alternating_identity_check(0, {100}); }) ==
        ErrorKind::DomainError);
  CHECK(error_kind_of([] { alternating_identity_check(1, {}); }) ==
        ErrorKind::DomainError);
}
