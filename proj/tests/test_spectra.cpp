#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "opsf/error.hpp"
#include "opsf/families.hpp"
#include "opsf/spectra.hpp"
#include "opsf/tridiag.hpp"

using namespace opsf;

namespace {

constexpr double kPi = 3.14159265358979323846;

RecurrencePair quarter_rec() {
  RecurrencePair rec;
  rec.a_fn = [](int) -> Rational { return Rational(0); };
  rec.b_fn = [](int) -> Rational { return Rational(1, 4); };
  rec.source = "a=0,b=1/4";
  return rec;
}

bool in_gershgorin(const TridiagonalMatrix& t, double lambda) {
  const int n = t.size();
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::fabs(t.off[static_cast<size_t>(i) - 1]);
    if (i < n - 1) r += std::fabs(t.off[static_cast<size_t>(i)]);
    if (lambda >= t.diag[static_cast<size_t>(i)] - r - 1e-10 &&
        lambda <= t.diag[static_cast<size_t>(i)] + r + 1e-10)
      return true;
  }
  return false;
}

void check_moments(const TridiagonalMatrix& t, const std::vector<double>& eig) {
  double trace = 0.0, frob2 = 0.0, sum = 0.0, sum2 = 0.0;
  for (double d : t.diag) {
    trace += d;
    frob2 += d * d;
  }
  for (double o : t.off) frob2 += 2.0 * o * o;
  for (double v : eig) {
    sum += v;
    sum2 += v * v;
  }
  CHECK(std::fabs(sum - trace) <= 1e-9 * (1.0 + std::fabs(trace)));
  CHECK(std::fabs(sum2 - frob2) <= 1e-9 * (1.0 + frob2));
}

}  // namespace

TEST_CASE("tridiagonal eigenvalues on tiny hand cases") {
  TridiagonalMatrix t;
  t.diag = {0.0, 0.0};
  t.off = {1.0};
  auto eig = eigen_sym_tridiagonal(t);
  REQUIRE(eig.size() == 2);
  CHECK(eig[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(eig[1] == doctest::Approx(1.0).epsilon(1e-12));
  check_moments(t, eig);

  TridiagonalMatrix one;
  one.diag = {3.5};
  auto e1 = eigen_sym_tridiagonal(one);
  REQUIRE(e1.size() == 1);
  CHECK(e1[0] == doctest::Approx(3.5));

  auto t3 = jacobi_matrix(family_recurrence(FamilySpec::chebyshev_t()), 3);
  auto z3 = eigen_sym_tridiagonal(t3);
  REQUIRE(z3.size() == 3);
  CHECK(std::fabs(z3[0] + std::sqrt(3.0) / 2.0) < 1e-12);
  CHECK(std::fabs(z3[1]) < 1e-12);
  CHECK(std::fabs(z3[2] - std::sqrt(3.0) / 2.0) < 1e-12);
}

TEST_CASE("zeros of the first-kind Chebyshev polynomials match the cosine formula") {
  auto rec = family_recurrence(FamilySpec::chebyshev_t());
  for (int n : {1, 2, 3, 5, 10, 25, 50}) {
    auto zeros = op_zeros(rec, n);
    REQUIRE(static_cast<int>(zeros.size()) == n);
    std::vector<double> expected;
    for (int k = 1; k <= n; ++k)
      expected.push_back(std::cos((2.0 * k - 1.0) * kPi / (2.0 * n)));
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < n; ++i)
      CHECK(std::fabs(zeros[static_cast<size_t>(i)] - expected[static_cast<size_t>(i)]) < 1e-12);
  }
}

TEST_CASE("zero extraction handles degree one and rejects degree zero") {
  auto lag = family_recurrence(FamilySpec::laguerre(0));
  auto z = op_zeros(lag, 1);
  REQUIRE(z.size() == 1);
  CHECK(z[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(op_zeros(lag, 0), Error);
}

TEST_CASE("eigenvalues respect Gershgorin intervals and moment identities") {
  for (int n : {5, 17, 30}) {
    for (auto spec : {FamilySpec::chebyshev_t(), FamilySpec::laguerre(Rational(1, 2)),
                      FamilySpec::meixner(1, Rational(1, 2))}) {
      auto t = jacobi_matrix(family_recurrence(spec), n);
      auto eig = eigen_sym_tridiagonal(t);
      REQUIRE(static_cast<int>(eig.size()) == n);
      CHECK(std::is_sorted(eig.begin(), eig.end()));
      for (double v : eig) CHECK(in_gershgorin(t, v));
      check_moments(t, eig);
    }
  }
}

TEST_CASE("bounded recurrence with vanishing diagonal reports undefined ratios") {
  auto rep = blumenthal_experiment(quarter_rec(), {25, 50, 100}, 3);
  REQUIRE(rep.points.size() == 3);
  for (const auto& r : rep.ratios) CHECK_FALSE(r.defined);
  CHECK_FALSE(rep.ratio_has_limit);

  CHECK(rep.coefficients_bounded);
  CHECK(rep.c_limit == doctest::Approx(0.0));
  CHECK(rep.lambda_limit == doctest::Approx(0.25));
  CHECK(rep.sigma_standard == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(rep.tau_standard == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rep.sigma_halved == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(rep.tau_halved == doctest::Approx(0.5).epsilon(1e-14));

  CHECK(std::fabs(rep.points.back().lowest + 1.0) < 0.01);
  CHECK(std::fabs(rep.points.back().highest - 1.0) < 0.01);
  CHECK(rep.lower_trend == EdgeTrend::Bounded);
  CHECK(rep.upper_trend == EdgeTrend::Bounded);
  CHECK(rep.sigma_hat == rep.points.back().lowest);
  CHECK(rep.tau_hat == rep.points.back().highest);

  // zeros of the N-th polynomial in this family are cos(k pi / (N+1))
  const auto& p = rep.points[0];
  REQUIRE(p.size == 25);
  REQUIRE(p.lower_zeros.size() == 3);
  REQUIRE(p.upper_zeros.size() == 3);
  for (int k = 1; k <= 3; ++k) {
    const double expect_low = std::cos((26.0 - k) * kPi / 26.0);
    const double expect_high = std::cos((4.0 - k) * kPi / 26.0);
    CHECK(std::fabs(p.lower_zeros[static_cast<size_t>(k) - 1] - expect_low) < 1e-12);
    CHECK(std::fabs(p.upper_zeros[static_cast<size_t>(k) - 1] - expect_high) < 1e-12);
  }
}

TEST_CASE("discrete-lattice family shows one bounded edge and the c/(1+c)^2 ratio") {
  auto rec = family_recurrence(FamilySpec::meixner(1, Rational(1, 2)));
  auto rep = blumenthal_experiment(rec, {25, 50, 100, 200}, 3);
  CHECK(rep.ratio_has_limit);
  CHECK(std::fabs(rep.ratio_estimate - 2.0 / 9.0) < 1e-3);
  for (const auto& r : rep.ratios) CHECK(r.defined);
  CHECK(rep.lower_trend == EdgeTrend::Bounded);
  CHECK(rep.upper_trend == EdgeTrend::PlusInfinity);
  CHECK_FALSE(rep.coefficients_bounded);
  for (size_t i = 1; i < rep.points.size(); ++i)
    CHECK(rep.points[i].highest > rep.points[i - 1].highest);
}

TEST_CASE("symmetric unbounded family diverges at both spectral edges") {
  auto rec = family_recurrence(FamilySpec::meixner_pollaczek(1, 0, 1));
  auto rep = blumenthal_experiment(rec, {25, 50, 100, 200}, 3);
  CHECK(rep.lower_trend == EdgeTrend::MinusInfinity);
  CHECK(rep.upper_trend == EdgeTrend::PlusInfinity);
  for (size_t i = 1; i < rep.points.size(); ++i) {
    CHECK(rep.points[i].lowest < rep.points[i - 1].lowest);
    CHECK(rep.points[i].highest > rep.points[i - 1].highest);
  }
  // diagonal is identically zero, so the ratio diagnostic stays undefined
  for (const auto& r : rep.ratios) CHECK_FALSE(r.defined);
}

TEST_CASE("trend experiment validates its inputs") {
  auto rec = family_recurrence(FamilySpec::chebyshev_t());
  CHECK_THROWS_AS(blumenthal_experiment(rec, {}, 3), Error);
  CHECK_THROWS_AS(blumenthal_experiment(rec, {10, 10}, 3), Error);
  CHECK_THROWS_AS(blumenthal_experiment(rec, {10, 5}, 3), Error);
  CHECK_THROWS_AS(blumenthal_experiment(rec, {0, 5}, 3), Error);
  CHECK_THROWS_AS(blumenthal_experiment(rec, {5, 10}, 0), Error);
}

TEST_CASE("histogram binning covers edges and counts strays in the total") {
  auto h = make_histogram({0.0, 0.99, 1.0, -0.5, 7.0}, -1.0, 1.0, 4);
  REQUIRE(h.edges.size() == 5);
  CHECK(h.edges.front() == doctest::Approx(-1.0));
  CHECK(h.edges.back() == doctest::Approx(1.0));
  CHECK(h.total == 5);
  CHECK(h.counts[0] == 0);
  CHECK(h.counts[1] == 1);  // -0.5
  CHECK(h.counts[2] == 1);  // 0.0
  CHECK(h.counts[3] == 2);  // 0.99 and the closing edge 1.0
  CHECK_THROWS_AS(make_histogram({}, 0.0, 1.0, 0), Error);
  CHECK_THROWS_AS(make_histogram({}, 1.0, 1.0, 4), Error);
}

TEST_CASE("sign-matrix enumeration at size one and two matches hand results") {
  auto r1 = bernoulli_exhaustive(1, 8);
  CHECK(r1.matrix_count == 2);
  CHECK(r1.distinct_count == 2);
  REQUIRE(r1.spectra.size() == 2);
  CHECK(r1.spectra[0].count == 1);
  CHECK(r1.spectra[1].count == 1);
  CHECK(r1.spectra[0].eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(r1.spectra[1].eigenvalues[0] == doctest::Approx(1.0));

  auto r2 = bernoulli_exhaustive(2, 8);
  CHECK(r2.matrix_count == 8);
  CHECK(r2.distinct_count == 3);
  REQUIRE(r2.spectra.size() == 3);
  CHECK(r2.spectra[0].count == 4);
  CHECK(std::fabs(r2.spectra[0].eigenvalues[0] + std::sqrt(2.0)) < 1e-8);
  CHECK(std::fabs(r2.spectra[0].eigenvalues[1] - std::sqrt(2.0)) < 1e-8);
  CHECK(r2.spectra[1].count == 2);
  CHECK(r2.spectra[1].eigenvalues[0] == doctest::Approx(-2.0));
  CHECK(r2.spectra[1].eigenvalues[1] == doctest::Approx(0.0));
  CHECK(r2.spectra[2].count == 2);
  CHECK(r2.spectra[2].eigenvalues[0] == doctest::Approx(0.0));
  CHECK(r2.spectra[2].eigenvalues[1] == doctest::Approx(2.0));
  CHECK(r2.max_trace_residual <= 1e-9);

  long long mass = 0;
  for (long long c : r2.histogram.counts) mass += c;
  CHECK(mass == 16);
  CHECK(r2.histogram.total == 16);
}

TEST_CASE("sign-matrix enumeration conserves mass and traces at larger sizes") {
  for (int n : {3, 4}) {
    auto rep = bernoulli_exhaustive(n, 4);
    const long long expected = 1LL << (n * (n + 1) / 2);
    CHECK(rep.matrix_count == expected);
    long long mass = 0;
    for (long long c : rep.histogram.counts) mass += c;
    CHECK(mass == expected * n);
    CHECK(rep.histogram.total == expected * n);
    CHECK(rep.max_trace_residual <= 1e-9);
    CHECK(static_cast<int>(rep.spectra.size()) <= 4);
    CHECK(rep.distinct_count >= 3);
    long long spectra_mass = 0;
    for (const auto& d : rep.spectra) spectra_mass += d.count;
    CHECK(spectra_mass <= expected);
  }
}

TEST_CASE("sign-matrix enumeration is deterministic and bounds its size") {
  auto a = bernoulli_exhaustive(3, 32);
  auto b = bernoulli_exhaustive(3, 32);
  CHECK(a.histogram.counts == b.histogram.counts);
  REQUIRE(a.spectra.size() == b.spectra.size());
  for (size_t i = 0; i < a.spectra.size(); ++i) {
    CHECK(a.spectra[i].count == b.spectra[i].count);
    CHECK(a.spectra[i].eigenvalues == b.spectra[i].eigenvalues);
  }
  CHECK_THROWS_AS(bernoulli_exhaustive(7, 8), Error);
  CHECK_THROWS_AS(bernoulli_exhaustive(0, 8), Error);
}

TEST_CASE("semicircle distribution function hits the anchor values") {
  CHECK(semicircle_cdf(-2.5) == 0.0);
  CHECK(semicircle_cdf(-2.0) == 0.0);
  CHECK(semicircle_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(semicircle_cdf(2.0) == 1.0);
  CHECK(semicircle_cdf(3.0) == 1.0);
  double prev = -1.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = -2.0 + 4.0 * i / 100.0;
    const double f = semicircle_cdf(x);
    CHECK(f >= prev);
    prev = f;
  }
}

TEST_CASE("sampled sign matrices of size one put all mass at the endpoints") {
  auto rep = bernoulli_montecarlo(1, 500, 7);
  CHECK(rep.esd.total == 500);
  CHECK(rep.esd.counts[30] + rep.esd.counts[70] == 500);  // bins holding -1, +1
  CHECK(rep.esd.counts[30] > 100);
  CHECK(rep.esd.counts[70] > 100);
}

TEST_CASE("sampled spectra approach the semicircle and reruns are identical") {
  auto rep = bernoulli_montecarlo(30, 2000, 12345);
  CHECK(rep.ks_distance < 0.02);
  CHECK(rep.esd.total == 2000 * 30);

  auto again = bernoulli_montecarlo(30, 2000, 12345);
  CHECK(again.ks_distance == rep.ks_distance);
  CHECK(again.esd.counts == rep.esd.counts);

  auto other = bernoulli_montecarlo(30, 2000, 54321);
  CHECK(other.ks_distance < 0.02);
  bool same = other.esd.counts == rep.esd.counts;
  CHECK_FALSE(same);

  CHECK_THROWS_AS(bernoulli_montecarlo(0, 10, 1), Error);
  CHECK_THROWS_AS(bernoulli_montecarlo(65, 10, 1), Error);
  CHECK_THROWS_AS(bernoulli_montecarlo(3, 0, 1), Error);
}
