#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <memory>
#include <random>

#include "doctest.h"
#include "opsf/dense_poly.hpp"
#include "opsf/multipoly3.hpp"
#include "opsf/ttr.hpp"
#include "test_util.hpp"

using namespace opsf;

TEST_CASE("dense poly arithmetic") {
  const RPoly x = RPoly::variable();
  const RPoly one = RPoly::identity();
  CHECK((x + one) * (x - one) == RPoly({-1, 0, 1}));
  CHECK(RPoly({-1, 0, 1}).eval(Rational(2)) == 3);
  CHECK(RPoly::monomial(Rational(1), 3).derivative() == RPoly({0, 0, 3}));
  CHECK(RPoly().degree() == -1);
  CHECK((x - x).is_zero());
  CHECK((RPoly() * x).is_zero());
  CHECK(x.scaled(Rational(2, 3)) == RPoly({0, Rational(2, 3)}));
  CHECK(x.shifted(2) == RPoly::monomial(Rational(1), 3));
  CHECK(RPoly({1, 2, 3}).coeff(5) == 0);
  CHECK(poly_str(RPoly({Rational(1, 2), 0, -2})) == "1/2 - 2*x^2");
  CHECK(poly_str(RPoly()) == "0");

  const DPoly d = poly_to_double(RPoly({Rational(1, 2), Rational(-3)}));
  CHECK(d.eval(2.0) == doctest::Approx(-5.5));
}

TEST_CASE("eisenstein poly") {
  const EPoly p({Eisenstein::omega(), Eisenstein(Rational(1))});
  const Eisenstein v = p.eval(Eisenstein::omega());
  // w + w = 2w
  CHECK(v == Eisenstein(Rational(0), Rational(2)));
  CHECK((p * p).degree() == 2);
}

TEST_CASE("generate_from_ttr") {
  RecurrencePair cheb;
  cheb.a_fn = [](int) -> Rational { return 0; };
  cheb.b_fn = [](int n) -> Rational {
    return n == 1 ? Rational(1, 2) : Rational(1, 4);
  };
  const auto ps = generate_from_ttr(cheb, 3);
  REQUIRE(ps.size() == 4);
  CHECK(ps[0] == RPoly::identity());
  CHECK(ps[1] == RPoly::variable());
  CHECK(ps[2] == RPoly({Rational(-1, 2), 0, 1}));

  RecurrencePair quarter;
  quarter.a_fn = [](int) -> Rational { return 0; };
  quarter.b_fn = [](int) -> Rational { return Rational(1, 4); };
  const auto qs = generate_from_ttr(quarter, 3);
  CHECK(qs[3] == RPoly({0, Rational(-1, 2), 0, 1}));

  RecurrencePair shifted;
  shifted.a_fn = [](int n) -> Rational { return n + 2; };
  shifted.b_fn = [](int n) -> Rational { return n; };
  CHECK(generate_from_ttr(shifted, 1)[1] == RPoly({-2, 1}));

  RecurrencePair bad;
  bad.a_fn = [](int) -> Rational { return 0; };
  bad.b_fn = [](int) -> Rational { return 0; };
  CHECK(error_kind_of([&] { generate_from_ttr(bad, 2); }) ==
        ErrorKind::InvalidRecurrence);
}

TEST_CASE("recurrence residual is exactly zero") {
  RecurrencePair rec;
  const Rational al(1, 2);
  rec.a_fn = [al](int n) -> Rational { return 2 * n + al + 1; };
  rec.b_fn = [al](int n) -> Rational { return n * (n + al); };
  const int N = 40;
  const auto ps = generate_from_ttr(rec, N);
  const RPoly x = RPoly::variable();
  for (int n = 0; n + 1 <= N; ++n) {
    const RPoly prev = n == 0 ? RPoly() : ps[n - 1];
    const RPoly residual =
        ps[n + 1] - (x - RPoly::constant(rec.a(n))) * ps[n] +
        prev.scaled(n == 0 ? Rational(0) : rec.b(n));
    CHECK(residual.is_zero());
  }
}

TEST_CASE("expand_in_basis") {
  const std::vector<RPoly> basis = {RPoly::identity(), RPoly::variable(),
                                    RPoly({Rational(-1, 4), 0, 1})};
  const auto gamma = expand_in_basis(RPoly({0, 0, 1}), basis);
  REQUIRE(gamma.size() == 3);
  CHECK(gamma[0] == Rational(1, 4));
  CHECK(gamma[1] == 0);
  CHECK(gamma[2] == 1);

  // P in its own basis is a unit vector
  const auto unit = expand_in_basis(basis[2], basis);
  CHECK(unit == std::vector<Rational>{0, 0, 1});

  // (1+alpha-x)^2 at alpha=0 in the Laguerre basis
  const std::vector<RPoly> lag = {
      RPoly::identity(), RPoly({1, -1}),
      RPoly({1, -2, Rational(1, 2)})};  // L_2^0 = 1 - 2x + x^2/2
  const RPoly p = RPoly({1, -1}) * RPoly({1, -1});
  CHECK(expand_in_basis(p, lag) == std::vector<Rational>{1, -2, 2});

  CHECK(expand_in_basis(RPoly(), basis) == std::vector<Rational>{0});

  const std::vector<RPoly> ungraded = {RPoly::identity(), RPoly({1, 0, 1})};
  CHECK(error_kind_of([&] {
          expand_in_basis(RPoly({0, 1, 1}), ungraded);
        }) == ErrorKind::BasisNotGraded);
}

TEST_CASE("expand_in_basis roundtrip") {
  std::mt19937_64 rng(2030);
  std::uniform_int_distribution<int> degree(0, 25);
  for (int trial = 0; trial < 20; ++trial) {
    const int deg = degree(rng);
    // random graded basis (monic from a random positive-definite recurrence)
    RecurrencePair rec;
    auto ra = std::make_shared<std::vector<Rational>>();
    auto rb = std::make_shared<std::vector<Rational>>();
    for (int i = 0; i <= deg; ++i) {
      ra->push_back(rand_rational(rng, 5, 6));
      Rational b = rand_rational(rng, 5, 6);
      rb->push_back(b * b + 1);
    }
    rec.a_fn = [ra](int n) -> Rational { return (*ra)[(size_t)n]; };
    rec.b_fn = [rb](int n) -> Rational { return (*rb)[(size_t)n]; };
    const auto basis = generate_from_ttr(rec, deg);

    std::vector<Rational> coeffs;
    for (int i = 0; i <= deg; ++i) coeffs.push_back(rand_rational(rng));
    if (coeffs.back() == 0) coeffs.back() = 1;
    const RPoly p{std::vector<Rational>(coeffs)};

    const auto gamma = expand_in_basis(p, basis);
    RPoly recon;
    for (size_t k = 0; k < gamma.size(); ++k)
      recon += basis[k].scaled(gamma[k]);
    CHECK(recon == p);
  }
}

TEST_CASE("multipoly basics") {
  const MultiPoly3 x = MultiPoly3::variable(0);
  const MultiPoly3 y = MultiPoly3::variable(1);
  const MultiPoly3 sum = (x + y) * (x - y);
  CHECK(sum.eval(Rational(3), Rational(2), Rational(0)) == 5);
  CHECK((x - x).is_zero());
  CHECK(sum.term_count() == 2);
}

TEST_CASE("schur polynomial values") {
  CHECK(schur_lhs(2).eval(1, 1, 1) == 0);
  CHECK(schur_lhs(2).eval(2, 1, 0) == 7);
  CHECK(sos_rhs().eval(2, 1, 0) == 7);
  CHECK(schur_lhs(2) - sos_rhs() == MultiPoly3());
  CHECK_FALSE(schur_lhs(4) - sos_rhs() == MultiPoly3());
}

TEST_CASE("schur nonnegativity samples") {
  std::mt19937_64 rng(2031);
  std::uniform_real_distribution<double> real(-2.0, 2.0);
  for (int n : {0, 2, 4, 6}) {
    const MultiPoly3 p = schur_lhs(n);
    for (int trial = 0; trial < 1000; ++trial) {
      const double x = real(rng), y = real(rng), z = real(rng);
      const auto r = p.eval_double(x, y, z);
      CHECK(r.value >= -1e-12 * r.scale);
    }
  }
  std::uniform_real_distribution<double> pos(0.01, 3.0);
  for (int n : {0, 1, 2, 3, 4}) {
    const MultiPoly3 p = schur_lhs(n);
    int strict = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      double x = pos(rng), y = pos(rng), z = pos(rng);
      const auto r = p.eval_double(x, y, z);
      if (r.value > 1e-12 * r.scale) ++strict;
    }
    CHECK(strict == 1000);
  }
}
