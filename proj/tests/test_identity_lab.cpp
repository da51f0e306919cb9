#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "opsf/identity.hpp"
#include "opsf/multipoly3.hpp"
#include "test_util.hpp"

using namespace opsf;

namespace {

const CoefficientCase& case_at(const CoefficientReport& rep, int m, int n) {
  for (const auto& c : rep.cases)
    if (c.m == m && c.n == n) return c;
  FAIL("missing case");
  return rep.cases.front();
}

std::vector<Rational> values_of(const FormulaVector& v) {
  std::vector<Rational> out;
  for (const auto& t : v) {
    REQUIRE(t.value.has_value());
    out.push_back(*t.value);
  }
  return out;
}

}  // namespace

TEST_CASE("identity kind names round-trip") {
  const char* names[] = {"laguerre-lin",  "gegenbauer-lin", "rogers-lin",
                         "jacobi-lin",    "laguerre-conn",  "gegenbauer-conn",
                         "rogers-conn",   "jacobi-conn",    "cheby-product"};
  for (const char* name : names) {
    const IdentityKind k = parse_identity_kind(name);
    CHECK(std::string(identity_kind_name(k)) == name);
  }
  CHECK(is_linearization_kind(IdentityKind::JacobiLin));
  CHECK(is_linearization_kind(IdentityKind::ChebyshevProduct));
  CHECK_FALSE(is_linearization_kind(IdentityKind::RogersConn));
  CHECK(error_kind_of([] { parse_identity_kind("legendre-lin"); }) ==
        ErrorKind::ParseError);
}

TEST_CASE("product expansion oracle") {
  const FamilySpec lag = FamilySpec::laguerre(Rational(0));
  CHECK(linearization_oracle(lag, 1, 1, lag) ==
        std::vector<Rational>{1, -2, 2});
  CHECK(linearization_oracle(lag, 0, 0, lag) == std::vector<Rational>{1});

  const FamilySpec geg = FamilySpec::gegenbauer(Rational(1));
  CHECK(linearization_oracle(geg, 1, 1, geg) ==
        std::vector<Rational>{1, 0, 1});

  // degree-n polynomial connects to itself as a delta vector
  const FamilySpec jac = FamilySpec::jacobi(Rational(1, 2), Rational(-1, 3));
  const auto delta = connection_oracle(jac, 4, jac);
  CHECK(delta == std::vector<Rational>{0, 0, 0, 0, 1});
}

TEST_CASE("first kind products over the second kind basis") {
  // T_2 T_1 = (1/4) U_3
  CHECK(cheby_product_u(2, 1) ==
        std::vector<Rational>{0, 0, 0, Rational(1, 4)});
  // the m = n case leans on U_{-2} = -1: T_1 T_1 = (1/4) U_2 + (1/4) U_0
  CHECK(cheby_product_u(1, 1) ==
        std::vector<Rational>{Rational(1, 4), 0, Rational(1, 4)});

  const FamilySpec t = FamilySpec::chebyshev_t();
  const FamilySpec u = FamilySpec::chebyshev_u();
  for (int m = 2; m <= 10; ++m)
    for (int n = 1; n < m; ++n)
      CHECK(cheby_product_u(m, n) == linearization_oracle(t, m, n, u));

  // the degenerate diagonal is checked rather than assumed; it holds too
  const auto rep = identity_check(IdentityKind::ChebyshevProduct, {}, 10);
  CHECK(rep.verdict == Verdict::Match);
  CHECK(rep.match_count == 66);
}

TEST_CASE("gegenbauer linearization matches expansion") {
  for (const Rational& lambda :
       {Rational(1, 3), Rational(1, 2), Rational(2), Rational(7, 5)}) {
    const auto rep = identity_check(IdentityKind::GegenbauerLin, {lambda}, 8);
    CAPTURE(rational_str(lambda));
    CHECK(rep.verdict == Verdict::Match);
    CHECK(rep.match_count == 81);
  }
  // C_1 C_1 = (2l/(l+1)) C_2 + (2l^2/(l+1)) C_0 at l = 1/3
  const auto terms = values_of(gegenbauer_lin(Rational(1, 3), 1, 1));
  CHECK(terms == std::vector<Rational>{Rational(1, 6), 0, Rational(1, 2)});
}

TEST_CASE("laguerre linearization disagrees with expansion at first order") {
  const auto rep = identity_check(IdentityKind::LaguerreLin, {Rational(0)}, 1);
  CHECK(rep.verdict == Verdict::Mismatch);
  CHECK(rep.match_count == 3);
  CHECK(rep.mismatch_count == 1);

  // (0,0), (0,1), (1,0) all agree; L_1 L_1 is where the printed form breaks
  const auto& c = case_at(rep, 1, 1);
  CHECK(c.verdict == Verdict::Mismatch);
  CHECK(c.first_mismatch_degree == 1);
  // its k = 0 term hits a vanishing denominator parameter inside the 3F2,
  // even though the prefactor is zero there
  CHECK_FALSE(c.entries[0].formula.value.has_value());
  CHECK(c.entries[0].formula.error.find("DenominatorPole") != std::string::npos);
  CHECK(c.entries[0].oracle == 1);
  REQUIRE(c.entries[1].formula.value.has_value());
  CHECK(*c.entries[1].formula.value == 2);
  CHECK(c.entries[1].oracle == -2);
  CHECK(c.entries[1].diff == 4);
  REQUIRE(c.entries[2].formula.value.has_value());
  CHECK(*c.entries[2].formula.value == 1);
  CHECK(c.entries[2].oracle == 2);

  // degree-zero products are trivially right
  const auto unit = values_of(laguerre_lin(Rational(1, 2), 0, 0));
  CHECK(unit == std::vector<Rational>{1});
}

TEST_CASE("laguerre connection matches expansion") {
  const std::pair<Rational, Rational> pairs[] = {
      {Rational(0), Rational(1)},
      {Rational(1, 2), Rational(3, 2)},
      {Rational(2), Rational(0)}};
  for (const auto& [alpha, beta] : pairs) {
    const auto rep =
        identity_check(IdentityKind::LaguerreConn, {alpha, beta}, 12);
    CAPTURE(rational_str(alpha));
    CAPTURE(rational_str(beta));
    CHECK(rep.verdict == Verdict::Match);
    CHECK(rep.match_count == 13);
  }
  // alpha = beta collapses to the unit vector via (0)_{n-k}
  const auto self = values_of(laguerre_conn(Rational(3, 4), Rational(3, 4), 5));
  CHECK(self == std::vector<Rational>{0, 0, 0, 0, 0, 1});
}

TEST_CASE("gegenbauer connection matches expansion") {
  const std::pair<Rational, Rational> pairs[] = {
      {Rational(1), Rational(1, 3)},
      {Rational(2), Rational(1, 2)},
      {Rational(7, 5), Rational(7, 5)}};
  for (const auto& [lambda, mu] : pairs) {
    const auto rep =
        identity_check(IdentityKind::GegenbauerConn, {lambda, mu}, 10);
    CAPTURE(rational_str(lambda));
    CAPTURE(rational_str(mu));
    CHECK(rep.verdict == Verdict::Match);
    CHECK(rep.match_count == 11);
  }
  const auto self = values_of(gegenbauer_conn(Rational(7, 5), Rational(7, 5), 6));
  CHECK(self == std::vector<Rational>{0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("rogers formulas against expansion") {
  // both printed q-formulas agree with the oracle on this whole grid
  for (const Rational& q : {Rational(1, 3), Rational(1, 2)}) {
    for (const Rational& beta : {Rational(1, 5), Rational(2, 5)}) {
      const auto lin = identity_check(IdentityKind::RogersLin, {beta, q}, 5);
      CAPTURE(rational_str(q));
      CAPTURE(rational_str(beta));
      CHECK(lin.verdict == Verdict::Match);
      CHECK(lin.match_count == 36);
      for (const Rational& gamma : {Rational(1, 5), Rational(2, 5)}) {
        const auto con =
            identity_check(IdentityKind::RogersConn, {gamma, beta, q}, 5);
        CAPTURE(rational_str(gamma));
        CHECK(con.verdict == Verdict::Match);
        CHECK(con.match_count == 6);
      }
    }
  }
  // frozen hand evaluation at q = 1/2, beta = 1/5:
  //   degree 2 carries (1+q)(1-b)/(1-bq), degree 0 carries
  //   (1-b)(1-b^2)/((1-q)(1-bq))
  const auto d = values_of(rogers_lin(Rational(1, 5), Rational(1, 2), 1, 1));
  CHECK(d == std::vector<Rational>{Rational(128, 75), 0, Rational(4, 3)});
}

TEST_CASE("jacobi connection matches expansion") {
  const auto rep_a = identity_check(
      IdentityKind::JacobiConn,
      {Rational(1, 2), Rational(1, 3), Rational(2), Rational(0)}, 8);
  CHECK(rep_a.verdict == Verdict::Match);
  CHECK(rep_a.match_count == 9);
  const auto rep_b = identity_check(
      IdentityKind::JacobiConn,
      {Rational(3, 2), Rational(1, 4), Rational(1, 4), Rational(3, 2)}, 8);
  CHECK(rep_b.verdict == Verdict::Match);

  // gamma = alpha, delta = beta reduces to the Chu-Vandermonde delta vector
  const auto self = values_of(jacobi_conn(Rational(1, 2), Rational(-1, 3),
                                          Rational(1, 2), Rational(-1, 3), 5));
  CHECK(self == std::vector<Rational>{0, 0, 0, 0, 0, 1});
  const auto rep_d = identity_check(
      IdentityKind::JacobiConn, {Rational(0), Rational(0), Rational(0), Rational(0)}, 6);
  CHECK(rep_d.verdict == Verdict::Match);

  // both source parameters in (-1,0) with gamma + delta + 1 = 0 is excluded
  CHECK(error_kind_of([] {
          identity_check(IdentityKind::JacobiConn,
                         {Rational(-1, 2), Rational(-1, 2), Rational(0),
                          Rational(0)}, 3);
        }) == ErrorKind::ParameterDomain);
}

TEST_CASE("jacobi linearization as printed fails its own check") {
  // evaluated verbatim (including the duplicated (a+1)_{n-s} denominator
  // factor) the closed form misses even the constant product case
  const auto rep =
      identity_check(IdentityKind::JacobiLin, {Rational(1, 2), Rational(1, 3)}, 2);
  CHECK(rep.verdict == Verdict::Mismatch);
  CHECK(rep.mismatch_count == 9);
  CHECK(rep.match_count == 0);
  const auto& c00 = case_at(rep, 0, 0);
  REQUIRE(c00.entries[0].formula.value.has_value());
  CHECK(*c00.entries[0].formula.value == Rational(-6, 5));
  CHECK(c00.entries[0].oracle == 1);

  // at alpha = beta the series part hits genuine denominator poles
  const auto rep_sym =
      identity_check(IdentityKind::JacobiLin, {Rational(1, 2), Rational(1, 2)}, 2);
  CHECK(rep_sym.verdict == Verdict::Mismatch);
  const auto& c11 = case_at(rep_sym, 1, 1);
  CHECK(c11.note.find("DenominatorPole") != std::string::npos);
}

TEST_CASE("connection composed with linearization") {
  struct Route {
    FamilySpec from;
    FamilySpec to;
  };
  const Route routes[] = {
      {FamilySpec::gegenbauer(Rational(2)), FamilySpec::gegenbauer(Rational(1, 2))},
      {FamilySpec::laguerre(Rational(2)), FamilySpec::laguerre(Rational(0))},
      {FamilySpec::jacobi(Rational(2), Rational(0)),
       FamilySpec::jacobi(Rational(1, 2), Rational(1, 3))},
      {FamilySpec::gegenbauer(Rational(1)), FamilySpec::chebyshev_t()},
  };
  for (const auto& route : routes) {
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        const auto lin = linearization_oracle(route.from, m, n, route.from);
        std::vector<Rational> composed(lin.size(), Rational(0));
        for (size_t k = 0; k < lin.size(); ++k) {
          const auto conn =
              connection_oracle(route.from, static_cast<int>(k), route.to);
          for (size_t i = 0; i < conn.size(); ++i)
            composed[i] += lin[k] * conn[i];
        }
        CAPTURE(route.from.str());
        CAPTURE(route.to.str());
        CAPTURE(m);
        CAPTURE(n);
        CHECK(composed == linearization_oracle(route.from, m, n, route.to));
      }
    }
  }
}

TEST_CASE("identity check input validation") {
  CHECK(error_kind_of([] {
          identity_check(IdentityKind::GegenbauerLin, {}, 3);
        }) == ErrorKind::UsageError);
  CHECK(error_kind_of([] {
          identity_check(IdentityKind::RogersLin, {Rational(1, 5)}, 3);
        }) == ErrorKind::UsageError);
  CHECK(error_kind_of([] {
          identity_check(IdentityKind::GegenbauerLin, {Rational(0)}, 3);
        }) == ErrorKind::ParameterDomain);
  CHECK(error_kind_of([] {
          identity_check(IdentityKind::LaguerreLin, {Rational(1)}, -1);
        }) == ErrorKind::DomainError);
}

TEST_CASE("reports are deterministic under scheduling") {
  const auto run = [] {
    return identity_check(IdentityKind::GegenbauerLin, {Rational(1, 3)}, 7);
  };
  const auto a = run();
  const auto b = run();
  REQUIRE(a.cases.size() == b.cases.size());
  CHECK(a.verdict == b.verdict);
  for (size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].m == b.cases[i].m);
    CHECK(a.cases[i].n == b.cases[i].n);
    CHECK(a.cases[i].verdict == b.cases[i].verdict);
    REQUIRE(a.cases[i].entries.size() == b.cases[i].entries.size());
    for (size_t j = 0; j < a.cases[i].entries.size(); ++j) {
      CHECK(a.cases[i].entries[j].oracle == b.cases[i].entries[j].oracle);
      CHECK(a.cases[i].entries[j].diff == b.cases[i].entries[j].diff);
    }
  }
}

TEST_CASE("schur surface positivity") {
  const auto r2 = schur_check(2, 500, 424242);
  CHECK(r2.exact_sos_checked);
  CHECK(r2.exact_sos_match);
  CHECK(r2.strict_positive == 500);
  CHECK(r2.nonnegative_checked);
  CHECK(r2.nonnegative == 500);
  CHECK(r2.pass);
  CHECK(r2.min_positive_value > 0.0);

  const auto r3 = schur_check(3, 500, 424242);
  CHECK_FALSE(r3.exact_sos_checked);
  CHECK_FALSE(r3.nonnegative_checked);
  CHECK(r3.strict_positive == 500);
  CHECK(r3.pass);

  const auto r0 = schur_check(0, 200, 7);
  CHECK(r0.pass);

  CHECK(schur_lhs(3).eval(Rational(2), Rational(1), Rational(0)) == 15);
  CHECK(schur_lhs(5).eval(Rational(1), Rational(1), Rational(1)) == 0);
}
