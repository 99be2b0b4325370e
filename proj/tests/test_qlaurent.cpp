#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "homcalc/qlaurent.hpp"

using namespace homcalc;
using Q = Rational;
using LP = LaurentPoly<Q>;

namespace {

// random polynomials: exponents in [-8, 8], at most 6 terms
LP random_poly(std::mt19937_64& rng) {
  LP p;
  const std::size_t terms = 1 + rng() % 6;
  for (std::size_t t = 0; t < terms; ++t) {
    const long long n = static_cast<long long>(rng() % 17) - 8;
    const long long num = static_cast<long long>(rng() % 9) - 4;
    const long long den = 1 + static_cast<long long>(rng() % 4);
    p.add_term(n, Q(num, den));
  }
  return p;
}

}  // namespace

TEST_CASE("laurent parsing and printing") {
  CHECK(LP::parse("3/2*u^-1 + u^2").str() == "3/2*u^-1 + u^2");
  CHECK(LP::parse("u").str() == "u");
  CHECK(LP::parse("-u + 1").str() == "1 - u");
  CHECK(LP::parse("5").str() == "5");
  CHECK(LP::parse("2u^3").coeff(3) == Q(2));
  CHECK(LP::parse("u - u").is_zero());
  CHECK(LP::parse("0").str() == "0");
  CHECK_THROWS_AS(LP::parse(""), ParseError);
  CHECK_THROWS_AS(LP::parse("u^"), ParseError);
  CHECK_THROWS_AS(LP::parse("3 & u"), ParseError);
  CHECK_THROWS_AS(LP::parse("* u"), ParseError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const LP p = random_poly(rng);
    CHECK(LP::parse(p.str()) == p);
  }
}

TEST_CASE("scale substitution") {
  CHECK(scale_substitute(LP::parse("u^2"), Q(2)) == LP::parse("4*u^2"));
  const LP f = LP::parse("u^-1 + 3*u");
  CHECK(scale_substitute(f, Q(1)) == f);
  CHECK(scale_substitute(f, Q(2)) == LP::parse("1/2*u^-1 + 6*u"));
  CHECK_THROWS_AS(scale_substitute(f, Q(0)), MathRefusal);
}

TEST_CASE("jackson derivative") {
  const QParam<Q> q2{Q(2)};
  CHECK(jackson_derivative(LP::one(), q2).is_zero());
  CHECK(jackson_derivative(LP::parse("u^2"), q2) == LP::parse("3*u"));

  SECTION("monomial formula [n]_q u^{n-1}") {
    for (const Q& qv : {Q(2), Q(3), Q(1, 2)}) {
      const QParam<Q> q{qv};
      for (long long n = -8; n <= 8; ++n) {
        const Q bracket = (scalar_pow(qv, n) - Q(1)) / (qv - Q(1));
        CHECK(jackson_derivative(LP::monomial(n, Q(1)), q) == LP::monomial(n - 1, bracket));
      }
    }
  }
  SECTION("q = 1 uses the ordinary derivative") {
    const QParam<Q> q1{Q(1)};
    for (long long n = -8; n <= 8; ++n)
      CHECK(jackson_derivative(LP::monomial(n, Q(1)), q1) == LP::monomial(n - 1, Q(n)));
  }
  SECTION("q-Leibniz rule d(fg) = d(f) g + f(qu) d(g)") {
    std::mt19937_64 rng(20240118);
    for (const Q& qv : {Q(2), Q(1, 2), Q(1)}) {
      const QParam<Q> q{qv};
      for (int trial = 0; trial < 25; ++trial) {
        const LP f = random_poly(rng), g = random_poly(rng);
        const LP lhs = jackson_derivative(f * g, q);
        const LP rhs =
            jackson_derivative(f, q) * g + scale_substitute(f, qv) * jackson_derivative(g, q);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("hom-connections on the Laurent algebra") {
  SECTION("the classifying element is the value at 1") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
      const LP a = random_poly(rng);
      const auto conn = homconn_from_element(a, QParam<Q>{Q(2)});
      CHECK(conn(LP::one()) == a);
    }
  }
  SECTION("explicit value: a = 0, f = u, q = 2") {
    const auto conn = homconn_from_element(LP{}, QParam<Q>{Q(2)});
    CHECK(conn(LP::parse("u")) == LP::parse("1/2"));
  }
  SECTION("classification identity on random pairs") {
    std::mt19937_64 rng(20240119);
    for (const Q& qv : {Q(2), Q(3), Q(1, 2), Q(1)}) {
      const QParam<Q> q{qv};
      const auto conn = homconn_from_element(random_poly(rng), q);
      for (int trial = 0; trial < 30; ++trial)
        CHECK(classification_identity_holds(conn, random_poly(rng), random_poly(rng)));
    }
  }
}

TEST_CASE("the inner hom-connection") {
  const QParam<Q> q2{Q(2)};
  CHECK(inner_xi_connection(q2, LP::one()) == LP::parse("u^-1"));
  CHECK(inner_xi_connection(q2, LP::parse("u")) == LP::one());
  CHECK_THROWS_AS(inner_xi_connection(QParam<Q>{Q(1)}, LP::one()), MathRefusal);

  SECTION("agrees with the classified map on monomials u^-8 .. u^8") {
    for (const Q& qv : {Q(2), Q(3), Q(1, 2)}) {
      const QParam<Q> q{qv};
      const auto conn = homconn_from_element(LP::monomial(-1, Q(1) / (qv - Q(1))), q);
      for (long long n = -8; n <= 8; ++n)
        CHECK(inner_xi_connection(q, LP::monomial(n, Q(1))) == conn(LP::monomial(n, Q(1))));
    }
  }
}

TEST_CASE("bimodule commutation rule") {
  const QParam<Q> q2{Q(2)};
  CHECK(commutation_check(LP::one(), q2).ok());
  CHECK(commutation_check(LP::parse("u"), q2).ok());  // u du = 2 du u
  std::mt19937_64 rng(99);
  for (const Q& qv : {Q(2), Q(1, 2), Q(5)}) {
    const QParam<Q> q{qv};
    for (int trial = 0; trial < 20; ++trial) CHECK(commutation_check(random_poly(rng), q).ok());
  }
}

TEST_CASE("laurent calculus over a prime field") {
  Fp::Context f7(7);
  using LF = LaurentPoly<Fp>;
  const QParam<Fp> q{Fp(3)};  // 3 has multiplicative order 6 in F_7
  for (long long n = -8; n <= 8; ++n) {
    const Fp bracket = (scalar_pow(Fp(3), n) - Fp(1)) / (Fp(3) - Fp(1));
    CHECK(jackson_derivative(LF::monomial(n, Fp(1)), q) == LF::monomial(n - 1, bracket));
  }
  const auto conn = homconn_from_element(LF::monomial(2, Fp(4)), q);
  CHECK(classification_identity_holds(conn, LF::parse("3*u^-2 + 5"), LF::parse("u^3 + 2*u")));
  CHECK(inner_xi_connection(q, LF::one()) == LF::monomial(-1, Fp(1) / Fp(2)));  // 1/2 = 4 in F_7
}
