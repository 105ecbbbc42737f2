#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contactlie/parse.hpp"
#include "helpers.hpp"

using namespace contactlie;
using testing::sc;

TEST_CASE("rational arithmetic is exact and reduced") {
  Scalar a(Rational(1, 2)), b(Rational(1, 3));
  CHECK((a + b) == Scalar(Rational(5, 6)));
  CHECK((a + b).rational().get_den() == 6);
  CHECK(Scalar(Rational(2, 4)).rational() == Rational(1, 2));
  CHECK((Scalar(Rational(-3, 6))).to_string() == "-1/2");
}

TEST_CASE("polynomial ring identities") {
  Scalar p = Scalar::variable("p"), q = Scalar::variable("q");
  CHECK((p + q) * (p - q) == p * p - q * q);
  CHECK(((p + q) * (p - q)).to_string() == "p^2 - q^2");
  Scalar z = (Scalar(1) + p) - (Scalar(1) + p);
  CHECK(z.is_zero());
  CHECK(z.is_rational());
  CHECK(((p + 1) - p - 1).is_zero());
  CHECK_FALSE((p - q).is_zero());
  CHECK(Scalar::parse("0/1").is_zero());
}

TEST_CASE("substitution") {
  Scalar p = Scalar::variable("p"), q = Scalar::variable("q");
  CHECK((Scalar(1) + p).substitute({{"p", 1}}) == Scalar(2));
  CHECK((p * p - q * q).substitute({{"p", 3}, {"q", 2}}) == Scalar(5));
  CHECK(Scalar(7).substitute({}) == Scalar(7));
  CHECK(Scalar(7).substitute({{"p", 9}}) == Scalar(7));
  try {
    (p + q).substitute({{"p", 1}});
    FAIL("expected MissingVariable");
  } catch (const MissingVariable& e) {
    CHECK(e.name() == "q");
  }
  CHECK((p * q + 1).substitute_partial({{"p", 2}}) == Scalar(2) * q + 1);
  CHECK((p * p).substitute("p", q + 1) == q * q + 2 * q + 1);
}

TEST_CASE("canonical printing uses graded order on natural names") {
  CHECK(sc("a10 + a2").to_string() == "a2 + a10");
  CHECK(sc("q*p*2 - 1").to_string() == "2*p*q - 1");
  CHECK(sc("3 + p/2").to_string() == "1/2*p + 3");
  CHECK(sc("(1+p)^2").to_string() == "p^2 + 2*p + 1");
  CHECK(sc("-(p-q)").to_string() == "-p + q");
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(sc("p +"), ParseError);
  CHECK_THROWS_AS(sc("1/p"), ParseError);
  CHECK_THROWS_AS(sc("1/0"), ParseError);
  CHECK_THROWS_AS(sc("(p"), ParseError);
  std::vector<std::string> params{"p"};
  CHECK_THROWS_AS(parse_scalar("p+q", &params), ParseError);
}

TEST_CASE("exact division") {
  Scalar p = Scalar::variable("p"), q = Scalar::variable("q");
  auto d = Scalar::divide_exact((p - q + 1) * (p - q + 1) * q, p - q + 1);
  REQUIRE(d);
  CHECK(*d == (p - q + 1) * q);
  CHECK_FALSE(Scalar::divide_exact(p * p + 1, p));
  CHECK(*Scalar::divide_exact(Scalar(6), Scalar(4)) == Scalar(Rational(3, 2)));
}

TEST_CASE("degrees and variables") {
  Scalar s = sc("p^2*q + q^3 + 1");
  CHECK(s.total_degree() == 3);
  CHECK(s.degree_in("p") == 2);
  CHECK(s.variables() == std::vector<std::string>{"p", "q"});
  auto coeffs = s.coefficients_in({"p"});
  CHECK(coeffs.size() == 2);
}

TEST_CASE("property: ring axioms, substitution homomorphism, canonical round trip") {
  testing::Gen g(12345);
  std::vector<std::string> vars{"p", "q", "t"};
  for (int iter = 0; iter < 200; ++iter) {
    Scalar a = g.polynomial(vars), b = g.polynomial(vars), c = g.polynomial(vars);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    std::map<std::string, Rational> at{{"p", g.rational()}, {"q", g.rational()}, {"t", g.rational()}};
    CHECK((a * b).substitute(at) == a.substitute(at) * b.substitute(at));
    CHECK((a + b).substitute(at) == a.substitute(at) + b.substitute(at));
    CHECK(Scalar::parse(a.to_string()) == a);
    CHECK(Scalar::from_terms(a.terms()) == a);
  }
}
