#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace contactlie;
using testing::sc;
using testing::vec;

TEST_CASE("rank and nullspace over the rationals") {
  Matrix m{vec({1, 2, 3}), vec({2, 4, 6}), vec({0, 1, 1})};
  CHECK(rank(m, {}) == 2);
  auto ns = nullspace(m, 3, {});
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(mat_vec(m, ns[0])));
}

TEST_CASE("parameterized elimination uses constraints") {
  Scalar p = Scalar::variable("p");
  Matrix m{{p, Scalar(1)}, {Scalar(0), p}};
  CHECK_THROWS_AS(rank(Matrix{{p, Scalar(0)}, {Scalar(0), p}}, {}), RankInstability);
  CHECK_THROWS_AS(rank(m, {}), RankInstability);
  CHECK(rank(m, {p}) == 2);
}

TEST_CASE("implied nonzero") {
  Scalar p = Scalar::variable("p"), q = Scalar::variable("q");
  CHECK(implied_nonzero(Scalar(3), {}));
  CHECK_FALSE(implied_nonzero(Scalar(0), {q}));
  CHECK(implied_nonzero(Scalar(-2) * q * q * (p - q + 1), {q, p - q + 1}));
  CHECK_FALSE(implied_nonzero(p, {q}));
}

TEST_CASE("rank instability reports the pivot") {
  Scalar p = Scalar::variable("p");
  try {
    rank(Matrix{{p - 1, Scalar(0)}, {Scalar(0), Scalar(0)}}, {});
    FAIL("expected instability");
  } catch (const RankInstability& e) {
    CHECK(e.polynomial() == p - 1);
  }
  CHECK(rank(Matrix{{p - 1, Scalar(0)}}, {p - 1}) == 1);
}

TEST_CASE("solve_unique with polynomial denominators") {
  Scalar p = Scalar::variable("p");
  Matrix m{{p, Scalar(0)}, {Scalar(1), Scalar(1)}};
  auto x = solve_unique(m, Vector{Scalar(1), Scalar(0)}, {p});
  REQUIRE(x);
  // x = (1/p, -1/p)
  CHECK(mat_vec(m, x->numerator) == Vector{x->denominator, Scalar(0)});
  CHECK_FALSE(solve_unique(Matrix{vec({1, 1}), vec({2, 2})}, vec({1, 2}), {}));
}

TEST_CASE("determinant and inverse") {
  Matrix m{vec({2, 0, 1}), vec({1, 3, 0}), vec({0, 1, 1})};
  CHECK(determinant(m) == Scalar(7));
  auto inv = inverse_rational(m);
  REQUIRE(inv);
  Matrix id(3, Vector(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Scalar s;
      for (std::size_t k = 0; k < 3; ++k) s += m[i][k] * (*inv)[k][j];
      CHECK(s == Scalar(i == j ? 1 : 0));
    }
  Scalar t = Scalar::variable("t");
  CHECK(determinant(Matrix{{t, Scalar(1)}, {Scalar(1), t}}) == t * t - 1);
}

TEST_CASE("property: nullspace vectors annihilate random matrices; determinant is multilinear") {
  testing::Gen g(7);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t r = 1 + g.index(4), c = 1 + g.index(5);
    Matrix m(r, Vector(c));
    for (auto& row : m)
      for (auto& x : row)
        if (g.coin(0.6)) x = Scalar(g.rational());
    auto ns = nullspace(m, c, {});
    CHECK(ns.size() + rank(m, {}) == c);
    for (const auto& v : ns) CHECK(is_zero(mat_vec(m, v)));
    Matrix sq(3, Vector(3));
    for (auto& row : sq)
      for (auto& x : row) x = Scalar(g.integer(-3, 3));
    Matrix sw = sq;
    std::swap(sw[0], sw[2]);
    CHECK(determinant(sw) == -determinant(sq));
  }
}
