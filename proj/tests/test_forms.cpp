#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace contactlie;
using namespace testing;

namespace {

// Independent oracle: the coboundary formula evaluated on basis tuples.
Scalar d_on_tuple(const LieAlgebra& L, const KForm& theta, const std::vector<std::size_t>& xs) {
  const std::size_t n = L.dim();
  Scalar total;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      std::vector<Vector> args{L.basis_bracket(xs[i], xs[j])};
      for (std::size_t t = 0; t < xs.size(); ++t)
        if (t != i && t != j) args.push_back(unit_vector(n, xs[t]));
      Scalar v = eval(theta, args);
      total += ((i + j) % 2) ? -v : v;
    }
  return total;
}

KForm random_form(Gen& g, std::size_t n, std::size_t k) {
  KForm f(n, k);
  for (KForm::Mask m = 0; m < (1u << n); ++m)
    if (static_cast<std::size_t>(__builtin_popcount(m)) == k && g.coin(0.4)) f.add(m, Scalar(g.integer(-3, 3)));
  return f;
}

} // namespace

TEST_CASE("wedge products") {
  auto a = KForm::basis(3, {0, 1});
  CHECK(wedge(a, KForm::basis(3, {2})) == KForm::basis(3, {0, 1, 2}));
  CHECK(wedge(a, KForm::basis(3, {2})).top_coefficient() == Scalar(1));
  KForm x = KForm::covector(vec({1, 2, -1}));
  CHECK(wedge(x, x).is_zero());
  CHECK(wedge(a, KForm::basis(3, {0, 2})).is_zero());
  CHECK(KForm::basis(3, {1, 0}) == -KForm::basis(3, {0, 1}));
}

TEST_CASE("ce_d examples") {
  auto aff = algebra(aff1);
  CHECK(ce_d(aff, covec(aff, "e2*")) == -KForm::basis(2, {0, 1}));
  auto ab = LieAlgebra::abelian(4);
  CHECK(ce_d(ab, KForm::basis(4, {0, 2})).is_zero());
  auto h = algebra(heisenberg3);
  CHECK(ce_d(h, covec(h, "e3*")) == -KForm::basis(3, {0, 1}));
}

TEST_CASE("powers") {
  KForm w = KForm::basis(4, {0, 1}) + KForm::basis(4, {2, 3});
  CHECK(power(w, 2) == KForm::basis(4, {0, 1, 2, 3}).scaled(2));
  CHECK(power(w, 3).is_zero());
  CHECK(power(w, 1) == w);
  CHECK(power(w, 0) == KForm::constant(4, 1));
}

TEST_CASE("evaluation and interior product") {
  KForm w = KForm::basis(2, {0, 1});
  CHECK(eval(w, {e(2, 1), e(2, 2)}) == Scalar(1));
  CHECK(eval(w, {e(2, 2), e(2, 1)}) == Scalar(-1));
  CHECK(interior(e(2, 1), w) == KForm::basis(2, {1}));
  CHECK(interior(e(3, 3), KForm::basis(3, {0, 1})).is_zero());
  CHECK_THROWS_AS(eval(w, {e(2, 1)}), DimensionError);
}

TEST_CASE("radical and rank of 2-forms") {
  auto r = two_form_radical(KForm::basis(3, {0, 1}));
  CHECK(r == Subspace(3, {e(3, 3)}));
  CHECK(two_form_rank(KForm::basis(3, {0, 1})) == 2);
  auto h = algebra(heisenberg3);
  CHECK(two_form_radical(ce_d(h, covec(h, "e3*"))) == Subspace(3, {e(3, 3)}));
  KForm std4 = KForm::basis(4, {0, 1}) + KForm::basis(4, {2, 3});
  CHECK(two_form_radical(std4).dim() == 0);
  CHECK(two_form_rank(std4) == 4);
}

TEST_CASE("formatting") {
  auto h = algebra(heisenberg3);
  CHECK(ce_d(h, covec(h, "e3*")).to_string(h.labels()) == "-e1*^e2*");
  CHECK(KForm(3, 2).to_string(h.labels()) == "0");
}

TEST_CASE("property: ce_d agrees with the coboundary formula evaluated directly") {
  Gen g(5);
  for (int iter = 0; iter < 40; ++iter) {
    auto L = random_valid_algebra(g, 5);
    const std::size_t n = L.dim();
    std::size_t k = 1 + g.index(std::min<std::size_t>(n - 1, 3));
    KForm theta = random_form(g, n, k);
    KForm d = ce_d(L, theta);
    for (KForm::Mask m = 0; m < (1u << n); ++m) {
      if (static_cast<std::size_t>(__builtin_popcount(m)) != k + 1) continue;
      std::vector<std::size_t> xs;
      for (std::size_t i = 0; i < n; ++i)
        if (m >> i & 1) xs.push_back(i);
      CHECK(d.coefficient(m) == d_on_tuple(L, theta, xs));
    }
  }
}

TEST_CASE("property: graded commutativity, associativity, Leibniz, d^2 = 0, rank parity") {
  Gen g(11);
  for (int iter = 0; iter < 60; ++iter) {
    auto L = random_valid_algebra(g, 5);
    const std::size_t n = L.dim();
    std::size_t ka = g.index(3), kb = g.index(3), kc = g.index(2);
    if (ka > n || kb > n || kc > n) continue;
    KForm a = random_form(g, n, ka), b = random_form(g, n, kb), c = random_form(g, n, kc);
    if (ka + kb <= n) {
      KForm ab = wedge(a, b), ba = wedge(b, a);
      CHECK(ab == ((ka * kb) % 2 ? -ba : ba));
      if (ka + kb + kc <= n) CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
      if (ka + kb + 1 <= n) {
        KForm lhs = ce_d(L, ab);
        KForm rhs = wedge(ce_d(L, a), b);
        KForm second = wedge(a, ce_d(L, b));
        rhs = rhs + (ka % 2 ? -second : second);
        CHECK(lhs == rhs);
      }
    }
    if (ka + 2 <= n) CHECK(ce_d(L, ce_d(L, a)).is_zero());
    if (n >= 2) {
      KForm w = random_form(g, n, 2);
      std::size_t r = two_form_rank(w);
      CHECK(r % 2 == 0);
      CHECK(r + two_form_radical(w).dim() == n);
    }
  }
}
