#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contactlie/construct.hpp"
#include "helpers.hpp"

using namespace contactlie;
using namespace testing;

namespace {

// Extension table written straight from [x, e0] = psi(x) + f(x) e0, with no
// cocycle check.
LieAlgebra raw_extension(const LieAlgebra& H, const ExtensionData& d) {
  const std::size_t m = H.dim();
  auto labels = H.labels();
  labels.push_back("e0");
  LieAlgebra G(labels);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector v = H.basis_bracket(i, j);
      v.push_back(0);
      G.set_bracket(i, j, v);
    }
    Vector v = d.psi[i];
    v.push_back(d.f[i]);
    G.set_bracket(i, m, v);
  }
  return G;
}

ExtensionData aff_to_sl2() {
  ExtensionData d = ExtensionData::zero(2);
  d.psi[1] = vec({2, 0});
  d.f = vec({-1, 0});
  return d;
}

// Span of (e1, e2, e3 = X, e4 = H); e0 = Y is added by the extension.
const char* special_affine_base = R"(basis e1 e2 e3 e4
bracket [e3,e2] = e1
bracket [e4,e1] = e1
bracket [e4,e2] = -e2
bracket [e4,e3] = 2 e3
)";

const char* special_affine = R"(basis e1 e2 e3 e4 e0
bracket [e3,e2] = e1
bracket [e4,e1] = e1
bracket [e4,e2] = -e2
bracket [e4,e3] = 2 e3
bracket [e0,e1] = e2
bracket [e3,e0] = e4
bracket [e4,e0] = -2 e0
)";

ExtensionData special_affine_data() {
  ExtensionData d = ExtensionData::zero(4);
  d.psi[0] = vec({0, -1, 0, 0});
  d.psi[2] = vec({0, 0, 0, 1});
  d.f = vec({0, 0, 0, -2});
  return d;
}

} // namespace

TEST_CASE("extension cocycle examples") {
  auto aff = algebra(aff1);
  CHECK(check_extension_cocycle(aff, aff_to_sl2()).ok());
  CHECK(check_extension_cocycle(aff, ExtensionData::zero(2)).ok());

  auto h = algebra(heisenberg3);
  ExtensionData grading = ExtensionData::zero(3);
  grading.psi[0] = e(3, 1);
  grading.psi[1] = e(3, 2);
  grading.psi[2] = scale(2, e(3, 3));
  CHECK(check_extension_cocycle(h, grading).ok());

  ExtensionData bad = grading;
  bad.psi[2] = e(3, 3);
  auto c = check_extension_cocycle(h, bad);
  CHECK_FALSE(c.psi_identity);
  CHECK(c.f_closed);
  CHECK(c.psi_pair == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(c.psi_residual == scale(-1, e(3, 3)));
  CHECK_THROWS_AS(build_extension(h, bad), PreconditionError);

  ExtensionData open = ExtensionData::zero(3);
  open.f = e(3, 3);
  auto co = check_extension_cocycle(h, open);
  CHECK_FALSE(co.f_closed);
  CHECK(co.f_residual == Scalar(1));
  CHECK_THROWS_AS(check_extension_cocycle(h, ExtensionData::zero(2)), DimensionError);
}

TEST_CASE("build extension examples") {
  auto aff = algebra(aff1);
  auto G = build_extension(aff, aff_to_sl2());
  CHECK(G.labels() == std::vector<std::string>{"e1", "e2", "e0"});
  CHECK(G.basis_bracket(0, 1) == e(3, 2));
  CHECK(G.basis_bracket(0, 2) == scale(-1, e(3, 3)));
  CHECK(G.basis_bracket(1, 2) == scale(2, e(3, 1)));
  // H = 2 e1, X = e2, Y = e0 gives the standard sl(2) table.
  Matrix P{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(same_constants(change_basis(G, P), algebra(sl2)));

  auto trivial = build_extension(aff, ExtensionData::zero(2));
  CHECK(center(trivial) == Subspace(3, {e(3, 3)}));

  ExtensionData id = ExtensionData::zero(1);
  id.psi[0] = vec({1});
  auto two = build_extension(LieAlgebra::abelian(1), id);
  CHECK(two.basis_bracket(0, 1) == e(2, 1));
  CHECK(same_constants(two, algebra(aff1)) == false);
  CHECK(same_constants(opposite(two), permute_basis(algebra(aff1), {1, 0})));
}

TEST_CASE("cocycle identity is equivalent to Jacobi of the extension") {
  Gen g(31);
  int valid = 0, invalid = 0;
  for (int trial = 0; trial < 150; ++trial) {
    LieAlgebra H = random_valid_algebra(g, 4);
    const std::size_t m = H.dim();
    ExtensionData d = ExtensionData::zero(m);
    // Start from a valid datum (zero, or the identity on an abelian base)
    // and perturb a single entry half of the time.
    if (is_abelian(H) && g.coin())
      for (std::size_t i = 0; i < m; ++i) d.psi[i] = unit_vector(m, i);
    if (g.coin()) {
      if (g.coin()) d.psi[g.index(m)][g.index(m)] += Scalar(g.integer(1, 2));
      else d.f[g.index(m)] += Scalar(g.integer(1, 2));
    }
    bool cocycle = check_extension_cocycle(H, d).ok();
    CHECK(cocycle == jacobi_check(raw_extension(H, d)).ok);
    (cocycle ? valid : invalid)++;
  }
  CHECK(valid > 20);
  CHECK(invalid > 20);
}

TEST_CASE("contactization of aff(R) gives sl(2)") {
  auto aff = algebra(aff1);
  Vector alpha = vec({0, 1});
  Scalar s = Scalar::variable("s");
  CHECK(contactization_condition(aff, alpha, aff_to_sl2(), s) == 2 * s);

  auto c1 = contactize(aff, alpha, aff_to_sl2(), 1);
  CHECK(c1.verdict.is_contact);
  CHECK(c1.eta == vec({0, 1, 1}));
  CHECK(c1.pullback_matches);
  CHECK_THROWS_AS(contactize(aff, alpha, aff_to_sl2(), 0), PreconditionError);

  // Symbolic s: the contact locus is exactly s != 0.
  auto cs = contactize(aff, alpha, aff_to_sl2(), s);
  CHECK(cs.algebra.params() == std::vector<std::string>{"s"});
  CHECK(cs.verdict.is_contact);
  CHECK(cs.verdict.top.substitute({{"s", 0}}).is_zero());
  CHECK(Scalar::divide_exact(cs.verdict.top, s).has_value());
  CHECK(cs.verdict.top.total_degree() == 1);
  CHECK(cs.pullback_matches);

  // s = 0 with psi(x0) in Ker(alpha) and f = 0.
  CHECK(contactization_condition(aff, alpha, ExtensionData::zero(2), 0).is_zero());
  CHECK_THROWS_AS(contactization_condition(LieAlgebra::abelian(2), alpha, ExtensionData::zero(2), s),
                  PreconditionError);
}

TEST_CASE("contactization reconstructs the special affine algebra") {
  auto H = algebra(special_affine_base);
  Vector alpha = vec({1, 0, 0, 0});
  CHECK(liouville_vector(H, alpha).numerator == scale(-1, e(4, 4)));
  Scalar s = Scalar::variable("s");
  CHECK(contactization_condition(H, alpha, special_affine_data(), s) == 3 * s);

  auto c = contactize(H, alpha, special_affine_data(), s);
  CHECK(same_constants(c.algebra, algebra(special_affine)));
  CHECK(c.algebra.labels() == algebra(special_affine).labels());
  CHECK(c.eta == Vector{1, 0, 0, 0, s});
  CHECK(c.pullback_matches);
  CHECK(c.verdict.is_contact);
  CHECK(c.verdict.top.substitute({{"s", 0}}).is_zero());
  for (long v : {1, -1, 2}) CHECK_FALSE(c.verdict.top.substitute({{"s", v}}).is_zero());
}

TEST_CASE("contactization condition is affine in s with slope 1 + f(x0)") {
  Scalar s = Scalar::variable("s");
  auto check = [&](const LieAlgebra& H, const Vector& alpha, const ExtensionData& d) {
    Scalar c = contactization_condition(H, alpha, d, s);
    CHECK(c.degree_in("s") <= 1);
    FracVector x0 = liouville_vector(H, alpha);
    REQUIRE(x0.is_polynomial());
    Scalar slope = c.substitute("s", 1) - c.substitute("s", 0);
    CHECK(slope == 1 + dot(d.f, x0.numerator));
  };
  check(algebra(aff1), vec({0, 1}), aff_to_sl2());
  check(algebra(special_affine_base), vec({1, 0, 0, 0}), special_affine_data());
  check(algebra(aff1), vec({0, 1}), ExtensionData::zero(2));
}

TEST_CASE("central extension and reduction by the center") {
  for (std::size_t m = 1; m <= 3; ++m) {
    CAPTURE(m);
    auto R = LieAlgebra::abelian(2 * m);
    auto ext = central_extension(R, standard_symplectic(m));
    CHECK(same_constants(ext.algebra, heisenberg(m)));
    CHECK(ext.algebra.labels().back() == "xi");
    CHECK(ext.eta == unit_vector(2 * m + 1, 2 * m));
    CHECK(is_contact_form(ext.algebra, ext.eta).is_contact);
    CHECK(center(ext.algebra).dim() == 1);

    auto red = reduce_by_center(ext.algebra, ext.eta);
    CHECK(red.dropped == 2 * m);
    CHECK(same_constants(red.base, R));
    CHECK(red.omega == standard_symplectic(m));
    CHECK(same_constants(red.adapted, ext.algebra));
  }

  auto ab = algebra(R"(dim 4
bracket [e1,e2] = e2
bracket [e3,e4] = e4
)");
  KForm w = ce_d(ab, covec(ab, "e2* + e4*"));
  auto ext = central_extension(ab, w);
  CHECK(is_contact_form(ext.algebra, ext.eta).is_contact);
  CHECK(center(ext.algebra).dim() == 1);
  auto red = reduce_by_center(ext.algebra, ext.eta);
  CHECK(same_constants(red.base, ab));
  CHECK(red.omega == w);

  CHECK_THROWS_AS(central_extension(ab, KForm::basis(4, {1, 3})), PreconditionError);
  CHECK_THROWS_AS(central_extension(LieAlgebra::abelian(4), KForm::basis(4, {0, 1})), PreconditionError);
  CHECK_THROWS_AS(reduce_by_center(algebra(sl2), vec({1, 0, 0})), PreconditionError);
  CHECK_THROWS_AS(reduce_by_center(algebra(heisenberg3), vec({1, 0, 0})), PreconditionError);
}

TEST_CASE("reduction round trip in adapted bases") {
  // Random contact forms with eta(z) != 0 on central extensions: the
  // adapted algebra equals the central extension of the reduced pair.
  Gen g(7);
  int tried = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = 1 + g.index(2);
    LieAlgebra G = g.coin() ? heisenberg(m)
                            : central_extension(algebra("dim 4\nbracket [e1,e2] = e2\nbracket [e3,e4] = e4\n"),
                                                KForm::basis(4, {0, 1}) + KForm::basis(4, {2, 3}))
                                  .algebra;
    Vector eta(G.dim());
    for (auto& x : eta) x = Scalar(g.integer(-2, 2));
    if (dot(eta, center(G).basis()[0]).is_zero() || !is_contact_form(G, eta).is_contact) continue;
    ++tried;
    auto red = reduce_by_center(G, eta);
    CHECK(is_symplectic(red.base, red.omega).nondegenerate);
    CHECK(is_symplectic(red.base, red.omega).closed);
    CHECK(same_constants(central_extension(red.base, red.omega).algebra, red.adapted));
    // The adapted basis is a basis change of G with eta(xi) = 1.
    Vector xi;
    for (const auto& row : red.basis) xi.push_back(row.back());
    CHECK(dot(eta, xi) == Scalar(1));
  }
  CHECK(tried > 20);
}

TEST_CASE("exact symplectization of the Heisenberg algebra") {
  auto h = algebra(heisenberg3);
  Vector eta = vec({0, 0, 1});
  ExtensionData grading = ExtensionData::zero(3);
  grading.psi[0] = e(3, 1);
  grading.psi[1] = e(3, 2);
  grading.psi[2] = scale(2, e(3, 3));
  Scalar s = Scalar::variable("s");
  CHECK(symplectization_condition(h, eta, grading, s) == Scalar(2));

  auto sym = exact_symplectization(h, eta, grading, s);
  CHECK(sym.algebra.dim() == 4);
  CHECK(sym.alpha == Vector{0, 0, 1, s});
  CHECK(sym.verdict.nondegenerate);
  CHECK(sym.verdict.closed);
  CHECK(sym.verdict.nonvanishing_on_locus);
  for (long v : {-3, 0, 1, 4}) CHECK_FALSE(sym.verdict.top.substitute({{"s", v}}).is_zero());

  CHECK_THROWS_AS(exact_symplectization(h, eta, ExtensionData::zero(3), s), PreconditionError);
  ExtensionData kernel_only = ExtensionData::zero(3);
  kernel_only.psi[0] = e(3, 1);
  kernel_only.psi[2] = e(3, 1);
  CHECK(symplectization_condition(h, eta, kernel_only, s).is_zero());

  // Then contactize the result: H3 sits inside as a codimension-2 subalgebra.
  auto sym1 = exact_symplectization(h, eta, grading, 1);
  auto con = contactize(sym1.algebra, sym1.alpha, ExtensionData::zero(4), 1);
  CHECK(con.algebra.dim() == 5);
  CHECK(con.verdict.is_contact);
  Subspace base(5, {e(5, 1), e(5, 2), e(5, 3)});
  CHECK(is_subalgebra(con.algebra, base));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Vector b = h.basis_bracket(i, j);
      b.resize(5);
      CHECK(con.algebra.basis_bracket(i, j) == b);
    }
}
