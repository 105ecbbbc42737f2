#pragma once

#include <algorithm>
#include <random>
#include <string>

#include "contactlie/forms.hpp"
#include "contactlie/io.hpp"
#include "contactlie/liealg.hpp"

namespace doctest {
template <> struct StringMaker<contactlie::Scalar> {
  static String convert(const contactlie::Scalar& s) { return s.to_string().c_str(); }
};
template <> struct StringMaker<contactlie::Vector> {
  static String convert(const contactlie::Vector& v) { return contactlie::to_string(v).c_str(); }
};
} // namespace doctest

namespace testing {

using namespace contactlie;

inline LieAlgebra algebra(const std::string& text) { return parse_lie(text).algebra; }

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar(x));
  return v;
}

inline Vector e(std::size_t n, std::size_t one_based) { return unit_vector(n, one_based - 1); }

inline KForm covec(const LieAlgebra& L, const std::string& text) { return KForm::covector(parse_covector(L, text)); }

inline Scalar sc(const std::string& text) { return Scalar::parse(text); }

inline const char* heisenberg3 = "basis e1 e2 e3\nbracket [e1,e2] = e3\n";
inline const char* aff1 = "basis e1 e2\nbracket [e1,e2] = e2\n";
inline const char* sl2 = "basis H X Y\nbracket [H,X] = 2 X\nbracket [H,Y] = -2 Y\nbracket [X,Y] = H\n";
inline const char* so3 = "basis e1 e2 e3\nbracket [e1,e2] = e3\nbracket [e2,e3] = e1\nbracket [e3,e1] = e2\n";

inline bool same_constants(const LieAlgebra& A, const LieAlgebra& B) {
  if (A.dim() != B.dim()) return false;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      if (A.basis_bracket(i, j) != B.basis_bracket(i, j)) return false;
  return true;
}

/// [e_{2i+1}, e_{2i+2}] = e_{2m+1}.
inline LieAlgebra heisenberg(std::size_t m) {
  LieAlgebra H(LieAlgebra::default_labels(2 * m + 1));
  for (std::size_t i = 0; i < m; ++i) H.set_bracket(2 * i, 2 * i + 1, unit_vector(2 * m + 1, 2 * m));
  return H;
}

inline KForm standard_symplectic(std::size_t m) {
  KForm w(2 * m, 2);
  for (std::size_t i = 0; i < m; ++i) w.add((1u << (2 * i)) | (1u << (2 * i + 1)), 1);
  return w;
}

/// Deterministic generator of small random objects for property tests.
class Gen {
public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

  Rational rational() {
    long den = integer(1, 4);
    return Rational(integer(-5, 5), den);
  }

  /// Polynomial with up to `terms` terms in the given variables, degree <= 3.
  Scalar polynomial(const std::vector<std::string>& vars, int terms = 4) {
    Scalar s;
    int count = static_cast<int>(integer(0, terms));
    for (int t = 0; t < count; ++t) {
      Scalar m(rational());
      int deg = static_cast<int>(integer(0, 3));
      for (int d = 0; d < deg && !vars.empty(); ++d) m *= Scalar::variable(vars[index(vars.size())]);
      s += m;
    }
    return s;
  }

  std::mt19937& engine() { return rng_; }

private:
  std::mt19937 rng_;
};

} // namespace testing

namespace testing {

/// Central extension of H by an arbitrary 2-cocycle w: [x,y] + w(x,y) z.
inline LieAlgebra extend_centrally(const LieAlgebra& H, const KForm& w) {
  auto labels = H.labels();
  labels.push_back("z");
  LieAlgebra G(labels);
  const std::size_t n = H.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = H.basis_bracket(i, j);
      v.push_back(w.coefficient(std::vector<std::size_t>{i, j}));
      if (!is_zero(v)) G.set_bracket(i, j, v);
    }
  return G;
}

/// Random Lie algebra of dimension 2..max_dim with sparse small constants:
/// diagonal semidirect products, direct sums of standard pieces, central
/// extensions, followed by a random relabelling and an elementary basis change.
inline LieAlgebra random_valid_algebra(Gen& g, std::size_t max_dim = 5) {
  LieAlgebra L;
  switch (g.index(max_dim >= 3 ? 3 : 2)) {
  case 0: {
    std::size_t n = 2 + g.index(max_dim - 1);
    std::size_t r = (n >= 3 && g.coin()) ? 2 : 1;
    L = LieAlgebra(LieAlgebra::default_labels(n));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t i = r; i < n; ++i)
        if (g.coin(0.7)) L.set_bracket(a, i, scale(Scalar(g.integer(-2, 2)), unit_vector(n, i)));
    break;
  }
  case 1: {
    const char* pieces[] = {aff1, heisenberg3, sl2, so3, "basis e1\n"};
    L = LieAlgebra::abelian(0);
    while (true) {
      LieAlgebra piece = algebra(pieces[g.index(5)]);
      if (L.dim() + piece.dim() > max_dim) break;
      L = direct_sum(L, piece);
      if (g.coin(0.4)) break;
    }
    if (L.dim() < 2) L = algebra(aff1);
    break;
  }
  default: {
    std::size_t m = 2 + g.index(max_dim - 2);
    LieAlgebra H = g.coin() ? LieAlgebra::abelian(m) : random_valid_algebra(g, m);
    KForm w(H.dim(), 2);
    if (is_abelian(H)) {
      for (std::size_t i = 0; i < H.dim(); ++i)
        for (std::size_t j = i + 1; j < H.dim(); ++j)
          if (g.coin(0.4)) w.add((1u << i) | (1u << j), Scalar(g.integer(-2, 2)));
    } else {
      Vector lambda(H.dim());
      for (auto& x : lambda)
        if (g.coin(0.5)) x = Scalar(g.integer(-2, 2));
      w = ce_d(H, KForm::covector(lambda));
    }
    L = extend_centrally(H, w);
  }
  }
  L.set_labels(LieAlgebra::default_labels(L.dim()));
  std::vector<std::size_t> perm(L.dim());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), g.engine());
  L = permute_basis(L, perm);
  if (g.coin(0.5)) {
    std::size_t n = L.dim();
    Matrix P(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i) P[i][i] = 1;
    std::size_t i = g.index(n), j = g.index(n);
    if (i != j) P[i][j] = Scalar(g.integer(-2, 2));
    L = change_basis(L, P);
  }
  L.set_labels(LieAlgebra::default_labels(L.dim()));
  return L;
}

/// A random constant table of dimension >= 3 violating the Jacobi identity.
inline LieAlgebra random_violating_table(Gen& g, std::size_t max_dim = 5) {
  while (true) {
    LieAlgebra L = random_valid_algebra(g, max_dim);
    if (L.dim() < 3) continue;
    std::size_t n = L.dim();
    std::size_t i = g.index(n), j = g.index(n);
    if (i == j) continue;
    Vector v = L.basis_bracket(i, j);
    v[g.index(n)] += Scalar(Rational(g.integer(1, 3) * (g.coin() ? 1 : -1), g.integer(1, 2)));
    L.set_bracket(i, j, v);
    if (!jacobi_check(L).ok) return L;
  }
}

} // namespace testing
