#include "contactlie/obstruct.hpp"

#include <algorithm>

#include "contactlie/forms.hpp"

namespace contactlie {

namespace {

bool all_rational(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_rational()) return false;
  return true;
}

bool nondegenerate(const Matrix& m, const Constraints& cons) {
  if (all_rational(m)) return rank(m, cons) == m.size();
  return !determinant(m).is_zero();
}

Matrix combine(const std::vector<Matrix>& basis, const std::vector<Scalar>& coeffs) {
  const std::size_t n = basis[0].size();
  Matrix out(n, Vector(n));
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (coeffs[t].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] = out[i] + scale(coeffs[t], basis[t][i]);
  }
  return out;
}

std::vector<std::string> fresh_names(const LieAlgebra& L, std::size_t count) {
  for (const char* prefix : {"t", "t_", "tau"}) {
    std::vector<std::string> names;
    bool clash = false;
    for (std::size_t i = 1; i <= count && !clash; ++i) {
      names.push_back(prefix + std::to_string(i));
      clash = std::find(L.params().begin(), L.params().end(), names.back()) != L.params().end();
    }
    if (!clash) return names;
  }
  throw PreconditionError("no free names for pencil variables");
}

bool parallel(const Vector& u, const Vector& v) {
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = a + 1; b < u.size(); ++b)
      if (!(u[a] * v[b] - u[b] * v[a]).is_zero()) return false;
  return true;
}

// Whether ad_e restricted to the 2-dimensional invariant subspace Z is not
// a multiple of the identity.
bool nonscalar_on(const LieAlgebra& L, const Subspace& Z, const Vector& e) {
  const auto& z = Z.basis();
  Vector both = z[0] + z[1];
  for (const Vector& v : {z[0], z[1], both})
    if (!parallel(L.bracket(e, v), v)) return true;
  return false;
}

Vector complement_vector(const Subspace& N) {
  for (std::size_t i = 0; i < N.ambient(); ++i)
    if (!N.contains(unit_vector(N.ambient(), i))) return unit_vector(N.ambient(), i);
  throw PreconditionError("subspace has no complement");
}

} // namespace

std::vector<BilinearForm> invariant_form_space(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  auto idx = [n](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
  };
  const std::size_t unknowns = n * (n + 1) / 2;
  Matrix rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Vector row(unknowns);
        const Vector& ai = L.basis_bracket(a, i);
        const Vector& aj = L.basis_bracket(a, j);
        for (std::size_t k = 0; k < n; ++k) {
          if (!ai[k].is_zero()) row[idx(k, j)] += ai[k];
          if (!aj[k].is_zero()) row[idx(i, k)] += aj[k];
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  std::vector<BilinearForm> out;
  for (const auto& v : nullspace(rows, unknowns, L.constraints())) {
    BilinearForm b(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i][j] = v[idx(i, j)];
    out.push_back(std::move(b));
  }
  return out;
}

OrthogonalVerdict orthogonal_exists(const LieAlgebra& L) {
  OrthogonalVerdict v;
  v.space = invariant_form_space(L);
  const std::size_t k = v.space.size();
  if (k == 0) {
    v.pencil_determinant = Scalar(0);
    return v;
  }
  v.vars = fresh_names(L, k);
  auto found = [&](const Matrix& b) {
    v.exists = true;
    v.witness = b;
    return v;
  };
  for (const auto& b : v.space)
    if (nondegenerate(b, L.constraints())) return found(b);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Matrix b = combine(v.space, [&] {
        std::vector<Scalar> c(k);
        c[i] = c[j] = 1;
        return c;
      }());
      if (nondegenerate(b, L.constraints())) return found(b);
    }
  std::vector<Scalar> t;
  for (const auto& name : v.vars) t.push_back(Scalar::variable(name));
  v.pencil_determinant = determinant(combine(v.space, t));
  if (v.pencil_determinant->is_zero()) return v;
  auto point = nonzero_point(*v.pencil_determinant, v.vars);
  if (!point) return v;
  return found(combine(v.space, std::vector<Scalar>(point->begin(), point->end())));
}

Subspace b_orthogonal(const BilinearForm& b, const Subspace& J) {
  Matrix rows;
  for (const auto& j : J.basis()) rows.push_back(mat_vec(b, j));
  return Subspace(J.ambient(), nullspace(rows, J.ambient(), J.constraints()), J.constraints());
}

OrthogonalContactCheck orthogonal_contact_cross_check(const LieAlgebra& L0) {
  // Parameterized algebras are checked at their first admissible sample.
  LieAlgebra L = L0.params().empty() ? L0 : substitute(L0, admissible_samples(L0, 1).at(0));
  const std::size_t n = L.dim();
  OrthogonalContactCheck c;
  auto orth = orthogonal_exists(L);
  c.orthogonal = orth.exists;
  std::optional<ExistenceVerdict> cont;
  if (n % 2 == 1) {
    cont = contact_exists(L);
    c.contact = cont->exists;
  }
  c.tripwire = c.orthogonal && c.contact && n != 3;
  if (!(c.orthogonal && c.contact)) return c;

  c.decomposition_checked = true;
  c.perfect = derived_ideal(L).dim() == n;
  auto inv = inverse_rational(*orth.witness);
  if (!inv) throw std::logic_error("orthogonal witness is degenerate");
  // b(x, .) = eta reads B x = eta since B is symmetric.
  Vector x = mat_vec(*inv, *cont->witness);
  c.x_bar = x;
  Matrix ad = L.ad(x);
  auto ker = nullspace(ad, n, {});
  c.kernel_is_line = ker.size() == 1;
  std::vector<Vector> both = ker;
  Matrix cols = transpose(ad);
  both.insert(both.end(), cols.begin(), cols.end());
  c.kernel_image_direct = Subspace(n, both).dim() == n && ker.size() + rank(ad, {}) == n;
  return c;
}

ObstructionConfirmation confirm(const LieAlgebra& L, const Obstruction& o) {
  ObstructionConfirmation c;
  if (o.no_contact) c.contact_polynomial_zero = contact_polynomial(L).is_zero();
  if (o.no_frobenius) c.frobenius_polynomial_zero = frobenius_polynomial(L).is_zero();
  return c;
}

CenterObstruction center_obstruction(const LieAlgebra& L) {
  if (L.dim() % 2 == 0) throw PreconditionError("center obstruction needs an odd-dimensional algebra");
  CenterObstruction r;
  r.center_dim = center(L).dim();
  r.verdict.name = "center-dim";
  r.verdict.applies = r.center_dim >= 2;
  r.verdict.no_contact = r.verdict.applies;
  r.verdict.detail = "center has dimension " + std::to_string(r.center_dim);
  return r;
}

DerivedIdealCriteria codim1_derived_criteria(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  if (!is_solvable(L)) throw PreconditionError("algebra is not solvable");
  Subspace N = derived_ideal(L);
  if (N.dim() + 1 != n) throw PreconditionError("derived ideal has codimension " + std::to_string(n - N.dim()));
  DerivedIdealCriteria r;
  r.verdict.name = "codim1-derived";
  Subspace Z = center_of(L, N);
  r.ideal_center_dim = Z.dim();
  r.complement = complement_vector(N);
  if (Z.dim() == 2) r.nonscalar_action = nonscalar_on(L, Z, r.complement);
  r.verdict.applies = n % 2 == 1;
  bool fails = Z.dim() > 2 || (Z.dim() == 2 && !*r.nonscalar_action);
  r.verdict.no_contact = r.verdict.applies && fails;
  r.verdict.detail = "center of the derived ideal has dimension " + std::to_string(Z.dim());
  if (r.nonscalar_action) r.verdict.detail += *r.nonscalar_action ? ", non-scalar action" : ", scalar action";
  return r;
}

AbelianHyperplanes codim1_abelian_obstruction(const LieAlgebra& L, const std::vector<Vector>& hyperplanes) {
  const std::size_t n = L.dim();
  AbelianHyperplanes r;
  r.verdict.name = "codim1-abelian";
  // ker(l) is abelian iff every d(e_k*) restricts to zero on it, which is
  // l ^ d(e_k*) = 0: linear in l.
  Matrix rows;
  for (std::size_t k = 0; k < n; ++k) {
    KForm dk = ce_d(L, KForm::covector(unit_vector(n, k)));
    std::map<KForm::Mask, Vector> by_mask;
    for (const auto& [mask, c] : dk.terms())
      for (std::size_t i = 0; i < n; ++i) {
        KForm::Mask bit = KForm::Mask{1} << i;
        if (mask & bit) continue;
        auto& row = by_mask.try_emplace(mask | bit, Vector(n)).first->second;
        row[i] += shuffle_sign(bit, mask) * c;
      }
    for (auto& [mask, row] : by_mask)
      if (!is_zero(row)) rows.push_back(std::move(row));
  }
  r.subalgebra_covectors = nullspace(rows, n, L.constraints());
  if (!r.subalgebra_covectors.empty()) {
    Matrix ideal_rows = rows;
    for (const auto& v : derived_ideal(L).basis()) ideal_rows.push_back(v);
    r.ideal_covectors = nullspace(ideal_rows, n, L.constraints());
  }
  for (const auto& l : hyperplanes) {
    if (l.size() != n) throw DimensionError("hyperplane covector length differs from dimension");
    Subspace ker(n, nullspace(Matrix{l}, n, L.constraints()), L.constraints());
    r.supplied_abelian.push_back(ker.dim() + 1 == n && is_abelian(L, ker));
  }
  bool found = !r.subalgebra_covectors.empty() ||
               std::find(r.supplied_abelian.begin(), r.supplied_abelian.end(), true) != r.supplied_abelian.end();
  r.verdict.applies = found && n >= 4;
  r.verdict.no_contact = r.verdict.applies && n % 2 == 1;
  r.verdict.no_frobenius = r.verdict.applies && n % 2 == 0;
  r.verdict.detail = !found ? "no codimension-1 abelian subalgebra"
                     : !r.ideal_covectors.empty() ? "codimension-1 abelian ideal found"
                                                  : "codimension-1 abelian subalgebra found";
  if (found && n < 4) r.verdict.detail += " (dimension below 4, no claim)";
  return r;
}

RankOneBracket rank_one_bracket_detect(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  if (n < 2) throw PreconditionError("rank-one bracket test needs dimension >= 2");
  RankOneBracket r;
  r.verdict.name = "rank-one-bracket";
  Vector tr = trace_form(L);
  // trace(ad_x) = l(x) - n l(x) under [x, y] = l(y) x - l(x) y.
  Rational div(-static_cast<long>(n - 1));
  for (const auto& t : tr) r.l.push_back(t.divided_by(div));
  r.detected = true;
  for (std::size_t i = 0; i < n && r.detected; ++i)
    for (std::size_t j = i + 1; j < n && r.detected; ++j)
      r.detected = L.basis_bracket(i, j) == scale(r.l[j], unit_vector(n, i)) - scale(r.l[i], unit_vector(n, j));
  r.verdict.applies = r.detected;
  r.verdict.no_contact = r.detected && n % 2 == 1 && n >= 3;
  r.verdict.no_frobenius = r.detected && n % 2 == 0 && n >= 4;
  if (r.detected) r.verdict.detail = is_zero(r.l) ? "abelian" : "R^" + std::to_string(n - 1) + " x| R id";
  else r.verdict.detail = "bracket is not of the form l(y) x - l(x) y";
  return r;
}

std::string to_string(Prediction p) {
  switch (p) {
  case Prediction::Contact: return "contact";
  case Prediction::NotContact: return "not-contact";
  default: return "undetermined";
  }
}

Dim5Decision dim5_decision(const LieAlgebra& L, bool nondecomposable) {
  if (L.dim() != 5) throw PreconditionError("dimension must be 5");
  if (!nondecomposable) throw PreconditionError("algebra must be nondecomposable");
  if (!is_solvable(L)) throw PreconditionError("algebra is not solvable");
  if (center(L).dim() != 0) throw PreconditionError("center is not trivial");
  Dim5Decision d;
  Subspace N = derived_ideal(L);
  d.derived_dim = N.dim();
  d.derived_abelian = is_abelian(L, N);
  Subspace Z = center_of(L, N);
  d.derived_center_dim = Z.dim();
  if (d.derived_dim == 3 && !d.derived_abelian) {
    d.predicted = Prediction::Contact;
    d.rule = "derived ideal of dimension 3, nonabelian";
  } else if (d.derived_dim == 4) {
    if (Z.dim() == 1) {
      d.predicted = Prediction::Contact;
      d.rule = "derived ideal of dimension 4, center of dimension 1";
    } else if (Z.dim() == 2) {
      d.nonscalar_action = nonscalar_on(L, Z, complement_vector(N));
      d.predicted = *d.nonscalar_action ? Prediction::Contact : Prediction::NotContact;
      d.rule = std::string("derived ideal of dimension 4, center of dimension 2, ") +
               (*d.nonscalar_action ? "non-scalar action" : "scalar action");
    } else {
      d.predicted = Prediction::NotContact;
      d.rule = "derived ideal of dimension 4, center of dimension " + std::to_string(Z.dim());
    }
  } else {
    d.rule = "derived ideal of dimension " + std::to_string(d.derived_dim) +
             (d.derived_abelian ? ", abelian" : "") + ": no prediction";
  }
  d.contact_exists = !contact_polynomial(L).is_zero();
  return d;
}

} // namespace contactlie
