#include "contactlie/construct.hpp"

#include <algorithm>
#include <stdexcept>

namespace contactlie {

namespace {

void check_shapes(const LieAlgebra& H, const ExtensionData& d) {
  const std::size_t m = H.dim();
  if (d.psi.size() != m || d.f.size() != m) throw DimensionError("extension data does not match the base dimension");
  for (const auto& row : d.psi)
    if (row.size() != m) throw DimensionError("psi must be square of the base dimension");
}

// psi applied to coordinates x; psi[i] is the image of e_i.
Vector apply_psi(const Matrix& psi, const Vector& x) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out = out + scale(x[i], psi[i]);
  return out;
}

std::string fresh_label(const std::vector<std::string>& labels, std::string want) {
  while (std::find(labels.begin(), labels.end(), want) != labels.end()) want += "'";
  return want;
}

void add_params_of(LieAlgebra& L, const Scalar& s) {
  for (const auto& v : s.variables())
    if (std::find(L.params().begin(), L.params().end(), v) == L.params().end()) L.add_param(v);
}

} // namespace

CocycleCheck check_extension_cocycle(const LieAlgebra& H, const ExtensionData& d) {
  check_shapes(H, d);
  const std::size_t m = H.dim();
  CocycleCheck c;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vector& xy = H.basis_bracket(i, j);
      Scalar fxy = dot(d.f, xy);
      if (c.f_closed && !fxy.is_zero()) {
        c.f_closed = false;
        c.f_pair = {i, j};
        c.f_residual = fxy;
      }
      Vector lhs = apply_psi(d.psi, xy);
      Vector rhs = H.bracket(d.psi[i], unit_vector(m, j)) + H.bracket(unit_vector(m, i), d.psi[j]) -
                   scale(d.f[i], d.psi[j]) + scale(d.f[j], d.psi[i]);
      Vector res = lhs - rhs;
      if (c.psi_identity && !is_zero(res)) {
        c.psi_identity = false;
        c.psi_pair = {i, j};
        c.psi_residual = res;
      }
    }
  return c;
}

LieAlgebra build_extension(const LieAlgebra& H, const ExtensionData& d, const std::string& label) {
  auto c = check_extension_cocycle(H, d);
  if (!c.ok()) {
    const auto& [i, j] = c.f_closed ? c.psi_pair : c.f_pair;
    throw PreconditionError(std::string(c.f_closed ? "psi identity" : "f closedness") + " fails on [" +
                            H.labels()[i] + "," + H.labels()[j] + "]");
  }
  const std::size_t m = H.dim();
  auto labels = H.labels();
  labels.push_back(fresh_label(H.labels(), label));
  LieAlgebra G(labels, H.params(), H.constraints());
  auto widen = [&](const Vector& v) {
    Vector w = v;
    w.push_back(0);
    return w;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!is_zero(H.basis_bracket(i, j))) G.set_bracket(i, j, widen(H.basis_bracket(i, j)));
  for (std::size_t i = 0; i < m; ++i) {
    Vector v = widen(d.psi[i]);
    v[m] = d.f[i];
    if (!is_zero(v)) G.set_bracket(i, m, v);
  }
  if (!jacobi_check(G).ok) throw std::logic_error("extension violates Jacobi despite a valid cocycle");
  return G;
}

Scalar contactization_condition(const LieAlgebra& H, const Vector& alpha, const ExtensionData& d, const Scalar& s) {
  check_shapes(H, d);
  FracVector x0 = liouville_vector(H, alpha);
  const Scalar& D = x0.denominator;
  KForm w = ce_d(H, KForm::covector(alpha));
  Scalar first = eval(w, {x0.numerator, apply_psi(d.psi, x0.numerator)});
  // Multiplied through by D^2.
  return first + s * (D * D + D * dot(d.f, x0.numerator));
}

Contactization contactize(const LieAlgebra& H, const Vector& alpha, const ExtensionData& d, const Scalar& s) {
  if (alpha.size() != H.dim()) throw DimensionError("1-form length differs from dimension");
  if (!is_exact_symplectic(H, alpha).nondegenerate) throw PreconditionError("d alpha is degenerate");
  Contactization out;
  out.condition = contactization_condition(H, alpha, d, s);
  if (out.condition.is_zero())
    throw PreconditionError("inadmissible s: the contactization condition vanishes identically");
  out.algebra = build_extension(H, d);
  add_params_of(out.algebra, s);
  if (!out.condition.is_rational()) out.algebra.add_constraint(out.condition);
  out.eta = alpha;
  out.eta.push_back(s);
  out.verdict = is_contact_form(out.algebra, out.eta);
  if (!out.verdict.is_contact) throw std::logic_error("contactized form is not contact");
  out.pullback_matches = Vector(out.eta.begin(), out.eta.end() - 1) == alpha;
  return out;
}

CentralExtension central_extension(const LieAlgebra& H, const KForm& w, const std::string& label) {
  const std::size_t m = H.dim();
  if (w.degree() != 2 || w.ambient() != m) throw DimensionError("expected a 2-form on the base");
  auto v = is_symplectic(H, w);
  if (!v.closed) throw PreconditionError("2-form is not closed");
  if (!v.nondegenerate) throw PreconditionError("2-form is degenerate");
  auto labels = H.labels();
  labels.push_back(fresh_label(H.labels(), label));
  LieAlgebra G(labels, H.params(), H.constraints());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector b = H.basis_bracket(i, j);
      b.push_back(w.coefficient((KForm::Mask{1} << i) | (KForm::Mask{1} << j)));
      if (!is_zero(b)) G.set_bracket(i, j, b);
    }
  return {G, unit_vector(m + 1, m)};
}

CenterReduction reduce_by_center(const LieAlgebra& G, const Vector& eta) {
  const std::size_t n = G.dim();
  if (eta.size() != n) throw DimensionError("1-form length differs from dimension");
  Subspace Z = center(G);
  if (Z.dim() != 1) throw PreconditionError("center has dimension " + std::to_string(Z.dim()) + ", expected 1");
  const Vector& z = Z.basis()[0];
  Scalar ez = dot(eta, z);
  if (ez.is_zero()) throw PreconditionError("1-form vanishes on the center");
  if (!ez.is_rational()) throw PreconditionError("1-form on the center must be a constant");
  CenterReduction r;
  r.dropped = n;
  for (std::size_t k = 0; k < n && r.dropped == n; ++k)
    if (!z[k].is_zero() && z[k].is_rational()) r.dropped = k;
  if (r.dropped == n) throw PreconditionError("central vector has no constant coordinate");

  Matrix P(n, Vector(n));
  std::vector<std::string> base_labels;
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == r.dropped) continue;
    Vector v = unit_vector(n, i) - scale(eta[i].divided_by(ez.rational()), z);
    for (std::size_t row = 0; row < n; ++row) P[row][col] = v[row];
    base_labels.push_back(G.labels()[i]);
    ++col;
  }
  Vector xi = scale(Scalar(Rational(1) / ez.rational()), z);
  for (std::size_t row = 0; row < n; ++row) P[row][n - 1] = xi[row];
  auto adapted_labels = base_labels;
  adapted_labels.push_back(G.labels()[r.dropped]);
  r.adapted = change_basis(G, P, adapted_labels);
  r.basis = P;

  const std::size_t m = n - 1;
  r.base = LieAlgebra(base_labels, G.params(), G.constraints());
  r.omega = KForm(m, 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vector& b = r.adapted.basis_bracket(i, j);
      Vector head(b.begin(), b.end() - 1);
      if (!is_zero(head)) r.base.set_bracket(i, j, head);
      if (!b[m].is_zero()) r.omega.add((KForm::Mask{1} << i) | (KForm::Mask{1} << j), b[m]);
    }
  return r;
}

Scalar symplectization_condition(const LieAlgebra& G, const Vector& eta, const ExtensionData& d, const Scalar& s) {
  check_shapes(G, d);
  FracVector xi = reeb_vector(G, eta);
  return dot(eta, apply_psi(d.psi, xi.numerator)) + s * dot(d.f, xi.numerator);
}

Symplectization exact_symplectization(const LieAlgebra& G, const Vector& eta, const ExtensionData& d, const Scalar& s) {
  Symplectization out;
  out.condition = symplectization_condition(G, eta, d, s);
  if (out.condition.is_zero())
    throw PreconditionError("inadmissible data: the symplectization condition vanishes identically");
  out.algebra = build_extension(G, d);
  add_params_of(out.algebra, s);
  out.alpha = eta;
  out.alpha.push_back(s);
  out.verdict = is_exact_symplectic(out.algebra, out.alpha);
  if (!out.verdict.nondegenerate) throw std::logic_error("symplectized form is degenerate");
  return out;
}

} // namespace contactlie
