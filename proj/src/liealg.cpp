#include "contactlie/liealg.hpp"

#include <algorithm>
#include <set>

namespace contactlie {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<std::string> params, Constraints constraints)
    : labels_(std::move(labels)), params_(std::move(params)), constraints_(std::move(constraints)) {
  const std::size_t n = labels_.size();
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != n) throw PreconditionError("basis labels must be distinct");
  table_.assign(n * n, Vector(n));
  into_.assign(n, {});
}

std::vector<std::string> LieAlgebra::default_labels(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

LieAlgebra LieAlgebra::abelian(std::size_t n) { return LieAlgebra(default_labels(n)); }

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  const std::size_t n = dim();
  if (i >= n || j >= n || v.size() != n) throw DimensionError("set_bracket: index or length out of range");
  if (i == j) {
    if (!is_zero(v)) throw PreconditionError("[x, x] must be zero");
    return;
  }
  if (i > j) {
    set_bracket(j, i, scale(Scalar(-1), v));
    return;
  }
  table_[i * n + j] = v;
  table_[j * n + i] = scale(Scalar(-1), v);
  for (std::size_t k = 0; k < n; ++k) {
    auto& list = into_[k];
    list.erase(std::remove_if(list.begin(), list.end(),
                              [&](const StructureConstant& s) { return s.a == i && s.b == j; }),
               list.end());
    if (!v[k].is_zero()) {
      list.push_back({i, j, k, v[k]});
      std::sort(list.begin(), list.end(),
                [](const StructureConstant& x, const StructureConstant& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    }
  }
}

void LieAlgebra::add_param(const std::string& name) {
  if (std::find(params_.begin(), params_.end(), name) == params_.end()) params_.push_back(name);
}

void LieAlgebra::set_labels(std::vector<std::string> labels) {
  if (labels.size() != dim()) throw DimensionError("set_labels: wrong number of labels");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw PreconditionError("basis labels must be distinct");
  labels_ = std::move(labels);
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimensionError("bracket: vector length differs from dimension");
  Vector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& s : into_[k]) {
      Scalar w = x[s.a] * y[s.b] - x[s.b] * y[s.a];
      if (!w.is_zero()) out[k] += s.c * w;
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  const std::size_t n = dim();
  Matrix m(n, Vector(n));
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = bracket(x, unit_vector(n, j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

std::vector<StructureConstant> LieAlgebra::constants() const {
  std::vector<StructureConstant> out;
  for (const auto& list : into_) out.insert(out.end(), list.begin(), list.end());
  std::sort(out.begin(), out.end(), [](const StructureConstant& x, const StructureConstant& y) {
    return std::tie(x.a, x.b, x.k) < std::tie(y.a, y.b, y.k);
  });
  return out;
}

bool LieAlgebra::operator==(const LieAlgebra& o) const {
  return labels_ == o.labels_ && table_ == o.table_;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient, const std::vector<Vector>& spanning, const Constraints& constraints)
    : ambient_(ambient), constraints_(constraints) {
  for (const auto& v : spanning)
    if (v.size() != ambient) throw DimensionError("subspace: vector length differs from ambient dimension");
  basis_ = echelon(spanning, constraints).rows;
}

Subspace Subspace::full(std::size_t n) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));
  return Subspace(n, basis);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("subspace: vector length differs from ambient dimension");
  if (is_zero(v)) return true;
  Matrix m = basis_;
  m.push_back(v);
  return rank(m, constraints_) == basis_.size();
}

bool Subspace::contains(const Subspace& s) const {
  for (const auto& v : s.basis())
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw DimensionError("subspace sum: ambient dimensions differ");
  std::vector<Vector> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  Constraints c = constraints_;
  c.insert(c.end(), o.constraints_.begin(), o.constraints_.end());
  return Subspace(ambient_, all, c);
}

// ---------------------------------------------------------------- queries

JacobiResult jacobi_check(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  JacobiResult r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector s = L.bracket(L.basis_bracket(i, j), ek) + L.bracket(L.basis_bracket(j, k), ei) +
                   L.bracket(L.basis_bracket(k, i), ej);
        if (!is_zero(s)) {
          r.ok = false;
          r.i = i;
          r.j = j;
          r.k = k;
          r.residual = s;
          return r;
        }
      }
  return r;
}

namespace {

// Solutions c of sum_t c_t rows_t = 0 where each unknown contributes a
// column vector; returns vectors of coefficients.
std::vector<Vector> kernel_of_columns(const std::vector<Vector>& columns, std::size_t height,
                                      const Constraints& constraints) {
  Matrix m(height, Vector(columns.size()));
  for (std::size_t t = 0; t < columns.size(); ++t)
    for (std::size_t r = 0; r < height; ++r) m[r][t] = columns[t][r];
  return nullspace(m, columns.size(), constraints);
}

Vector combine(const std::vector<Vector>& basis, const Vector& coeffs, std::size_t n) {
  Vector x(n);
  for (std::size_t t = 0; t < basis.size(); ++t)
    if (!coeffs[t].is_zero()) x = x + scale(coeffs[t], basis[t]);
  return x;
}

} // namespace

Subspace centralizer(const LieAlgebra& L, const Subspace& S) {
  const std::size_t n = L.dim();
  // Unknown x = sum_i x_i e_i; column i stacks [e_i, s] over the basis of S.
  std::vector<Vector> columns(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector col;
    for (const auto& s : S.basis()) {
      Vector b = L.bracket(unit_vector(n, i), s);
      col.insert(col.end(), b.begin(), b.end());
    }
    columns[i] = col;
  }
  std::size_t height = n * S.dim();
  if (height == 0) return Subspace::full(n);
  return Subspace(n, kernel_of_columns(columns, height, L.constraints()), L.constraints());
}

Subspace center(const LieAlgebra& L) { return centralizer(L, Subspace::full(L.dim())); }

Subspace center_of(const LieAlgebra& L, const Subspace& S) {
  const std::size_t n = L.dim();
  std::vector<Vector> columns;
  for (const auto& b : S.basis()) {
    Vector col;
    for (const auto& s : S.basis()) {
      Vector v = L.bracket(b, s);
      col.insert(col.end(), v.begin(), v.end());
    }
    columns.push_back(col);
  }
  if (columns.empty()) return Subspace::zero(n);
  std::vector<Vector> out;
  for (const auto& c : kernel_of_columns(columns, n * S.dim(), L.constraints()))
    out.push_back(combine(S.basis(), c, n));
  return Subspace(n, out, L.constraints());
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
  std::vector<Vector> out;
  for (const auto& a : A.basis())
    for (const auto& b : B.basis()) {
      Vector v = L.bracket(a, b);
      if (!is_zero(v)) out.push_back(std::move(v));
    }
  return Subspace(L.dim(), out, L.constraints());
}

Subspace derived_ideal(const LieAlgebra& L) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j)
      if (!is_zero(L.basis_bracket(i, j))) out.push_back(L.basis_bracket(i, j));
  return Subspace(L.dim(), out, L.constraints());
}

std::vector<Subspace> derived_series(const LieAlgebra& L) {
  std::vector<Subspace> series{Subspace::full(L.dim())};
  while (true) {
    Subspace next = series.size() == 1 ? derived_ideal(L) : bracket_span(L, series.back(), series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  Subspace full = Subspace::full(L.dim());
  std::vector<Subspace> series{full};
  while (true) {
    Subspace next = series.size() == 1 ? derived_ideal(L) : bracket_span(L, full, series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().dim() == 0; }

bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back().dim() == 0; }

std::optional<std::size_t> nilpotency_class(const LieAlgebra& L) {
  auto s = lower_central_series(L);
  if (s.back().dim() != 0) return std::nullopt;
  return s.size() - 1;
}

Vector trace_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Vector t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i] += L.structure_constant(i, j, j);
  return t;
}

bool is_unimodular(const LieAlgebra& L) { return is_zero(trace_form(L)); }

bool is_subalgebra(const LieAlgebra& L, const Subspace& S) {
  const auto& b = S.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!S.contains(L.bracket(b[i], b[j]))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& L, const Subspace& S) {
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (const auto& v : S.basis())
      if (!S.contains(L.bracket(unit_vector(L.dim(), i), v))) return false;
  return true;
}

bool is_abelian(const LieAlgebra& L, const Subspace& S) {
  const auto& b = S.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!is_zero(L.bracket(b[i], b[j]))) return false;
  return true;
}

bool is_abelian(const LieAlgebra& L) {
  for (std::size_t k = 0; k < L.dim(); ++k)
    if (!L.constants_into(k).empty()) return false;
  return true;
}

// ---------------------------------------------------------------- constructions

LieAlgebra direct_sum(const LieAlgebra& A, const LieAlgebra& B) {
  std::vector<std::string> labels = A.labels();
  std::set<std::string> taken(labels.begin(), labels.end());
  for (auto name : B.labels()) {
    while (taken.count(name)) name += "'";
    taken.insert(name);
    labels.push_back(name);
  }
  std::vector<std::string> params = A.params();
  for (const auto& p : B.params())
    if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
  Constraints cons = A.constraints();
  cons.insert(cons.end(), B.constraints().begin(), B.constraints().end());
  LieAlgebra S(labels, params, cons);
  const std::size_t n = S.dim(), m = A.dim();
  for (const auto& c : A.constants()) {
    Vector v(n);
    for (std::size_t k = 0; k < m; ++k) v[k] = A.structure_constant(c.a, c.b, k);
    S.set_bracket(c.a, c.b, v);
  }
  for (const auto& c : B.constants()) {
    Vector v(n);
    for (std::size_t k = 0; k < B.dim(); ++k) v[m + k] = B.structure_constant(c.a, c.b, k);
    S.set_bracket(m + c.a, m + c.b, v);
  }
  return S;
}

LieAlgebra opposite(const LieAlgebra& L) {
  LieAlgebra out(L.labels(), L.params(), L.constraints());
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j)
      if (!is_zero(L.basis_bracket(i, j))) out.set_bracket(i, j, scale(Scalar(-1), L.basis_bracket(i, j)));
  return out;
}

LieAlgebra quotient_by_central_line(const LieAlgebra& L, const Vector& z) {
  const std::size_t n = L.dim();
  if (z.size() != n) throw DimensionError("quotient: vector length differs from dimension");
  if (is_zero(z)) throw PreconditionError("quotient: vector is zero");
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(L.bracket(z, unit_vector(n, i)))) throw PreconditionError("quotient: vector is not central");
  std::size_t k = n;
  for (std::size_t i = 0; i < n && k == n; ++i)
    if (z[i].is_rational() && !z[i].is_zero()) k = i;
  if (k == n) throw PreconditionError("quotient: central vector needs a constant nonzero coordinate");
  Rational zk = z[k].rational();
  std::vector<std::string> labels;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (i != k) {
      keep.push_back(i);
      labels.push_back(L.labels()[i]);
    }
  LieAlgebra Q(labels, L.params(), L.constraints());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      const Vector& v = L.basis_bracket(keep[a], keep[b]);
      if (is_zero(v)) continue;
      Vector reduced = v - scale(v[k].divided_by(zk), z);
      Vector w(keep.size());
      for (std::size_t t = 0; t < keep.size(); ++t) w[t] = reduced[keep[t]];
      Q.set_bracket(a, b, w);
    }
  return Q;
}

LieAlgebra substitute(const LieAlgebra& L, const std::map<std::string, Rational>& assignment) {
  std::vector<std::string> params;
  for (const auto& p : L.params())
    if (!assignment.count(p)) params.push_back(p);
  Constraints cons;
  for (const auto& c : L.constraints()) {
    Scalar s = c.substitute_partial(assignment);
    if (s.is_zero()) throw PreconditionError("substitution violates constraint " + c.to_string() + " != 0");
    if (!s.is_rational()) cons.push_back(s);
  }
  LieAlgebra out(L.labels(), params, cons);
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j)
      if (!is_zero(L.basis_bracket(i, j))) out.set_bracket(i, j, substitute(L.basis_bracket(i, j), assignment));
  return out;
}

LieAlgebra without_constraints(const LieAlgebra& L) {
  LieAlgebra out(L.labels(), L.params());
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j)
      if (!is_zero(L.basis_bracket(i, j))) out.set_bracket(i, j, L.basis_bracket(i, j));
  return out;
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P, std::vector<std::string> labels) {
  const std::size_t n = L.dim();
  if (P.size() != n) throw DimensionError("change_basis: matrix size differs from dimension");
  auto inv = inverse_rational(P);
  if (!inv) throw PreconditionError("change_basis: matrix is singular");
  if (labels.empty()) labels = L.labels();
  LieAlgebra out(labels, L.params(), L.constraints());
  Matrix cols = transpose(P);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = mat_vec(*inv, L.bracket(cols[i], cols[j]));
      if (!is_zero(v)) out.set_bracket(i, j, v);
    }
  return out;
}

LieAlgebra permute_basis(const LieAlgebra& L, const std::vector<std::size_t>& perm) {
  const std::size_t n = L.dim();
  if (perm.size() != n) throw DimensionError("permute_basis: permutation length differs from dimension");
  std::vector<std::size_t> pos(n, n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || pos[perm[i]] != n) throw PreconditionError("permute_basis: not a permutation");
    pos[perm[i]] = i;
    labels[i] = L.labels()[perm[i]];
  }
  LieAlgebra out(labels, L.params(), L.constraints());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& v = L.basis_bracket(perm[i], perm[j]);
      if (is_zero(v)) continue;
      Vector w(n);
      for (std::size_t k = 0; k < n; ++k) w[pos[k]] = v[k];
      out.set_bracket(i, j, w);
    }
  return out;
}

} // namespace contactlie
