#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contactlie/linalg.hpp"

namespace contactlie {

/// One structure constant c_ab^k with a < b: [e_a, e_b] has coefficient c on e_k.
struct StructureConstant {
  std::size_t a, b, k;
  Scalar c;
};

/// Finite-dimensional Lie algebra given by structure constants over
/// Q[params]. Brackets are set once while building; afterwards the
/// algebra is used as an immutable value.
class LieAlgebra {
public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::vector<std::string> labels, std::vector<std::string> params = {},
                      Constraints constraints = {});
  /// Abelian algebra on labels e1..en.
  static LieAlgebra abelian(std::size_t n);
  static std::vector<std::string> default_labels(std::size_t n, const std::string& prefix = "e");

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::string>& params() const { return params_; }
  const Constraints& constraints() const { return constraints_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Sets [e_i, e_j] = v (and [e_j, e_i] = -v).
  void set_bracket(std::size_t i, std::size_t j, const Vector& v);
  void add_param(const std::string& name);
  void add_constraint(const Scalar& c) { constraints_.push_back(c); }
  void set_labels(std::vector<std::string> labels);

  const Vector& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const { return basis_bracket(i, j)[k]; }
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad_x: column j holds the coordinates of [x, e_j].
  Matrix ad(const Vector& x) const;
  /// Nonzero constants c_ab^k (a < b) whose target index is k.
  const std::vector<StructureConstant>& constants_into(std::size_t k) const { return into_[k]; }
  /// All nonzero constants with a < b, ordered by (a, b, k).
  std::vector<StructureConstant> constants() const;

  bool operator==(const LieAlgebra& o) const;

private:
  std::vector<std::string> labels_;
  std::vector<std::string> params_;
  Constraints constraints_;
  std::vector<Vector> table_;
  std::vector<std::vector<StructureConstant>> into_;
};

/// Linear subspace of an algebra's underlying space, stored as a reduced
/// echelon basis so that equal spans compare equal.
class Subspace {
public:
  Subspace() = default;
  Subspace(std::size_t ambient, const std::vector<Vector>& spanning, const Constraints& constraints = {});
  static Subspace full(std::size_t n);
  static Subspace zero(std::size_t n) { return Subspace(n, {}); }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const& { return basis_; }
  std::vector<Vector> basis() && { return std::move(basis_); }
  const Constraints& constraints() const { return constraints_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& s) const;
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && dim() == o.dim() && contains(o); }

  /// Subspace spanned by both.
  Subspace sum(const Subspace& o) const;

private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  Constraints constraints_;
};

struct JacobiResult {
  bool ok = true;
  std::size_t i = 0, j = 0, k = 0; // first failing triple
  Vector residual;
};
JacobiResult jacobi_check(const LieAlgebra& L);

Subspace center(const LieAlgebra& L);
Subspace derived_ideal(const LieAlgebra& L);
/// {x in L : [x, s] = 0 for all s in S}.
Subspace centralizer(const LieAlgebra& L, const Subspace& S);
/// {x in S : [x, S] = 0}, the center of a subalgebra S.
Subspace center_of(const LieAlgebra& L, const Subspace& S);
/// Span of all [a, b] with a in A, b in B.
Subspace bracket_span(const LieAlgebra& L, const Subspace& A, const Subspace& B);

std::vector<Subspace> derived_series(const LieAlgebra& L);
std::vector<Subspace> lower_central_series(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);
/// Nilpotency class (number of nonzero steps), or nullopt if not nilpotent.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& L);

/// Covector x -> trace(ad_x), in basis coordinates.
Vector trace_form(const LieAlgebra& L);
bool is_unimodular(const LieAlgebra& L);

bool is_subalgebra(const LieAlgebra& L, const Subspace& S);
bool is_ideal(const LieAlgebra& L, const Subspace& S);
bool is_abelian(const LieAlgebra& L, const Subspace& S);
bool is_abelian(const LieAlgebra& L);

/// Block sum; labels of B that collide with A get a trailing `'`.
LieAlgebra direct_sum(const LieAlgebra& A, const LieAlgebra& B);
LieAlgebra opposite(const LieAlgebra& L);

/// Quotient by the line through a central vector z. The complement is
/// spanned by the basis vectors other than the first index k with z_k a
/// nonzero constant; labels are kept.
LieAlgebra quotient_by_central_line(const LieAlgebra& L, const Vector& z);

/// Fixes some parameters; the remaining ones stay symbolic.
LieAlgebra substitute(const LieAlgebra& L, const std::map<std::string, Rational>& assignment);

/// Same table with the parameter constraints dropped, for probing the
/// excluded locus.
LieAlgebra without_constraints(const LieAlgebra& L);

/// Same algebra in the basis whose i-th vector has old coordinates
/// columns(i) = P[.][i]. P must be a constant invertible matrix.
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P, std::vector<std::string> labels = {});

/// Relabels and reorders the basis: new basis vector i is old e_{perm[i]}.
LieAlgebra permute_basis(const LieAlgebra& L, const std::vector<std::size_t>& perm);

} // namespace contactlie
