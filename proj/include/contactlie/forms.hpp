#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "contactlie/liealg.hpp"

namespace contactlie {

/// Alternating k-form on an n-dimensional space. A basis k-form
/// e_{i1}* ^ ... ^ e_{ik}* with i1 < ... < ik is keyed by the bit mask
/// with bits i1..ik set. Evaluation uses the determinant convention:
/// (e1* ^ e2*)(e1, e2) = 1.
class KForm {
public:
  using Mask = std::uint32_t;
  static constexpr std::size_t max_dimension = 31;

  KForm() = default;
  KForm(std::size_t n, std::size_t degree);
  static KForm constant(std::size_t n, const Scalar& c);
  static KForm covector(const Vector& coords);
  /// e_{i1}* ^ ... ^ e_{ik}* for the given (not necessarily sorted) indices.
  static KForm basis(std::size_t n, const std::vector<std::size_t>& indices);

  std::size_t ambient() const { return n_; }
  std::size_t degree() const { return k_; }
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(Mask m) const;
  Scalar coefficient(const std::vector<std::size_t>& sorted_indices) const;
  /// Coefficient of e1* ^ ... ^ en*.
  Scalar top_coefficient() const;
  /// Coordinates of a 1-form.
  Vector coords() const;

  void add(Mask m, const Scalar& c);

  KForm operator+(const KForm& o) const;
  KForm operator-(const KForm& o) const;
  KForm operator-() const;
  KForm scaled(const Scalar& c) const;
  bool operator==(const KForm& o) const { return n_ == o.n_ && k_ == o.k_ && terms_ == o.terms_; }

  KForm substitute(const std::map<std::string, Rational>& assignment) const;
  std::string to_string(const std::vector<std::string>& labels) const;

private:
  std::size_t n_ = 0, k_ = 0;
  std::map<Mask, Scalar> terms_;
};

KForm wedge(const KForm& a, const KForm& b);
KForm power(const KForm& w, std::size_t m);

/// Chevalley-Eilenberg differential with trivial coefficients:
/// (d theta)(x0..xk) = sum_{i<j} (-1)^{i+j} theta([xi,xj], x0..^xi..^xj..xk).
KForm ce_d(const LieAlgebra& L, const KForm& theta);

Scalar eval(const KForm& theta, const std::vector<Vector>& vectors);
KForm interior(const Vector& x, const KForm& theta);

/// Skew matrix M_ij = w(e_i, e_j) of a 2-form.
Matrix two_form_matrix(const KForm& w);
Subspace two_form_radical(const KForm& w, const Constraints& constraints = {});
std::size_t two_form_rank(const KForm& w, const Constraints& constraints = {});

/// Sign of the shuffle placing the indices of a before those of b (masks disjoint).
int shuffle_sign(KForm::Mask a, KForm::Mask b);

} // namespace contactlie
