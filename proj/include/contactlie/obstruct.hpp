#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contactlie/contact.hpp"
#include "contactlie/liealg.hpp"

namespace contactlie {

/// Symmetric bilinear form as its Gram matrix in the basis.
using BilinearForm = Matrix;

/// Basis of the symmetric forms with b([x,y],z) + b(y,[x,z]) = 0.
std::vector<BilinearForm> invariant_form_space(const LieAlgebra& L);

struct OrthogonalVerdict {
  std::vector<BilinearForm> space;
  /// det(sum t_i B_i); only computed when no sampled member of the pencil
  /// is nondegenerate.
  std::optional<Scalar> pencil_determinant;
  std::vector<std::string> vars;
  bool exists = false;
  std::optional<BilinearForm> witness;
};
OrthogonalVerdict orthogonal_exists(const LieAlgebra& L);

/// {x : b(x, j) = 0 for all j in J}.
Subspace b_orthogonal(const BilinearForm& b, const Subspace& J);

struct OrthogonalContactCheck {
  bool orthogonal = false;
  bool contact = false;
  /// Both hold outside dimension 3. Expected never to fire.
  bool tripwire = false;
  /// For the both-true case: x with b(x, .) = eta, the kernel of ad_x is a
  /// line and L = ker(ad_x) + im(ad_x) directly.
  bool decomposition_checked = false;
  bool kernel_is_line = false;
  bool kernel_image_direct = false;
  bool perfect = false;  // L = [L, L]
  std::optional<Vector> x_bar;
  bool ok() const { return !tripwire && (!decomposition_checked || (kernel_is_line && kernel_image_direct && perfect)); }
};
OrthogonalContactCheck orthogonal_contact_cross_check(const LieAlgebra& L);

/// Common part of every obstruction report.
struct Obstruction {
  std::string name;
  /// Hypotheses of the obstruction hold.
  bool applies = false;
  bool no_contact = false;
  bool no_frobenius = false;
  std::string detail;
};

/// Generic polynomials for the non-existence claims of an obstruction.
struct ObstructionConfirmation {
  std::optional<bool> contact_polynomial_zero;
  std::optional<bool> frobenius_polynomial_zero;
  bool agrees() const { return contact_polynomial_zero.value_or(true) && frobenius_polynomial_zero.value_or(true); }
};
ObstructionConfirmation confirm(const LieAlgebra& L, const Obstruction& o);

struct CenterObstruction {
  Obstruction verdict;
  std::size_t center_dim = 0;
};
/// Odd dimension: a center of dimension >= 2 rules out contact forms.
CenterObstruction center_obstruction(const LieAlgebra& L);

struct DerivedIdealCriteria {
  Obstruction verdict;
  std::size_t ideal_center_dim = 0;  // dim Z(N), N = [L, L]
  Vector complement;                  // e outside N
  /// Whether ad_e acts on Z(N) as a non-scalar map; set when dim Z(N) = 2.
  std::optional<bool> nonscalar_action;
};
/// Necessary conditions for contact forms on a solvable L whose derived
/// ideal N has codimension 1: dim Z(N) <= 2, and when it is 2 the action of
/// a complement on Z(N) is not scalar. Throws PreconditionError otherwise.
DerivedIdealCriteria codim1_derived_criteria(const LieAlgebra& L);

struct AbelianHyperplanes {
  Obstruction verdict;
  /// Basis of the covectors l whose kernel is an abelian subalgebra
  /// (l ^ d(e_k*) = 0 for all k); every nonzero member qualifies.
  std::vector<Vector> subalgebra_covectors;
  /// Same with l([L, L]) = 0 added, i.e. abelian ideals.
  std::vector<Vector> ideal_covectors;
  /// Direct test of each supplied hyperplane.
  std::vector<bool> supplied_abelian;
};
/// Codimension-1 abelian subalgebras. Only obstructs from dimension 4 on.
AbelianHyperplanes codim1_abelian_obstruction(const LieAlgebra& L, const std::vector<Vector>& hyperplanes = {});

struct RankOneBracket {
  Obstruction verdict;
  bool detected = false;
  /// Candidate l(x) = -trace(ad_x) / (n - 1), which is forced by the
  /// identity [x, y] = l(y) x - l(x) y.
  Vector l;
};
/// Contact needs dimension >= 3, Frobenius dimension >= 4 for the claim:
/// aff(R) itself has this bracket form and is Frobenius.
RankOneBracket rank_one_bracket_detect(const LieAlgebra& L);

enum class Prediction { Contact, NotContact, Undetermined };
std::string to_string(Prediction p);

struct Dim5Decision {
  std::size_t derived_dim = 0;
  bool derived_abelian = false;
  std::size_t derived_center_dim = 0;
  std::optional<bool> nonscalar_action;
  Prediction predicted = Prediction::Undetermined;
  std::string rule;
  bool contact_exists = false;
  bool agrees() const {
    return predicted == Prediction::Undetermined || contact_exists == (predicted == Prediction::Contact);
  }
};
/// Case split for 5-dimensional nondecomposable solvable algebras with
/// trivial center, checked against the generic contact polynomial.
Dim5Decision dim5_decision(const LieAlgebra& L, bool nondecomposable);

} // namespace contactlie
