#pragma once

#include <optional>
#include <string>
#include <utility>

#include "contactlie/contact.hpp"
#include "contactlie/forms.hpp"
#include "contactlie/liealg.hpp"

namespace contactlie {

/// Data of a codimension-one extension of H: psi[i] holds the coordinates
/// of psi(e_i), f is a covector on H. The new vector e0 is appended last
/// and [x, e0] = psi(x) + f(x) e0.
struct ExtensionData {
  Matrix psi;
  Vector f;

  static ExtensionData zero(std::size_t m) { return {Matrix(m, Vector(m)), Vector(m)}; }
};

struct CocycleCheck {
  bool f_closed = true;
  bool psi_identity = true;
  /// First basis pair violating the respective identity.
  std::pair<std::size_t, std::size_t> f_pair{0, 0}, psi_pair{0, 0};
  Scalar f_residual;
  Vector psi_residual;
  bool ok() const { return f_closed && psi_identity; }
};

/// f([x,y]) = 0 and psi([x,y]) = [psi x, y] + [x, psi y] - f(x) psi(y) + f(y) psi(x)
/// on all basis pairs.
CocycleCheck check_extension_cocycle(const LieAlgebra& H, const ExtensionData& d);

/// H + R e0 with [x, e0] = psi(x) + f(x) e0. Throws PreconditionError when
/// the cocycle check fails.
LieAlgebra build_extension(const LieAlgebra& H, const ExtensionData& d, const std::string& label = "e0");

/// w(x0, psi(x0)) + s (1 + f(x0)) with w = d alpha and x0 the Liouville
/// vector of alpha. When x0 has a nonconstant denominator D the value is
/// multiplied by D^2, which keeps its zero locus.
Scalar contactization_condition(const LieAlgebra& H, const Vector& alpha, const ExtensionData& d, const Scalar& s);

struct Contactization {
  LieAlgebra algebra;
  Vector eta;  // alpha + s e0*
  Scalar condition;
  ContactVerdict verdict;
  bool pullback_matches = false;  // eta restricted to H equals alpha
};

/// Builds the extension with eta_s = alpha + s e0* and verifies it. A
/// symbolic s becomes a parameter of the result and a nonconstant condition
/// one of its constraints. Throws PreconditionError when d alpha is
/// degenerate, the cocycle fails or the condition vanishes.
Contactization contactize(const LieAlgebra& H, const Vector& alpha, const ExtensionData& d, const Scalar& s);

struct CentralExtension {
  LieAlgebra algebra;
  Vector eta;  // dual of the new central vector
};

/// H x_w R xi with [x,y] = [x,y]_H + w(x,y) xi. Requires w closed and
/// nondegenerate.
CentralExtension central_extension(const LieAlgebra& H, const KForm& w, const std::string& label = "xi");

struct CenterReduction {
  LieAlgebra base;     // G / center, on the basis vectors other than `dropped`
  KForm omega;         // induced symplectic form on base
  LieAlgebra adapted;  // G in the adapted basis (base vectors, then xi)
  Matrix basis;        // columns: adapted basis vectors in G's coordinates
  std::size_t dropped = 0;
};

/// Inverse of central_extension for a contact algebra with one-dimensional
/// center on which eta does not vanish. The adapted basis is
/// e_i - (eta(e_i)/eta(z)) z for i != dropped, then xi = z / eta(z).
CenterReduction reduce_by_center(const LieAlgebra& G, const Vector& eta);

/// eta(psi(xi)) + s f(xi) for the Reeb vector xi; scaled by the Reeb
/// denominator when that is not constant.
Scalar symplectization_condition(const LieAlgebra& G, const Vector& eta, const ExtensionData& d, const Scalar& s);

struct Symplectization {
  LieAlgebra algebra;
  Vector alpha;  // eta + s e0*
  Scalar condition;
  SymplecticVerdict verdict;
};

/// Extension of a contact algebra with alpha_s = eta + s e0* exact
/// symplectic; verified after construction.
Symplectization exact_symplectization(const LieAlgebra& G, const Vector& eta, const ExtensionData& d, const Scalar& s);

} // namespace contactlie
