#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contactlie/forms.hpp"
#include "contactlie/liealg.hpp"

namespace contactlie {

/// Result of testing a 1-form for the contact condition.
struct ContactVerdict {
  KForm eta;
  /// Coefficient of e1* ^ ... ^ en* in (d eta)^m ^ eta, n = 2m + 1.
  Scalar top;
  /// top is not the zero polynomial.
  bool is_contact = false;
  /// top cannot vanish anywhere on the constrained parameter locus. False
  /// when it is contact only away from some hypersurface.
  bool nonvanishing_on_locus = false;
  /// Reeb vector numerator / denominator; present iff is_contact.
  std::optional<FracVector> reeb;
};

/// Result of testing whether d alpha is nondegenerate.
struct SymplecticVerdict {
  /// Coefficient of the volume form in omega^m, n = 2m.
  Scalar top;
  bool closed = true;
  bool nondegenerate = false;
  bool nonvanishing_on_locus = false;
};

ContactVerdict is_contact_form(const LieAlgebra& L, const Vector& eta);

/// Unique xi with i_xi d eta = 0 and eta(xi) = 1. Throws PreconditionError
/// when eta is not contact.
FracVector reeb_vector(const LieAlgebra& L, const Vector& eta);

SymplecticVerdict is_symplectic(const LieAlgebra& L, const KForm& omega);
SymplecticVerdict is_exact_symplectic(const LieAlgebra& L, const Vector& alpha);

/// x0 with (d alpha)(x0, .) = alpha. Throws PreconditionError when d alpha
/// is degenerate.
FracVector liouville_vector(const LieAlgebra& L, const Vector& alpha);

/// The generic 1-form sum a_i e_i* in fresh variables, with their names.
struct GenericCovector {
  Vector coords;
  std::vector<std::string> vars;
};
GenericCovector generic_covector(const LieAlgebra& L);

/// Top coefficient of (d eta)^m ^ eta for generic eta (odd dimension).
Scalar contact_polynomial(const LieAlgebra& L, const GenericCovector& g);
Scalar contact_polynomial(const LieAlgebra& L);
/// Top coefficient of (d alpha)^m for generic alpha (even dimension).
Scalar frobenius_polynomial(const LieAlgebra& L, const GenericCovector& g);
Scalar frobenius_polynomial(const LieAlgebra& L);

enum class ExistenceMode { Contact, Frobenius };
std::string to_string(ExistenceMode m);

struct ExistenceVerdict {
  ExistenceMode mode = ExistenceMode::Contact;
  /// Polynomial in the generic coefficients (and the algebra's parameters).
  Scalar polynomial;
  std::vector<std::string> vars;
  bool exists = false;
  /// Parameter point at which the witness was found and verified.
  std::map<std::string, Rational> sample;
  /// Rational 1-form at `sample`, verified directly.
  std::optional<Vector> witness;
  /// Value of the verified top coefficient at the witness.
  Scalar witness_value;
};

struct ExistenceOptions {
  /// Parameter points to try first for parameterized algebras.
  std::vector<std::map<std::string, Rational>> samples;
};

ExistenceVerdict contact_exists(const LieAlgebra& L, const ExistenceOptions& opts = {});
ExistenceVerdict frobenius_exists(const LieAlgebra& L, const ExistenceOptions& opts = {});

/// Rational point where P does not vanish, over `vars` (every variable of P
/// must be listed); nullopt only for the zero polynomial.
std::optional<std::vector<Rational>> nonzero_point(const Scalar& P, const std::vector<std::string>& vars);

/// Integer parameter points with all constraints nonzero, in a fixed order
/// of increasing size. Returns at most `count` points.
std::vector<std::map<std::string, Rational>> admissible_samples(const LieAlgebra& L, std::size_t count);

struct KernelRadicalCheck {
  bool kernel_is_subalgebra = false;
  std::size_t radical_dim = 0;
  bool radical_is_reeb_line = false;
  bool ok() const { return !kernel_is_subalgebra && radical_dim == 1 && radical_is_reeb_line; }
};
/// For a contact form: Ker(eta) is not a subalgebra and Rad(d eta) is the
/// Reeb line. Throws PreconditionError when eta is not contact.
KernelRadicalCheck kernel_radical_check(const LieAlgebra& L, const Vector& eta);

struct DecomposableCheck {
  bool sum_contact = false;
  bool first_contact = false, first_frobenius = false;
  bool second_contact = false, second_frobenius = false;
  bool predicted = false;
  bool agree() const { return sum_contact == predicted; }
};
/// Contact existence on A + B against the splitting rule: one summand
/// contact and the other exact symplectic.
DecomposableCheck decomposable_criterion(const LieAlgebra& A, const LieAlgebra& B);

} // namespace contactlie
