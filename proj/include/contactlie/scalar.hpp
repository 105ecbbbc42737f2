#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contactlie/error.hpp"

namespace contactlie {

using Rational = mpq_class;
using VarId = std::uint32_t;

/// Process-wide interning of variable names. Ids are only used for fast
/// comparison; every printed or exported order is derived from the names.
VarId intern_variable(const std::string& name);
const std::string& variable_name(VarId id);

/// Natural ordering of names: "a2" < "a10", "p" < "q".
bool natural_less(const std::string& a, const std::string& b);

/// Product of variable powers, sorted by variable id, exponents positive.
struct Monomial {
  std::vector<std::pair<VarId, unsigned>> powers;

  unsigned degree() const;
  unsigned degree_in(VarId v) const;
  bool operator==(const Monomial&) const = default;
};

/// Strict weak order on monomials (graded, then lexicographic on ids).
bool operator<(const Monomial& a, const Monomial& b);

/// Exact element of Q[p1, p2, ...]: rationals and sparse multivariate
/// polynomials over the rationals share this representation.
///
/// Canonical form: terms sorted by a fixed monomial order, no zero
/// coefficients, so equality of values is equality of representations.
/// A Scalar with no variables is "rational"; `rational()` returns it.
class Scalar {
public:
  struct Term {
    Monomial monomial;
    Rational coeff;
    bool operator==(const Term& o) const { return monomial == o.monomial && coeff == o.coeff; }
  };

  Scalar() = default;
  Scalar(long value); // NOLINT(google-explicit-constructor)
  Scalar(int value) : Scalar(static_cast<long>(value)) {} // NOLINT
  Scalar(const Rational& value); // NOLINT
  static Scalar variable(const std::string& name);
  static Scalar from_terms(std::vector<Term> terms);

  /// Parses `1/2`, `-2`, `(p*q - 1)`, `p^2 - q^2`. Any identifier is a variable.
  static Scalar parse(const std::string& text);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Constant value; throws PreconditionError when variables occur.
  Rational rational() const;

  const std::vector<Term>& terms() const { return terms_; }
  /// Variable names occurring in the scalar, naturally ordered.
  std::vector<std::string> variables() const;
  bool has_variable(const std::string& name) const;
  unsigned total_degree() const;
  unsigned degree_in(const std::string& name) const;

  /// Full substitution; every occurring variable must be assigned.
  Scalar substitute(const std::map<std::string, Rational>& assignment) const;
  /// Substitutes the assigned variables and keeps the others symbolic.
  Scalar substitute_partial(const std::map<std::string, Rational>& assignment) const;
  /// Replaces variable `name` by the scalar `value`.
  Scalar substitute(const std::string& name, const Scalar& value) const;

  /// Coefficients of the scalar viewed as a polynomial in `vars` with
  /// coefficients in the remaining variables.
  std::map<Monomial, Scalar> coefficients_in(const std::vector<std::string>& vars) const;

  /// Exact quotient a / b when b divides a in the polynomial ring.
  static std::optional<Scalar> divide_exact(const Scalar& a, const Scalar& b);

  /// Canonical text: graded lexicographic on the naturally ordered names.
  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  /// Division by a nonzero rational.
  Scalar divided_by(const Rational& d) const;
  Scalar pow(unsigned e) const;

  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }

private:
  explicit Scalar(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

std::string to_string(const Rational& r);

} // namespace contactlie
