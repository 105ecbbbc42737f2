#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contactlie/scalar.hpp"

namespace contactlie {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>; // row-major

/// A parameterized elimination needed a pivot that may vanish on the
/// constrained parameter locus; `polynomial()` is that pivot.
class RankInstability : public Error {
public:
  explicit RankInstability(Scalar pivot)
      : Error("rank is not stable over the parameters: pivot " + pivot.to_string() +
              " is not implied nonzero by the constraints"),
        pivot_(std::move(pivot)) {}
  const Scalar& polynomial() const { return pivot_; }

private:
  Scalar pivot_;
};

/// Nonzero constraints an algebra declares on its parameters.
using Constraints = std::vector<Scalar>;

/// True when `s` cannot vanish on the locus where all constraints are
/// nonzero: s is a nonzero constant times a product of constraint powers.
bool implied_nonzero(const Scalar& s, const Constraints& constraints);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
Vector substitute(const Vector& v, const std::map<std::string, Rational>& assignment);

Matrix transpose(const Matrix& m);
Vector mat_vec(const Matrix& m, const Vector& v);

/// Fraction-free row echelon form over Q[params]. Pivots are chosen among
/// nonzero constants first, then among entries implied nonzero by the
/// constraints; anything else raises RankInstability. Rows with a constant
/// pivot are scaled so that pivot is 1. The form is fully reduced: each
/// pivot column is zero outside its pivot row.
struct Echelon {
  Matrix rows;                           // nonzero rows only
  std::vector<std::size_t> pivot_cols;   // pivot column of each row
};
Echelon echelon(Matrix m, const Constraints& constraints);

std::size_t rank(const Matrix& m, const Constraints& constraints);

/// Basis of {x : m x = 0}, `cols` unknowns. Entries are polynomials; each
/// vector is scaled by a product of pivots nonzero on the constrained locus.
std::vector<Vector> nullspace(const Matrix& m, std::size_t cols, const Constraints& constraints);

/// A vector with a common denominator, for solutions of parameterized
/// systems: value = numerator / denominator.
struct FracVector {
  Vector numerator;
  Scalar denominator = 1;

  /// Divides through when the denominator is a nonzero constant.
  FracVector normalized() const;
  bool is_polynomial() const { return denominator == Scalar(1); }
};

/// Unique solution of the square system m x = b, or nullopt when the
/// system is singular.
std::optional<FracVector> solve_unique(const Matrix& m, const Vector& b, const Constraints& constraints);

/// Inverse of a constant matrix, or nullopt when singular.
std::optional<Matrix> inverse_rational(const Matrix& m);

/// Determinant as a polynomial, by expansion over column subsets.
Scalar determinant(const Matrix& m);

std::string to_string(const Vector& v);

} // namespace contactlie
