#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contactlie/forms.hpp"
#include "contactlie/liealg.hpp"

namespace contactlie {

/// Extension block of an algebra file: data for a codimension-one
/// extension, and optionally the exact symplectic form it is meant to
/// contactize.
struct ExtensionBlock {
  std::optional<Matrix> psi;  // psi[i] = coordinates of psi(e_i)
  std::optional<Vector> f;
  std::optional<Scalar> s;
  std::optional<Vector> alpha;
};

/// Contents of a `.lie` file.
struct LieFile {
  LieAlgebra algebra;
  std::string name;
  std::vector<Vector> forms;  // `form` statements, 1-form coordinates
  std::vector<std::map<std::string, Rational>> samples;
  ExtensionBlock extension;
  bool has_extension() const {
    return extension.psi || extension.f || extension.s || extension.alpha;
  }
};

/// Parses the line-oriented algebra format:
///
///     name   heisenberg                # optional
///     dim    3                         # optional when `basis` is given
///     params p q
///     constrain q, p + 1 - q           # polynomials required nonzero
///     basis  e1 e2 e3                  # default e1..e<dim>
///     bracket [e1,e2] = e3
///     form   e3*                       # a 1-form of interest
///     sample p=1, q=2                  # parameter point
///     extend psi e1 -> 0 ; e2 -> 2 e1
///     extend f = -e1*
///     extend s = 1
///     extend alpha = e2*
///
/// Errors carry the 1-based line number.
LieFile parse_lie(const std::string& text);
LieFile read_lie_file(const std::string& path);

/// Writes an algebra (and optional extras) in the same format; the output
/// parses back to an equal algebra.
std::string write_lie(const LieAlgebra& L, const std::string& name = "", const std::vector<Vector>& forms = {},
                      const std::vector<std::map<std::string, Rational>>& samples = {});
/// `extend` lines for the given block, relative to L's basis.
std::string write_extension_block(const LieAlgebra& L, const ExtensionBlock& b);

/// Parses `p=1, q=-2/3` into an assignment.
std::map<std::string, Rational> parse_assignment(const std::string& text);
std::string format_assignment(const std::map<std::string, Rational>& a);

/// 1-form text such as `e1* + (1-p) e3*` against the algebra's basis.
Vector parse_covector(const LieAlgebra& L, const std::string& text);
std::string format_covector(const LieAlgebra& L, const Vector& v);
std::string format_vector(const LieAlgebra& L, const Vector& v);

} // namespace contactlie
