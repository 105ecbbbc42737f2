#pragma once

#include <string>
#include <vector>

#include "contactlie/scalar.hpp"

namespace contactlie {

/// Parses a scalar expression: integers, `a/b`, parameter names, `+ - * / ^`
/// and parentheses. When `params` is non-null, identifiers must belong to it.
/// Division is only allowed by nonzero constants.
Scalar parse_scalar(const std::string& text, const std::vector<std::string>* params, int line = 0);

/// Parses a scalar-weighted sum of basis labels, e.g. `(1+p) e1 - e3` or,
/// with `starred`, a 1-form such as `e1* + (1-p) e3*`. A bare `0` is the
/// zero combination. Returns coordinates in the order of `labels`.
std::vector<Scalar> parse_combination(const std::string& text, const std::vector<std::string>& labels,
                                      const std::vector<std::string>& params, bool starred, int line = 0);

/// Inverse of parse_combination; prints `0` for the zero combination.
std::string format_combination(const std::vector<Scalar>& coords, const std::vector<std::string>& labels,
                               bool starred);

/// Coefficient as it appears in front of a label: bare integers, otherwise
/// parenthesized (`(1/2)`, `(p + 1)`).
std::string format_coefficient(const Scalar& s);

} // namespace contactlie
