#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contactlie/construct.hpp"
#include "contactlie/error.hpp"
#include "contactlie/liealg.hpp"

namespace contactlie {

class UnknownEntry : public Error {
public:
  using Error::Error;
};

using Assignment = std::map<std::string, Rational>;

/// What the literature asserts about a structure on an entry.
enum class Claim { Unstated, Exists, Absent };
std::string to_string(Claim c);

/// Parameter point on which a stated constraint vanishes.
struct ExcludedSample {
  Assignment point;
  Scalar constraint;
};

/// Codimension-one extension that reproduces the entry. The construction
/// basis is (base basis, e0); its i-th vector is the entry's basis vector
/// order[i].
struct ExtensionRecipe {
  LieAlgebra base;
  ExtensionData data;
  Vector alpha;
  Scalar s;
  std::vector<std::size_t> order;
};

struct CatalogEntry {
  std::string id;
  std::string title;
  /// Group used by filters: dim3, heisenberg, solvable5, nonsolvable5,
  /// dim7, aff, matrix, specimen.
  std::string family;
  LieAlgebra algebra;
  std::vector<Vector> contact_forms;
  std::optional<Vector> frobenius_form;
  /// Expected Liouville vector of the Frobenius form.
  std::optional<Vector> liouville;
  std::vector<Assignment> samples;
  std::vector<ExcludedSample> excluded;
  bool solvable = false;
  bool nilpotent = false;
  bool nondecomposable = false;
  Claim contact = Claim::Unstated;
  Claim frobenius = Claim::Unstated;
  std::optional<ExtensionRecipe> extension;
  /// For the matrix generators: whether p divides n.
  std::optional<bool> divisible;

  bool parameterized() const { return !algebra.params().empty(); }
  /// Samples to evaluate at: the stored ones, or the empty assignment.
  std::vector<Assignment> evaluation_points() const;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& get(const std::string& id);

/// Comma-separated terms, all of which must hold: solvable, nilpotent,
/// nondecomposable, parameterized, contact, frobenius (claimed to exist),
/// dim=N, family=NAME, id=PREFIX.
struct CatalogFilter {
  std::vector<std::string> flags;
  std::optional<std::size_t> dim;
  std::optional<std::string> family;
  std::optional<std::string> id_prefix;
  bool matches(const CatalogEntry& e) const;
};
CatalogFilter parse_filter(const std::string& text);
std::vector<const CatalogEntry*> list(const CatalogFilter& filter = {});

/// aff(R^n) = R^n x| gl(n) on E_ij (row major) then t_i, with
/// alpha = t_1* + sum E_{i+1,i}* and Liouville vector -sum i E_ii.
CatalogEntry gen_aff(std::size_t n);
/// Endomorphisms of R^n preserving R^p (first coordinates) and restricting
/// to a homothety on it. Basis: the homothety, the off-diagonal block, the
/// lower-right block. Dimension 1 + n(n - p).
CatalogEntry gen_matrix_preserving(std::size_t n, std::size_t p);
/// The nilpotent 7-dimensional family at a fixed t, with form e7*.
CatalogEntry gen_Gt(const Rational& t);

/// Lie algebra spanned by the given square matrices under the commutator.
/// Throws PreconditionError when they are dependent or not closed.
LieAlgebra matrix_lie_algebra(const std::vector<Matrix>& basis, std::vector<std::string> labels);

/// The recipe's extension mapped to the entry's basis order.
LieAlgebra rebuild_from_extension(const ExtensionRecipe& r);

} // namespace contactlie
