#include "contactlie/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "contactlie/io.hpp"
#include "contactlie/parse.hpp"

namespace contactlie {

std::string to_string(Claim c) {
  switch (c) {
  case Claim::Exists: return "exists";
  case Claim::Absent: return "absent";
  default: return "unstated";
  }
}

std::vector<Assignment> CatalogEntry::evaluation_points() const {
  if (samples.empty()) return {Assignment{}};
  return samples;
}

namespace {

struct Flags {
  bool solvable = false, nilpotent = false, nondecomposable = true;
};

CatalogEntry from_text(std::string id, std::string family, std::string title, const std::string& text, Flags fl,
                       Claim contact = Claim::Unstated) {
  LieFile f = parse_lie(text);
  CatalogEntry e;
  e.id = std::move(id);
  e.family = std::move(family);
  e.title = std::move(title);
  e.algebra = std::move(f.algebra);
  e.samples = std::move(f.samples);
  e.solvable = fl.solvable;
  e.nilpotent = fl.nilpotent;
  e.nondecomposable = fl.nondecomposable;
  e.contact = contact;
  if (e.algebra.dim() % 2 == 1) {
    e.contact_forms = std::move(f.forms);
    if (!e.contact_forms.empty()) e.contact = Claim::Exists;
  } else if (!f.forms.empty()) {
    e.frobenius_form = f.forms.front();
    e.frobenius = Claim::Exists;
  }
  return e;
}

void exclude(CatalogEntry& e, const std::string& point, const std::string& constraint) {
  e.excluded.push_back({parse_assignment(point), parse_scalar(constraint, &e.algebra.params())});
}

constexpr Flags solvable{true, false, true};
constexpr Flags nilpotent{true, true, true};
constexpr Flags simple{false, false, true};

// 5-dimensional nondecomposable solvable algebras with a contact form each.
const char* solvable5[24] = {
    R"(bracket [e2,e4] = e1
bracket [e3,e5] = e1
form e1*)",
    R"(bracket [e3,e4] = e1
bracket [e2,e5] = e1
bracket [e3,e5] = e2
form e1*)",
    R"(bracket [e3,e4] = e1
bracket [e2,e5] = e1
bracket [e3,e5] = e2
bracket [e4,e5] = e3
form e1*)",
    R"(params p q
constrain q, p + 1 - q
bracket [e2,e3] = e1
bracket [e1,e5] = (1+p) e1
bracket [e2,e5] = e2
bracket [e3,e5] = p e3
bracket [e4,e5] = q e4
form e1* + e4*
sample p=1, q=3
sample p=0, q=2
sample p=-2, q=1/2)",
    R"(params p
bracket [e2,e3] = e1
bracket [e1,e5] = (1+p) e1
bracket [e2,e5] = e2
bracket [e3,e5] = p e3
bracket [e4,e5] = e1 + (1+p) e4
form e1*
sample p=0
sample p=1
sample p=-1)",
    R"(bracket [e2,e3] = e1
bracket [e1,e5] = 2 e1
bracket [e2,e5] = e2 + e3
bracket [e3,e5] = e3 + e4
bracket [e4,e5] = e4
form e1* + e4*)",
    R"(bracket [e2,e3] = e1
bracket [e2,e5] = e3
bracket [e4,e5] = e4
form e1* + e4*)",
    R"(params p
constrain p, p - 2
bracket [e2,e3] = e1
bracket [e1,e5] = 2 e1
bracket [e2,e5] = e2 + e3
bracket [e3,e5] = e3
bracket [e4,e5] = p e4
form e1* + e4*
sample p=1
sample p=-1
sample p=3)",
    R"(params eps
constrain eps
bracket [e2,e3] = e1
bracket [e1,e5] = 2 e1
bracket [e2,e5] = e2 + e3
bracket [e3,e5] = e3
bracket [e4,e5] = eps e1 + 2 e4
form e1*
sample eps=1
sample eps=-1
# e4 -> e4/eps carries eps to 1 and fixes e1*
sample eps=2)",
    R"(params p q
constrain q - 2p, q
bracket [e2,e3] = e1
bracket [e1,e5] = 2p e1
bracket [e2,e5] = p e2 + e3
bracket [e3,e5] = -e2 + p e3
bracket [e4,e5] = q e4
form e1* + e4*
sample p=1, q=1
sample p=0, q=1
sample p=1, q=-1)",
    R"(params eps p
constrain eps
bracket [e2,e3] = e1
bracket [e1,e5] = 2p e1
bracket [e2,e5] = p e2 + e3
bracket [e3,e5] = -e2 + p e3
bracket [e4,e5] = eps e1 + 2p e4
form e1*
sample eps=1, p=1
sample eps=-1, p=1
sample eps=1, p=-2)",
    R"(bracket [e2,e3] = e1
bracket [e1,e5] = e1
bracket [e3,e5] = e3 + e4
bracket [e4,e5] = e1 + e4
form e1*)",
    R"(params p
constrain p
bracket [e2,e3] = e1
bracket [e1,e5] = (1+p) e1
bracket [e2,e5] = p e2
bracket [e3,e5] = e3 + e4
bracket [e4,e5] = e4
form e1* + e4*
sample p=1
sample p=-1
sample p=2)",
    R"(bracket [e2,e3] = e1
bracket [e1,e5] = e1
bracket [e2,e5] = e2
bracket [e3,e5] = e4
form e1* + e4*)",
    R"(params p
bracket [e2,e4] = e1
bracket [e3,e4] = e2
bracket [e1,e5] = (2+p) e1
bracket [e2,e5] = (1+p) e2
bracket [e3,e5] = p e3
bracket [e4,e5] = e4
form e1* + e3*
sample p=0
sample p=1
sample p=-2)",
    R"(bracket [e2,e4] = e1
bracket [e3,e4] = e2
bracket [e1,e5] = 3 e1
bracket [e2,e5] = 2 e2
bracket [e3,e5] = e3
bracket [e4,e5] = e3 + e4
form e1* + e2*)",
    R"(params p
bracket [e2,e4] = e1
bracket [e3,e4] = e2
bracket [e1,e5] = e1
bracket [e2,e5] = e2
bracket [e3,e5] = p e1 + e3
form e1* + (1-p) e3*
sample p=1
sample p=2
sample p=-1)",
    R"(params p q
constrain p^2 + q^2, p + q - 1
bracket [e1,e4] = e1
bracket [e3,e4] = p e3
bracket [e2,e5] = e2
bracket [e3,e5] = q e3
form e1* + e2* + e3*
sample p=1, q=1
sample p=2, q=0
sample p=0, q=-3)",
    R"(params p
constrain p - 1
bracket [e1,e4] = p e1
bracket [e2,e4] = e2
bracket [e3,e4] = e3
bracket [e1,e5] = e1
bracket [e3,e5] = e2
form e1* + e2*
sample p=0
sample p=2
sample p=-1)",
    R"(params p q
constrain p^2 + q^2, p - 1
bracket [e1,e4] = p e1
bracket [e2,e4] = e2
bracket [e3,e4] = e3
bracket [e1,e5] = q e1
bracket [e2,e5] = -e3
bracket [e3,e5] = e2
form e1* + e2*
sample p=0, q=1
sample p=2, q=0
sample p=-1, q=3)",
    R"(bracket [e2,e3] = e1
bracket [e1,e4] = e1
bracket [e2,e4] = e2
bracket [e2,e5] = -e2
bracket [e3,e5] = e3
form e1* + e5*)",
    R"(bracket [e2,e3] = e1
bracket [e1,e4] = 2 e1
bracket [e2,e4] = e2
bracket [e3,e4] = e3
bracket [e2,e5] = -e3
bracket [e3,e5] = e2
form e1* + e5*)",
    R"(bracket [e1,e4] = e1
bracket [e2,e5] = e2
bracket [e4,e5] = e3
form e1* + e2* + e3*)",
    R"(bracket [e1,e4] = e1
bracket [e2,e4] = e2
bracket [e1,e5] = -e2
bracket [e2,e5] = e1
bracket [e4,e5] = e3
form e1* + e3*)",
};

void add_solvable5(std::vector<CatalogEntry>& out) {
  for (int k = 1; k <= 24; ++k) {
    std::ostringstream id;
    id << "dim5.solv." << (k < 10 ? "0" : "") << k;
    Flags fl = k <= 3 ? nilpotent : solvable;
    out.push_back(from_text(id.str(), "solvable5", "5-dim nondecomposable solvable",
                            std::string("dim 5\n") + solvable5[k - 1], fl));
  }
  auto& e = out;
  auto at = [&](int k) -> CatalogEntry& { return e[e.size() - 25 + k]; };
  exclude(at(4), "p=1, q=0", "q");
  exclude(at(4), "p=1, q=2", "p + 1 - q");
  exclude(at(8), "p=0", "p");
  exclude(at(8), "p=2", "p - 2");
  exclude(at(9), "eps=0", "eps");
  exclude(at(10), "p=1, q=2", "q - 2p");
  exclude(at(10), "p=1, q=0", "q");
  exclude(at(11), "eps=0, p=1", "eps");
  exclude(at(13), "p=0", "p");
  exclude(at(18), "p=0, q=0", "p^2 + q^2");
  exclude(at(18), "p=1, q=0", "p + q - 1");
  exclude(at(19), "p=1", "p - 1");
  exclude(at(20), "p=0, q=0", "p^2 + q^2");
  exclude(at(20), "p=1, q=2", "p - 1");
}

const char* heisenberg_text(std::size_t m) {
  switch (m) {
  case 1: return "basis e1 e2 e3\nbracket [e1,e2] = e3\nform e3*\n";
  case 2: return "dim 5\nbracket [e1,e2] = e5\nbracket [e3,e4] = e5\nform e5*\n";
  default:
    return "dim 7\nbracket [e1,e2] = e7\nbracket [e3,e4] = e7\nbracket [e5,e6] = e7\nform e7*\n";
  }
}

void add_dim3(std::vector<CatalogEntry>& out) {
  for (std::size_t m = 1; m <= 3; ++m)
    out.push_back(from_text("heisenberg." + std::to_string(2 * m + 1), "heisenberg",
                            "Heisenberg algebra", heisenberg_text(m), nilpotent));

  auto sl2 = from_text("sl2", "dim3", "sl(2,R) as the extension of aff(R)", R"(basis e1 e2 e3
bracket [e1,e2] = e2
bracket [e1,e3] = -e3
bracket [e2,e3] = 2 e1
form e2* + e3*
form e1*
)",
                       simple);
  ExtensionRecipe r;
  r.base = parse_lie("basis e1 e2\nbracket [e1,e2] = e2\n").algebra;
  r.data = ExtensionData::zero(2);
  r.data.psi[1] = {Scalar(2), Scalar(0)};
  r.data.f = {Scalar(-1), Scalar(0)};
  r.alpha = {Scalar(0), Scalar(1)};
  r.s = Scalar::variable("s");
  r.order = {0, 1, 2};
  sl2.extension = r;
  out.push_back(std::move(sl2));

  out.push_back(from_text("so3", "dim3", "so(3)", R"(basis e1 e2 e3
bracket [e1,e2] = e3
bracket [e2,e3] = e1
bracket [e3,e1] = e2
form e1*
)",
                          simple));
  out.push_back(from_text("abelian.3", "dim3", "abelian R^3", "dim 3\n", {true, true, false}, Claim::Absent));
  out.push_back(from_text("dim3.r2.id", "dim3", "R^2 x| R id", R"(dim 3
bracket [e3,e1] = e1
bracket [e3,e2] = e2
)",
                          solvable, Claim::Absent));
  out.push_back(from_text("dim3.r2.rot", "dim3", "R^2 x| R D with D = [[1,-1],[1,1]]", R"(dim 3
bracket [e3,e1] = e1 + e2
bracket [e3,e2] = -e1 + e2
form e1*
)",
                          solvable));
  out.push_back(from_text("dim3.e2", "dim3", "e(2), Euclidean motions of the plane", R"(dim 3
bracket [e3,e1] = e2
bracket [e3,e2] = -e1
form e1*
)",
                          solvable));
  auto diag = from_text("dim3.r2.diag", "dim3", "R^2 x| R diag(1, lam)", R"(dim 3
params lam
constrain lam - 1
bracket [e3,e1] = e1
bracket [e3,e2] = lam e2
form e1* + e2*
sample lam=-1
sample lam=2
sample lam=1/2
)",
                        solvable);
  exclude(diag, "lam=1", "lam - 1");
  out.push_back(std::move(diag));
}

void add_nonsolvable5(std::vector<CatalogEntry>& out) {
  out.push_back(from_text("dim5.aff+sl2", "nonsolvable5", "aff(R) + sl(2,R)", R"(dim 5
bracket [e1,e2] = e2
bracket [e3,e4] = e4
bracket [e3,e5] = -e5
bracket [e4,e5] = 2 e3
form e2* + e4* + e5*
)",
                          {false, false, false}));
  out.push_back(from_text("dim5.aff+so3", "nonsolvable5", "aff(R) + so(3)", R"(dim 5
bracket [e1,e2] = e2
bracket [e3,e4] = e5
bracket [e4,e5] = e3
bracket [e5,e3] = e4
form e2* + e3*
)",
                          {false, false, false}));

  auto sa = from_text("dim5.r2.sl2", "nonsolvable5", "special affine algebra R^2 x| sl(2,R)", R"(params s
constrain s
basis e1 e2 X Y H
bracket [X,e2] = e1
bracket [Y,e1] = e2
bracket [H,e1] = e1
bracket [H,e2] = -e2
bracket [X,Y] = H
bracket [H,X] = 2 X
bracket [H,Y] = -2 Y
form e1* + s Y*
sample s=1
sample s=-1
sample s=3
)",
                      simple);
  exclude(sa, "s=0", "s");
  ExtensionRecipe r;
  r.base = parse_lie(R"(basis e1 e2 e3 e4
bracket [e3,e2] = e1
bracket [e4,e1] = e1
bracket [e4,e2] = -e2
bracket [e4,e3] = 2 e3
)")
               .algebra;
  r.data = ExtensionData::zero(4);
  r.data.psi[0] = {Scalar(0), Scalar(-1), Scalar(0), Scalar(0)};
  r.data.psi[2] = {Scalar(0), Scalar(0), Scalar(0), Scalar(1)};
  r.data.f = {Scalar(0), Scalar(0), Scalar(0), Scalar(-2)};
  r.alpha = {Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
  r.s = Scalar::variable("s");
  r.order = {0, 1, 2, 4, 3};
  sa.extension = r;
  out.push_back(std::move(sa));
}

const char* gt_text = R"(params t
basis e1 e2 e3 e4 e5 e6 e7
bracket [e1,e2] = e4 + t e5
bracket [e1,e3] = e6
bracket [e2,e3] = e5
bracket [e1,e4] = e7
bracket [e2,e5] = e7
bracket [e3,e6] = e7
form e7*
sample t=-2
sample t=0
sample t=1
sample t=5
)";

void add_dim7(std::vector<CatalogEntry>& out) {
  out.push_back(from_text("dim7.Gt", "dim7", "nilpotent family G_t", gt_text, nilpotent));
  out.push_back(from_text("dim7.r4.sl2.a", "dim7", "R^4 x| sl(2,R), irreducible module", R"(dim 7
bracket [e1,e2] = 2 e2
bracket [e1,e3] = -2 e3
bracket [e2,e3] = e1
bracket [e1,e4] = 3 e4
bracket [e2,e5] = 3 e4
bracket [e3,e4] = e5
bracket [e1,e5] = e5
bracket [e2,e6] = 2 e5
bracket [e3,e5] = 2 e6
bracket [e1,e6] = -e6
bracket [e2,e7] = e6
bracket [e3,e6] = 3 e7
bracket [e1,e7] = -3 e7
form e5* + e7*
)",
                          simple));
  out.push_back(from_text("dim7.r4.sl2.b", "dim7", "R^4 x| sl(2,R), two standard modules", R"(dim 7
bracket [e1,e2] = 2 e2
bracket [e1,e3] = -2 e3
bracket [e2,e3] = e1
bracket [e1,e4] = e4
bracket [e2,e5] = e4
bracket [e3,e4] = e5
bracket [e1,e5] = -e5
bracket [e1,e6] = e6
bracket [e2,e7] = e6
bracket [e3,e6] = e7
bracket [e1,e7] = -e7
form e4* + e7*
)",
                          simple));
  out.push_back(from_text("dim7.so3.mixed", "dim7", "(R^3 x| so(3)) x| R, rotations plus a scaling", R"(dim 7
bracket [e1,e2] = e3
bracket [e2,e3] = e1
bracket [e3,e1] = e2
bracket [e1,e5] = e6
bracket [e2,e4] = -e6
bracket [e3,e4] = e5
bracket [e1,e6] = -e5
bracket [e2,e6] = e4
bracket [e3,e5] = -e4
bracket [e4,e7] = e4
bracket [e5,e7] = e5
bracket [e6,e7] = e6
form e1* + e4*
)",
                          simple));
  out.push_back(from_text("dim7.so3.semidirect", "dim7", "R^4 x| so(3), quaternionic action", R"(dim 7
bracket [e1,e2] = e3
bracket [e2,e3] = e1
bracket [e3,e1] = e2
bracket [e1,e4] = (1/2) e7
bracket [e2,e4] = (1/2) e5
bracket [e3,e4] = (1/2) e6
bracket [e1,e5] = (1/2) e6
bracket [e2,e5] = -(1/2) e4
bracket [e3,e5] = -(1/2) e7
bracket [e1,e6] = -(1/2) e5
bracket [e2,e6] = (1/2) e7
bracket [e3,e6] = -(1/2) e4
bracket [e1,e7] = -(1/2) e4
bracket [e2,e7] = -(1/2) e6
bracket [e3,e7] = (1/2) e5
form e4*
form e5*
form e6*
form e7*
)",
                          simple));
}

void add_specimens(std::vector<CatalogEntry>& out) {
  out.push_back(from_text("specimen.h3+r2", "specimen", "H_3 + R^2", R"(dim 5
bracket [e1,e2] = e3
)",
                          {true, true, false}, Claim::Absent));
  out.push_back(from_text("specimen.n22.scalar", "specimen", "N_{2,2} x| R acting on its center as 2 id", R"(dim 5
bracket [e2,e3] = e1
bracket [e1,e5] = 2 e1
bracket [e2,e5] = e2
bracket [e3,e5] = e3
bracket [e4,e5] = 2 e4
)",
                          solvable, Claim::Absent));
  out.push_back(from_text("specimen.free3.graded", "specimen", "free 2-step nilpotent on 3 generators x| grading",
                          R"(dim 7
bracket [e1,e2] = e6
bracket [e2,e3] = e4
bracket [e3,e1] = e5
bracket [e7,e1] = e1
bracket [e7,e2] = e2
bracket [e7,e3] = e3
bracket [e7,e4] = 2 e4
bracket [e7,e5] = 2 e5
bracket [e7,e6] = 2 e6
)",
                          solvable, Claim::Absent));
  auto r3 = from_text("specimen.r3.id", "specimen", "R^3 x| R id", R"(dim 4
bracket [e4,e1] = e1
bracket [e4,e2] = e2
bracket [e4,e3] = e3
)",
                      solvable);
  r3.frobenius = Claim::Absent;
  out.push_back(std::move(r3));
  out.push_back(from_text("specimen.r4.id", "specimen", "R^4 x| R id", R"(dim 5
bracket [e5,e1] = e1
bracket [e5,e2] = e2
bracket [e5,e3] = e3
bracket [e5,e4] = e4
)",
                          solvable, Claim::Absent));
}

Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, Vector(n));
  m[i][j] = 1;
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero() && b[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
        if (!b[i][k].is_zero() && !a[k][j].is_zero()) out[i][j] -= b[i][k] * a[k][j];
      }
    }
  return out;
}

Vector flatten(const Matrix& m) {
  Vector v;
  for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
  return v;
}

std::string idx(std::size_t i) { return std::to_string(i + 1); }

} // namespace

LieAlgebra matrix_lie_algebra(const std::vector<Matrix>& basis, std::vector<std::string> labels) {
  const std::size_t d = basis.size();
  if (labels.size() != d) throw DimensionError("one label per basis matrix expected");
  // Columns are the flattened basis matrices; coordinates solve the normal
  // equations and are checked against the commutator afterwards.
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(flatten(b));
  const std::size_t len = cols.empty() ? 0 : cols[0].size();
  Matrix gram(d, Vector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram[i][j] = dot(cols[i], cols[j]);
  auto inv = inverse_rational(gram);
  if (!inv) throw PreconditionError("basis matrices are linearly dependent");
  LieAlgebra L(std::move(labels));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector target = flatten(commutator(basis[i], basis[j]));
      if (is_zero(target)) continue;
      Vector rhs(d);
      for (std::size_t k = 0; k < d; ++k) rhs[k] = dot(cols[k], target);
      Vector c = mat_vec(*inv, rhs);
      Vector back(len);
      for (std::size_t k = 0; k < d; ++k)
        if (!c[k].is_zero()) back = back + scale(c[k], cols[k]);
      if (back != target) throw PreconditionError("span of the matrices is not closed under commutators");
      L.set_bracket(i, j, c);
    }
  return L;
}

CatalogEntry gen_aff(std::size_t n) {
  if (n == 0) throw PreconditionError("gen_aff needs n >= 1");
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      basis.push_back(unit_matrix(n + 1, i, j));
      labels.push_back("E" + idx(i) + idx(j));
    }
  for (std::size_t i = 0; i < n; ++i) {
    basis.push_back(unit_matrix(n + 1, i, n));
    labels.push_back("t" + idx(i));
  }
  CatalogEntry e;
  e.id = "aff." + std::to_string(n);
  e.family = "aff";
  e.title = "aff(R^" + std::to_string(n) + ") = R^" + std::to_string(n) + " x| gl(" + std::to_string(n) + ")";
  e.algebra = matrix_lie_algebra(basis, labels);
  const std::size_t d = n * n + n;
  Vector alpha(d), x0(d);
  alpha[n * n] = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) alpha[(i + 1) * n + i] = 1;
  for (std::size_t i = 0; i < n; ++i) x0[i * n + i] = -static_cast<long>(i + 1);
  e.frobenius_form = alpha;
  e.liouville = x0;
  e.frobenius = Claim::Exists;
  e.solvable = n == 1;
  e.nondecomposable = true;
  return e;
}

CatalogEntry gen_matrix_preserving(std::size_t n, std::size_t p) {
  if (p < 1 || p >= n) throw PreconditionError("gen_matrix_preserving needs 1 <= p <= n - 1");
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  Matrix h(n, Vector(n));
  for (std::size_t i = 0; i < p; ++i) h[i][i] = 1;
  basis.push_back(h);
  labels.push_back("h");
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = p; j < n; ++j) {
      basis.push_back(unit_matrix(n, i, j));
      labels.push_back("b" + idx(i) + idx(j));
    }
  for (std::size_t i = p; i < n; ++i)
    for (std::size_t j = p; j < n; ++j) {
      basis.push_back(unit_matrix(n, i, j));
      labels.push_back("c" + idx(i) + idx(j));
    }
  CatalogEntry e;
  e.id = "matrix." + std::to_string(n) + "." + std::to_string(p);
  e.family = "matrix";
  e.title = "endomorphisms of R^" + std::to_string(n) + " preserving R^" + std::to_string(p) + " with homothety restriction";
  e.algebra = matrix_lie_algebra(basis, labels);
  e.divisible = n % p == 0;
  e.contact = *e.divisible ? Claim::Exists : Claim::Unstated;
  e.solvable = n - p == 1;
  // Scalars are central, so the algebra splits off R.
  e.nondecomposable = false;
  return e;
}

CatalogEntry gen_Gt(const Rational& t) {
  CatalogEntry e = from_text("", "dim7", "nilpotent family G_t", gt_text, nilpotent);
  e.algebra = substitute(e.algebra, {{"t", t}});
  e.id = "dim7.Gt[t=" + to_string(t) + "]";
  e.samples.clear();
  return e;
}

LieAlgebra rebuild_from_extension(const ExtensionRecipe& r) {
  LieAlgebra built = build_extension(r.base, r.data);
  std::vector<std::size_t> perm(r.order.size());
  for (std::size_t i = 0; i < r.order.size(); ++i) perm[r.order[i]] = i;
  return permute_basis(built, perm);
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (std::size_t n = 1; n <= 3; ++n) out.push_back(gen_aff(n));
    add_dim3(out);
    add_solvable5(out);
    add_nonsolvable5(out);
    add_dim7(out);
    out.push_back(gen_matrix_preserving(2, 1));
    out.push_back(gen_matrix_preserving(3, 1));
    out.push_back(gen_matrix_preserving(3, 2));
    add_specimens(out);
    return out;
  }();
  return entries;
}

const CatalogEntry& get(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw UnknownEntry("unknown catalog entry '" + id + "'");
}

bool CatalogFilter::matches(const CatalogEntry& e) const {
  if (dim && e.algebra.dim() != *dim) return false;
  if (family && e.family != *family) return false;
  if (id_prefix && e.id.rfind(*id_prefix, 0) != 0) return false;
  for (const auto& f : flags) {
    bool ok = f == "solvable"          ? e.solvable
              : f == "nilpotent"       ? e.nilpotent
              : f == "nondecomposable" ? e.nondecomposable
              : f == "parameterized"   ? e.parameterized()
              : f == "contact"         ? e.contact == Claim::Exists
              : f == "frobenius"       ? e.frobenius == Claim::Exists
                                       : false;
    if (!ok) return false;
  }
  return true;
}

CatalogFilter parse_filter(const std::string& text) {
  CatalogFilter f;
  std::stringstream in(text);
  std::string term;
  static const std::vector<std::string> known{"solvable", "nilpotent", "nondecomposable",
                                              "parameterized", "contact", "frobenius"};
  while (std::getline(in, term, ',')) {
    term.erase(0, term.find_first_not_of(" \t"));
    term.erase(term.find_last_not_of(" \t") + 1);
    if (term.empty()) continue;
    auto eq = term.find('=');
    if (eq == std::string::npos) {
      if (std::find(known.begin(), known.end(), term) == known.end())
        throw ParseError("unknown filter term '" + term + "'");
      f.flags.push_back(term);
      continue;
    }
    std::string key = term.substr(0, eq), value = term.substr(eq + 1);
    if (key == "dim") {
      try {
        std::size_t used = 0;
        f.dim = std::stoul(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw ParseError("dim filter needs a number, got '" + value + "'");
      }
    } else if (key == "family") {
      f.family = value;
    } else if (key == "id") {
      f.id_prefix = value;
    } else {
      throw ParseError("unknown filter key '" + key + "'");
    }
  }
  return f;
}

std::vector<const CatalogEntry*> list(const CatalogFilter& filter) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog())
    if (filter.matches(e)) out.push_back(&e);
  return out;
}

} // namespace contactlie
