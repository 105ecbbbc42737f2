#include "contactlie/contact.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace contactlie {

namespace {

KForm::Mask full_mask(std::size_t n) { return static_cast<KForm::Mask>((std::uint64_t{1} << n) - 1); }

void require_odd(const LieAlgebra& L, const char* what) {
  if (L.dim() % 2 == 0)
    throw PreconditionError(std::string(what) + " needs an odd-dimensional algebra, got dimension " +
                            std::to_string(L.dim()));
}

void require_even(const LieAlgebra& L, const char* what) {
  if (L.dim() % 2 == 1 || L.dim() == 0)
    throw PreconditionError(std::string(what) + " needs a nonzero even-dimensional algebra, got dimension " +
                            std::to_string(L.dim()));
}

// Top coefficient of (d eta)^m ^ eta together with (d eta)^m.
std::pair<Scalar, KForm> contact_top(const LieAlgebra& L, const Vector& eta) {
  const std::size_t n = L.dim();
  KForm e = KForm::covector(eta);
  KForm omega_m = power(ce_d(L, e), n / 2);
  return {wedge(omega_m, e).top_coefficient(), omega_m};
}

bool satisfies_constraints(const LieAlgebra& L, const std::map<std::string, Rational>& point) {
  for (const auto& p : L.params())
    if (!point.count(p)) return false;
  for (const auto& c : L.constraints())
    if (c.substitute(point).is_zero()) return false;
  return true;
}

ExistenceVerdict decide(const LieAlgebra& L, ExistenceMode mode, const ExistenceOptions& opts) {
  ExistenceVerdict v;
  v.mode = mode;
  GenericCovector g = generic_covector(L);
  v.vars = g.vars;
  v.polynomial = mode == ExistenceMode::Contact ? contact_polynomial(L, g) : frobenius_polynomial(L, g);
  v.exists = !v.polynomial.is_zero();
  if (!v.exists) return v;

  std::vector<std::map<std::string, Rational>> samples;
  for (const auto& s : opts.samples)
    if (satisfies_constraints(L, s)) samples.push_back(s);
  for (const auto& s : admissible_samples(L, 64)) samples.push_back(s);

  for (const auto& s : samples) {
    Scalar Ps = v.polynomial.substitute_partial(s);
    if (Ps.is_zero()) continue;
    auto point = nonzero_point(Ps, g.vars);
    if (!point) continue;
    Vector w(point->begin(), point->end());
    LieAlgebra at = L.params().empty() ? L : substitute(L, s);
    Scalar value = mode == ExistenceMode::Contact ? is_contact_form(at, w).top : is_exact_symplectic(at, w).top;
    if (value.is_zero()) throw std::logic_error("witness failed direct verification");
    v.sample = s;
    v.witness = w;
    v.witness_value = value;
    break;
  }
  return v;
}

} // namespace

// Basis vectors, then sums of two, then the grid S^N with |S| = deg + 1
// by growing support. A polynomial of degree <= |S| - 1 in each variable
// cannot vanish on all of S^N, so the search terminates.
std::optional<std::vector<Rational>> nonzero_point(const Scalar& P, const std::vector<std::string>& vars) {
  if (P.is_zero()) return std::nullopt;
  const std::size_t N = vars.size();
  auto value_at = [&](const std::vector<Rational>& x) {
    std::map<std::string, Rational> a;
    for (std::size_t i = 0; i < N; ++i) a[vars[i]] = x[i];
    return P.substitute(a);
  };
  for (std::size_t i = 0; i < N; ++i) {
    std::vector<Rational> x(N, 0);
    x[i] = 1;
    if (!value_at(x).is_zero()) return x;
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      std::vector<Rational> x(N, 0);
      x[i] = x[j] = 1;
      if (!value_at(x).is_zero()) return x;
    }
  unsigned deg = P.total_degree();
  std::vector<Rational> values; // nonzero members of S
  for (long v = 1; values.size() < deg; ++v) {
    values.push_back(v);
    if (values.size() < deg) values.push_back(-v);
  }
  if (values.empty()) values.push_back(1);
  std::vector<Rational> x(N, 0);
  std::optional<std::vector<Rational>> found;
  std::vector<std::size_t> support;
  // Enumerate supports of size w in lexicographic order, then all
  // assignments of nonzero values on the support.
  std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t left) -> bool {
    if (left == 0) {
      std::vector<std::size_t> pick(support.size(), 0);
      while (true) {
        for (std::size_t t = 0; t < support.size(); ++t) x[support[t]] = values[pick[t]];
        if (!value_at(x).is_zero()) {
          found = x;
          return true;
        }
        std::size_t t = 0;
        while (t < pick.size() && ++pick[t] == values.size()) pick[t++] = 0;
        if (t == pick.size()) break;
      }
      for (auto s : support) x[s] = 0;
      return false;
    }
    for (std::size_t i = start; i + left <= N; ++i) {
      support.push_back(i);
      if (choose(i + 1, left - 1)) return true;
      support.pop_back();
    }
    return false;
  };
  for (std::size_t w = 1; w <= N; ++w)
    if (choose(0, w)) return found;
  return std::nullopt;
}

ContactVerdict is_contact_form(const LieAlgebra& L, const Vector& eta) {
  require_odd(L, "contact test");
  if (eta.size() != L.dim()) throw DimensionError("1-form length differs from dimension");
  const std::size_t n = L.dim();
  ContactVerdict v;
  v.eta = KForm::covector(eta);
  auto [top, omega_m] = contact_top(L, eta);
  v.top = top;
  v.is_contact = !top.is_zero();
  v.nonvanishing_on_locus = implied_nonzero(top, L.constraints());
  if (!v.is_contact) return v;
  // i_v vol = (d eta)^m gives v in the radical of d eta with eta(v) = top.
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar c = omega_m.coefficient(full_mask(n) & ~(KForm::Mask{1} << i));
    r[i] = i % 2 ? -c : c;
  }
  if (!(dot(eta, r) == top) || !interior(r, ce_d(L, v.eta)).is_zero())
    throw std::logic_error("Reeb vector failed its defining equations");
  v.reeb = FracVector{r, top}.normalized();
  return v;
}

FracVector reeb_vector(const LieAlgebra& L, const Vector& eta) {
  auto v = is_contact_form(L, eta);
  if (!v.is_contact) throw PreconditionError("1-form is not contact");
  return *v.reeb;
}

SymplecticVerdict is_symplectic(const LieAlgebra& L, const KForm& omega) {
  require_even(L, "symplectic test");
  if (omega.degree() != 2 || omega.ambient() != L.dim()) throw DimensionError("expected a 2-form on the algebra");
  SymplecticVerdict v;
  v.closed = ce_d(L, omega).is_zero();
  v.top = power(omega, L.dim() / 2).top_coefficient();
  v.nondegenerate = !v.top.is_zero();
  v.nonvanishing_on_locus = implied_nonzero(v.top, L.constraints());
  return v;
}

SymplecticVerdict is_exact_symplectic(const LieAlgebra& L, const Vector& alpha) {
  if (alpha.size() != L.dim()) throw DimensionError("1-form length differs from dimension");
  return is_symplectic(L, ce_d(L, KForm::covector(alpha)));
}

FracVector liouville_vector(const LieAlgebra& L, const Vector& alpha) {
  require_even(L, "Liouville vector");
  if (alpha.size() != L.dim()) throw DimensionError("1-form length differs from dimension");
  Matrix M = two_form_matrix(ce_d(L, KForm::covector(alpha)));
  // (i_x w)(e_j) = sum_i x_i w(e_i, e_j), so solve M^T x = alpha.
  auto x = solve_unique(transpose(M), alpha, L.constraints());
  if (!x) throw PreconditionError("d alpha is degenerate");
  return *x;
}

GenericCovector generic_covector(const LieAlgebra& L) {
  const char* prefixes[] = {"a", "a_", "coef", "coef_"};
  for (const char* prefix : prefixes) {
    GenericCovector g;
    bool clash = false;
    for (std::size_t i = 1; i <= L.dim() && !clash; ++i) {
      std::string name = prefix + std::to_string(i);
      clash = std::find(L.params().begin(), L.params().end(), name) != L.params().end();
      g.vars.push_back(name);
      g.coords.push_back(Scalar::variable(name));
    }
    if (!clash) return g;
  }
  throw PreconditionError("no free names for generic coefficients");
}

Scalar contact_polynomial(const LieAlgebra& L, const GenericCovector& g) {
  require_odd(L, "contact polynomial");
  return contact_top(L, g.coords).first;
}

Scalar contact_polynomial(const LieAlgebra& L) { return contact_polynomial(L, generic_covector(L)); }

Scalar frobenius_polynomial(const LieAlgebra& L, const GenericCovector& g) {
  require_even(L, "Frobenius polynomial");
  return power(ce_d(L, KForm::covector(g.coords)), L.dim() / 2).top_coefficient();
}

Scalar frobenius_polynomial(const LieAlgebra& L) { return frobenius_polynomial(L, generic_covector(L)); }

std::string to_string(ExistenceMode m) { return m == ExistenceMode::Contact ? "contact" : "frobenius"; }

ExistenceVerdict contact_exists(const LieAlgebra& L, const ExistenceOptions& opts) {
  require_odd(L, "contact existence");
  return decide(L, ExistenceMode::Contact, opts);
}

ExistenceVerdict frobenius_exists(const LieAlgebra& L, const ExistenceOptions& opts) {
  require_even(L, "Frobenius existence");
  return decide(L, ExistenceMode::Frobenius, opts);
}

std::vector<std::map<std::string, Rational>> admissible_samples(const LieAlgebra& L, std::size_t count) {
  const auto& params = L.params();
  if (params.empty()) return {{}};
  static const long order[] = {2, 3, -1, 5, -2, 1, 7, 0, -3, 4, 11, -5};
  const std::size_t k = params.size();
  std::vector<std::map<std::string, Rational>> out;
  // Points over the first r values that use value r-1 somewhere, r = 1, 2, ...
  for (std::size_t r = 1; r <= std::size(order) && out.size() < count; ++r) {
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      bool uses_new = std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i == r - 1; });
      if (uses_new) {
        std::map<std::string, Rational> point;
        for (std::size_t t = 0; t < k; ++t) point[params[t]] = order[idx[t]];
        if (satisfies_constraints(L, point)) {
          out.push_back(point);
          if (out.size() == count) break;
        }
      }
      std::size_t t = 0;
      while (t < k && ++idx[t] == r) idx[t++] = 0;
      if (t == k) break;
    }
  }
  return out;
}

KernelRadicalCheck kernel_radical_check(const LieAlgebra& L, const Vector& eta) {
  auto v = is_contact_form(L, eta);
  if (!v.is_contact) throw PreconditionError("1-form is not contact");
  // Work on the locus where eta is contact.
  Constraints cons = L.constraints();
  if (!v.top.is_rational()) cons.push_back(v.top);
  const std::size_t n = L.dim();
  KernelRadicalCheck r;
  Subspace ker(n, nullspace(Matrix{eta}, n, cons), cons);
  r.kernel_is_subalgebra = is_subalgebra(L, ker);
  Subspace rad = two_form_radical(ce_d(L, KForm::covector(eta)), cons);
  r.radical_dim = rad.dim();
  r.radical_is_reeb_line = rad.dim() == 1 && rad.contains(v.reeb->numerator);
  return r;
}

DecomposableCheck decomposable_criterion(const LieAlgebra& A, const LieAlgebra& B) {
  if ((A.dim() + B.dim()) % 2 == 0) throw PreconditionError("summand dimensions must add up to an odd number");
  DecomposableCheck c;
  c.sum_contact = contact_exists(direct_sum(A, B)).exists;
  const LieAlgebra& odd = A.dim() % 2 ? A : B;
  const LieAlgebra& even = A.dim() % 2 ? B : A;
  bool odd_contact = contact_exists(odd).exists;
  bool even_frobenius = even.dim() > 0 && frobenius_exists(even).exists;
  if (A.dim() % 2) {
    c.first_contact = odd_contact;
    c.second_frobenius = even_frobenius;
  } else {
    c.first_frobenius = even_frobenius;
    c.second_contact = odd_contact;
  }
  c.predicted = odd_contact && even_frobenius;
  return c;
}

} // namespace contactlie
