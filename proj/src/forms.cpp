#include "contactlie/forms.hpp"

#include <bit>

#include "contactlie/parse.hpp"

namespace contactlie {

namespace {

using Mask = KForm::Mask;

// Number of set bits of m strictly below bit i.
int bits_below(Mask m, std::size_t i) { return std::popcount(m & ((Mask{1} << i) - 1)); }

void check_same(const KForm& a, const KForm& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("forms live on spaces of different dimension");
}

} // namespace

int shuffle_sign(Mask a, Mask b) {
  int inversions = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    std::size_t j = static_cast<std::size_t>(std::countr_zero(rest));
    inversions += std::popcount(a) - bits_below(a, j + 1);
  }
  return inversions % 2 ? -1 : 1;
}

KForm::KForm(std::size_t n, std::size_t degree) : n_(n), k_(degree) {
  if (n > max_dimension) throw DimensionError("forms support dimension at most 31");
  if (degree > n) throw DimensionError("form degree exceeds dimension");
}

KForm KForm::constant(std::size_t n, const Scalar& c) {
  KForm f(n, 0);
  f.add(0, c);
  return f;
}

KForm KForm::covector(const Vector& coords) {
  KForm f(coords.size(), 1);
  for (std::size_t i = 0; i < coords.size(); ++i) f.add(Mask{1} << i, coords[i]);
  return f;
}

KForm KForm::basis(std::size_t n, const std::vector<std::size_t>& indices) {
  KForm f = constant(n, 1);
  for (auto i : indices) {
    if (i >= n) throw DimensionError("basis form index out of range");
    f = wedge(f, covector(unit_vector(n, i)));
  }
  return f;
}

Scalar KForm::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar KForm::coefficient(const std::vector<std::size_t>& sorted_indices) const {
  Mask m = 0;
  for (auto i : sorted_indices) m |= Mask{1} << i;
  return coefficient(m);
}

Scalar KForm::top_coefficient() const {
  if (k_ != n_) throw DimensionError("top coefficient needs a form of top degree");
  return coefficient(static_cast<Mask>((std::uint64_t{1} << n_) - 1));
}

Vector KForm::coords() const {
  if (k_ != 1) throw DimensionError("coordinates are defined for 1-forms only");
  Vector v(n_);
  for (const auto& [m, c] : terms_) v[static_cast<std::size_t>(std::countr_zero(m))] = c;
  return v;
}

void KForm::add(Mask m, const Scalar& c) {
  if (c.is_zero()) return;
  if (static_cast<std::size_t>(std::popcount(m)) != k_) throw DimensionError("term degree differs from form degree");
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

KForm KForm::operator+(const KForm& o) const {
  check_same(*this, o);
  if (k_ != o.k_) throw DimensionError("adding forms of different degree");
  KForm r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, c);
  return r;
}

KForm KForm::operator-() const { return scaled(Scalar(-1)); }

KForm KForm::operator-(const KForm& o) const { return *this + (-o); }

KForm KForm::scaled(const Scalar& c) const {
  KForm r(n_, k_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, c * v);
  return r;
}

KForm KForm::substitute(const std::map<std::string, Rational>& assignment) const {
  KForm r(n_, k_);
  for (const auto& [m, v] : terms_) r.add(m, v.substitute_partial(assignment));
  return r;
}

std::string KForm::to_string(const std::vector<std::string>& labels) const {
  if (labels.size() != n_) throw DimensionError("label count differs from dimension");
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string name;
    for (std::size_t i = 0; i < n_; ++i)
      if (m >> i & 1) name += (name.empty() ? "" : "^") + labels[i] + "*";
    Scalar v = c;
    bool negative = v.is_rational() && sgn(v.rational()) < 0;
    if (negative) v = -v;
    std::string piece;
    if (name.empty()) {
      piece = format_coefficient(v);
    } else {
      piece = v == Scalar(1) ? name : format_coefficient(v) + " " + name;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + piece;
    } else {
      out += (negative ? " - " : " + ") + piece;
    }
  }
  return out;
}

KForm wedge(const KForm& a, const KForm& b) {
  check_same(a, b);
  const std::size_t n = a.ambient();
  if (a.degree() + b.degree() > n) return KForm(n, n); // zero; degree capped at n
  KForm r(n, a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      Scalar c = ca * cb;
      r.add(ma | mb, shuffle_sign(ma, mb) < 0 ? -c : c);
    }
  return r;
}

KForm power(const KForm& w, std::size_t m) {
  const std::size_t n = w.ambient();
  if (m * w.degree() > n) return KForm(n, n);
  KForm r = KForm::constant(n, 1);
  for (std::size_t i = 0; i < m; ++i) r = wedge(r, w);
  return r;
}

KForm ce_d(const LieAlgebra& L, const KForm& theta) {
  const std::size_t n = theta.ambient();
  if (L.dim() != n) throw DimensionError("ce_d: form and algebra dimensions differ");
  const std::size_t k = theta.degree();
  if (k == n) return KForm(n, n);
  KForm out(n, k + 1);
  // For each term theta_J and each m in J, theta(e_m, rest) = (-1)^{pos(m,J)} theta_J
  // with rest = J \ {m}; a pair (a<b) outside rest with c_ab^m != 0 then
  // contributes to the output tuple rest + {a, b}.
  for (const auto& [J, coeff] : theta.terms()) {
    for (Mask bits = J; bits; bits &= bits - 1) {
      std::size_t m = static_cast<std::size_t>(std::countr_zero(bits));
      Mask rest = J & ~(Mask{1} << m);
      int sign_m = bits_below(J, m) % 2 ? -1 : 1;
      for (const auto& sc : L.constants_into(m)) {
        Mask ab = (Mask{1} << sc.a) | (Mask{1} << sc.b);
        if (rest & ab) continue;
        Mask X = rest | ab;
        int i = bits_below(X, sc.a), j = bits_below(X, sc.b);
        int sign = ((i + j) % 2 ? -1 : 1) * sign_m;
        Scalar c = sc.c * coeff;
        out.add(X, sign < 0 ? -c : c);
      }
    }
  }
  return out;
}

Scalar eval(const KForm& theta, const std::vector<Vector>& vectors) {
  const std::size_t k = theta.degree();
  if (vectors.size() != k) throw DimensionError("eval: number of vectors differs from form degree");
  for (const auto& v : vectors)
    if (v.size() != theta.ambient()) throw DimensionError("eval: vector length differs from dimension");
  Scalar total;
  for (const auto& [m, c] : theta.terms()) {
    std::vector<std::size_t> idx;
    for (Mask bits = m; bits; bits &= bits - 1) idx.push_back(static_cast<std::size_t>(std::countr_zero(bits)));
    Matrix sub(k, Vector(k));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t s = 0; s < k; ++s) sub[r][s] = vectors[s][idx[r]];
    Scalar d = determinant(sub);
    if (!d.is_zero()) total += c * d;
  }
  return total;
}

KForm interior(const Vector& x, const KForm& theta) {
  const std::size_t n = theta.ambient();
  if (x.size() != n) throw DimensionError("interior: vector length differs from dimension");
  if (theta.degree() == 0) throw DimensionError("interior: form has degree 0");
  KForm out(n, theta.degree() - 1);
  for (const auto& [m, c] : theta.terms())
    for (Mask bits = m; bits; bits &= bits - 1) {
      std::size_t i = static_cast<std::size_t>(std::countr_zero(bits));
      if (x[i].is_zero()) continue;
      Scalar v = x[i] * c;
      out.add(m & ~(Mask{1} << i), bits_below(m, i) % 2 ? -v : v);
    }
  return out;
}

Matrix two_form_matrix(const KForm& w) {
  if (w.degree() != 2) throw DimensionError("expected a 2-form");
  const std::size_t n = w.ambient();
  Matrix M(n, Vector(n));
  for (const auto& [m, c] : w.terms()) {
    std::size_t i = static_cast<std::size_t>(std::countr_zero(m));
    std::size_t j = static_cast<std::size_t>(std::countr_zero(m & (m - 1)));
    M[i][j] = c;
    M[j][i] = -c;
  }
  return M;
}

Subspace two_form_radical(const KForm& w, const Constraints& constraints) {
  const std::size_t n = w.ambient();
  return Subspace(n, nullspace(two_form_matrix(w), n, constraints), constraints);
}

std::size_t two_form_rank(const KForm& w, const Constraints& constraints) {
  return rank(two_form_matrix(w), constraints);
}

} // namespace contactlie
