#include "contactlie/linalg.hpp"

#include <map>

namespace contactlie {

bool implied_nonzero(const Scalar& s, const Constraints& constraints) {
  if (s.is_zero()) return false;
  Scalar rest = s;
  bool progress = true;
  while (!rest.is_rational() && progress) {
    progress = false;
    for (const auto& c : constraints) {
      if (c.is_rational()) continue;
      if (auto q = Scalar::divide_exact(rest, c)) {
        rest = *q;
        progress = true;
        if (rest.is_rational()) break;
      }
    }
  }
  return rest.is_rational();
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector lengths differ");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector lengths differ");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector r(v.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector lengths differ");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector substitute(const Vector& v, const std::map<std::string, Rational>& assignment) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].substitute_partial(assignment);
  return r;
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m[0].size(), Vector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
  Vector r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

namespace {

// Elimination restricted to pivot columns < col_limit.
Echelon echelon_limited(Matrix m, const Constraints& constraints, std::size_t col_limit) {
  Echelon out;
  if (m.empty()) return out;
  const std::size_t cols = m[0].size();
  col_limit = std::min(col_limit, cols);
  std::vector<bool> used(cols, false);
  std::size_t r = 0;
  while (r < m.size()) {
    // Pick the pivot: constants first, then entries implied nonzero with fewest terms.
    std::size_t best_row = m.size(), best_col = cols;
    int best_rank = 3;
    std::size_t best_terms = 0;
    for (std::size_t c = 0; c < col_limit && best_rank > 0; ++c) {
      if (used[c]) continue;
      for (std::size_t i = r; i < m.size(); ++i) {
        const Scalar& e = m[i][c];
        if (e.is_zero()) continue;
        int rank_of = e.is_rational() ? 0 : 1;
        if (rank_of == 1 && !implied_nonzero(e, constraints)) continue;
        std::size_t terms = e.terms().size();
        if (rank_of < best_rank || (rank_of == best_rank && terms < best_terms)) {
          best_rank = rank_of;
          best_terms = terms;
          best_row = i;
          best_col = c;
          if (rank_of == 0) break;
        }
      }
    }
    if (best_row == m.size()) {
      const Scalar* offending = nullptr;
      for (std::size_t i = r; i < m.size(); ++i)
        for (std::size_t c = 0; c < col_limit; ++c)
          if (!used[c] && !m[i][c].is_zero() &&
              (!offending || m[i][c].terms().size() < offending->terms().size()))
            offending = &m[i][c];
      if (offending) throw RankInstability(*offending);
      break;
    }
    std::swap(m[r], m[best_row]);
    used[best_col] = true;
    Scalar pivot = m[r][best_col];
    if (pivot.is_rational()) {
      Rational inv = 1 / pivot.rational();
      for (auto& x : m[r]) x = x * Scalar(inv);
      pivot = 1;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][best_col].is_zero()) continue;
      Scalar factor = m[i][best_col];
      for (std::size_t c = 0; c < cols; ++c) {
        Scalar scaled = (pivot == Scalar(1)) ? m[i][c] : pivot * m[i][c];
        if (!m[r][c].is_zero()) scaled -= factor * m[r][c];
        m[i][c] = std::move(scaled);
      }
    }
    out.pivot_cols.push_back(best_col);
    ++r;
  }
  m.resize(out.pivot_cols.size());
  out.rows = std::move(m);
  return out;
}

} // namespace

Echelon echelon(Matrix m, const Constraints& constraints) {
  std::size_t cols = m.empty() ? 0 : m[0].size();
  return echelon_limited(std::move(m), constraints, cols);
}

std::size_t rank(const Matrix& m, const Constraints& constraints) {
  return echelon(m, constraints).pivot_cols.size();
}

std::vector<Vector> nullspace(const Matrix& m, std::size_t cols, const Constraints& constraints) {
  if (!m.empty() && m[0].size() != cols) throw DimensionError("nullspace: column count mismatch");
  Echelon e = echelon(m, constraints);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Scalar common = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      const Scalar& piv = e.rows[i][e.pivot_cols[i]];
      if (!e.rows[i][f].is_zero() && !(piv == Scalar(1))) common *= piv;
    }
    Vector v(cols);
    v[f] = common;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      const Scalar& a = e.rows[i][f];
      if (a.is_zero()) continue;
      const Scalar& piv = e.rows[i][e.pivot_cols[i]];
      Scalar others = common;
      if (!(piv == Scalar(1))) others = *Scalar::divide_exact(common, piv);
      v[e.pivot_cols[i]] = -(a * others);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FracVector FracVector::normalized() const {
  if (!denominator.is_rational() || denominator == Scalar(1)) return *this;
  Rational d = denominator.rational();
  FracVector r;
  r.numerator.resize(numerator.size());
  for (std::size_t i = 0; i < numerator.size(); ++i) r.numerator[i] = numerator[i].divided_by(d);
  r.denominator = 1;
  return r;
}

std::optional<FracVector> solve_unique(const Matrix& m, const Vector& b, const Constraints& constraints) {
  const std::size_t n = m.size();
  if (b.size() != n) throw DimensionError("solve: right-hand side length mismatch");
  Matrix aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw DimensionError("solve: matrix is not square");
    aug[i].push_back(-b[i]);
  }
  Echelon e = echelon_limited(std::move(aug), constraints, n);
  if (e.pivot_cols.size() < n) return std::nullopt;
  Scalar common = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar& piv = e.rows[i][e.pivot_cols[i]];
    if (!(piv == Scalar(1)) && !e.rows[i][n].is_zero()) common *= piv;
  }
  FracVector x;
  x.numerator.resize(n);
  x.denominator = common;
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar& a = e.rows[i][n];
    if (a.is_zero()) continue;
    const Scalar& piv = e.rows[i][e.pivot_cols[i]];
    Scalar others = (piv == Scalar(1)) ? common : *Scalar::divide_exact(common, piv);
    x.numerator[e.pivot_cols[i]] = -(a * others);
  }
  return x.normalized();
}

std::optional<Matrix> inverse_rational(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionError("inverse: matrix is not square");
    for (const auto& x : m[i])
      if (!x.is_rational()) throw PreconditionError("inverse: matrix entries must be constants");
    aug[i] = m[i];
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Scalar(1) : Scalar());
  }
  Echelon e = echelon_limited(std::move(aug), {}, n);
  if (e.pivot_cols.size() < n) return std::nullopt;
  Matrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[e.pivot_cols[i]] = Vector(e.rows[i].begin() + n, e.rows[i].end());
  return inv;
}

Scalar determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n > 24) throw PreconditionError("determinant: matrix too large for subset expansion");
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("determinant: matrix is not square");
  // f[S] = determinant of the last |S| rows restricted to the columns in S.
  std::vector<Scalar> f(std::size_t{1} << n);
  f[0] = 1;
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    for (std::size_t mask = 1; mask < f.size(); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
      Scalar acc;
      int position = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(mask >> j & 1)) continue;
        const Scalar& sub = f[mask & ~(std::size_t{1} << j)];
        if (!m[row][j].is_zero() && !sub.is_zero()) {
          Scalar term = m[row][j] * sub;
          if (position % 2 == 0) {
            acc += term;
          } else {
            acc -= term;
          }
        }
        ++position;
      }
      f[mask] = std::move(acc);
    }
  }
  return f.back();
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

} // namespace contactlie
