#include "contactlie/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "contactlie/parse.hpp"

namespace contactlie {

namespace {

struct VariableTable {
  std::mutex mutex;
  std::unordered_map<std::string, VarId> ids;
  std::deque<std::string> names; // deque: references stay valid on growth
};

VariableTable& table() {
  static VariableTable t;
  return t;
}

// Graded lexicographic with smaller ids ranking as larger variables.
int compare(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  std::size_t i = 0;
  for (; i < a.powers.size() && i < b.powers.size(); ++i) {
    const auto& [va, ea] = a.powers[i];
    const auto& [vb, eb] = b.powers[i];
    if (va != vb) return va < vb ? 1 : -1;
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  if (i < a.powers.size()) return 1;
  if (i < b.powers.size()) return -1;
  return 0;
}

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.powers.reserve(a.powers.size() + b.powers.size());
  std::size_t i = 0, j = 0;
  while (i < a.powers.size() || j < b.powers.size()) {
    if (j == b.powers.size() || (i < a.powers.size() && a.powers[i].first < b.powers[j].first)) {
      r.powers.push_back(a.powers[i++]);
    } else if (i == a.powers.size() || b.powers[j].first < a.powers[i].first) {
      r.powers.push_back(b.powers[j++]);
    } else {
      r.powers.emplace_back(a.powers[i].first, a.powers[i].second + b.powers[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

// a / b when b divides a monomially.
std::optional<Monomial> divide(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0;
  for (const auto& [v, e] : b.powers) {
    while (i < a.powers.size() && a.powers[i].first < v) r.powers.push_back(a.powers[i++]);
    if (i == a.powers.size() || a.powers[i].first != v || a.powers[i].second < e) return std::nullopt;
    if (a.powers[i].second > e) r.powers.emplace_back(v, a.powers[i].second - e);
    ++i;
  }
  while (i < a.powers.size()) r.powers.push_back(a.powers[i++]);
  return r;
}

std::vector<Scalar::Term> combine(std::map<Monomial, Rational, MonomialGreater>&& acc) {
  std::vector<Scalar::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) out.push_back({m, std::move(c)});
  }
  return out;
}

Rational rational_pow(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned k = 0; k < e; ++k) r *= base;
  return r;
}

} // namespace

VarId intern_variable(const std::string& name) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  auto it = t.ids.find(name);
  if (it != t.ids.end()) return it->second;
  VarId id = static_cast<VarId>(t.names.size());
  t.names.push_back(name);
  t.ids.emplace(name, id);
  return id;
}

const std::string& variable_name(VarId id) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  return t.names.at(id);
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      mpz_class na(a.substr(i, i2 - i)), nb(b.substr(j, j2 - j));
      if (na != nb) return na < nb;
      i = i2;
      j = j2;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& p : powers) d += p.second;
  return d;
}

unsigned Monomial::degree_in(VarId v) const {
  for (const auto& p : powers)
    if (p.first == v) return p.second;
  return 0;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Scalar::Scalar(long value) {
  if (value != 0) terms_.push_back({Monomial{}, Rational(value)});
}

Scalar::Scalar(const Rational& value) {
  if (sgn(value) != 0) {
    Rational c = value;
    c.canonicalize();
    terms_.push_back({Monomial{}, c});
  }
}

Scalar Scalar::variable(const std::string& name) {
  Monomial m;
  m.powers.emplace_back(intern_variable(name), 1u);
  return Scalar(std::vector<Term>{{m, Rational(1)}});
}

Scalar Scalar::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rational, MonomialGreater> acc;
  for (auto& t : terms) {
    std::sort(t.monomial.powers.begin(), t.monomial.powers.end());
    t.coeff.canonicalize();
    acc[t.monomial] += t.coeff;
  }
  return Scalar(combine(std::move(acc)));
}

Scalar Scalar::parse(const std::string& text) { return parse_scalar(text, nullptr); }

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.powers.empty());
}

Rational Scalar::rational() const {
  if (!is_rational()) throw PreconditionError("scalar '" + to_string() + "' is not a constant");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

std::vector<std::string> Scalar::variables() const {
  std::vector<VarId> ids;
  for (const auto& t : terms_)
    for (const auto& p : t.monomial.powers) ids.push_back(p.first);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<std::string> names;
  for (VarId id : ids) names.push_back(variable_name(id));
  std::sort(names.begin(), names.end(), natural_less);
  return names;
}

bool Scalar::has_variable(const std::string& name) const { return degree_in(name) > 0; }

unsigned Scalar::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

unsigned Scalar::degree_in(const std::string& name) const {
  VarId v = intern_variable(name);
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree_in(v));
  return d;
}

Scalar Scalar::substitute(const std::map<std::string, Rational>& assignment) const {
  for (const auto& name : variables())
    if (!assignment.count(name)) throw MissingVariable(name);
  return substitute_partial(assignment);
}

Scalar Scalar::substitute_partial(const std::map<std::string, Rational>& assignment) const {
  if (is_rational()) return *this;
  std::map<VarId, Rational> values;
  for (const auto& [name, value] : assignment) {
    Rational v = value;
    v.canonicalize();
    values[intern_variable(name)] = v;
  }
  std::map<Monomial, Rational, MonomialGreater> acc;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    Monomial rest;
    for (const auto& [v, e] : t.monomial.powers) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest.powers.emplace_back(v, e);
      } else {
        c *= rational_pow(it->second, e);
      }
    }
    acc[rest] += c;
  }
  return Scalar(combine(std::move(acc)));
}

Scalar Scalar::substitute(const std::string& name, const Scalar& value) const {
  VarId v = intern_variable(name);
  Scalar result;
  for (const auto& t : terms_) {
    Monomial rest;
    unsigned e = 0;
    for (const auto& p : t.monomial.powers) {
      if (p.first == v) {
        e = p.second;
      } else {
        rest.powers.push_back(p);
      }
    }
    result += Scalar(std::vector<Term>{{rest, t.coeff}}) * value.pow(e);
  }
  return result;
}

std::map<Monomial, Scalar> Scalar::coefficients_in(const std::vector<std::string>& vars) const {
  std::vector<VarId> ids;
  for (const auto& n : vars) ids.push_back(intern_variable(n));
  std::sort(ids.begin(), ids.end());
  std::map<Monomial, Scalar> out;
  std::map<Monomial, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    Monomial inside, outside;
    for (const auto& p : t.monomial.powers) {
      if (std::binary_search(ids.begin(), ids.end(), p.first)) {
        inside.powers.push_back(p);
      } else {
        outside.powers.push_back(p);
      }
    }
    groups[inside].push_back({outside, t.coeff});
  }
  for (auto& [m, terms] : groups) out.emplace(m, from_terms(std::move(terms)));
  return out;
}

std::optional<Scalar> Scalar::divide_exact(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw PreconditionError("division by zero polynomial");
  Scalar rem = a;
  std::vector<Term> quotient;
  const Term& lead = b.terms_.front();
  while (!rem.is_zero()) {
    const Term& lt = rem.terms_.front();
    auto m = divide(lt.monomial, lead.monomial);
    if (!m) return std::nullopt;
    Term q{*m, lt.coeff / lead.coeff};
    quotient.push_back(q);
    rem = rem - Scalar(std::vector<Term>{q}) * b;
  }
  return from_terms(std::move(quotient));
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> names;
  for (const auto& n : variables()) names.push_back(n);
  std::vector<VarId> order;
  for (const auto& n : names) order.push_back(intern_variable(n));
  auto exponents = [&](const Monomial& m) {
    std::vector<unsigned> e(order.size(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) e[k] = m.degree_in(order[k]);
    return e;
  };
  std::vector<std::pair<std::vector<unsigned>, const Term*>> sorted;
  for (const auto& t : terms_) sorted.emplace_back(exponents(t.monomial), &t);
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    unsigned da = 0, db = 0;
    for (unsigned x : a.first) da += x;
    for (unsigned x : b.first) db += x;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, term] : sorted) {
    Rational c = term->coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (exps[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[k];
      if (exps[k] > 1) mono += '^' + std::to_string(exps[k]);
    }
    if (mono.empty()) {
      out << contactlie::to_string(c);
    } else if (c == 1) {
      out << mono;
    } else {
      out << contactlie::to_string(c) << '*' << mono;
    }
  }
  return out.str();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<Scalar::Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c = (i == a.terms_.size())   ? -1
            : (j == b.terms_.size()) ? 1
                                     : compare(a.terms_[i].monomial, b.terms_[j].monomial);
    if (c > 0) {
      out.push_back(a.terms_[i++]);
    } else if (c < 0) {
      out.push_back(b.terms_[j++]);
    } else {
      Rational s = a.terms_[i].coeff + b.terms_[j].coeff;
      if (sgn(s) != 0) out.push_back({a.terms_[i].monomial, s});
      ++i;
      ++j;
    }
  }
  return Scalar(std::move(out));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.is_rational()) {
    if (a.terms_[0].coeff == 1) return b;
    Scalar r = b;
    for (auto& t : r.terms_) t.coeff *= a.terms_[0].coeff;
    return r;
  }
  if (b.is_rational()) return b * a;
  std::map<Monomial, Rational, MonomialGreater> acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc[multiply(x.monomial, y.monomial)] += x.coeff * y.coeff;
  return Scalar(combine(std::move(acc)));
}

Scalar Scalar::divided_by(const Rational& d) const {
  if (sgn(d) == 0) throw PreconditionError("division by zero");
  Rational dc = d;
  dc.canonicalize();
  Scalar r = *this;
  for (auto& t : r.terms_) t.coeff /= dc;
  return r;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar r(1L);
  for (unsigned k = 0; k < e; ++k) r *= *this;
  return r;
}

} // namespace contactlie
