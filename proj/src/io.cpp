#include "contactlie/io.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "contactlie/parse.hpp"

namespace contactlie {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

bool valid_name(const std::string& s) {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_']*");
  return std::regex_match(s, re);
}

struct Line {
  int number;
  std::string keyword;
  std::string rest;
};

Rational parse_rational(const std::string& text, int line) {
  Scalar s = parse_scalar(text, nullptr, line);
  if (!s.is_rational()) throw ParseError("expected a rational number, got '" + text + "'", line);
  return s.rational();
}

std::map<std::string, Rational> parse_assignment_at(const std::string& text, int line) {
  std::map<std::string, Rational> out;
  std::string normalized = text;
  for (auto& c : normalized)
    if (c == ',') c = ' ';
  for (const auto& item : words(normalized)) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value, got '" + item + "'", line);
    std::string name = trim(item.substr(0, eq));
    if (!valid_name(name)) throw ParseError("bad parameter name '" + name + "'", line);
    out[name] = parse_rational(item.substr(eq + 1), line);
  }
  return out;
}

} // namespace

std::map<std::string, Rational> parse_assignment(const std::string& text) { return parse_assignment_at(text, 0); }

std::string format_assignment(const std::map<std::string, Rational>& a) {
  std::vector<std::string> names;
  for (const auto& [k, v] : a) names.push_back(k);
  std::sort(names.begin(), names.end(), natural_less);
  std::string out;
  for (const auto& k : names) out += (out.empty() ? "" : ", ") + k + "=" + to_string(a.at(k));
  return out;
}

LieFile parse_lie(const std::string& text) {
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      raw = trim(raw);
      if (raw.empty()) continue;
      auto sp = raw.find_first_of(" \t");
      std::string kw = raw.substr(0, sp);
      std::string rest = sp == std::string::npos ? "" : trim(raw.substr(sp));
      lines.push_back({number, kw, rest});
    }
  }

  // Header statements first, so the body may refer to them in any order.
  LieFile file;
  std::optional<std::size_t> dim;
  std::optional<std::vector<std::string>> basis;
  std::vector<std::string> params;
  int dim_line = 0;
  for (const auto& l : lines) {
    if (l.keyword == "name") {
      file.name = l.rest;
    } else if (l.keyword == "dim") {
      if (dim) throw ParseError("dim given twice", l.number);
      try {
        std::size_t used = 0;
        long v = std::stol(l.rest, &used);
        if (used != l.rest.size() || v <= 0) throw std::invalid_argument("");
        dim = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw ParseError("dim must be a positive integer, got '" + l.rest + "'", l.number);
      }
      dim_line = l.number;
    } else if (l.keyword == "basis") {
      if (basis) throw ParseError("basis given twice", l.number);
      basis = words(l.rest);
      std::set<std::string> seen;
      for (const auto& b : *basis) {
        if (!valid_name(b)) throw ParseError("bad basis label '" + b + "'", l.number);
        if (!seen.insert(b).second) throw ParseError("duplicate basis label '" + b + "'", l.number);
      }
    } else if (l.keyword == "params") {
      for (const auto& p : words(l.rest)) {
        if (!valid_name(p)) throw ParseError("bad parameter name '" + p + "'", l.number);
        if (std::find(params.begin(), params.end(), p) != params.end())
          throw ParseError("duplicate parameter '" + p + "'", l.number);
        params.push_back(p);
      }
    }
  }
  if (!dim && !basis) throw ParseError("missing dim or basis statement");
  if (!basis) basis = LieAlgebra::default_labels(*dim);
  if (dim && basis->size() != *dim)
    throw ParseError("basis has " + std::to_string(basis->size()) + " labels but dim is " + std::to_string(*dim),
                     dim_line);
  if (basis->size() > KForm::max_dimension) throw ParseError("dimension above 31 is not supported", dim_line);
  for (const auto& p : params)
    if (std::find(basis->begin(), basis->end(), p) != basis->end())
      throw ParseError("parameter '" + p + "' clashes with a basis label");

  LieAlgebra L(*basis, params);
  const std::size_t n = L.dim();
  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
  static const std::regex bracket_re(R"(^\[\s*([^,\s\]]+)\s*,\s*([^,\s\]]+)\s*\]\s*=\s*(.*)$)");
  static const std::regex psi_re(R"(^\s*([^\s>-]+)\s*->\s*(.*)$)");

  auto label_index = [&](const std::string& name, int line) {
    auto idx = L.index_of(name);
    if (!idx) throw ParseError("unknown basis label '" + name + "'", line);
    return *idx;
  };

  for (const auto& l : lines) {
    const int ln = l.number;
    if (l.keyword == "name" || l.keyword == "dim" || l.keyword == "basis" || l.keyword == "params") continue;
    if (l.keyword == "constrain") {
      for (const auto& piece : split(l.rest, ',')) {
        if (piece.empty()) throw ParseError("empty constraint", ln);
        Scalar c = parse_scalar(piece, &params, ln);
        if (c.is_zero()) throw ParseError("constraint '" + piece + "' is identically zero", ln);
        if (!c.is_rational()) L.add_constraint(c);
      }
    } else if (l.keyword == "bracket") {
      std::smatch m;
      if (!std::regex_match(l.rest, m, bracket_re)) throw ParseError("expected 'bracket [x,y] = ...'", ln);
      std::size_t i = label_index(m[1], ln), j = label_index(m[2], ln);
      if (i == j) throw ParseError("bracket of a label with itself", ln);
      auto key = std::minmax(i, j);
      if (!seen_pairs.insert(key).second) throw ParseError("bracket [" + std::string(m[1]) + "," + std::string(m[2]) + "] given twice", ln);
      L.set_bracket(i, j, parse_combination(m[3], *basis, params, false, ln));
    } else if (l.keyword == "form") {
      file.forms.push_back(parse_combination(l.rest, *basis, params, true, ln));
    } else if (l.keyword == "sample") {
      auto a = parse_assignment_at(l.rest, ln);
      for (const auto& [k, v] : a)
        if (std::find(params.begin(), params.end(), k) == params.end())
          throw ParseError("sample assigns unknown parameter '" + k + "'", ln);
      file.samples.push_back(a);
    } else if (l.keyword == "extend") {
      auto ws = l.rest.find_first_of(" \t=");
      std::string what = l.rest.substr(0, ws);
      std::string body = ws == std::string::npos ? "" : trim(l.rest.substr(ws));
      if (what == "psi") {
        Matrix psi(n, Vector(n));
        std::set<std::size_t> given;
        for (const auto& item : split(body, ';')) {
          if (item.empty()) continue;
          std::smatch m;
          if (!std::regex_match(item, m, psi_re)) throw ParseError("expected 'label -> combination' in psi", ln);
          std::size_t i = label_index(m[1], ln);
          if (!given.insert(i).second) throw ParseError("psi(" + std::string(m[1]) + ") given twice", ln);
          psi[i] = parse_combination(m[2], *basis, params, false, ln);
        }
        file.extension.psi = psi;
      } else if (what == "f" || what == "s" || what == "alpha") {
        if (body.empty() || body[0] != '=') throw ParseError("expected 'extend " + what + " = ...'", ln);
        body = trim(body.substr(1));
        if (what == "s") {
          file.extension.s = parse_scalar(body, &params, ln);
        } else {
          Vector v = parse_combination(body, *basis, params, true, ln);
          (what == "f" ? file.extension.f : file.extension.alpha) = v;
        }
      } else {
        throw ParseError("unknown extend item '" + what + "'", ln);
      }
    } else {
      throw ParseError("unknown statement '" + l.keyword + "'", ln);
    }
  }
  file.algebra = std::move(L);
  return file;
}

LieFile read_lie_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_lie(buf.str());
}

std::string write_lie(const LieAlgebra& L, const std::string& name, const std::vector<Vector>& forms,
                      const std::vector<std::map<std::string, Rational>>& samples) {
  std::ostringstream out;
  if (!name.empty()) out << "name " << name << "\n";
  out << "dim " << L.dim() << "\n";
  if (!L.params().empty()) {
    out << "params";
    for (const auto& p : L.params()) out << " " << p;
    out << "\n";
  }
  for (const auto& c : L.constraints()) out << "constrain " << c.to_string() << "\n";
  out << "basis";
  for (const auto& b : L.labels()) out << " " << b;
  out << "\n";
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Vector& v = L.basis_bracket(i, j);
      if (is_zero(v)) continue;
      out << "bracket [" << L.labels()[i] << "," << L.labels()[j] << "] = " << format_combination(v, L.labels(), false)
          << "\n";
    }
  for (const auto& f : forms) out << "form " << format_combination(f, L.labels(), true) << "\n";
  for (const auto& s : samples) out << "sample " << format_assignment(s) << "\n";
  return out.str();
}

std::string write_extension_block(const LieAlgebra& L, const ExtensionBlock& b) {
  std::ostringstream out;
  if (b.psi) {
    out << "extend psi";
    bool first = true;
    for (std::size_t i = 0; i < L.dim(); ++i) {
      if (is_zero((*b.psi)[i])) continue;
      out << (first ? " " : " ; ") << L.labels()[i] << " -> " << format_combination((*b.psi)[i], L.labels(), false);
      first = false;
    }
    if (first) out << " " << L.labels().front() << " -> 0";
    out << "\n";
  }
  if (b.f) out << "extend f = " << format_combination(*b.f, L.labels(), true) << "\n";
  if (b.alpha) out << "extend alpha = " << format_combination(*b.alpha, L.labels(), true) << "\n";
  if (b.s) out << "extend s = " << b.s->to_string() << "\n";
  return out.str();
}

Vector parse_covector(const LieAlgebra& L, const std::string& text) {
  return parse_combination(text, L.labels(), L.params(), true);
}

std::string format_covector(const LieAlgebra& L, const Vector& v) { return format_combination(v, L.labels(), true); }

std::string format_vector(const LieAlgebra& L, const Vector& v) { return format_combination(v, L.labels(), false); }

} // namespace contactlie
