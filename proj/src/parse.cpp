#include "contactlie/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace contactlie {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
};

std::vector<Token> lex(const std::string& s, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, s.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
        ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i)});
      i = j;
    } else {
      Tok k;
      switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "' in '" + s + "'", line);
      }
      out.push_back({k, std::string(1, c)});
      ++i;
    }
  }
  out.push_back({Tok::End, ""});
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// A term of a linear combination is a product of scalar factors and at
// most one basis label; a pure scalar expression never sees labels.
class Parser {
public:
  Parser(const std::string& text, const std::vector<std::string>* params, const std::vector<std::string>* labels,
         bool starred, int line)
      : text_(text), toks_(lex(text, line)), params_(params), labels_(labels), starred_(starred), line_(line) {}

  Scalar scalar_expression() {
    Scalar s = expr();
    expect_end();
    return s;
  }

  std::vector<Scalar> combination() {
    std::vector<Scalar> coords(labels_->size());
    bool first = true;
    while (true) {
      Scalar sign = 1;
      if (peek() == Tok::Plus || peek() == Tok::Minus) {
        if (next().kind == Tok::Minus) sign = -1;
      } else if (!first) {
        break;
      }
      first = false;
      auto [coef, label] = term();
      if (label) {
        coords[*label] += sign * coef;
      } else if (!coef.is_zero()) {
        fail("term '" + coef.to_string() + "' has no basis label");
      }
      if (peek() != Tok::Plus && peek() != Tok::Minus) break;
    }
    expect_end();
    return coords;
  }

private:
  Tok peek() const { return toks_[pos_].kind; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what + " in '" + text_ + "'", line_); }
  void expect_end() {
    if (peek() != Tok::End) fail("unexpected '" + toks_[pos_].text + "'");
  }

  bool is_label(const std::string& name) const { return labels_ && contains(*labels_, name); }

  Scalar expr() {
    Scalar acc;
    bool first = true;
    while (true) {
      Scalar sign = 1;
      if (peek() == Tok::Plus || peek() == Tok::Minus) {
        if (next().kind == Tok::Minus) sign = -1;
      } else if (!first) {
        break;
      }
      first = false;
      acc += sign * product();
      if (peek() != Tok::Plus && peek() != Tok::Minus) break;
    }
    return acc;
  }

  Scalar product() {
    Scalar acc = power();
    while (true) {
      if (peek() == Tok::Star) {
        next();
        acc *= power();
      } else if (peek() == Tok::Slash) {
        next();
        acc = divide(acc, power());
      } else if (peek() == Tok::Number || peek() == Tok::Ident || peek() == Tok::LParen) {
        acc *= power(); // juxtaposition
      } else {
        return acc;
      }
    }
  }

  Scalar divide(const Scalar& a, const Scalar& b) const {
    if (!b.is_rational() || b.is_zero()) fail("division by a non-constant or zero");
    return a.divided_by(b.rational());
  }

  Scalar power() {
    Scalar base = atom();
    if (peek() == Tok::Caret) {
      next();
      const Token& t = next();
      if (t.kind != Tok::Number) fail("exponent must be a nonnegative integer");
      base = base.pow(static_cast<unsigned>(std::stoul(t.text)));
    }
    return base;
  }

  Scalar atom() {
    const Token& t = next();
    switch (t.kind) {
    case Tok::Number: return Scalar(Rational(mpz_class(t.text)));
    case Tok::Ident:
      if (is_label(t.text)) fail("basis label '" + t.text + "' inside a scalar");
      if (params_ && !contains(*params_, t.text)) fail("unknown parameter '" + t.text + "'");
      return Scalar::variable(t.text);
    case Tok::LParen: {
      Scalar s = expr();
      if (next().kind != Tok::RParen) fail("missing ')'");
      return s;
    }
    case Tok::Minus: return -power();
    default: fail("unexpected '" + t.text + "'");
    }
  }

  // One factor of a combination term: label, starred label or scalar atom.
  std::pair<Scalar, std::optional<std::size_t>> term() {
    Scalar coef = 1;
    std::optional<std::size_t> label;
    bool expect_factor = true;
    while (true) {
      Tok k = peek();
      if (k == Tok::Ident && is_label(toks_[pos_].text)) {
        if (label) fail("two basis labels in one term");
        auto it = std::find(labels_->begin(), labels_->end(), toks_[pos_].text);
        label = static_cast<std::size_t>(it - labels_->begin());
        next();
        if (starred_) {
          if (peek() != Tok::Star) fail("expected '*' after covector label '" + *it + "'");
          next();
        }
        expect_factor = false;
        continue;
      }
      if (k == Tok::Star && !expect_factor) {
        next();
        expect_factor = true;
        continue;
      }
      if (k == Tok::Slash) {
        next();
        coef = divide(coef, power());
        expect_factor = false;
        continue;
      }
      if (k == Tok::Number || k == Tok::Ident || k == Tok::LParen) {
        coef *= power();
        expect_factor = false;
        continue;
      }
      break;
    }
    if (expect_factor) fail("incomplete term");
    return {coef, label};
  }

  std::string text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* params_;
  const std::vector<std::string>* labels_;
  bool starred_;
  int line_;
};

} // namespace

Scalar parse_scalar(const std::string& text, const std::vector<std::string>* params, int line) {
  return Parser(text, params, nullptr, false, line).scalar_expression();
}

std::vector<Scalar> parse_combination(const std::string& text, const std::vector<std::string>& labels,
                                      const std::vector<std::string>& params, bool starred, int line) {
  return Parser(text, &params, &labels, starred, line).combination();
}

std::string format_coefficient(const Scalar& s) {
  if (s.is_rational()) {
    Rational r = s.rational();
    if (r.get_den() == 1) return to_string(r);
  }
  return "(" + s.to_string() + ")";
}

std::string format_combination(const std::vector<Scalar>& coords, const std::vector<std::string>& labels,
                               bool starred) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    std::string name = labels[i] + (starred ? "*" : "");
    Scalar c = coords[i];
    bool negative = c.is_rational() && sgn(c.rational()) < 0;
    if (negative) c = -c;
    std::string piece = (c == Scalar(1)) ? name : format_coefficient(c) + " " + name;
    if (out.empty()) {
      out = (negative ? "-" : "") + piece;
    } else {
      out += (negative ? " - " : " + ") + piece;
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace contactlie
