#include "ztame/parse.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace ztame {

namespace {

constexpr unsigned kMaxExponent = 4096;

struct Token {
  enum class Type { Number, Variable, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Type type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s, Grammar g) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Type::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (g == Grammar::NonCommutative && (c == 'x' || c == 'y' || c == 'z')) {
      out.push_back({Token::Type::Variable, std::string(1, c), start});
      ++i;
      continue;
    }
    if (g == Grammar::Commutative && c == 't') {
      ++i;
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) throw SyntaxError(i, "expected index after t");
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Type::Variable, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (g == Grammar::Commutative && c == 'z') {
      if (s.substr(i, 3) == "zb1" || s.substr(i, 3) == "zb2") {
        out.push_back({Token::Type::Variable, std::string(s.substr(i, 3)), start});
        i += 3;
        continue;
      }
      throw SyntaxError(i + (i + 1 < s.size() && s[i + 1] == 'b' ? 2 : 1), "expected zb1 or zb2");
    }
    Token::Type t;
    switch (c) {
      case '+': t = Token::Type::Plus; break;
      case '-': t = Token::Type::Minus; break;
      case '*': t = Token::Type::Star; break;
      case '/': t = Token::Type::Slash; break;
      case '^': t = Token::Type::Caret; break;
      case '(': t = Token::Type::LParen; break;
      case ')': t = Token::Type::RParen; break;
      default: throw SyntaxError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({t, std::string(1, c), start});
    ++i;
  }
  out.push_back({Token::Type::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ParsedExpr parse() {
    ParsedExpr e = expr();
    if (peek().type != Token::Type::End) throw SyntaxError(peek().pos, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  using T = Token::Type;

  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  static bool starts_factor(T t) { return t == T::Number || t == T::Variable || t == T::LParen; }

  ParsedExpr expr() {
    ParsedExpr sum;
    sum.kind = ParsedExpr::Kind::Sum;
    sum.position = peek().pos;
    bool first = true;
    while (true) {
      bool negate = false;
      if (peek().type == T::Plus || peek().type == T::Minus) {
        negate = next().type == T::Minus;
      } else if (!first) {
        break;
      }
      ParsedExpr t = term();
      if (negate) {
        ParsedExpr n;
        n.kind = ParsedExpr::Kind::Negate;
        n.position = t.position;
        n.children.push_back(std::move(t));
        t = std::move(n);
      }
      sum.children.push_back(std::move(t));
      first = false;
    }
    return sum;
  }

  ParsedExpr term() {
    ParsedExpr prod;
    prod.kind = ParsedExpr::Kind::Product;
    prod.position = peek().pos;
    prod.children.push_back(factor());
    while (true) {
      if (peek().type == T::Star) {
        next();
        prod.children.push_back(factor());
      } else if (starts_factor(peek().type)) {
        prod.children.push_back(factor());
      } else {
        break;
      }
    }
    return prod;
  }

  ParsedExpr factor() {
    ParsedExpr base = primary();
    if (peek().type != T::Caret) return base;
    next();
    const Token& tok = peek();
    if (tok.type != T::Number) throw SyntaxError(tok.pos, "expected exponent");
    next();
    if (tok.text.size() > 6 || std::stoul(tok.text) > kMaxExponent) throw SyntaxError(tok.pos, "exponent too large");
    ParsedExpr p;
    p.kind = ParsedExpr::Kind::Power;
    p.position = base.position;
    p.exponent = static_cast<unsigned>(std::stoul(tok.text));
    p.children.push_back(std::move(base));
    return p;
  }

  ParsedExpr primary() {
    const Token& tok = peek();
    ParsedExpr e;
    e.position = tok.pos;
    switch (tok.type) {
      case T::Number: {
        next();
        mpz_class num(tok.text), den(1);
        if (peek().type == T::Slash) {
          next();
          const Token& d = peek();
          if (d.type != T::Number) throw SyntaxError(d.pos, "expected denominator");
          next();
          den = mpz_class(d.text);
          if (den == 0) throw SyntaxError(d.pos, "zero denominator");
        }
        e.kind = ParsedExpr::Kind::Number;
        e.value = make_scalar(num, den);
        return e;
      }
      case T::Variable:
        next();
        e.kind = ParsedExpr::Kind::Variable;
        e.name = tok.text;
        return e;
      case T::LParen: {
        next();
        e = expr();
        if (peek().type != T::RParen) throw SyntaxError(peek().pos, "expected ')'");
        next();
        return e;
      }
      default:
        throw SyntaxError(tok.pos, tok.type == T::End ? "unexpected end of input" : "unexpected '" + tok.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

template <class Ring, class Var>
Ring evaluate(const ParsedExpr& e, const Var& var, const Ring& one) {
  switch (e.kind) {
    case ParsedExpr::Kind::Number: return one * e.value;
    case ParsedExpr::Kind::Variable: return var(e);
    case ParsedExpr::Kind::Negate: return -evaluate(e.children.front(), var, one);
    case ParsedExpr::Kind::Sum: {
      Ring acc = one * Scalar(0);
      for (const auto& c : e.children) acc += evaluate(c, var, one);
      return acc;
    }
    case ParsedExpr::Kind::Product: {
      Ring acc = one;
      for (const auto& c : e.children) acc = acc * evaluate(c, var, one);
      return acc;
    }
    case ParsedExpr::Kind::Power: {
      const Ring base = evaluate(e.children.front(), var, one);
      Ring acc = one;
      for (unsigned i = 0; i < e.exponent; ++i) acc = acc * base;
      return acc;
    }
  }
  return one;
}

std::string coefficient_prefix(const Scalar& c, bool leading, bool has_monomial) {
  std::string out;
  const Scalar a = abs(c);
  if (leading) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (!has_monomial) return out + to_string(a);
  if (a != 1) out += to_string(a) + "*";
  return out;
}

}  // namespace

ParsedExpr parse_expr(std::string_view text, Grammar g) { return Parser(lex(text, g)).parse(); }

NCPolynomial parse_nc(std::string_view text) {
  const ParsedExpr e = parse_expr(text, Grammar::NonCommutative);
  auto var = [](const ParsedExpr& v) { return NCPolynomial::variable(static_cast<Letter>(v.name[0])); };
  return evaluate(e, var, NCPolynomial(1));
}

std::string print_nc(const NCPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (const auto& [w, c] : p.terms()) {
    out += coefficient_prefix(c, leading, !w.empty());
    leading = false;
    const std::string& s = w.str();
    for (std::size_t i = 0; i < s.size();) {
      std::size_t j = i;
      while (j < s.size() && s[j] == s[i]) ++j;
      if (i > 0) out += "*";
      out += s[i];
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
  }
  return out;
}

CPolynomial parse_c(std::string_view text, Family family) {
  const ParsedExpr e = parse_expr(text, Grammar::Commutative);
  auto var = [family](const ParsedExpr& v) {
    const bool is_t = v.name[0] == 't';
    if (is_t != (family == Family::T)) throw SyntaxError(v.position, "variable " + v.name + " belongs to the other family");
    if (is_t) {
      if (v.name.size() > 7) throw SyntaxError(v.position, "variable index too large");
      return CPolynomial::variable(Family::T, std::stoul(v.name.substr(1)));
    }
    return CPolynomial::variable(Family::Zbar, v.name[2] - '0');
  };
  return evaluate(e, var, CPolynomial(family, 1));
}

std::string print_c(const CPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    out += coefficient_prefix(c, leading, !e.empty());
    leading = false;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first) out += "*";
      first = false;
      out += p.family() == Family::T ? "t" + std::to_string(i) : "zb" + std::to_string(i);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const NCPolynomial& p) { return os << print_nc(p); }
std::ostream& operator<<(std::ostream& os, const CPolynomial& p) { return os << print_c(p); }

}  // namespace ztame
