#pragma once

#include "ztame/cpoly.hpp"
#include "ztame/errors.hpp"
#include "ztame/ncpoly.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ztame {

struct SyntaxError : Error {
  SyntaxError(std::size_t position, const std::string& what)
      : Error("syntax error at offset " + std::to_string(position) + ": " + what), position(position) {}
  std::size_t position;
};

/// Abstract syntax tree shared by both polynomial grammars:
///   expr    := sign? term (sign term)*
///   term    := factor ('*'? factor)*
///   factor  := primary ('^' uint)?
///   primary := uint ('/' uint)? | variable | '(' expr ')'
/// Variables are x, y, z for the noncommutative grammar and t<i>, zb1, zb2
/// for the commutative one. Products are read left to right.
struct ParsedExpr {
  enum class Kind { Number, Variable, Sum, Product, Power, Negate };
  Kind kind = Kind::Number;
  Scalar value;           // Number
  std::string name;       // Variable
  unsigned exponent = 0;  // Power
  std::size_t position = 0;
  std::vector<ParsedExpr> children;
};

enum class Grammar { NonCommutative, Commutative };

ParsedExpr parse_expr(std::string_view text, Grammar g);

NCPolynomial parse_nc(std::string_view text);
/// Words in ascending length-lex order, runs written as powers: "x + z*x*z - z^2*y".
std::string print_nc(const NCPolynomial& p);

/// t-family or zbar-family polynomial; a variable of the other family is a SyntaxError.
CPolynomial parse_c(std::string_view text, Family family);
/// Terms in descending graded-lex order: "t1^2 + 3*t0*t1 - 1".
std::string print_c(const CPolynomial& p);

}  // namespace ztame
