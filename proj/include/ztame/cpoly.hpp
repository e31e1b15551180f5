#pragma once

#include "ztame/scalar.hpp"

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

namespace ztame {

/// Which indexed variable family a commutative polynomial lives in:
/// t0, t1, ... (Formanek coefficients) or zb1, zb2 (z-derivatives).
enum class Family { T, Zbar };

/// Exponent of variable i at position i, trailing zeros trimmed.
using Exponents = std::vector<unsigned>;

/// Graded lexicographic order with t0 < t1 < ...: total degree first, ties
/// broken by the exponent of the highest-index variable.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

unsigned total_degree(const Exponents& e);

class CPolynomial {
 public:
  using Terms = std::map<Exponents, Scalar, GrlexLess>;

  explicit CPolynomial(Family f = Family::T) : family_(f) {}
  CPolynomial(Family f, const Scalar& constant);

  static CPolynomial variable(Family f, std::size_t index);
  static CPolynomial monomial(Family f, Exponents e, const Scalar& c = 1);

  Family family() const { return family_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (0 if absent).
  Scalar constant_term() const;
  std::size_t size() const { return terms_.size(); }

  void add_term(Exponents e, const Scalar& c);

  std::optional<unsigned> total_degree() const;
  std::optional<unsigned> degree_in(std::size_t index) const;
  /// Highest / lowest index of a variable that occurs; nullopt for constants.
  std::optional<std::size_t> max_index() const;
  std::optional<std::size_t> min_index() const;

  /// Leading term in graded lex order. Requires a nonzero polynomial.
  const std::pair<const Exponents, Scalar>& leading_term() const;
  const Scalar& leading_coefficient() const { return leading_term().second; }

  CPolynomial& operator+=(const CPolynomial& rhs);
  CPolynomial& operator-=(const CPolynomial& rhs);
  CPolynomial& operator*=(const Scalar& c);

  friend CPolynomial operator+(CPolynomial a, const CPolynomial& b) { return a += b; }
  friend CPolynomial operator-(CPolynomial a, const CPolynomial& b) { return a -= b; }
  friend CPolynomial operator-(CPolynomial a) { return a *= Scalar(-1); }
  friend CPolynomial operator*(const CPolynomial& a, const CPolynomial& b);
  friend CPolynomial operator*(const Scalar& c, CPolynomial a) { return a *= c; }
  friend CPolynomial operator*(CPolynomial a, const Scalar& c) { return a *= c; }

  friend bool operator==(const CPolynomial& a, const CPolynomial& b);

 private:
  void adopt_family(const CPolynomial& rhs);

  Family family_;
  Terms terms_;
};

/// t_i in the T family.
CPolynomial t(std::size_t index);
/// zb1 or zb2.
CPolynomial zbar(std::size_t index);

CPolynomial c_add(const CPolynomial& p, const CPolynomial& q);
CPolynomial c_mul(const CPolynomial& p, const CPolynomial& q);
CPolynomial c_scale(const Scalar& c, const CPolynomial& p);
CPolynomial c_pow(const CPolynomial& p, unsigned k);

/// q with num == q * den, or nullopt when den does not divide num.
/// Throws DivisionByZeroError when den == 0.
std::optional<CPolynomial> exact_divide(const CPolynomial& num, const CPolynomial& den);

/// Greatest common divisor with leading coefficient 1. Throws Error if both are zero.
CPolynomial gcd(const CPolynomial& p, const CPolynomial& q);

/// p scaled so that its leading coefficient is 1 (zero stays zero).
CPolynomial monic(const CPolynomial& p);

/// Replaces every t_i by t_{i + offset}. Throws NegativeIndexError.
CPolynomial shift_indices(const CPolynomial& p, long offset);

/// Replaces every t_i by t_{index_map(i)}.
CPolynomial rename_indices(const CPolynomial& p, const std::function<std::size_t(std::size_t)>& index_map);

/// Homogeneous component of maximal total degree.
CPolynomial leading_form(const CPolynomial& p);

/// Componentwise minimum of exponent vectors over all terms, i.e. the
/// largest monomial dividing p.
Exponents monomial_content(const CPolynomial& p);

std::ostream& operator<<(std::ostream& os, const CPolynomial& p);

}  // namespace ztame
