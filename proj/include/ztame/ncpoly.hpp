#pragma once

#include "ztame/scalar.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace ztame {

enum class Letter : char { X = 'x', Y = 'y', Z = 'z' };

/// (xy-degree, z-degree), compared lexicographically.
struct BiDegree {
  long d = 0;
  long e = 0;
  friend auto operator<=>(const BiDegree&, const BiDegree&) = default;
};

/// Weights (a, b) turn a monomial into (a*deg_x + b*deg_y, deg_z).
struct Weights {
  long x = 1;
  long y = 1;
};

/// A monomial of K<x,y,z>. Words are ordered by length first, then
/// lexicographically with x < y < z.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters);
  static Word of(Letter l, std::size_t times = 1);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  const std::string& str() const { return letters_; }

  unsigned count(Letter l) const;
  BiDegree bidegree(Weights w = {}) const;

  Word operator*(const Word& rhs) const { return Word(letters_ + rhs.letters_, Trusted{}); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.letters_.compare(b.letters_) <=> 0;
  }

 private:
  struct Trusted {};
  Word(std::string letters, Trusted) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// Sparse polynomial in noncommuting x, y, z over Q. No zero coefficient is
/// ever stored, so structural equality is polynomial equality.
class NCPolynomial {
 public:
  using Terms = std::map<Word, Scalar>;

  NCPolynomial() = default;
  NCPolynomial(const Scalar& constant);  // NOLINT: constants embed implicitly
  NCPolynomial(long constant) : NCPolynomial(Scalar(constant)) {}  // NOLINT

  static NCPolynomial variable(Letter l);
  static NCPolynomial monomial(const Word& w, const Scalar& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Word& w) const;

  /// Adds c*w, dropping the entry if it cancels.
  void add_term(const Word& w, const Scalar& c);

  NCPolynomial& operator+=(const NCPolynomial& rhs);
  NCPolynomial& operator-=(const NCPolynomial& rhs);
  NCPolynomial& operator*=(const Scalar& c);

  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator-(NCPolynomial a) { return a *= Scalar(-1); }
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
  friend NCPolynomial operator*(const Scalar& c, NCPolynomial a) { return a *= c; }
  friend NCPolynomial operator*(NCPolynomial a, const Scalar& c) { return a *= c; }

  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

 private:
  Terms terms_;
};

NCPolynomial x();
NCPolynomial y();
NCPolynomial z();

NCPolynomial add(const NCPolynomial& p, const NCPolynomial& q);
NCPolynomial mul(const NCPolynomial& p, const NCPolynomial& q);
NCPolynomial scale(const Scalar& c, const NCPolynomial& p);
NCPolynomial pow(const NCPolynomial& p, unsigned k);

/// Maximal number of occurrences of the letter; nullopt encodes -infinity (p = 0).
std::optional<unsigned> degree_in(const NCPolynomial& p, Letter l);
/// Maximal deg_x + deg_y over monomials; nullopt for p = 0.
std::optional<unsigned> xy_degree(const NCPolynomial& p);
/// Maximal weighted bidegree; nullopt for p = 0.
std::optional<BiDegree> bidegree(const NCPolynomial& p, Weights w = {});

/// Sum of the monomials of maximal weighted bidegree. Throws ZeroPolynomialError.
NCPolynomial leading_bicomponent(const NCPolynomial& p, Weights w = {});
bool is_bihomogeneous(const NCPolynomial& p, Weights w = {});

/// Ring endomorphism x -> image_x, y -> image_y, z -> z.
NCPolynomial substitute(const NCPolynomial& p, const NCPolynomial& image_x,
                        const NCPolynomial& image_y);

/// p with the given letter set to zero.
NCPolynomial drop_letter(const NCPolynomial& p, Letter l);
bool contains_letter(const NCPolynomial& p, Letter l);

bool depends_only_on_z(const NCPolynomial& p);
bool is_linear_in_xy(const NCPolynomial& p);

std::ostream& operator<<(std::ostream& os, const NCPolynomial& p);

}  // namespace ztame
