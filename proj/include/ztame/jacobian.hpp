#pragma once

#include "ztame/automorphism.hpp"
#include "ztame/cpoly.hpp"

#include <array>
#include <utility>
#include <variant>
#include <vector>

namespace ztame {

/// (p_x, p_y) over K[zb1, zb2] for p a sum of z^i x z^j and z^i y z^j terms:
/// z^i x z^j contributes zb1^i zb2^j to p_x. Throws NotLinearFormError.
std::pair<CPolynomial, CPolynomial> z_derivatives(const NCPolynomial& p);

/// 2x2 matrix over K[zb1, zb2], row-major.
struct Matrix2 {
  std::array<std::array<CPolynomial, 2>, 2> a{{{CPolynomial(Family::Zbar), CPolynomial(Family::Zbar)},
                                              {CPolynomial(Family::Zbar), CPolynomial(Family::Zbar)}}};

  static Matrix2 identity();
  static Matrix2 of(CPolynomial a00, CPolynomial a01, CPolynomial a10, CPolynomial a11);

  CPolynomial det() const;
  bool is_constant() const;
  friend Matrix2 operator*(const Matrix2& l, const Matrix2& r);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// [[f_x, g_x], [f_y, g_y]] after dropping the pure-z summands of f and g.
/// Throws NotLinearInXYError. jacobian(compose(e1, e2)) == jacobian(e1) * jacobian(e2).
Matrix2 jacobian(const ZEndomorphism& e);

struct ElementaryFactor {
  enum class Kind { Upper, Lower, Diagonal };
  Kind kind = Kind::Upper;
  CPolynomial entry{Family::Zbar};       // off-diagonal entry for Upper / Lower
  Scalar d1 = 1;                         // diagonal entries for Diagonal
  Scalar d2 = 1;

  Matrix2 matrix() const;
  friend bool operator==(const ElementaryFactor&, const ElementaryFactor&) = default;
};

struct ElementaryCertificate {
  std::vector<ElementaryFactor> factors;  // ordered product equals the input
  Matrix2 product() const;
};

struct NotReducible {
  Matrix2 stuck;
};

struct NotInvertible {
  CPolynomial det{Family::Zbar};
};

using Ge2Result = std::variant<ElementaryCertificate, NotReducible, NotInvertible>;

/// Greedy leading-form elimination down to a constant matrix.
Ge2Result ge2_certificate(const Matrix2& m);

}  // namespace ztame
