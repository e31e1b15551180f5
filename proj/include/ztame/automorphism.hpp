#pragma once

#include "ztame/ncpoly.hpp"

#include <array>
#include <optional>
#include <variant>
#include <vector>

namespace ztame {

/// The z-endomorphism x -> f, y -> g, z -> z.
struct ZEndomorphism {
  NCPolynomial f;
  NCPolynomial g;

  static ZEndomorphism identity() { return {x(), y()}; }
  friend bool operator==(const ZEndomorphism&, const ZEndomorphism&) = default;
};

/// e(p) = p(e.f, e.g, z).
NCPolynomial apply(const ZEndomorphism& e, const NCPolynomial& p);

/// The product first*second: substitutes first's images into second's
/// coordinates, (u, v) -> (u(f, g, z), v(f, g, z)).
ZEndomorphism compose(const ZEndomorphism& first, const ZEndomorphism& second);

/// x -> m[0][0] x + m[1][0] y + zc[0] z + tr[0],
/// y -> m[0][1] x + m[1][1] y + zc[1] z + tr[1].
/// Row index is the source variable, column index the coordinate.
struct Affine {
  std::array<std::array<Scalar, 2>, 2> m{{{1, 0}, {0, 1}}};
  std::array<Scalar, 2> zc{0, 0};
  std::array<Scalar, 2> tr{0, 0};
  friend bool operator==(const Affine&, const Affine&) = default;
};

/// x -> a1 x + p1(y, z), y -> a2 y + p2(z).
struct Triangular {
  Scalar a1 = 1;
  NCPolynomial p1;
  Scalar a2 = 1;
  NCPolynomial p2;
  friend bool operator==(const Triangular&, const Triangular&) = default;
};

/// x -> y, y -> x.
struct Tau {
  friend bool operator==(const Tau&, const Tau&) = default;
};

using TameGenerator = std::variant<Affine, Triangular, Tau>;

/// Generators listed leftmost first: the word [a, b] denotes compose(a, b).
using TameWord = std::vector<TameGenerator>;

/// (x + p(y, z), y).
Triangular shear(NCPolynomial p);

/// Throws InvalidGeneratorError when the generator is not invertible or
/// its polynomials use forbidden letters.
void validate(const TameGenerator& gen);

ZEndomorphism apply_generator(const TameGenerator& gen);
ZEndomorphism apply_word(const TameWord& w);

TameWord invert_generator(const TameGenerator& gen);
TameWord invert_word(const TameWord& w);

bool is_identity(const TameWord& w);

/// Reads (a1 x + p1(y,z), a2 y + p2(z)) back from an endomorphism of that shape.
std::optional<Triangular> as_triangular(const ZEndomorphism& e);

/// Triangular generator that is also affine: p1 in span{y, z, 1}, p2 in span{z, 1}.
bool is_affine(const Triangular& t);

/// Splits an affine generator into triangular pieces and at most one Tau.
TameWord expand_affine(const Affine& a);

}  // namespace ztame
