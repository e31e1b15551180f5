#include "ztame/automorphism.hpp"

#include "ztame/errors.hpp"

#include <algorithm>

namespace ztame {

NCPolynomial apply(const ZEndomorphism& e, const NCPolynomial& p) { return substitute(p, e.f, e.g); }

ZEndomorphism compose(const ZEndomorphism& first, const ZEndomorphism& second) {
  return {apply(first, second.f), apply(first, second.g)};
}

Triangular shear(NCPolynomial p) { return Triangular{1, std::move(p), 1, NCPolynomial{}}; }

void validate(const TameGenerator& gen) {
  if (const auto* a = std::get_if<Affine>(&gen)) {
    if (a->m[0][0] * a->m[1][1] - a->m[0][1] * a->m[1][0] == 0) {
      throw InvalidGeneratorError("affine generator has a singular linear part");
    }
  } else if (const auto* t = std::get_if<Triangular>(&gen)) {
    if (t->a1 == 0 || t->a2 == 0) throw InvalidGeneratorError("triangular generator needs nonzero a1, a2");
    if (contains_letter(t->p1, Letter::X)) throw InvalidGeneratorError("p1 must not contain x");
    if (!depends_only_on_z(t->p2)) throw InvalidGeneratorError("p2 must depend on z only");
  }
}

ZEndomorphism apply_generator(const TameGenerator& gen) {
  validate(gen);
  return std::visit(
      [](const auto& g) -> ZEndomorphism {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Affine>) {
          return {g.m[0][0] * x() + g.m[1][0] * y() + g.zc[0] * z() + NCPolynomial(g.tr[0]),
                  g.m[0][1] * x() + g.m[1][1] * y() + g.zc[1] * z() + NCPolynomial(g.tr[1])};
        } else if constexpr (std::is_same_v<G, Triangular>) {
          return {g.a1 * x() + g.p1, g.a2 * y() + g.p2};
        } else {
          return {y(), x()};
        }
      },
      gen);
}

ZEndomorphism apply_word(const TameWord& w) {
  ZEndomorphism acc = ZEndomorphism::identity();
  for (const auto& gen : w) acc = compose(acc, apply_generator(gen));
  return acc;
}

TameWord invert_generator(const TameGenerator& gen) {
  validate(gen);
  if (const auto* a = std::get_if<Affine>(&gen)) {
    // Images are (x, y, z, 1) * M with M the extended 4x4 matrix; invert the 2x2
    // block and carry the z and constant rows along.
    const Scalar det = a->m[0][0] * a->m[1][1] - a->m[0][1] * a->m[1][0];
    Affine inv;
    inv.m = {{{a->m[1][1] / det, -a->m[0][1] / det}, {-a->m[1][0] / det, a->m[0][0] / det}}};
    for (int j = 0; j < 2; ++j) {
      inv.zc[j] = -(a->zc[0] * inv.m[0][j] + a->zc[1] * inv.m[1][j]);
      inv.tr[j] = -(a->tr[0] * inv.m[0][j] + a->tr[1] * inv.m[1][j]);
    }
    return {inv};
  }
  if (const auto* t = std::get_if<Triangular>(&gen)) {
    // y -> (y - p2)/a2, then x -> (x - p1(y', z))/a1 with y' the new image of y.
    const NCPolynomial y_image = (y() - t->p2) * Scalar(1 / t->a2);
    const NCPolynomial p1_image = substitute(t->p1, x(), y_image);
    Triangular inv;
    inv.a1 = 1 / t->a1;
    inv.p1 = -(p1_image * Scalar(1 / t->a1));
    inv.a2 = 1 / t->a2;
    inv.p2 = -(t->p2 * Scalar(1 / t->a2));
    return {inv};
  }
  return {Tau{}};
}

TameWord invert_word(const TameWord& w) {
  TameWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    TameWord piece = invert_generator(*it);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

bool is_identity(const TameWord& w) { return apply_word(w) == ZEndomorphism::identity(); }

std::optional<Triangular> as_triangular(const ZEndomorphism& e) {
  Triangular t;
  t.a1 = e.f.coefficient(Word::of(Letter::X));
  t.p1 = e.f - t.a1 * x();
  t.a2 = e.g.coefficient(Word::of(Letter::Y));
  t.p2 = e.g - t.a2 * y();
  if (t.a1 == 0 || t.a2 == 0) return std::nullopt;
  if (contains_letter(t.p1, Letter::X) || !depends_only_on_z(t.p2)) return std::nullopt;
  return t;
}

bool is_affine(const Triangular& t) {
  auto short_words = [](const NCPolynomial& p) {
    return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& term) { return term.first.size() <= 1; });
  };
  return short_words(t.p1) && short_words(t.p2);
}

TameWord expand_affine(const Affine& a) {
  validate(a);
  const auto& m = a.m;
  if (m[0][1] == 0) {
    return {Triangular{m[0][0], m[1][0] * y() + a.zc[0] * z() + NCPolynomial(a.tr[0]), m[1][1],
                       a.zc[1] * z() + NCPolynomial(a.tr[1])}};
  }
  // m = [[1, 0], [q, 1]] * tau * [[u, 0], [v, w]] with the z and constant rows
  // carried by the right factor.
  const Scalar q = m[1][1] / m[0][1];
  const Scalar u = m[1][0] - q * m[0][0];
  const Scalar v = m[0][0];
  const Scalar w = m[0][1];
  Triangular left = shear(q * y());
  Triangular right{u, v * y() + a.zc[0] * z() + NCPolynomial(a.tr[0]), w, a.zc[1] * z() + NCPolynomial(a.tr[1])};
  return {left, Tau{}, right};
}

}  // namespace ztame
