#include "ztame/formanek.hpp"

#include "ztame/errors.hpp"

namespace ztame {

FormanekForm to_form(const NCPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  FormanekForm form;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Exponents gaps{0};
    std::string basis;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == Letter::Z) {
        ++gaps.back();
      } else {
        basis += static_cast<char>(w[i]);
        gaps.push_back(0);
      }
    }
    const auto n = static_cast<unsigned>(basis.size());
    if (first) {
      form.degree = n;
      first = false;
    } else if (n != form.degree) {
      throw NotXYHomogeneousError();
    }
    auto [it, inserted] = form.coeffs.try_emplace(Word(basis), Family::T);
    it->second.add_term(std::move(gaps), c);
    if (it->second.is_zero()) form.coeffs.erase(it);
  }
  return form;
}

NCPolynomial star_expand(const FormanekForm& form) {
  NCPolynomial out;
  for (const auto& [basis, coeff] : form.coeffs) {
    if (auto top = coeff.max_index(); top && *top > form.degree) {
      throw IndexOverflowError("form coefficient uses an index above the degree");
    }
    for (const auto& [e, c] : coeff.terms()) {
      std::string letters;
      for (std::size_t i = 0; i <= form.degree; ++i) {
        letters.append(i < e.size() ? e[i] : 0, 'z');
        if (i < form.degree) letters += basis.str()[i];
      }
      out.add_term(Word(std::move(letters)), c);
    }
  }
  return out;
}

NCPolynomial power_form(const CPolynomial& omega, unsigned d) {
  FormanekForm f;
  f.degree = d;
  if (!omega.is_zero()) f.coeffs.emplace(Word::of(Letter::Y, d), omega);
  return star_expand(f);
}

FormanekForm outer_compose(const CPolynomial& omega, unsigned d, const FormanekForm& inner) {
  if (d == 0) throw std::invalid_argument("outer_compose: d must be positive");
  if (auto top = omega.max_index(); top && *top > d) {
    throw IndexOverflowError("omega uses an index above d");
  }
  const unsigned k = inner.degree;
  FormanekForm acc;
  acc.degree = 0;
  acc.coeffs.emplace(Word{}, CPolynomial(Family::T, 1));
  for (unsigned j = 0; j < d; ++j) {
    FormanekForm next;
    next.degree = acc.degree + k;
    for (const auto& [wa, ca] : acc.coeffs) {
      for (const auto& [wb, cb] : inner.coeffs) {
        CPolynomial term = ca * shift_indices(cb, static_cast<long>(j * k));
        auto [it, inserted] = next.coeffs.try_emplace(wa * wb, Family::T);
        it->second += term;
        if (it->second.is_zero()) next.coeffs.erase(it);
      }
    }
    acc = std::move(next);
  }
  const CPolynomial spread = rename_indices(omega, [k](std::size_t i) { return i * k; });
  for (auto it = acc.coeffs.begin(); it != acc.coeffs.end();) {
    it->second = it->second * spread;
    it = it->second.is_zero() ? acc.coeffs.erase(it) : std::next(it);
  }
  return acc;
}

std::variant<OuterSolution, NoSolution> solve_outer(const FormanekForm& outer, const FormanekForm& inner) {
  const unsigned l = outer.degree, k = inner.degree;
  if (l == 0 || k == 0) return NoSolution{"degree zero form"};
  if (outer.is_zero() || inner.is_zero()) return NoSolution{"zero form"};
  if (l % k != 0) return NoSolution{"xy-degree " + std::to_string(l) + " is not a multiple of " + std::to_string(k)};
  const unsigned d = l / k;

  const auto& [basis, theta] = *inner.coeffs.begin();
  Word target;
  CPolynomial shifted_product(Family::T, 1);
  for (unsigned j = 0; j < d; ++j) {
    target = target * basis;
    shifted_product = shifted_product * shift_indices(theta, static_cast<long>(j * k));
  }
  auto it = outer.coeffs.find(target);
  if (it == outer.coeffs.end()) return NoSolution{"coefficient of " + target.str() + " vanishes"};
  auto spread = exact_divide(it->second, shifted_product);
  if (!spread) return NoSolution{"coefficient of " + target.str() + " is not divisible"};

  CPolynomial omega(Family::T);
  for (const auto& [e, c] : spread->terms()) {
    Exponents packed(d + 1, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i % k != 0) return NoSolution{"quotient involves a variable inside a copy"};
      packed[i / k] = e[i];
    }
    omega.add_term(std::move(packed), c);
  }
  if (outer_compose(omega, d, inner) != outer) return NoSolution{"composition check failed"};
  return OuterSolution{std::move(omega), d};
}

}  // namespace ztame
