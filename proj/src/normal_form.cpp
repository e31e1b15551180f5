#include "ztame/normal_form.hpp"

#include "ztame/errors.hpp"

#include <algorithm>

namespace ztame {

namespace {

using Letter2 = std::variant<Triangular, Tau>;

bool is_identity_triangular(const Triangular& t) {
  return t.a1 == 1 && t.a2 == 1 && t.p1.is_zero() && t.p2.is_zero();
}

Triangular merge(const Triangular& first, const Triangular& second) {
  auto t = as_triangular(compose(apply_generator(first), apply_generator(second)));
  if (!t) throw std::logic_error("product of triangular maps is not triangular");
  return *t;
}

// p(0, z): the z-only part.
NCPolynomial z_part(const NCPolynomial& p) { return drop_letter(p, Letter::Y); }

std::vector<Letter2> expand(const TameWord& w) {
  std::vector<Letter2> out;
  for (const auto& gen : w) {
    validate(gen);
    if (const auto* a = std::get_if<Affine>(&gen)) {
      for (const auto& piece : expand_affine(*a)) {
        if (const auto* t = std::get_if<Triangular>(&piece)) out.emplace_back(*t);
        else out.emplace_back(Tau{});
      }
    } else if (const auto* t = std::get_if<Triangular>(&gen)) {
      out.emplace_back(*t);
    } else {
      out.emplace_back(Tau{});
    }
  }
  return out;
}

// Cancels Tau Tau, merges neighbouring triangular letters and drops identities.
std::vector<Letter2> merge_pass(const std::vector<Letter2>& in) {
  std::vector<Letter2> stack;
  for (const auto& item : in) {
    stack.push_back(item);
    while (stack.size() >= 2) {
      auto& top = stack[stack.size() - 1];
      auto& below = stack[stack.size() - 2];
      if (std::holds_alternative<Tau>(top) && std::holds_alternative<Tau>(below)) {
        stack.resize(stack.size() - 2);
      } else if (std::holds_alternative<Triangular>(top) && std::holds_alternative<Triangular>(below)) {
        Triangular merged = merge(std::get<Triangular>(below), std::get<Triangular>(top));
        stack.pop_back();
        stack.back() = std::move(merged);
      } else {
        break;
      }
    }
    if (!stack.empty() && std::holds_alternative<Triangular>(stack.back()) &&
        is_identity_triangular(std::get<Triangular>(stack.back()))) {
      stack.pop_back();
      // A Tau below might now meet a Tau that arrives next; the loop above handles it.
    }
  }
  return stack;
}

}  // namespace

bool NormalForm::is_trivial() const { return n() == 0 && is_identity_triangular(rhos.front()); }

TameWord NormalForm::to_word() const {
  TameWord w;
  for (std::size_t i = rhos.size(); i-- > 0;) {
    w.emplace_back(rhos[i]);
    if (i > 0) w.emplace_back(Tau{});
  }
  return w;
}

ZEndomorphism apply(const NormalForm& nf) { return apply_word(nf.to_word()); }

NormalForm normalize(const TameWord& w) {
  std::vector<Letter2> letters = expand(w);
  while (true) {
    letters = merge_pass(letters);
    // Pad to T tau T ... tau T.
    if (letters.empty() || std::holds_alternative<Tau>(letters.front())) letters.insert(letters.begin(), Triangular{});
    if (std::holds_alternative<Tau>(letters.back())) letters.emplace_back(Triangular{});

    // letters[0] is rho_n, letters[2i] is rho_{n-i}. Push the diagonal z-only
    // part of each rho_i (i >= 1) through the following Tau into rho_{i-1}.
    for (std::size_t i = 0; i + 2 < letters.size(); i += 2) {
      auto& rho = std::get<Triangular>(letters[i]);
      const NCPolynomial p0 = z_part(rho.p1);
      Triangular passed{rho.a2, rho.p2, rho.a1, p0};  // (a2 x + r(z), a1 y + p(0,z))
      rho = shear((rho.p1 - p0) * Scalar(1 / rho.a1));
      auto& next = std::get<Triangular>(letters[i + 2]);
      next = merge(passed, next);
    }

    // Collapse Tau rho_i Tau when an interior rho_i = (x + c y, y) is affine.
    bool changed = false;
    for (std::size_t i = 2; i + 2 < letters.size(); i += 2) {
      const auto& rho = std::get<Triangular>(letters[i]);
      if (!is_affine(rho)) continue;
      const Scalar c = rho.p1.coefficient(Word::of(Letter::Y));
      Affine conj;  // Tau (x + c y, y) Tau = (x, c x + y)
      conj.m = {{{1, c}, {0, 1}}};
      std::vector<Letter2> replacement;
      if (c != 0) {
        for (const auto& piece : expand_affine(conj)) {
          if (const auto* t = std::get_if<Triangular>(&piece)) replacement.emplace_back(*t);
          else replacement.emplace_back(Tau{});
        }
      }
      letters.erase(letters.begin() + static_cast<long>(i) - 1, letters.begin() + static_cast<long>(i) + 2);
      letters.insert(letters.begin() + static_cast<long>(i) - 1, replacement.begin(), replacement.end());
      changed = true;
      break;
    }
    if (!changed) break;
  }

  NormalForm nf;
  nf.rhos.clear();
  for (std::size_t i = letters.size(); i-- > 0;) {
    if (const auto* t = std::get_if<Triangular>(&letters[i])) nf.rhos.push_back(*t);
  }
  return nf;
}

bool is_valid(const NormalForm& nf) {
  if (nf.rhos.empty()) return false;
  try {
    validate(nf.rhos.front());
  } catch (const InvalidGeneratorError&) {
    return false;
  }
  for (std::size_t i = 1; i < nf.rhos.size(); ++i) {
    const auto& rho = nf.rhos[i];
    if (rho.a1 != 1 || rho.a2 != 1 || !rho.p2.is_zero()) return false;
    if (contains_letter(rho.p1, Letter::X)) return false;
    if (!z_part(rho.p1).is_zero()) return false;
    if (i + 1 < nf.rhos.size() && is_affine(rho)) return false;
  }
  return true;
}

namespace {

// p = c*y + r(z) for some constant c (possibly 0).
bool linear_in_y_only(const NCPolynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) {
    return t.first == Word::of(Letter::Y) || t.first.count(Letter::Y) == 0;
  });
}

}  // namespace

std::optional<LeadingCase> leading_case(const NormalForm& nf) {
  const std::size_t n = nf.n();
  const Triangular& rho0 = nf.rhos.front();
  const bool p0_affine_like = linear_in_y_only(rho0.p1);
  const Scalar c0 = rho0.p1.coefficient(Word::of(Letter::Y));
  if (n == 0) {
    if (!p0_affine_like) return LeadingCase::NonlinearEnds;
    return std::nullopt;
  }
  const Triangular& rhon = nf.rhos.back();
  const bool rhon_aff = is_affine(rhon);
  if (!rhon_aff && !p0_affine_like) return LeadingCase::NonlinearEnds;
  if (!rhon_aff && p0_affine_like && c0 != 0) return LeadingCase::AffineRho0;
  if (rhon_aff && !p0_affine_like && rhon.p1.coefficient(Word::of(Letter::Y)) != 0) return LeadingCase::AffineRhoN;
  return std::nullopt;
}

std::pair<NCPolynomial, NCPolynomial> predict_leading(const NormalForm& nf) {
  if (nf.is_trivial()) throw TrivialWordError();
  auto which = leading_case(nf);
  if (!which) throw OutsideCaseSplitError();

  const std::size_t n = nf.n();
  const Triangular& rho0 = nf.rhos.front();
  // Innermost argument, then nest q_top(...(q_1(.))).
  NCPolynomial inner = y();
  std::size_t top = n;
  if (*which == LeadingCase::AffineRhoN) {
    inner = x() + nf.rhos.back().p1.coefficient(Word::of(Letter::Y)) * y();
    top = n - 1;
  }
  for (std::size_t i = top; i >= 1; --i) {
    const NCPolynomial qi = leading_bicomponent(nf.rhos[i].p1);
    inner = substitute(qi, x(), inner);
  }
  const NCPolynomial gbar = rho0.a2 * inner;
  NCPolynomial fbar;
  if (*which == LeadingCase::AffineRho0) {
    fbar = rho0.p1.coefficient(Word::of(Letter::Y)) * inner;
  } else {
    fbar = substitute(leading_bicomponent(rho0.p1), x(), inner);
  }
  return {fbar, gbar};
}

}  // namespace ztame
