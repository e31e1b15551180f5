#include "ztame/ncpoly.hpp"

#include "ztame/errors.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ztame {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (c != 'x' && c != 'y' && c != 'z') {
      throw std::invalid_argument(std::string("invalid letter '") + c + "' in word");
    }
  }
}

Word Word::of(Letter l, std::size_t times) {
  return Word(std::string(times, static_cast<char>(l)), Trusted{});
}

unsigned Word::count(Letter l) const {
  return static_cast<unsigned>(std::count(letters_.begin(), letters_.end(), static_cast<char>(l)));
}

BiDegree Word::bidegree(Weights w) const {
  BiDegree b;
  for (char c : letters_) {
    if (c == 'x') b.d += w.x;
    else if (c == 'y') b.d += w.y;
    else ++b.e;
  }
  return b;
}

NCPolynomial::NCPolynomial(const Scalar& constant) {
  if (constant != 0) terms_.emplace(Word{}, constant);
}

NCPolynomial NCPolynomial::variable(Letter l) { return monomial(Word::of(l)); }

NCPolynomial NCPolynomial::monomial(const Word& w, const Scalar& c) {
  NCPolynomial p;
  p.add_term(w, c);
  return p;
}

Scalar NCPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NCPolynomial::add_term(const Word& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NCPolynomial& NCPolynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [w, coeff] : terms_) coeff *= c;
  }
  return *this;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::unordered_map<std::string, Scalar> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      std::string key = wa.str();
      key += wb.str();
      auto [it, inserted] = acc.try_emplace(std::move(key), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  NCPolynomial r;
  for (auto& [w, c] : acc) {
    if (c != 0) r.terms_.emplace(Word(w), std::move(c));
  }
  return r;
}

NCPolynomial x() { return NCPolynomial::variable(Letter::X); }
NCPolynomial y() { return NCPolynomial::variable(Letter::Y); }
NCPolynomial z() { return NCPolynomial::variable(Letter::Z); }

NCPolynomial add(const NCPolynomial& p, const NCPolynomial& q) { return p + q; }
NCPolynomial mul(const NCPolynomial& p, const NCPolynomial& q) { return p * q; }
NCPolynomial scale(const Scalar& c, const NCPolynomial& p) { return c * p; }

NCPolynomial pow(const NCPolynomial& p, unsigned k) {
  NCPolynomial r(1);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

std::optional<unsigned> degree_in(const NCPolynomial& p, Letter l) {
  std::optional<unsigned> best;
  for (const auto& [w, c] : p.terms()) {
    unsigned n = w.count(l);
    if (!best || n > *best) best = n;
  }
  return best;
}

std::optional<unsigned> xy_degree(const NCPolynomial& p) {
  std::optional<unsigned> best;
  for (const auto& [w, c] : p.terms()) {
    unsigned n = w.count(Letter::X) + w.count(Letter::Y);
    if (!best || n > *best) best = n;
  }
  return best;
}

std::optional<BiDegree> bidegree(const NCPolynomial& p, Weights wt) {
  std::optional<BiDegree> best;
  for (const auto& [w, c] : p.terms()) {
    BiDegree b = w.bidegree(wt);
    if (!best || b > *best) best = b;
  }
  return best;
}

NCPolynomial leading_bicomponent(const NCPolynomial& p, Weights wt) {
  auto top = bidegree(p, wt);
  if (!top) throw ZeroPolynomialError();
  NCPolynomial r;
  for (const auto& [w, c] : p.terms()) {
    if (w.bidegree(wt) == *top) r.add_term(w, c);
  }
  return r;
}

bool is_bihomogeneous(const NCPolynomial& p, Weights wt) {
  if (p.is_zero()) return true;
  const BiDegree first = p.terms().begin()->first.bidegree(wt);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return t.first.bidegree(wt) == first; });
}

namespace {

using Suffixes = std::vector<std::pair<std::string_view, const Scalar*>>;

// Substitutes along the trie of words: p = c + x*P_x + y*P_y + z*P_z.
NCPolynomial substitute_trie(const Suffixes& items, const NCPolynomial& ix, const NCPolynomial& iy) {
  NCPolynomial result;
  Suffixes by_letter[3];
  for (const auto& [rest, c] : items) {
    if (rest.empty()) {
      result.add_term(Word{}, *c);
      continue;
    }
    int slot = rest.front() == 'x' ? 0 : rest.front() == 'y' ? 1 : 2;
    by_letter[slot].emplace_back(rest.substr(1), c);
  }
  if (!by_letter[0].empty()) result += ix * substitute_trie(by_letter[0], ix, iy);
  if (!by_letter[1].empty()) result += iy * substitute_trie(by_letter[1], ix, iy);
  if (!by_letter[2].empty()) result += z() * substitute_trie(by_letter[2], ix, iy);
  return result;
}

}  // namespace

NCPolynomial substitute(const NCPolynomial& p, const NCPolynomial& image_x,
                        const NCPolynomial& image_y) {
  Suffixes items;
  items.reserve(p.size());
  for (const auto& [w, c] : p.terms()) items.emplace_back(std::string_view(w.str()), &c);
  return substitute_trie(items, image_x, image_y);
}

NCPolynomial drop_letter(const NCPolynomial& p, Letter l) {
  NCPolynomial r;
  for (const auto& [w, c] : p.terms()) {
    if (w.count(l) == 0) r.add_term(w, c);
  }
  return r;
}

bool contains_letter(const NCPolynomial& p, Letter l) {
  return std::any_of(p.terms().begin(), p.terms().end(),
                     [l](const auto& t) { return t.first.count(l) > 0; });
}

bool depends_only_on_z(const NCPolynomial& p) {
  return !contains_letter(p, Letter::X) && !contains_letter(p, Letter::Y);
}

bool is_linear_in_xy(const NCPolynomial& p) {
  auto deg = xy_degree(p);
  return !deg || *deg <= 1;
}

}  // namespace ztame
