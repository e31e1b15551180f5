#include "ztame/scalar.hpp"

#include <cctype>

namespace ztame {

Scalar make_scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

Scalar make_scalar(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

Scalar parse_scalar(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t to = from;
    while (to < text.size() && std::isdigit(static_cast<unsigned char>(text[to]))) ++to;
    return to;
  };
  std::size_t end = digits(pos);
  if (end == pos) throw std::invalid_argument("expected digits in '" + text + "'");
  mpz_class num(text.substr(pos, end - pos));
  mpz_class den = 1;
  if (end < text.size() && text[end] == '/') {
    std::size_t dstart = end + 1;
    std::size_t dend = digits(dstart);
    if (dend == dstart) throw std::invalid_argument("expected denominator in '" + text + "'");
    den = mpz_class(text.substr(dstart, dend - dstart));
    end = dend;
  }
  if (end != text.size()) throw std::invalid_argument("trailing characters in '" + text + "'");
  if (negative) num = -num;
  return make_scalar(num, den);
}

std::string to_string(const Scalar& c) { return c.get_str(); }

namespace {

bool exact_root(const mpz_class& value, unsigned k, mpz_class& root) {
  // value >= 0
  return mpz_root(root.get_mpz_t(), value.get_mpz_t(), k) != 0;
}

}  // namespace

std::vector<Scalar> rational_root(const Scalar& c, unsigned k) {
  if (k == 0) throw std::invalid_argument("rational_root: k must be positive");
  if (c == 0) throw std::domain_error("rational_root: zero argument");
  const bool negative = sgn(c) < 0;
  if (negative && k % 2 == 0) return {};
  mpz_class num = abs(c.get_num());
  mpz_class rnum, rden;
  if (!exact_root(num, k, rnum) || !exact_root(c.get_den(), k, rden)) return {};
  Scalar r = make_scalar(rnum, rden);
  if (negative) return {Scalar(-r)};
  if (k % 2 == 0) return {r, Scalar(-r)};
  return {r};
}

Scalar power(const Scalar& c, unsigned k) {
  Scalar r = 1;
  for (unsigned i = 0; i < k; ++i) r *= c;
  return r;
}

}  // namespace ztame
