#include "ztame/cpoly.hpp"

#include "ztame/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ztame {

namespace {

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = n; i-- > 0;) {
    const unsigned ea = i < a.size() ? a[i] : 0;
    const unsigned eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea < eb;
  }
  return false;
}

CPolynomial::CPolynomial(Family f, const Scalar& constant) : family_(f) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

CPolynomial CPolynomial::variable(Family f, std::size_t index) {
  if (f == Family::Zbar && index != 1 && index != 2) {
    throw std::invalid_argument("zbar variables are indexed 1 and 2");
  }
  Exponents e(index + 1, 0);
  e[index] = 1;
  return monomial(f, std::move(e));
}

CPolynomial CPolynomial::monomial(Family f, Exponents e, const Scalar& c) {
  CPolynomial p(f);
  p.add_term(std::move(e), c);
  return p;
}

bool CPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar CPolynomial::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

void CPolynomial::add_term(Exponents e, const Scalar& c) {
  if (c == 0) return;
  trim(e);
  if (family_ == Family::Zbar && !e.empty() && e[0] != 0) {
    throw std::invalid_argument("zbar polynomials only use indices 1 and 2");
  }
  if (family_ == Family::Zbar && e.size() > 3) {
    throw std::invalid_argument("zbar polynomials only use indices 1 and 2");
  }
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<unsigned> CPolynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return ztame::total_degree(terms_.rbegin()->first);
}

std::optional<unsigned> CPolynomial::degree_in(std::size_t index) const {
  std::optional<unsigned> best;
  for (const auto& [e, c] : terms_) {
    unsigned v = index < e.size() ? e[index] : 0;
    if (!best || v > *best) best = v;
  }
  return best;
}

std::optional<std::size_t> CPolynomial::max_index() const {
  std::optional<std::size_t> best;
  for (const auto& [e, c] : terms_) {
    if (!e.empty() && (!best || e.size() - 1 > *best)) best = e.size() - 1;
  }
  return best;
}

std::optional<std::size_t> CPolynomial::min_index() const {
  std::optional<std::size_t> best;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) {
        if (!best || i < *best) best = i;
        break;
      }
    }
  }
  return best;
}

const std::pair<const Exponents, Scalar>& CPolynomial::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomialError();
  return *terms_.rbegin();
}

void CPolynomial::adopt_family(const CPolynomial& rhs) {
  if (family_ == rhs.family_) return;
  if (rhs.is_constant()) return;
  if (is_constant()) {
    family_ = rhs.family_;
    return;
  }
  throw std::invalid_argument("mixing t and zbar polynomials");
}

CPolynomial& CPolynomial::operator+=(const CPolynomial& rhs) {
  adopt_family(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

CPolynomial& CPolynomial::operator-=(const CPolynomial& rhs) {
  adopt_family(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

CPolynomial& CPolynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, coeff] : terms_) coeff *= c;
  }
  return *this;
}

CPolynomial operator*(const CPolynomial& a, const CPolynomial& b) {
  CPolynomial r(a.family_);
  r.adopt_family(b);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

bool operator==(const CPolynomial& a, const CPolynomial& b) {
  if (a.terms_ != b.terms_) return false;
  return a.family_ == b.family_ || a.is_constant();
}

CPolynomial t(std::size_t index) { return CPolynomial::variable(Family::T, index); }
CPolynomial zbar(std::size_t index) { return CPolynomial::variable(Family::Zbar, index); }

CPolynomial c_add(const CPolynomial& p, const CPolynomial& q) { return p + q; }
CPolynomial c_mul(const CPolynomial& p, const CPolynomial& q) { return p * q; }
CPolynomial c_scale(const Scalar& c, const CPolynomial& p) { return c * p; }

CPolynomial c_pow(const CPolynomial& p, unsigned k) {
  CPolynomial r(p.family(), 1);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

std::optional<CPolynomial> exact_divide(const CPolynomial& num, const CPolynomial& den) {
  if (den.is_zero()) throw DivisionByZeroError();
  CPolynomial quotient(num.family());
  if (num.is_zero()) return quotient;
  if (den.is_constant()) return CPolynomial(num) *= Scalar(1 / den.constant_term());

  CPolynomial rest = num;
  const auto& [lead_exp, lead_coeff] = den.leading_term();
  while (!rest.is_zero()) {
    const auto& [re, rc] = rest.leading_term();
    if (re.size() < lead_exp.size()) return std::nullopt;
    Exponents q(re.size(), 0);
    for (std::size_t i = 0; i < re.size(); ++i) {
      const unsigned d = i < lead_exp.size() ? lead_exp[i] : 0;
      if (re[i] < d) return std::nullopt;
      q[i] = re[i] - d;
    }
    CPolynomial step = CPolynomial::monomial(num.family(), std::move(q), rc / lead_coeff);
    rest -= step * den;
    quotient += step;
  }
  return quotient;
}

CPolynomial monic(const CPolynomial& p) {
  if (p.is_zero()) return p;
  return CPolynomial(p) *= Scalar(1 / p.leading_coefficient());
}

namespace {

// Dense univariate view in the variable of index v, coefficients free of v.
using Uni = std::vector<CPolynomial>;

Uni to_uni(const CPolynomial& p, std::size_t v) {
  Uni out;
  for (const auto& [e, c] : p.terms()) {
    const unsigned k = v < e.size() ? e[v] : 0;
    if (out.size() <= k) out.resize(k + 1, CPolynomial(p.family()));
    Exponents rest = e;
    if (v < rest.size()) rest[v] = 0;
    out[k].add_term(std::move(rest), c);
  }
  return out;
}

CPolynomial from_uni(const Uni& u, std::size_t v, Family f) {
  CPolynomial r(f);
  for (std::size_t k = 0; k < u.size(); ++k) {
    for (const auto& [e, c] : u[k].terms()) {
      Exponents full = e;
      if (full.size() <= v) full.resize(v + 1, 0);
      full[v] += static_cast<unsigned>(k);
      r.add_term(std::move(full), c);
    }
  }
  return r;
}

void trim_uni(Uni& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

long uni_degree(const Uni& u) { return static_cast<long>(u.size()) - 1; }

CPolynomial divide_or_throw(const CPolynomial& a, const CPolynomial& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("gcd: expected exact division");
  return *q;
}

Uni divide_coefficients(const Uni& u, const CPolynomial& d) {
  Uni out;
  out.reserve(u.size());
  for (const auto& c : u) out.push_back(divide_or_throw(c, d));
  return out;
}

// lc(b)^(deg a - deg b + 1) * a mod b.
Uni pseudo_remainder(Uni a, const Uni& b) {
  const long db = uni_degree(b);
  const CPolynomial& lb = b.back();
  long exponent = uni_degree(a) - db + 1;
  while (!a.empty() && uni_degree(a) >= db) {
    const CPolynomial la = a.back();
    const long shift = uni_degree(a) - db;
    for (auto& c : a) c = c * lb;
    for (long i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
    trim_uni(a);
    --exponent;
  }
  if (exponent > 0) {
    const CPolynomial factor = c_pow(lb, static_cast<unsigned>(exponent));
    for (auto& c : a) c = c * factor;
  }
  return a;
}

CPolynomial gcd_nonzero(const CPolynomial& p, const CPolynomial& q);

CPolynomial content(const Uni& u, Family f) {
  CPolynomial g(f);
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? monic(c) : gcd_nonzero(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Uni primitive_part(const Uni& u, Family f) {
  const CPolynomial c = content(u, f);
  return c.is_constant() ? u : divide_coefficients(u, c);
}

// Subresultant remainder sequence of primitive a, b (deg a >= deg b >= 1);
// returns the primitive part of the last nonzero remainder.
Uni subresultant_gcd(Uni a, Uni b, Family f) {
  CPolynomial g(f, 1), h(f, 1);
  while (true) {
    const long delta = uni_degree(a) - uni_degree(b);
    Uni r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (uni_degree(r) == 0) return Uni{CPolynomial(f, 1)};
    a = std::move(b);
    b = divide_coefficients(r, g * c_pow(h, static_cast<unsigned>(delta)));
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_or_throw(c_pow(g, static_cast<unsigned>(delta)), c_pow(h, static_cast<unsigned>(delta - 1)));
    }
  }
  return primitive_part(b, f);
}

CPolynomial gcd_nonzero(const CPolynomial& p, const CPolynomial& q) {
  const Family f = p.is_constant() ? q.family() : p.family();
  if (p.is_constant() || q.is_constant()) return CPolynomial(f, 1);
  const std::size_t v = std::max(*p.max_index(), *q.max_index());
  Uni pu = to_uni(p, v), qu = to_uni(q, v);
  if (pu.size() == 1) return gcd_nonzero(p, content(qu, f));
  if (qu.size() == 1) return gcd_nonzero(content(pu, f), q);

  const CPolynomial cp = content(pu, f), cq = content(qu, f);
  const CPolynomial c = gcd_nonzero(cp, cq);
  Uni a = cp.is_constant() ? pu : divide_coefficients(pu, cp);
  Uni b = cq.is_constant() ? qu : divide_coefficients(qu, cq);
  if (uni_degree(a) < uni_degree(b)) std::swap(a, b);
  const Uni g = subresultant_gcd(std::move(a), std::move(b), f);
  return monic(c * from_uni(g, v, f));
}

}  // namespace

CPolynomial gcd(const CPolynomial& p, const CPolynomial& q) {
  if (p.is_zero() && q.is_zero()) throw Error("gcd of two zero polynomials");
  if (p.is_zero()) return monic(q);
  if (q.is_zero()) return monic(p);
  return monic(gcd_nonzero(p, q));
}

CPolynomial shift_indices(const CPolynomial& p, long offset) {
  if (p.family() == Family::Zbar && offset != 0 && !p.is_constant()) {
    throw std::invalid_argument("zbar polynomials cannot be shifted");
  }
  if (auto lo = p.min_index(); lo && static_cast<long>(*lo) + offset < 0) throw NegativeIndexError();
  return rename_indices(p, [offset](std::size_t i) { return static_cast<std::size_t>(static_cast<long>(i) + offset); });
}

CPolynomial rename_indices(const CPolynomial& p, const std::function<std::size_t(std::size_t)>& index_map) {
  CPolynomial r(p.family());
  for (const auto& [e, c] : p.terms()) {
    Exponents out;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const std::size_t j = index_map(i);
      if (out.size() <= j) out.resize(j + 1, 0);
      out[j] += e[i];
    }
    r.add_term(std::move(out), c);
  }
  return r;
}

CPolynomial leading_form(const CPolynomial& p) {
  CPolynomial r(p.family());
  auto top = p.total_degree();
  if (!top) return r;
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) == *top) r.add_term(e, c);
  }
  return r;
}

Exponents monomial_content(const CPolynomial& p) {
  if (p.is_zero()) return {};
  Exponents m = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms()) {
    if (e.size() < m.size()) m.resize(e.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  }
  trim(m);
  return m;
}

}  // namespace ztame
