#include "ztame/recognize.hpp"

#include "ztame/errors.hpp"
#include "ztame/formanek.hpp"

#include <stdexcept>

namespace ztame {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::TameAutomorphism: return "TameAutomorphism";
    case Verdict::NotAutomorphism: return "NotAutomorphism";
    case Verdict::NotZTame: return "NotZTame";
    case Verdict::TameCoordinate: return "TameCoordinate";
    case Verdict::NotZTameCoordinate: return "NotZTameCoordinate";
  }
  return "?";
}

namespace {

const BiDegree kLinear{1, 0};

BiDegree bideg(const NCPolynomial& p) { return *bidegree(p); }

BiDegree operator+(BiDegree a, BiDegree b) { return {a.d + b.d, a.e + b.e}; }

TraceStep step(std::string action, NCPolynomial u = {}, NCPolynomial v = {}, std::string note = {}) {
  TraceStep s;
  s.action = std::move(action);
  s.u = std::move(u);
  s.v = std::move(v);
  s.note = std::move(note);
  return s;
}

// Tries to write `lead` as q(`other`) with q = omega * y^d.
std::variant<OuterSolution, NoSolution> outer_of(const NCPolynomial& lead, const NCPolynomial& other) {
  return solve_outer(to_form(lead), to_form(other));
}

}  // namespace

Decision recognize_automorphism(const ZEndomorphism& e) {
  Decision out;
  NCPolynomial f = e.f, g = e.g;
  std::vector<TameWord> pieces;  // pieces[i] undoes reduction step i

  std::optional<BiDegree> last;
  while (true) {
    if (depends_only_on_z(f) || depends_only_on_z(g)) {
      out.verdict = Verdict::NotAutomorphism;
      out.reason = "a coordinate depends on z only";
      out.trace.push_back(step("fail", f, g, out.reason));
      return out;
    }
    const NCPolynomial u = leading_bicomponent(f), v = leading_bicomponent(g);
    const BiDegree bu = bideg(u), bv = bideg(v);
    const BiDegree total = bideg(f) + bideg(g);
    if (last && !(total < *last)) throw std::logic_error("automorphism reduction did not descend");
    last = total;

    if (bu == kLinear && bv == kLinear) {
      const Word wx = Word::of(Letter::X), wy = Word::of(Letter::Y);
      Affine lin;
      lin.m = {{{u.coefficient(wx), v.coefficient(wx)}, {u.coefficient(wy), v.coefficient(wy)}}};
      if (lin.m[0][0] * lin.m[1][1] - lin.m[0][1] * lin.m[1][0] == 0) {
        out.verdict = Verdict::NotAutomorphism;
        out.reason = "linear parts are linearly dependent";
        out.trace.push_back(step("fail", u, v, out.reason));
        return out;
      }
      out.trace.push_back(step("linear", u, v));
      if (!(lin == Affine{})) out.certificate.emplace_back(lin);
      if (!(f - u).is_zero() || !(g - v).is_zero()) out.certificate.emplace_back(Triangular{1, f - u, 1, g - v});
      for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
        out.certificate.insert(out.certificate.end(), it->begin(), it->end());
      }
      out.verdict = Verdict::TameAutomorphism;
      if (!(apply_word(out.certificate) == e)) throw std::logic_error("automorphism certificate does not recompose");
      return out;
    }

    bool advanced = false;
    for (int which : {2, 3}) {
      const bool try_it = which == 2 ? (kLinear < bu && bv <= bu) : (kLinear < bv && bu <= bv);
      if (!try_it) continue;
      const NCPolynomial& lead = which == 2 ? u : v;
      const NCPolynomial& other = which == 2 ? v : u;
      auto sol = outer_of(lead, other);
      TraceStep s = step(which == 2 ? "step2" : "step3", u, v);
      if (const auto* none = std::get_if<NoSolution>(&sol)) {
        s.note = none->reason;
        out.trace.push_back(std::move(s));
        continue;
      }
      const auto& [omega, d] = std::get<OuterSolution>(sol);
      s.d = d;
      s.omega = omega;
      out.trace.push_back(std::move(s));
      const NCPolynomial q = power_form(omega, d);
      if (which == 2) {
        f = f - substitute(q, x(), g);
        pieces.push_back({shear(q)});
      } else {
        g = g - substitute(q, x(), f);
        pieces.push_back({Tau{}, shear(q), Tau{}});
      }
      advanced = true;
      break;
    }
    if (!advanced) {
      out.verdict = Verdict::NotZTame;
      out.reason = "leading components are not related by a z-triangular substitution";
      return out;
    }
    if (f.is_zero() || g.is_zero()) {
      out.verdict = Verdict::NotAutomorphism;
      out.reason = "a coordinate reduced to zero";
      out.trace.push_back(step("fail", f, g, out.reason));
      return out;
    }
  }
}

namespace {

enum class Shape { XFree = 0, YFree = 1, Mixed = 2 };

struct Measure {
  BiDegree b;
  int rank = 0;
  friend auto operator<=>(const Measure&, const Measure&) = default;
};

Shape shape_of(const NCPolynomial& lead) {
  const bool has_x = contains_letter(lead, Letter::X), has_y = contains_letter(lead, Letter::Y);
  if (has_x && has_y) return Shape::Mixed;
  return has_x ? Shape::YFree : Shape::XFree;
}

std::optional<Measure> measure(const NCPolynomial& f) {
  if (f.is_zero()) return std::nullopt;
  const NCPolynomial lead = leading_bicomponent(f);
  return Measure{bideg(lead), static_cast<int>(shape_of(lead))};
}

// f = a*x + p(y, z) with a != 0.
std::optional<TameWord> base_case(const NCPolynomial& f) {
  const Word wx = Word::of(Letter::X), wy = Word::of(Letter::Y);
  const Scalar a = f.coefficient(wx);
  if (a != 0) {
    NCPolynomial rest = f - a * x();
    if (!contains_letter(rest, Letter::X)) return TameWord{Triangular{a, rest, 1, 0}};
  }
  const Scalar b = f.coefficient(wy);
  if (b != 0 && !contains_letter(f, Letter::X)) {
    NCPolynomial rest = f - b * y();
    if (!contains_letter(rest, Letter::Y)) return TameWord{Tau{}, Triangular{b, rest, 1, 0}};
  }
  return std::nullopt;
}

CPolynomial monomial_of(const Exponents& e) { return CPolynomial::monomial(Family::T, e); }

// All omega (indices 0..d) with prod_{j<k} omega(shifted by j*d) == zeta.
std::vector<CPolynomial> recover_omega(const CPolynomial& zeta, unsigned k, unsigned d) {
  std::vector<CPolynomial> out;
  if (zeta.is_zero()) return out;
  const Exponents content = monomial_content(zeta);
  auto stripped = exact_divide(zeta, monomial_of(content));
  if (!stripped) return out;

  CPolynomial base = monic(*stripped);
  if (k > 1) {
    const long off = static_cast<long>((k - 1) * d);
    try {
      base = shift_indices(gcd(*stripped, shift_indices(*stripped, off)), -off);
    } catch (const NegativeIndexError&) {
      return out;
    }
  }
  auto at = [&](std::size_t i) -> unsigned { return i < content.size() ? content[i] : 0; };
  Exponents e(d + 1, 0);
  e[0] = at(0);
  for (unsigned i = 1; i < d; ++i) e[i] = at(i);
  e[d] = k == 1 ? at(d) : at(static_cast<std::size_t>(k) * d);
  const CPolynomial omega_unit = monomial_of(e) * base;
  if (auto top = omega_unit.max_index(); top && *top > d) return out;

  CPolynomial product(Family::T, 1);
  for (unsigned j = 0; j < k; ++j) product = product * shift_indices(omega_unit, static_cast<long>(j * d));
  auto c = exact_divide(zeta, product);
  if (!c || !c->is_constant() || c->is_zero()) return out;
  for (const Scalar& beta : rational_root(c->constant_term(), k)) out.push_back(beta * omega_unit);
  return out;
}

class CoordinateSearch {
 public:
  explicit CoordinateSearch(std::vector<TraceStep>& trace) : trace_(trace) {}

  std::optional<TameWord> run(const NCPolynomial& f) {
    if (depends_only_on_z(f)) {
      trace_.push_back(step("fail", f, {}, "polynomial depends on z only"));
      return std::nullopt;
    }
    if (auto base = base_case(f)) {
      trace_.push_back(step("base", f));
      return base;
    }
    const NCPolynomial lead = leading_bicomponent(f);
    switch (shape_of(lead)) {
      case Shape::YFree: return swap(f, lead);
      case Shape::Mixed: return unshear(f, lead);
      case Shape::XFree: return sigma(f, lead);
    }
    return std::nullopt;
  }

 private:
  std::optional<TameWord> descend(const NCPolynomial& f, const NCPolynomial& next, TameWord prefix) {
    const auto before = measure(f), after = measure(next);
    if (!after || !(*after < *before)) {
      trace_.push_back(step("fail", next, {}, "no strict descent"));
      return std::nullopt;
    }
    auto rest = run(next);
    if (!rest) return std::nullopt;
    prefix.insert(prefix.end(), rest->begin(), rest->end());
    return prefix;
  }

  std::optional<TameWord> swap(const NCPolynomial& f, const NCPolynomial& lead) {
    trace_.push_back(step("swap", lead));
    return descend(f, substitute(f, y(), x()), {Tau{}});
  }

  // Leading component h(x + c*y) with h free of x: undo the affine shear.
  std::optional<TameWord> unshear(const NCPolynomial& f, const NCPolynomial& lead) {
    const NCPolynomial a = drop_letter(lead, Letter::Y), b = drop_letter(lead, Letter::X);
    if (a.is_zero() || b.is_zero()) {
      trace_.push_back(step("fail", lead, {}, "leading component has no pure x or pure y part"));
      return std::nullopt;
    }
    const NCPolynomial a_in_y = substitute(a, y(), y());
    const auto& [w, coeff] = *a_in_y.terms().begin();
    const Scalar ratio = b.coefficient(w) / coeff;
    if (ratio == 0 || !(b == ratio * a_in_y)) {
      trace_.push_back(step("fail", lead, {}, "pure x and pure y parts are not proportional"));
      return std::nullopt;
    }
    const unsigned deg = *xy_degree(lead);
    const auto roots = rational_root(ratio, deg);
    if (roots.empty()) {
      trace_.push_back(step("fail", lead, {}, "shear coefficient is not rational"));
      return std::nullopt;
    }
    for (const Scalar& c : roots) {
      TraceStep s = step("shear", lead, c * y());
      trace_.push_back(std::move(s));
      if (auto r = descend(f, substitute(f, x() - c * y(), y()), {shear(c * y())})) return r;
    }
    return std::nullopt;
  }

  // Leading component h(q(y, z)) free of x: recover q and apply (x - q, y).
  std::optional<TameWord> sigma(const NCPolynomial& f, const NCPolynomial& lead) {
    const NCPolynomial f1 = drop_letter(f, Letter::Y);  // f(x, 0, z)
    const NCPolynomial f2 = drop_letter(f, Letter::X);  // f(0, y, z)
    const auto dx = degree_in(f1, Letter::X), dy = degree_in(f2, Letter::Y);
    if (!dx || *dx == 0 || !dy || *dy == 0) {
      trace_.push_back(step("fail", lead, {}, "degenerate degree ratio"));
      return std::nullopt;
    }
    if (*dy % *dx != 0) {
      trace_.push_back(step("fail", lead, {}, "degree ratio " + std::to_string(*dy) + "/" + std::to_string(*dx) +
                                                  " is not an integer"));
      return std::nullopt;
    }
    const unsigned k = *dx, d = *dy / *dx;
    const NCPolynomial hbar = leading_bicomponent(substitute(f1, y(), y()));
    if (*xy_degree(hbar) != k || *xy_degree(lead) != k * d) {
      trace_.push_back(step("fail", lead, hbar, "leading components have unexpected degrees"));
      return std::nullopt;
    }
    const CPolynomial theta = to_form(hbar).coeffs.at(Word::of(Letter::Y, k));
    const CPolynomial zeta = to_form(lead).coeffs.at(Word::of(Letter::Y, k * d));
    const auto zeta1 = exact_divide(zeta, rename_indices(theta, [d](std::size_t i) { return i * d; }));
    if (!zeta1) {
      trace_.push_back(step("fail", lead, hbar, "theta does not divide zeta"));
      return std::nullopt;
    }
    const auto omegas = recover_omega(*zeta1, k, d);
    if (omegas.empty()) {
      TraceStep s = step("fail", lead, hbar, "omega does not exist");
      s.d = d;
      trace_.push_back(std::move(s));
      return std::nullopt;
    }
    for (const CPolynomial& omega : omegas) {
      TraceStep s = step("sigma", lead, hbar);
      s.d = d;
      s.omega = omega;
      trace_.push_back(std::move(s));
      const NCPolynomial q = power_form(omega, d);
      if (auto r = descend(f, substitute(f, x() - q, y()), {shear(q)})) return r;
    }
    return std::nullopt;
  }

  std::vector<TraceStep>& trace_;
};

}  // namespace

Decision recognize_coordinate(const NCPolynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  Decision out;
  CoordinateSearch search(out.trace);
  if (auto cert = search.run(f)) {
    if (!(apply_word(*cert).f == f)) throw std::logic_error("coordinate certificate does not recompose");
    out.verdict = Verdict::TameCoordinate;
    out.certificate = std::move(*cert);
  } else {
    out.verdict = Verdict::NotZTameCoordinate;
    out.reason = "every reduction branch failed";
  }
  return out;
}

FilterResult mixed_monomial_filter(const ZEndomorphism& e) {
  const NCPolynomial u = e.f - x(), v = e.g - y();
  if (u.is_zero() && v.is_zero()) return FilterResult::Inconclusive;
  for (const NCPolynomial* p : {&u, &v}) {
    for (const auto& [w, c] : p->terms()) {
      if (w.count(Letter::X) == 0 || w.count(Letter::Y) == 0) return FilterResult::Inconclusive;
    }
  }
  return FilterResult::NotAutomorphism;
}

ZEndomorphism sigma_h(const NCPolynomial& h) {
  if (contains_letter(h, Letter::Y)) throw std::invalid_argument("sigma_h: h must be a polynomial in x and z");
  const NCPolynomial commutator = x() * z() - z() * y();
  const NCPolynomial hh = substitute(h, commutator, y());
  return {x() + z() * hh, y() + hh * z()};
}

}  // namespace ztame
