#include "ztame/jacobian.hpp"

#include "ztame/errors.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

namespace ztame {

std::pair<CPolynomial, CPolynomial> z_derivatives(const NCPolynomial& p) {
  CPolynomial px(Family::Zbar), py(Family::Zbar);
  for (const auto& [w, c] : p.terms()) {
    const std::string& s = w.str();
    const auto pos = s.find_first_not_of('z');
    if (pos == std::string::npos || s.find_first_not_of('z', pos + 1) != std::string::npos) {
      throw NotLinearFormError();
    }
    const unsigned i = static_cast<unsigned>(pos);
    const unsigned j = static_cast<unsigned>(s.size() - pos - 1);
    (s[pos] == 'x' ? px : py).add_term(Exponents{0, i, j}, c);
  }
  return {px, py};
}

Matrix2 Matrix2::identity() {
  return of(CPolynomial(Family::Zbar, 1), CPolynomial(Family::Zbar), CPolynomial(Family::Zbar),
            CPolynomial(Family::Zbar, 1));
}

Matrix2 Matrix2::of(CPolynomial a00, CPolynomial a01, CPolynomial a10, CPolynomial a11) {
  Matrix2 m;
  m.a[0][0] = std::move(a00);
  m.a[0][1] = std::move(a01);
  m.a[1][0] = std::move(a10);
  m.a[1][1] = std::move(a11);
  return m;
}

CPolynomial Matrix2::det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

bool Matrix2::is_constant() const {
  for (const auto& row : a)
    for (const auto& e : row)
      if (!e.is_constant()) return false;
  return true;
}

Matrix2 operator*(const Matrix2& l, const Matrix2& r) {
  Matrix2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.a[i][j] = l.a[i][0] * r.a[0][j] + l.a[i][1] * r.a[1][j];
  return m;
}

Matrix2 jacobian(const ZEndomorphism& e) {
  auto linear_part = [](const NCPolynomial& p) {
    NCPolynomial out;
    for (const auto& [w, c] : p.terms()) {
      if (w.count(Letter::X) + w.count(Letter::Y) == 0) continue;
      if (w.count(Letter::X) + w.count(Letter::Y) > 1) throw NotLinearInXYError();
      out.add_term(w, c);
    }
    return out;
  };
  auto [fx, fy] = z_derivatives(linear_part(e.f));
  auto [gx, gy] = z_derivatives(linear_part(e.g));
  return Matrix2::of(fx, gx, fy, gy);
}

Matrix2 ElementaryFactor::matrix() const {
  const CPolynomial one(Family::Zbar, 1), zero(Family::Zbar);
  switch (kind) {
    case Kind::Upper: return Matrix2::of(one, entry, zero, one);
    case Kind::Lower: return Matrix2::of(one, zero, entry, one);
    case Kind::Diagonal: return Matrix2::of(CPolynomial(Family::Zbar, d1), zero, zero, CPolynomial(Family::Zbar, d2));
  }
  throw std::logic_error("unknown factor kind");
}

Matrix2 ElementaryCertificate::product() const {
  Matrix2 m = Matrix2::identity();
  for (const auto& f : factors) m = m * f.matrix();
  return m;
}

namespace {

long measure(const Matrix2& m) {
  long s = 0;
  for (const auto& row : m.a)
    for (const auto& e : row)
      if (!e.is_zero()) s += static_cast<long>(*e.total_degree()) + 1;
  return s;
}

ElementaryFactor upper(CPolynomial q) { return {ElementaryFactor::Kind::Upper, std::move(q), 1, 1}; }
ElementaryFactor lower(CPolynomial q) { return {ElementaryFactor::Kind::Lower, std::move(q), 1, 1}; }

struct Move {
  bool row = true;  // row operation (left factor) or column operation (right factor)
  ElementaryFactor op;  // matrix applied to the current matrix
  Matrix2 result;
  long score = 0;
};

}  // namespace

Ge2Result ge2_certificate(const Matrix2& input) {
  const CPolynomial det = input.det();
  if (!det.is_constant() || det.is_zero()) return NotInvertible{det};

  // input == left * m * right throughout.
  std::vector<ElementaryFactor> left, right;
  Matrix2 m = input;
  while (!m.is_constant()) {
    const long current = measure(m);
    std::optional<Move> best;
    auto consider = [&](bool row, const ElementaryFactor& op) {
      Matrix2 next = row ? op.matrix() * m : m * op.matrix();
      const long s = measure(next);
      if (s < current && (!best || s < best->score)) best = Move{row, op, std::move(next), s};
    };
    // Cancel the leading form of a[i][j] against a[other][j] (row) or a[i][other] (column).
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const CPolynomial& target = m.a[i][j];
        if (target.is_zero()) continue;
        const int o = 1 - i, oc = 1 - j;
        if (!m.a[o][j].is_zero()) {
          if (auto q = exact_divide(leading_form(target), leading_form(m.a[o][j]))) {
            consider(true, i == 0 ? upper(-*q) : lower(-*q));
          }
        }
        if (!m.a[i][oc].is_zero()) {
          if (auto q = exact_divide(leading_form(target), leading_form(m.a[i][oc]))) {
            // column j -= q * column oc
            consider(false, j == 1 ? upper(-*q) : lower(-*q));
          }
        }
      }
    }
    if (!best) return NotReducible{m};
    ElementaryFactor inverse = best->op;
    inverse.entry = -inverse.entry;
    if (best->row) left.push_back(inverse);
    else right.insert(right.begin(), inverse);
    m = std::move(best->result);
  }

  // Constant invertible matrix: N = [Upper(1)] Lower(l) Diag(a, det/a) Upper(u).
  std::vector<ElementaryFactor> middle;
  const CPolynomial one(Family::Zbar, 1);
  if (m.a[0][0].is_zero()) {
    middle.push_back(upper(one));
    m = upper(-one).matrix() * m;
  }
  const Scalar a = m.a[0][0].constant_term();
  const Scalar u = m.a[0][1].constant_term() / a;
  const Scalar l = m.a[1][0].constant_term() / a;
  const Scalar b = m.det().constant_term() / a;
  middle.push_back(lower(CPolynomial(Family::Zbar, l)));
  middle.push_back({ElementaryFactor::Kind::Diagonal, CPolynomial(Family::Zbar), a, b});
  middle.push_back(upper(CPolynomial(Family::Zbar, u)));

  ElementaryCertificate cert;
  auto push = [&](const ElementaryFactor& f) {
    const bool trivial = f.kind == ElementaryFactor::Kind::Diagonal ? (f.d1 == 1 && f.d2 == 1) : f.entry.is_zero();
    if (!trivial) cert.factors.push_back(f);
  };
  for (const auto& f : left) push(f);
  for (const auto& f : middle) push(f);
  for (const auto& f : right) push(f);
  if (!(cert.product() == input)) throw std::logic_error("elementary certificate does not reproduce the matrix");
  return cert;
}

}  // namespace ztame
