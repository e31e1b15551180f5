#include "generators.hpp"

#include <algorithm>
#include <cmath>

namespace ztame::testing {

Scalar Rng::coeff(bool nonzero) {
  int c = uniform(-3, 3);
  while (nonzero && c == 0) c = uniform(-3, 3);
  return c;
}

Word random_word(Rng& rng, unsigned nx, unsigned ny, unsigned nz) {
  std::string s = std::string(nx, 'x') + std::string(ny, 'y') + std::string(nz, 'z');
  for (std::size_t i = s.size(); i > 1; --i) std::swap(s[i - 1], s[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(i) - 1))]);
  return Word(s);
}

NCPolynomial random_nc(Rng& rng, unsigned max_len, unsigned max_terms) {
  NCPolynomial p;
  const int terms = rng.uniform(0, static_cast<int>(max_terms));
  const char letters[] = {'x', 'y', 'z'};
  for (int i = 0; i < terms; ++i) {
    std::string s;
    const int len = rng.uniform(0, static_cast<int>(max_len));
    for (int j = 0; j < len; ++j) s += letters[rng.uniform(0, 2)];
    p.add_term(Word(s), rng.coeff());
  }
  return p;
}

NCPolynomial random_yz(Rng& rng, unsigned ydeg, unsigned max_z, unsigned terms, bool nonaffine) {
  NCPolynomial p;
  unsigned zlead = static_cast<unsigned>(rng.uniform(0, static_cast<int>(max_z)));
  if (nonaffine && ydeg == 1 && zlead == 0) zlead = static_cast<unsigned>(rng.uniform(1, static_cast<int>(std::max(1u, max_z))));
  p.add_term(random_word(rng, 0, ydeg, zlead), rng.coeff());
  for (unsigned i = 1; i < terms; ++i) {
    const unsigned dy = static_cast<unsigned>(rng.uniform(1, static_cast<int>(ydeg)));
    const unsigned dz = static_cast<unsigned>(rng.uniform(0, static_cast<int>(max_z)));
    p.add_term(random_word(rng, 0, dy, dz), rng.coeff());
  }
  if (p.is_zero() || (nonaffine && is_affine(shear(p)))) return random_yz(rng, ydeg, max_z, terms, nonaffine);
  return p;
}

NCPolynomial random_z(Rng& rng, unsigned max_z, unsigned terms) {
  NCPolynomial p;
  for (unsigned i = 0; i < terms; ++i) p.add_term(Word::of(Letter::Z, static_cast<unsigned>(rng.uniform(0, static_cast<int>(max_z)))), rng.coeff());
  return p;
}

namespace {

unsigned pick_degree(Rng& rng, unsigned& product, unsigned budget) {
  unsigned top = 1;
  while (top < 3 && product * (top + 1) <= budget) ++top;
  const unsigned d = static_cast<unsigned>(rng.uniform(1, static_cast<int>(top)));
  product *= d;
  return d;
}

// Upper bound on the number of terms of the first coordinate of nf.
double estimated_terms(const NormalForm& nf) {
  auto grow = [](const NCPolynomial& p, double arg) {
    double s = 0;
    for (const auto& [w, c] : p.terms()) s += std::pow(arg, w.count(Letter::Y));
    return s;
  };
  // (F, G): sizes of the coordinates of rho_n tau ... rho_i.
  double f = 1 + static_cast<double>(nf.rhos.back().p1.size()), g = 1;
  for (std::size_t i = nf.n(); i-- > 0;) {
    const double nf_ = g + grow(nf.rhos[i].p1, f);
    g = f + static_cast<double>(nf.rhos[i].p2.size());
    f = nf_;
  }
  return f + g;
}

NormalForm sample_normal_form(Rng& rng, LeadingCase which, unsigned budget, unsigned min_n) {
  const unsigned lo = std::max(min_n, which == LeadingCase::NonlinearEnds ? 0u : 1u);
  const unsigned n = static_cast<unsigned>(rng.uniform(static_cast<int>(lo), 4));
  unsigned product = 1;
  NormalForm nf;
  nf.rhos.assign(n + 1, Triangular{});

  Triangular& rho0 = nf.rhos[0];
  rho0.a1 = rng.coeff();
  rho0.a2 = rng.coeff();
  rho0.p2 = random_z(rng, 3, static_cast<unsigned>(rng.uniform(0, 2)));
  if (which == LeadingCase::AffineRho0) {
    rho0.p1 = rng.coeff() * y() + random_z(rng, 3, static_cast<unsigned>(rng.uniform(0, 2)));
  } else {
    const unsigned d = pick_degree(rng, product, budget);
    rho0.p1 = random_yz(rng, d, 3, static_cast<unsigned>(rng.uniform(1, 2)), true) +
              random_z(rng, 3, static_cast<unsigned>(rng.uniform(0, 1)));
  }
  for (unsigned i = 1; i <= n; ++i) {
    if (i == n && which == LeadingCase::AffineRhoN) {
      nf.rhos[i] = shear(rng.coeff() * y());
    } else {
      const unsigned d = pick_degree(rng, product, budget);
      nf.rhos[i] = shear(random_yz(rng, d, 3, static_cast<unsigned>(rng.uniform(1, 2)), true));
    }
  }
  return nf;
}

}  // namespace

NormalForm random_normal_form(Rng& rng, std::optional<LeadingCase> which, unsigned budget, unsigned min_n) {
  if (!which) which = static_cast<LeadingCase>(rng.uniform(0, 2));
  while (true) {
    NormalForm nf = sample_normal_form(rng, *which, budget, min_n);
    if (estimated_terms(nf) <= kMaxEstimatedTerms) return nf;
  }
}

TameWord random_tame_word(Rng& rng, unsigned max_len, unsigned budget) {
  TameWord w;
  unsigned product = 1;
  const int len = rng.uniform(1, static_cast<int>(max_len));
  for (int i = 0; i < len; ++i) {
    switch (rng.uniform(0, 2)) {
      case 0: {
        Affine a;
        do {
          for (auto& row : a.m)
            for (auto& e : row) e = rng.coeff(false);
        } while (a.m[0][0] * a.m[1][1] - a.m[0][1] * a.m[1][0] == 0);
        a.zc = {rng.coeff(false), rng.coeff(false)};
        a.tr = {rng.coeff(false), rng.coeff(false)};
        w.emplace_back(a);
        break;
      }
      case 1: {
        Triangular t;
        t.a1 = rng.coeff();
        t.a2 = rng.coeff();
        t.p1 = random_yz(rng, pick_degree(rng, product, budget), 4, static_cast<unsigned>(rng.uniform(1, 2)), false) +
               random_z(rng, 4, 1);
        t.p2 = random_z(rng, 4, static_cast<unsigned>(rng.uniform(0, 2)));
        w.emplace_back(t);
        break;
      }
      default: w.emplace_back(Tau{});
    }
  }
  return w;
}

CPolynomial random_c(Rng& rng, unsigned vars, unsigned deg, unsigned max_terms) {
  CPolynomial p(Family::T);
  while (p.is_zero()) {
    const int terms = rng.uniform(1, static_cast<int>(max_terms));
    for (int i = 0; i < terms; ++i) {
      Exponents e(vars, 0);
      int budget = rng.uniform(0, static_cast<int>(deg));
      for (int j = 0; j < budget; ++j) ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(vars) - 1))];
      p.add_term(e, rng.coeff());
    }
  }
  return p;
}

CPolynomial random_zbar(Rng& rng, unsigned deg, unsigned max_terms) {
  CPolynomial p(Family::Zbar);
  const int terms = rng.uniform(1, static_cast<int>(max_terms));
  for (int i = 0; i < terms; ++i) {
    const unsigned total = static_cast<unsigned>(rng.uniform(0, static_cast<int>(deg)));
    const unsigned a = static_cast<unsigned>(rng.uniform(0, static_cast<int>(total)));
    p.add_term(Exponents{0, a, total - a}, rng.coeff());
  }
  return p;
}

Matrix2 random_elementary_product(Rng& rng, unsigned max_factors, unsigned deg) {
  Matrix2 m = Matrix2::identity();
  const int count = rng.uniform(1, static_cast<int>(max_factors));
  for (int i = 0; i < count; ++i) {
    ElementaryFactor f;
    switch (rng.uniform(0, 4)) {
      case 0: case 1: f.kind = ElementaryFactor::Kind::Upper; f.entry = random_zbar(rng, deg, 3); break;
      case 2: case 3: f.kind = ElementaryFactor::Kind::Lower; f.entry = random_zbar(rng, deg, 3); break;
      default: f.kind = ElementaryFactor::Kind::Diagonal; f.d1 = rng.coeff(); f.d2 = rng.coeff();
    }
    m = m * f.matrix();
  }
  return m;
}

NCPolynomial random_homogeneous(Rng& rng, unsigned n, unsigned max_z, unsigned max_terms) {
  NCPolynomial p;
  const int terms = rng.uniform(1, static_cast<int>(max_terms));
  while (p.is_zero()) {
    for (int i = 0; i < terms; ++i) {
      const unsigned nx = static_cast<unsigned>(rng.uniform(0, static_cast<int>(n)));
      p.add_term(random_word(rng, nx, n - nx, static_cast<unsigned>(rng.uniform(0, static_cast<int>(max_z)))), rng.coeff());
    }
  }
  return p;
}

ZEndomorphism random_mixed_endomorphism(Rng& rng) {
  auto mixed = [&rng]() {
    NCPolynomial p;
    const int terms = rng.uniform(0, 3);
    for (int i = 0; i < terms; ++i) {
      const unsigned nx = static_cast<unsigned>(rng.uniform(1, 2)), ny = static_cast<unsigned>(rng.uniform(1, 2));
      p.add_term(random_word(rng, nx, ny, static_cast<unsigned>(rng.uniform(0, 2))), rng.coeff());
    }
    return p;
  };
  NCPolynomial u, v;
  while (u.is_zero() && v.is_zero()) {
    u = mixed();
    v = mixed();
  }
  return {x() + u, y() + v};
}

}  // namespace ztame::testing
