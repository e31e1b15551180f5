#pragma once

#include "ztame/cpoly.hpp"
#include "ztame/ncpoly.hpp"

#include <map>
#include <string>
#include <variant>

namespace ztame {

/// An element of H_n (polynomials homogeneous of degree n in x,y jointly)
/// written over the free K[t0..tn]-module basis of {x,y}-words of length n.
/// The coefficient t0^a0 ... tn^an on u1...un stands for z^a0 u1 z^a1 ... un z^an.
struct FormanekForm {
  unsigned degree = 0;
  std::map<Word, CPolynomial> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const FormanekForm&, const FormanekForm&) = default;
};

/// Throws ZeroPolynomialError or NotXYHomogeneousError.
FormanekForm to_form(const NCPolynomial& p);
NCPolynomial star_expand(const FormanekForm& form);

/// omega * y^d, i.e. the polynomial q(y,z) whose form is {y^d: omega}.
NCPolynomial power_form(const CPolynomial& omega, unsigned d);

/// Form of q(v, z) where q = omega * y^d and v = star_expand(inner). The
/// j-th copy of v (j = 0..d-1) carries its coefficients shifted by j*k, and
/// omega is evaluated at (t0, tk, t2k, ..., tdk) with k = inner.degree.
/// Throws IndexOverflowError if omega uses an index above d.
FormanekForm outer_compose(const CPolynomial& omega, unsigned d, const FormanekForm& inner);

struct OuterSolution {
  CPolynomial omega;
  unsigned d = 0;
};

struct NoSolution {
  std::string reason;
};

/// Finds (omega, d) with outer_compose(omega, d, inner) == outer.
std::variant<OuterSolution, NoSolution> solve_outer(const FormanekForm& outer, const FormanekForm& inner);

}  // namespace ztame
