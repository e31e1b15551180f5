#pragma once

#include "ztame/automorphism.hpp"

#include <utility>
#include <vector>

namespace ztame {

/// Reduced shape rho_n tau ... tau rho_1 tau rho_0 of a z-tame automorphism.
///
/// rhos[0] is rho_0 (an arbitrary triangular map, applied last to the
/// coordinates, i.e. outermost); rhos[i] for i >= 1 is (x + p_i(y,z), y)
/// with p_i(0,z) = 0, and rho_1..rho_{n-1} are not affine. As a TameWord the
/// form reads [rho_n, Tau, rho_{n-1}, ..., Tau, rho_0].
struct NormalForm {
  std::vector<Triangular> rhos{Triangular{}};

  std::size_t n() const { return rhos.size() - 1; }
  bool rho0_affine() const { return is_affine(rhos.front()); }
  bool rhon_affine() const { return is_affine(rhos.back()); }
  bool is_trivial() const;

  TameWord to_word() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

ZEndomorphism apply(const NormalForm& nf);

/// Merges same-factor neighbours, pushes the z-only parts of interior letters
/// through Tau and collapses affine interior letters until the word is reduced.
NormalForm normalize(const TameWord& w);

/// Checks the structural invariants of a normal form.
bool is_valid(const NormalForm& nf);

enum class LeadingCase {
  NonlinearEnds,  // rho_n not affine, p_0 not of the form c*y + r(z)
  AffineRho0,     // p_0 = c*y + r(z) with c != 0, rho_n not affine
  AffineRhoN,     // rho_n = (x + c*y, y) with c != 0, p_0 not of the form c*y + r(z)
};

/// Which leading-term formula applies; nullopt outside the three cases.
std::optional<LeadingCase> leading_case(const NormalForm& nf);

/// Leading (1,1)-bicomponents of both coordinates, predicted from the
/// leading components q_i of the p_i alone. Throws TrivialWordError for the
/// identity form and OutsideCaseSplitError when no formula applies.
std::pair<NCPolynomial, NCPolynomial> predict_leading(const NormalForm& nf);

}  // namespace ztame
