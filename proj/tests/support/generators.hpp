#pragma once

#include "ztame/automorphism.hpp"
#include "ztame/cpoly.hpp"
#include "ztame/formanek.hpp"
#include "ztame/jacobian.hpp"
#include "ztame/ncpoly.hpp"
#include "ztame/normal_form.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace ztame::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }
  /// Integer in [-3, 3], nonzero if asked.
  Scalar coeff(bool nonzero = true);

 private:
  std::mt19937_64 eng_;
};

/// Random word with exactly the given letter counts, letters shuffled.
Word random_word(Rng& rng, unsigned nx, unsigned ny, unsigned nz);

/// Random element of K<x,y,z> with word length <= max_len and at most max_terms terms.
NCPolynomial random_nc(Rng& rng, unsigned max_len, unsigned max_terms);

/// Polynomial in y, z whose monomials all contain y (so p(0, z) = 0). The
/// first term has exactly `ydeg` letters y and is never affine when
/// `nonaffine` is set; extra terms have smaller y-degree.
NCPolynomial random_yz(Rng& rng, unsigned ydeg, unsigned max_z, unsigned terms, bool nonaffine);

/// Polynomial in z alone with degree <= max_z.
NCPolynomial random_z(Rng& rng, unsigned max_z, unsigned terms);

/// Forms whose first coordinate would exceed this many terms are resampled.
inline constexpr double kMaxEstimatedTerms = 20000;

/// Random normal form with n <= 4, deg_y p_i <= 3, deg_z <= 3 and the product
/// of the y-degrees of the p_i bounded by `budget`. With a case given, the
/// form falls into that branch of the leading-term formula; min_n is a lower
/// bound on n.
NormalForm random_normal_form(Rng& rng, std::optional<LeadingCase> which, unsigned budget, unsigned min_n = 0);

/// Random word of up to max_len generators of all three kinds, y-degree product <= budget.
TameWord random_tame_word(Rng& rng, unsigned max_len, unsigned budget);

/// Random nonzero polynomial in t0..t_{vars-1} of total degree <= deg.
CPolynomial random_c(Rng& rng, unsigned vars, unsigned deg, unsigned max_terms);

/// Random polynomial in zb1, zb2 of total degree <= deg.
CPolynomial random_zbar(Rng& rng, unsigned deg, unsigned max_terms);

/// Product of up to max_factors elementary or constant-diagonal factors.
Matrix2 random_elementary_product(Rng& rng, unsigned max_factors, unsigned deg);

/// Random nonzero element of H_n: every monomial has xy-degree n.
NCPolynomial random_homogeneous(Rng& rng, unsigned n, unsigned max_z, unsigned max_terms);

/// (x + u, y + v) with (u, v) != 0 and every monomial containing both x and y.
ZEndomorphism random_mixed_endomorphism(Rng& rng);

}  // namespace ztame::testing
