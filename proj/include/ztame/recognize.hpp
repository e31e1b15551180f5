#pragma once

#include "ztame/automorphism.hpp"
#include "ztame/cpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ztame {

enum class Verdict {
  TameAutomorphism,
  NotAutomorphism,
  NotZTame,
  TameCoordinate,
  NotZTameCoordinate,
};

std::string to_string(Verdict v);

/// One reduction step or dead branch of a recognizer.
struct TraceStep {
  std::string action;  // "linear", "step2", "step3", "swap", "shear", "sigma", "base", "fail"
  NCPolynomial u;      // leading component(s) the step looked at
  NCPolynomial v;
  std::optional<unsigned> d;
  std::optional<CPolynomial> omega;
  std::string note;
};

struct Decision {
  Verdict verdict = Verdict::NotZTame;
  TameWord certificate;  // empty unless the verdict is positive
  std::vector<TraceStep> trace;
  std::string reason;
};

/// Reduces (f, g) by leading-term elimination until it is linear. A positive
/// verdict carries a word w with apply_word(w) == e.
Decision recognize_automorphism(const ZEndomorphism& e);

/// Decides whether f is the first coordinate of a z-tame automorphism. A
/// positive verdict carries a word w with apply_word(w).f == f. Throws
/// ZeroPolynomialError for f == 0.
Decision recognize_coordinate(const NCPolynomial& f);

enum class FilterResult { NotAutomorphism, Inconclusive };

/// (x + u, y + v) with (u, v) != 0 and every monomial of u and v containing
/// both x and y is never an automorphism.
FilterResult mixed_monomial_filter(const ZEndomorphism& e);

/// (x + z h(xz - zy, z), y + h(xz - zy, z) z). The letter x of h plays the
/// role of its first variable; h must not contain y.
ZEndomorphism sigma_h(const NCPolynomial& h);

}  // namespace ztame
