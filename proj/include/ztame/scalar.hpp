#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ztame {

/// Exact rational number. mpq_class keeps values canonical as long as every
/// construction from a numerator/denominator pair goes through make_scalar.
using Scalar = mpq_class;

Scalar make_scalar(long num, long den = 1);
Scalar make_scalar(const mpz_class& num, const mpz_class& den);

/// Parses "p" or "p/q" (optional leading '-'); throws std::invalid_argument.
Scalar parse_scalar(const std::string& text);
std::string to_string(const Scalar& c);

/// All rational b with b^k == c. At most two entries, the positive one first.
std::vector<Scalar> rational_root(const Scalar& c, unsigned k);

/// c^k for a non-negative integer exponent.
Scalar power(const Scalar& c, unsigned k);

}  // namespace ztame
