#pragma once

#include <gmpxx.h>

#include <string>

namespace betti {

/// Canonical "p/q" (or "p" when q = 1) form.
std::string ratio_string(const mpq_class& q);

/// Decimal rendering rounded to significant_digits, trailing zeros trimmed
/// but always at least one fractional digit: 2 -> "2.0", 129/128 -> "1.0078125".
std::string decimal_string(const mpq_class& q, int significant_digits = 10);

} // namespace betti
