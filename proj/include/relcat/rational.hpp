#pragma once

#include <gmpxx.h>

#include <string>

namespace relcat {

/// Exact arbitrary-precision rational scalar. No floating point anywhere.
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input.
Rat rat_from_string(const std::string& s);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

/// num/den in canonical form. GMP's two-argument constructor does not
/// reduce, and non-canonical values break exact comparison, so every
/// fraction must be built through here (or by arithmetic).
inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace relcat
