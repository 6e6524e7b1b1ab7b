#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace weyl {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Lowest-terms copy. mpq_class(p, q) does not reduce on construction, and
/// GMP's rational operations expect reduced operands.
inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" (q > 0 after sign normalization). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace weyl
