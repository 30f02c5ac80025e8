#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mcrpc {

using Rational = mpq_class;

// Accepts "7", "-3/4", "2.50". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Canonical form: "7" for integers, "3/2" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// mpq_class(num, den) leaves the fraction unreduced; this does not.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace mcrpc
