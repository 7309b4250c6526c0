#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace erdos {

// Exact rational carrier for divisor sums and criterion evidence.
// mpq_class keeps values canonical: reduced, denominator > 0.
using Rational = mpq_class;

inline Rational make_rational(std::uint64_t num, std::uint64_t den = 1) {
  Rational r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

// Serialized as "num/den", denominator always explicit ("2" -> "2/1").
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace erdos
