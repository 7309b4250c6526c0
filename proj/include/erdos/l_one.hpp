#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "erdos/digamma.hpp"
#include "erdos/erdosian.hpp"

namespace erdos {

struct LOneValue {
  double value;
  double error_bound;
};

// Certified bound on the digamma-backed evaluation. Well below the
// 1e-8 nonzero threshold; anything between the two escalates.
inline constexpr double kLOneErrorBound = 1e-12;

// psi(a/q) for a = 1..q-1, reused across a brute-force enumeration.
inline std::vector<double> digamma_table(std::uint64_t q) {
  std::vector<double> t(q - 1);
  for (std::uint64_t a = 1; a < q; ++a) t[a - 1] = digamma_fraction(a, q);
  return t;
}

inline LOneValue l_one_from_table(const ErdosianFunction& f,
                                  const std::vector<double>& psi) {
  long double acc = 0.0L;
  for (std::uint64_t a = 1; a < f.period(); ++a)
    acc += static_cast<long double>(f.at(a)) * psi[a - 1];
  return {static_cast<double>(-acc / f.period()), kLOneErrorBound};
}

// L(1,f) = -(1/q) sum_{a=1}^{q-1} f(a) psi(a/q), the closed form of the
// conditionally convergent series sum f(n)/n.
inline LOneValue l_one(const ErdosianFunction& f) {
  if (!f.balanced())
    throw std::domain_error(
        "l_one: period sum is nonzero, the series diverges");
  return l_one_from_table(f, digamma_table(f.period()));
}

}  // namespace erdos
