#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace erdos {

inline constexpr long double kEulerGammaL =
    0.57721566490153286060651209008240243104L;
inline constexpr long double kPiL = 3.14159265358979323846264338327950288420L;

inline constexpr double kEulerGamma = static_cast<double>(kEulerGammaL);

// psi(a/q) for integers 0 < a < q, via Gauss's finite closed form
//   psi(a/q) = -gamma - ln(2q) - (pi/2)cot(pi a/q)
//              + 2 sum_{n=1}^{floor((q-1)/2)} cos(2 pi n a/q) ln sin(pi n/q).
// Evaluated in extended precision; the absolute error stays below 1e-12
// for the periods this library handles (q <= a few thousand).
inline double digamma_fraction(std::uint64_t a, std::uint64_t q) {
  if (q < 2 || a == 0 || a >= q)
    throw std::domain_error("digamma_fraction: need 0 < a < q");

  const long double x = static_cast<long double>(a) / q;
  long double value = -kEulerGammaL - std::log(2.0L * q) -
                      (kPiL / 2.0L) / std::tan(kPiL * x);
  long double sum = 0.0L;
  for (std::uint64_t n = 1; 2 * n <= q - 1; ++n) {
    const long double angle = 2.0L * kPiL * n * a / q;
    sum += std::cos(angle) * std::log(std::sin(kPiL * n / q));
  }
  return static_cast<double>(value + 2.0L * sum);
}

}  // namespace erdos
