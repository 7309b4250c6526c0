#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "erdos/factored.hpp"
#include "erdos/rational.hpp"

namespace erdos {

namespace detail {

inline std::uint64_t phi_of_divisor(const FactoredInteger& q, std::uint64_t d) {
  std::uint64_t r = d;
  for (const auto& f : q.factors())
    if (d % f.prime == 0) r -= r / f.prime;
  return r;
}

}  // namespace detail

// sum over d | q, d >= 3, of 1/phi(d), exact. No parity restriction;
// certificates record this for every modulus.
inline Rational divisor_totient_sum_raw(const FactoredInteger& q) {
  Rational sum(0);
  for (std::uint64_t d : q.divisors()) {
    if (d < 3) continue;
    sum += make_rational(1, detail::phi_of_divisor(q, d));
  }
  return sum;
}

// The failing-modulus bound: a modulus escaping certification satisfies
// divisor_totient_sum(q) >= 1. Defined for odd q >= 3 only.
inline Rational divisor_totient_sum(const FactoredInteger& q) {
  if (q.value() % 2 == 0)
    throw std::domain_error("divisor_totient_sum: q must be odd");
  if (q.value() < 3)
    throw std::domain_error("divisor_totient_sum: q must be >= 3");
  return divisor_totient_sum_raw(q);
}

// d/phi(d) = rad(d)/phi(rad(d)) = sum of 1/m over all of M(d), exact.
inline Rational radical_totient_ratio(const FactoredInteger& d) {
  Rational r(1);
  for (const auto& f : d.factors())
    r *= make_rational(f.prime, f.prime - 1);
  return r;
}

// Ascending members of M(d) (integers composed of primes dividing d)
// not exceeding bound. Enumerated by exponent vectors over the
// radical's primes; distinct vectors give distinct products, so the
// list is duplicate-free by construction.
inline std::vector<std::uint64_t> smooth_members(const FactoredInteger& d,
                                                 std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound == 0) return out;
  std::vector<std::uint64_t> primes;
  for (const auto& f : d.factors()) primes.push_back(f.prime);

  // Depth-first over exponent vectors in lexicographic order.
  struct Gen {
    const std::vector<std::uint64_t>& ps;
    std::uint64_t bound;
    std::vector<std::uint64_t>& out;
    void run(std::size_t i, std::uint64_t m) {
      if (i == ps.size()) {
        out.push_back(m);
        return;
      }
      for (std::uint64_t v = m;; v *= ps[i]) {
        run(i + 1, v);
        if (v > bound / ps[i]) break;
      }
    }
  };
  Gen{primes, bound, out}.run(0, 1);
  std::sort(out.begin(), out.end());
  return out;
}

struct SmoothSumParts {
  Rational partial;  // sum of 1/m over M(d)-members <= bound
  Rational tail;     // d/phi(d) - partial, exact and >= 0
};

// Splits the full smooth sum d/phi(d) at `bound`; partial + tail is the
// identity exactly, at any bound.
inline SmoothSumParts smooth_sum_partial(const FactoredInteger& d,
                                         std::uint64_t bound) {
  if (d.value() < 2)
    throw std::domain_error("smooth_sum_partial: d must be >= 2");
  Rational partial(0);
  for (std::uint64_t m : smooth_members(d, bound))
    partial += make_rational(1, m);
  Rational tail = radical_totient_ratio(d) - partial;
  return {partial, tail};
}

}  // namespace erdos
