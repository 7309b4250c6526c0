#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "erdos/sieve.hpp"

namespace erdos {

struct DenseSegment {
  std::vector<std::uint64_t> primes;  // initial segment, p = 1 (mod 4)
  double product = 1.0;               // prod (1 + 1/(p-1))
  double log10_q = 0.0;               // log10 of the segment's product
};

// Shortest initial segment of primes p = 1 (mod 4) whose product of
// (1 + 1/(p-1)) reaches `target`. Any modulus divisible by all of them
// (and itself = 1 mod 4) has divisor-totient sum >= target - 1, so
// targets >= 2 exhibit moduli the certification cascade cannot settle.
// The segment's product q is usually astronomical; only log10 q is
// returned. The product diverges like sqrt(log), hence the feasibility
// cap on target.
inline DenseSegment dense_counterexample_primes(
    double target, std::uint64_t prime_cap = 100000000) {
  if (target < 1)
    throw std::domain_error("dense_counterexample_primes: target must be >= 1");
  if (target > 4)
    throw std::domain_error(
        "dense_counterexample_primes: targets above 4 need prime segments "
        "beyond any configured cap");
  DenseSegment seg;
  if (target <= 1) return seg;
  for_each_prime(prime_cap, [&](std::uint64_t p) {
    if (p % 4 != 1) return true;
    seg.primes.push_back(p);
    seg.product *= 1.0 + 1.0 / static_cast<double>(p - 1);
    seg.log10_q += std::log10(static_cast<double>(p));
    return seg.product < target;
  });
  if (seg.product < target) {
    throw std::runtime_error(
        "dense_counterexample_primes: prime cap " + std::to_string(prime_cap) +
        " exhausted at product " + std::to_string(seg.product) +
        " before reaching target " + std::to_string(target));
  }
  return seg;
}

}  // namespace erdos
