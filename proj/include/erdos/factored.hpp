#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "erdos/sieve.hpp"

namespace erdos {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A positive integer with its prime factorization and the arithmetic
// functions derived from it (phi, d, divisors, v_p).
class FactoredInteger {
 public:
  FactoredInteger() : n_(1) {}

  std::uint64_t value() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  std::uint64_t phi() const {
    std::uint64_t r = n_;
    for (const auto& f : factors_) r -= r / f.prime;
    return r;
  }

  std::uint64_t divisor_count() const {
    std::uint64_t d = 1;
    for (const auto& f : factors_) d *= f.exponent + 1;
    return d;
  }

  std::vector<std::uint64_t> divisors() const {
    std::vector<std::uint64_t> ds{1};
    for (const auto& f : factors_) {
      std::size_t old = ds.size();
      std::uint64_t pk = 1;
      for (unsigned e = 1; e <= f.exponent; ++e) {
        pk *= f.prime;
        for (std::size_t i = 0; i < old; ++i) ds.push_back(ds[i] * pk);
      }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
  }

  unsigned v_p(std::uint64_t p) const {
    for (const auto& f : factors_)
      if (f.prime == p) return f.exponent;
    return 0;
  }

  std::uint64_t radical() const {
    std::uint64_t r = 1;
    for (const auto& f : factors_) r *= f.prime;
    return r;
  }

  // n == 1 has no prime factor; by convention returns 1 there.
  std::uint64_t smallest_prime_factor() const {
    return factors_.empty() ? 1 : factors_.front().prime;
  }

  bool is_prime() const {
    return factors_.size() == 1 && factors_.front().exponent == 1;
  }

  static FactoredInteger from_parts(std::uint64_t n,
                                    std::vector<PrimePower> factors) {
    FactoredInteger f;
    f.n_ = n;
    f.factors_ = std::move(factors);
    return f;
  }

 private:
  std::uint64_t n_;
  std::vector<PrimePower> factors_;
};

namespace detail {

inline void check_positive(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
}

}  // namespace detail

// Sieve-backed factorization for bulk work. Out-of-range n is a range
// error; callers with isolated large n use the trial-division overload.
inline FactoredInteger factorize(std::uint64_t n, const SpfSieve& sieve) {
  detail::check_positive(n);
  if (n == 1) return FactoredInteger{};
  if (n > sieve.limit()) {
    throw std::range_error("factorize: " + std::to_string(n) +
                           " above sieve limit " +
                           std::to_string(sieve.limit()));
  }
  std::vector<PrimePower> fs;
  std::uint64_t m = n;
  while (m > 1) {
    std::uint64_t p = sieve.spf(m);
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    fs.push_back({p, e});
  }
  return FactoredInteger::from_parts(n, std::move(fs));
}

// Deterministic trial division up to sqrt(n).
inline FactoredInteger factorize(std::uint64_t n) {
  detail::check_positive(n);
  std::vector<PrimePower> fs;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    fs.push_back({p, e});
  }
  if (m > 1) fs.push_back({m, 1});
  return FactoredInteger::from_parts(n, std::move(fs));
}

}  // namespace erdos
