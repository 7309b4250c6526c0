#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "erdos/sieve.hpp"

namespace erdos {

// A truncated Euler-product value. When rigorous, the limit lies in
// [value - tail_bound, value + tail_bound].
struct ProductEstimate {
  double value = 0;
  std::uint64_t prime_limit = 0;
  double tail_bound = 0;
  bool rigorous = false;
};

// prod over odd p <= prime_limit of (1 + p/((p-1)(p^2-1))), minus 1.
// This is sum over odd d >= 3 of 1/(d phi(d)) as the limit grows. The
// log of the missing factors is below sum_{p > L} 2/p^2 < 2/L.
inline ProductEstimate first_moment_constant(std::uint64_t prime_limit) {
  if (prime_limit < 3)
    throw std::domain_error("first_moment_constant: prime_limit must be >= 3");
  double prod = 1.0;
  for_each_prime(prime_limit, [&](std::uint64_t p) {
    if (p == 2) return true;
    const double pd = static_cast<double>(p);
    prod *= 1.0 + pd / ((pd - 1.0) * (pd * pd - 1.0));
    return true;
  });
  ProductEstimate est;
  est.value = prod - 1.0;
  est.prime_limit = prime_limit;
  est.tail_bound = prod * std::expm1(2.0 / static_cast<double>(prime_limit));
  est.rigorous = true;
  return est;
}

// B - 2A + 1 for the double divisor sum
//   sum_{d1,d2 odd >= 3} 1/(phi(d1) phi(d2) [d1,d2]),
// with local factors A_p = sum_i 1/(phi(p^i) p^i) and
// B_p = sum_{i,j} 1/(phi(p^i) phi(p^j) p^max(i,j)), truncated at
// exponent `depth`. Local tails are geometric with ratio 1/p^2; the
// missing primes contribute at most 2/p^2 to log A and 8/p^2 to log B.
inline ProductEstimate second_moment_constant(std::uint64_t prime_limit,
                                              unsigned depth = 30) {
  if (prime_limit < 3)
    throw std::domain_error(
        "second_moment_constant: prime_limit must be >= 3");
  if (depth < 2)
    throw std::domain_error("second_moment_constant: depth must be >= 2");

  double log_a = 0, log_b = 0;
  double tail_a_sum = 0, tail_b_sum = 0;
  std::vector<double> inv_phi(depth + 1), inv_pow(depth + 1);
  for_each_prime(prime_limit, [&](std::uint64_t p) {
    if (p == 2) return true;
    const double pd = static_cast<double>(p);
    inv_phi[0] = 1.0;
    inv_pow[0] = 1.0;
    double phi_pk = pd - 1.0;
    for (unsigned k = 1; k <= depth; ++k) {
      inv_phi[k] = 1.0 / phi_pk;
      inv_pow[k] = inv_pow[k - 1] / pd;
      phi_pk *= pd;
    }
    double a_p = 0, b_p = 0, prefix = 0;
    for (unsigned i = 0; i <= depth; ++i) {
      const double t = inv_phi[i] * inv_pow[i];
      a_p += t;
      b_p += t * (2.0 * prefix + inv_phi[i]);
      prefix += inv_phi[i];
    }
    const double last = inv_phi[depth] * inv_pow[depth];
    const double tail_a = last / (pd * pd - 1.0);
    tail_a_sum += tail_a / a_p;
    tail_b_sum += 3.5 * tail_a / b_p;
    log_a += std::log(a_p);
    log_b += std::log(b_p);
    return true;
  });

  const double a = std::exp(log_a);
  const double b = std::exp(log_b);
  const double inv_limit = 1.0 / static_cast<double>(prime_limit);
  const double a_up = a * std::exp(tail_a_sum + 2.0 * inv_limit);
  const double b_up = b * std::exp(tail_b_sum + 8.0 * inv_limit);

  ProductEstimate est;
  est.value = b - 2.0 * a + 1.0;
  est.prime_limit = prime_limit;
  est.tail_bound = std::max(b_up - b, 2.0 * (a_up - a));
  est.rigorous = true;
  return est;
}

// Shared machinery for the character-split products: for a fixed prime
// limit, evaluates
//   p1 = prod (1 - 1/p) (1 + sum_k F(p^k)^alpha / p^k)
//   p2 = same with chi(p)^k on each term, chi the character mod 4,
// over odd p <= limit, where F(p^k) = sum_{d | p^k} 1/phi(d). The prime
// list is cached so a scalar search can re-evaluate cheaply.
class AltProducts {
 public:
  AltProducts(std::uint64_t prime_limit, unsigned depth = 30)
      : prime_limit_(prime_limit), depth_(depth) {
    if (prime_limit < 3)
      throw std::domain_error("AltProducts: prime_limit must be >= 3");
    if (depth < 2) throw std::domain_error("AltProducts: depth must be >= 2");
    for_each_prime(prime_limit, [&](std::uint64_t p) {
      if (p > 2) primes_.push_back(static_cast<std::uint32_t>(p));
      return true;
    });
  }

  struct Parts {
    ProductEstimate p1;
    ProductEstimate p2;
    double alpha = 0;
    unsigned depth = 0;
    double bound = 0;  // (p1 + p2) / 2^alpha
  };

  Parts evaluate(double alpha) const {
    if (alpha < 0) throw std::domain_error("AltProducts: alpha must be >= 0");
    double log_p1 = 0;
    double log_abs_p2 = 0;
    int sign_p2 = 1;
    double depth_tail_sum = 0;

    for (std::uint32_t p : primes_) {
      const double pd = static_cast<double>(p);
      const int chi = (p % 4 == 1) ? 1 : -1;
      double f = 1.0;          // F(p^k)
      double phi_pk = pd - 1;  // phi(p^k)
      double inv_pk = 1.0;
      double s1 = 1.0, s2 = 1.0;
      int sign = 1;
      unsigned k = 1;
      for (; k <= depth_; ++k) {
        f += 1.0 / phi_pk;
        inv_pk /= pd;
        sign *= chi;
        const double term = std::pow(f, alpha) * inv_pk;
        s1 += term;
        s2 += sign * term;
        if (term < 1e-19 * s1) break;
        phi_pk *= pd;
      }
      // Unsummed local terms: F is capped by 1 + p/(p-1)^2, so they are
      // geometric below F_inf^alpha * p^-k / (p - 1).
      const double f_inf = 1.0 + pd / ((pd - 1.0) * (pd - 1.0));
      depth_tail_sum += std::pow(f_inf, alpha) * inv_pk / (pd - 1.0) / s1;

      const double factor1 = (1.0 - 1.0 / pd) * s1;
      const double factor2 = (1.0 - 1.0 / pd) * s2;
      log_p1 += std::log(factor1);
      if (factor2 == 0.0) {
        sign_p2 = 0;
      } else if (sign_p2 != 0) {
        log_abs_p2 += std::log(std::abs(factor2));
        if (factor2 < 0) sign_p2 = -sign_p2;
      }
    }

    // Missing primes p > L multiply log p1 by at most (F_inf^alpha - 1)/p
    // per prime; with p/(p-1)^2 <= 1.6/p for p >= 5 this is below
    // 1.6 alpha e^{1.6 alpha / L} / L in total.
    const double inv_limit = 1.0 / static_cast<double>(prime_limit_);
    const double prime_tail =
        1.6 * alpha * std::exp(1.6 * alpha * inv_limit) * inv_limit;
    const double rel_tail = prime_tail + depth_tail_sum;

    Parts parts;
    parts.alpha = alpha;
    parts.depth = depth_;
    parts.p1.value = std::exp(log_p1);
    parts.p1.prime_limit = prime_limit_;
    parts.p1.tail_bound = parts.p1.value * std::expm1(rel_tail);
    parts.p1.rigorous = true;
    parts.p2.value =
        sign_p2 == 0 ? 0.0 : sign_p2 * std::exp(log_abs_p2);
    parts.p2.prime_limit = prime_limit_;
    parts.p2.tail_bound = std::abs(parts.p2.value) * std::expm1(rel_tail);
    parts.p2.rigorous = false;  // truncation-sensitive, no limit asserted
    parts.bound =
        (parts.p1.value + parts.p2.value) / std::pow(2.0, alpha);
    return parts;
  }

  std::uint64_t prime_limit() const { return prime_limit_; }
  unsigned depth() const { return depth_; }

 private:
  std::uint64_t prime_limit_;
  unsigned depth_;
  std::vector<std::uint32_t> primes_;
};

inline ProductEstimate p1_product(double alpha, std::uint64_t prime_limit,
                                  unsigned depth = 30) {
  return AltProducts(prime_limit, depth).evaluate(alpha).p1;
}

inline ProductEstimate p2_product(double alpha, std::uint64_t prime_limit,
                                  unsigned depth = 30) {
  return AltProducts(prime_limit, depth).evaluate(alpha).p2;
}

// (p1 + p2) / 2^alpha, the density bound of the character-split route
// normalized by X/4.
inline AltProducts::Parts alt_bound(double alpha, std::uint64_t prime_limit,
                                    unsigned depth = 30) {
  if (alpha <= 0) throw std::domain_error("alt_bound: alpha must be > 0");
  return AltProducts(prime_limit, depth).evaluate(alpha);
}

// log X * prod_{p <= X} (1 - 1/p); tends to e^{-gamma}.
inline double mertens_ratio(std::uint64_t x) {
  if (x < 3) throw std::domain_error("mertens_ratio: x must be >= 3");
  double prod = 1.0;
  for_each_prime(x, [&](std::uint64_t p) {
    prod *= 1.0 - 1.0 / static_cast<double>(p);
    return true;
  });
  return std::log(static_cast<double>(x)) * prod;
}

}  // namespace erdos
