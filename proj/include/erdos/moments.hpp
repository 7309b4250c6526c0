#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "erdos/digamma.hpp"
#include "erdos/divisor_sums.hpp"
#include "erdos/factored.hpp"
#include "erdos/products.hpp"

namespace erdos {

struct MomentPoint {
  double exponent = 0;
  std::uint64_t x = 0;  // 0 for product-based limits
  double normalized_value = 0;
};

namespace detail {

inline constexpr std::uint64_t kTableBudgetBytes = 2ull << 30;

inline void check_table_limit(std::uint64_t x, const char* who) {
  // totient table: 4 bytes/entry, plus the accumulator array.
  if (x > kTableBudgetBytes / 8)
    throw std::length_error(std::string(who) + ": x = " + std::to_string(x) +
                            " exceeds the " +
                            std::to_string(kTableBudgetBytes) +
                            "-byte table budget");
}

// phi(n) for all n <= x.
inline std::vector<std::uint32_t> totient_table(std::uint64_t x) {
  std::vector<std::uint32_t> phi(x + 1);
  for (std::uint64_t i = 0; i <= x; ++i)
    phi[i] = static_cast<std::uint32_t>(i);
  for (std::uint64_t i = 2; i <= x; ++i) {
    if (phi[i] != i) continue;  // i composite: already reduced
    for (std::uint64_t j = i; j <= x; j += i) phi[j] -= phi[j] / i;
  }
  return phi;
}

}  // namespace detail

// Divisor-totient sums sum_{d | q, d >= 3} 1/phi(d) for every
// q = 1 (mod 4) up to x, accumulated in one pass over odd d. Built once
// per x; moments at any exponent then read the same table.
class MomentTable {
 public:
  explicit MomentTable(std::uint64_t x) : x_(x) {
    if (x < 5) throw std::domain_error("MomentTable: x must be >= 5");
    detail::check_table_limit(x, "MomentTable");
    const std::vector<std::uint32_t> phi = detail::totient_table(x);
    sums_.assign((x - 1) / 4 + 1, 0.0);  // index j <-> q = 4j + 1
    for (std::uint64_t d = 3; d <= x; d += 2) {
      const double w = 1.0 / phi[d];
      const std::uint64_t m0 = d % 4;  // d*m = 1 (mod 4) iff m = d (mod 4)
      for (std::uint64_t q = d * m0; q <= x; q += 4 * d) sums_[q >> 2] += w;
    }
  }

  std::uint64_t x() const { return x_; }
  std::uint64_t count() const { return sums_.size() - 1; }  // q >= 5
  const std::vector<double>& sums() const { return sums_; }

  // (1/count) sum over q of (divisor-totient sum)^r.
  double moment(double r) const {
    double acc = 0;
    for (std::size_t j = 1; j < sums_.size(); ++j)
      acc += std::pow(sums_[j], r);
    return acc / static_cast<double>(count());
  }

 private:
  std::uint64_t x_;
  std::vector<double> sums_;
};

inline MomentPoint moment_sum_empirical(double r, std::uint64_t x) {
  if (r < 1) throw std::domain_error("moment_sum_empirical: r must be >= 1");
  MomentTable table(x);
  return {r, x, table.moment(r)};
}

// F(q)^alpha with F(q) = sum_{d|q} 1/phi(d), evaluated in floating
// point from the exact rational base.
inline double f_alpha(const FactoredInteger& q, double alpha) {
  if (q.value() == 0) throw std::domain_error("f_alpha: q must be positive");
  Rational f = make_rational(1) + divisor_totient_sum_raw(q);
  if (q.value() % 2 == 0) f += make_rational(1);  // d = 2 contributes 1/phi(2)
  return std::pow(f.get_d(), alpha);
}

// Integer-moment limit over q = 1 (mod 4), reconstructed by binomial
// expansion of (F - 1)^r: sum_k C(r,k) (-1)^(r-k) mean(F^k), each mean
// taken from the untwisted Euler product at alpha = k (the twisted part
// is treated as asymptotically negligible).
inline double moment_constant_integer(unsigned r, std::uint64_t prime_limit,
                                      unsigned depth = 30) {
  if (r < 1 || r > 8)
    throw std::domain_error("moment_constant_integer: r must be in [1, 8]");
  const AltProducts products(prime_limit, depth);
  double acc = (r % 2 == 0) ? 1.0 : -1.0;  // k = 0 term: mean(F^0) = 1
  double binom = 1.0;
  for (unsigned k = 1; k <= r; ++k) {
    binom = binom * (r - k + 1) / k;
    const double sign = ((r - k) % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binom * products.evaluate(static_cast<double>(k)).p1.value;
  }
  return acc;
}

struct WirsingCheck {
  double alpha = 0;
  std::uint64_t x = 0;
  double empirical = 0;
  double predicted = 0;
  double ratio = 0;
};

// Mean-value sanity check: sieve sum of F(q)^alpha over odd q <= x
// against the Wirsing asymptotic X e^-gamma / log X times the local
// product (tau = 1, so Gamma(tau) = 1).
inline WirsingCheck wirsing_check(double alpha, std::uint64_t x,
                                  unsigned depth = 30) {
  if (alpha < 0 || alpha > 4)
    throw std::domain_error("wirsing_check: alpha must be in [0, 4]");
  if (x < 10000) throw std::domain_error("wirsing_check: x must be >= 10^4");
  detail::check_table_limit(x, "wirsing_check");

  // sum_{d | q, d >= 3} 1/phi(d) for every odd q, one pass over odd d.
  std::vector<double> sums((x + 1) / 2, 0.0);  // index i <-> q = 2i + 1
  {
    const std::vector<std::uint32_t> phi = detail::totient_table(x);
    for (std::uint64_t d = 3; d <= x; d += 2) {
      const double w = 1.0 / phi[d];
      for (std::uint64_t q = d; q <= x; q += 2 * d) sums[q >> 1] += w;
    }
  }
  double empirical = 0;
  for (double s : sums) empirical += std::pow(1.0 + s, alpha);

  double product = 1.0;
  for_each_prime(x, [&](std::uint64_t p) {
    if (p == 2) return true;
    const double pd = static_cast<double>(p);
    double f = 1.0, phi_pk = pd - 1.0, inv_pk = 1.0, local = 1.0;
    for (unsigned k = 1; k <= depth; ++k) {
      f += 1.0 / phi_pk;
      inv_pk /= pd;
      const double term = std::pow(f, alpha) * inv_pk;
      local += term;
      if (term < 1e-19 * local) break;
      phi_pk *= pd;
    }
    product *= local;
    return true;
  });
  const double xd = static_cast<double>(x);
  const double predicted =
      xd * std::exp(-kEulerGamma) / std::log(xd) * product;

  return {alpha, x, empirical, predicted, empirical / predicted};
}

}  // namespace erdos
