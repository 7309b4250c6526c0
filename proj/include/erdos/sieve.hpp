#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace erdos {

// Smallest-prime-factor table for [2, limit]. Built once by a single
// writer; read-only afterwards, safe to share across threads.
class SpfSieve {
 public:
  // 4 bytes per entry. Builds beyond the budget are refused up front
  // instead of thrashing the machine.
  static constexpr std::uint64_t kMemoryBudgetBytes = 1ull << 31;
  static constexpr std::uint64_t kMaxLimit =
      kMemoryBudgetBytes / sizeof(std::uint32_t);

  explicit SpfSieve(std::uint64_t limit) : limit_(limit) {
    if (limit < 2) throw std::domain_error("SpfSieve: limit must be >= 2");
    if (limit > kMaxLimit) {
      throw std::length_error(
          "SpfSieve: limit " + std::to_string(limit) + " needs " +
          std::to_string((limit + 1) * sizeof(std::uint32_t)) +
          " bytes, over the " + std::to_string(kMemoryBudgetBytes) +
          "-byte sieve budget (max limit " + std::to_string(kMaxLimit) + ")");
    }
    spf_.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        spf_[i] = static_cast<std::uint32_t>(i);
        primes_.push_back(static_cast<std::uint32_t>(i));
      }
      for (std::uint32_t p : primes_) {
        if (p > spf_[i] || i * p > limit) break;
        spf_[i * p] = p;
      }
    }
  }

  std::uint64_t limit() const { return limit_; }

  std::uint32_t spf(std::uint64_t n) const {
    if (n < 2 || n > limit_) {
      throw std::range_error("SpfSieve: " + std::to_string(n) +
                             " outside sieve range [2, " +
                             std::to_string(limit_) + "]");
    }
    return spf_[n];
  }

  bool is_prime(std::uint64_t n) const { return n >= 2 && spf(n) == n; }

  const std::vector<std::uint32_t>& primes() const { return primes_; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

// Visits primes <= limit in increasing order until the visitor returns
// false. Segmented odd-only Eratosthenes; memory stays at the segment
// size, so early exits on large limits cost nothing.
template <typename Visitor>
void for_each_prime(std::uint64_t limit, Visitor&& visit) {
  if (limit < 2) return;
  if (!visit(std::uint64_t{2})) return;

  constexpr std::uint64_t kSegment = 1u << 20;
  std::vector<std::uint64_t> base;  // odd primes <= sqrt(limit)
  std::uint64_t sqrt_limit = 1;
  while ((sqrt_limit + 1) * (sqrt_limit + 1) <= limit) ++sqrt_limit;

  {
    std::vector<bool> comp(sqrt_limit + 1, false);
    for (std::uint64_t i = 3; i <= sqrt_limit; i += 2) {
      if (comp[i]) continue;
      base.push_back(i);
      for (std::uint64_t j = i * i; j <= sqrt_limit; j += 2 * i) comp[j] = true;
    }
  }

  std::vector<bool> seg;
  for (std::uint64_t lo = 3; lo <= limit; lo += 2 * kSegment) {
    std::uint64_t hi = std::min(limit, lo + 2 * kSegment - 2);  // odd ceiling
    std::uint64_t count = (hi - lo) / 2 + 1;                    // odds in [lo, hi]
    seg.assign(count, false);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = p * p;
      if (start < lo) {
        std::uint64_t k = (lo - start + 2 * p - 1) / (2 * p);
        start += 2 * p * k;
      }
      for (std::uint64_t j = start; j <= hi; j += 2 * p) seg[(j - lo) / 2] = true;
    }
    for (std::uint64_t i = 0; i < count; ++i) {
      if (!seg[i] && !visit(lo + 2 * i)) return;
    }
  }
}

// Ascending list of primes <= limit.
inline std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for_each_prime(limit, [&](std::uint64_t p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace erdos
