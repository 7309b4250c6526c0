#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "erdos/divisor_sums.hpp"
#include "erdos/factored.hpp"
#include "erdos/rational.hpp"
#include "erdos/sieve.hpp"

namespace erdos {

enum class Rule {
  EvenModulus,
  ThreeMod4,
  OkadaTotient,
  DivisorTotientTest,
  SpfDivisorTest,
  None,
};

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::EvenModulus: return "even_modulus";
    case Rule::ThreeMod4: return "three_mod_4";
    case Rule::OkadaTotient: return "okada_totient";
    case Rule::DivisorTotientTest: return "divisor_totient";
    case Rule::SpfDivisorTest: return "spf_divisor";
    case Rule::None: return "none";
  }
  return "?";
}

enum class Status { True, Unknown };

inline const char* to_string(Status s) {
  return s == Status::True ? "true" : "unknown";
}

struct CertificateWitness {
  std::uint64_t phi = 0;
  std::uint64_t divisor_count = 0;
  std::uint64_t smallest_prime_factor = 0;
  Rational divisor_totient_sum;  // over d | q, d >= 3
};

struct Certificate {
  std::uint64_t q = 0;
  Status status = Status::Unknown;
  Rule rule = Rule::None;
  CertificateWitness witness;
};

// Sufficient conditions for the conjecture mod q, tested in a fixed
// order; the first that fires wins. EvenModulus and ThreeMod4 are
// trusted external theorems (flagged, not re-proved); OkadaTotient is
// 2 phi(q) + 1 > q; DivisorTotientTest is the exact comparison
// sum_{d|q, d>=3} 1/phi(d) < 1; SpfDivisorTest is spf(q) >= d(q),
// implied by the divisor test but kept as a redundant cross-check.
inline Certificate certify(const FactoredInteger& qf) {
  const std::uint64_t q = qf.value();
  if (q < 2)
    throw std::domain_error(
        "certify: no Erdosian function exists for q = 1");

  Certificate cert;
  cert.q = q;
  cert.witness.phi = qf.phi();
  cert.witness.divisor_count = qf.divisor_count();
  cert.witness.smallest_prime_factor = qf.smallest_prime_factor();
  cert.witness.divisor_totient_sum = divisor_totient_sum_raw(qf);

  auto conclude = [&](Rule r) {
    cert.rule = r;
    cert.status = r == Rule::None ? Status::Unknown : Status::True;
    return cert;
  };

  if (q % 2 == 0) return conclude(Rule::EvenModulus);
  if (q % 4 == 3) return conclude(Rule::ThreeMod4);
  if (2 * cert.witness.phi + 1 > q) return conclude(Rule::OkadaTotient);
  if (cert.witness.divisor_totient_sum < 1)
    return conclude(Rule::DivisorTotientTest);
  if (cert.witness.smallest_prime_factor >= cert.witness.divisor_count)
    return conclude(Rule::SpfDivisorTest);
  return conclude(Rule::None);
}

inline Certificate certify(std::uint64_t q, const SpfSieve& sieve) {
  if (q < 2)
    throw std::domain_error("certify: no Erdosian function exists for q = 1");
  return certify(factorize(q, sieve));
}

inline Certificate certify(std::uint64_t q) {
  if (q < 2)
    throw std::domain_error("certify: no Erdosian function exists for q = 1");
  return certify(factorize(q));
}

inline constexpr std::size_t kRuleCount = 6;

struct CensusReport {
  std::uint64_t x = 0;
  std::uint64_t total = 0;  // moduli 5 <= q <= x, q = 1 (mod 4)
  std::array<std::uint64_t, kRuleCount> counts{};  // indexed by Rule
  double certified_fraction = 0;
  std::vector<std::uint64_t> unknown;  // ascending

  std::uint64_t count(Rule r) const {
    return counts[static_cast<std::size_t>(r)];
  }
};

// Certification sweep over q = 1 (mod 4), 5 <= q <= x. The range is
// split into contiguous chunks; integer counts and per-chunk unknown
// lists merge associatively, so the report is identical for any worker
// count.
inline CensusReport census(std::uint64_t x, unsigned workers = 1) {
  if (x < 5) throw std::domain_error("census: x must be >= 5");
  if (workers == 0) workers = 1;

  const SpfSieve sieve(x);
  CensusReport report;
  report.x = x;
  report.total = (x - 1) / 4;

  struct Chunk {
    std::array<std::uint64_t, kRuleCount> counts{};
    std::vector<std::uint64_t> unknown;
  };
  const std::uint64_t n = report.total;  // q = 4j + 1, j = 1..n
  std::vector<Chunk> chunks(workers);

  auto run_chunk = [&](unsigned id, Chunk& chunk) {
    const std::uint64_t lo = 1 + n * id / workers;
    const std::uint64_t hi = n * (id + 1) / workers;  // inclusive
    for (std::uint64_t j = lo; j <= hi; ++j) {
      const std::uint64_t q = 4 * j + 1;
      const Certificate cert = certify(q, sieve);
      ++chunk.counts[static_cast<std::size_t>(cert.rule)];
      if (cert.status == Status::Unknown) chunk.unknown.push_back(q);
    }
  };

  if (workers == 1) {
    run_chunk(0, chunks[0]);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back(run_chunk, w, std::ref(chunks[w]));
    for (auto& t : threads) t.join();
  }

  for (const Chunk& c : chunks) {
    for (std::size_t i = 0; i < kRuleCount; ++i) report.counts[i] += c.counts[i];
    report.unknown.insert(report.unknown.end(), c.unknown.begin(),
                          c.unknown.end());
  }
  const std::uint64_t certified = report.total - report.count(Rule::None);
  report.certified_fraction =
      static_cast<double>(certified) / static_cast<double>(report.total);
  return report;
}

}  // namespace erdos
