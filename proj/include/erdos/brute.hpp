#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "erdos/l_one.hpp"
#include "erdos/okada.hpp"

namespace erdos {

struct BruteReport {
  std::uint64_t q = 0;
  std::uint64_t enumerated = 0;
  double min_abs_value = 0;
  std::string argmin_signs;
  double threshold = 0;
  bool all_nonzero = false;
  std::uint64_t nonzero_verdicts = 0;
  std::vector<std::string> offenders;  // |L(1,f)| <= threshold + error bound
};

// A value at or below threshold + error_bound means either a
// counterexample or insufficient precision; both must surface loudly.
class brute_escalation : public std::runtime_error {
 public:
  explicit brute_escalation(BruteReport r)
      : std::runtime_error(
            "brute_force_verify: " + std::to_string(r.offenders.size()) +
            " function(s) mod " + std::to_string(r.q) +
            " with |L(1,f)| within threshold, first signs " +
            r.offenders.front()),
        report(std::move(r)) {}
  BruteReport report;
};

namespace detail {

inline bool next_combination(std::vector<std::uint32_t>& pos,
                             std::uint32_t n) {
  const std::size_t k = pos.size();
  std::size_t i = k;
  while (i > 0 && pos[i - 1] == n - k + (i - 1)) --i;
  if (i == 0) return false;
  ++pos[i - 1];
  for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  return true;
}

inline std::string signs_from_positions(const std::vector<std::uint32_t>& pos,
                                        std::uint32_t n) {
  std::string s(n, '-');
  for (std::uint32_t p : pos) s[p] = '+';
  return s;
}

struct BruteWorkerResult {
  double min_abs = std::numeric_limits<double>::infinity();
  std::string argmin;
  std::uint64_t nonzero_verdicts = 0;
  std::vector<std::pair<std::uint64_t, std::string>> offenders;  // by rank
  std::uint64_t processed = 0;
};

}  // namespace detail

// Exhaustive check of the conjecture mod q: every balanced sign vector
// is evaluated through both routes (closed-form L(1,f) and the exact
// criterion). The worker partition is by enumeration rank; the merge is
// a min-reduction with ties broken by the lexicographically smaller
// sign string, so results are identical for any worker count.
inline BruteReport run_brute_force(std::uint64_t q, double threshold = 1e-8,
                                   unsigned workers = 1,
                                   std::uint64_t ceiling = 29,
                                   std::uint64_t verdict_bound = 1000) {
  if (q < 3 || q % 2 == 0)
    throw std::domain_error("brute_force_verify: q must be odd and >= 3");
  if (q > ceiling)
    throw std::domain_error("brute_force_verify: q exceeds ceiling " +
                            std::to_string(ceiling));
  if (workers == 0) workers = 1;

  const std::uint32_t n = static_cast<std::uint32_t>(q - 1);
  const std::uint32_t k = n / 2;
  const std::vector<double> psi = digamma_table(q);
  const bool prime_q = factorize(q).is_prime();

  // For prime q the criterion outcome is sign-pattern independent: every
  // condition-A interval is f(a) +- 1/(q-1). Evaluate once.
  bool prime_verdict_nonzero = false;
  if (prime_q) {
    std::vector<std::int8_t> first(n, -1);
    for (std::uint32_t i = 0; i < k; ++i) first[i] = 1;
    std::reverse(first.begin(), first.end());  // balanced, any pattern works
    ErdosianFunction f(q, std::move(first));
    prime_verdict_nonzero =
        criterion_verdict(f, verdict_bound).outcome == CriterionOutcome::Nonzero;
  }

  auto run_worker = [&](unsigned id, detail::BruteWorkerResult& res) {
    std::vector<std::uint32_t> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    std::uint64_t rank = 0;
    do {
      if (rank % workers == id) {
        // Fixed-order split summation keeps |value| bit-identical under
        // global sign flip, so the f / -f tie resolves lexicographically.
        std::uint32_t mask = 0;
        for (std::uint32_t p : pos) mask |= 1u << p;
        double plus_sum = 0, minus_sum = 0;
        for (std::uint32_t a = 0; a < n; ++a)
          ((mask >> a) & 1u ? plus_sum : minus_sum) += psi[a];
        const double value = -(plus_sum - minus_sum) / q;
        const double abs_value = std::abs(value);

        if (abs_value < res.min_abs ||
            (abs_value == res.min_abs &&
             detail::signs_from_positions(pos, n) < res.argmin)) {
          res.min_abs = abs_value;
          res.argmin = detail::signs_from_positions(pos, n);
        }
        if (abs_value <= threshold + kLOneErrorBound)
          res.offenders.emplace_back(rank,
                                     detail::signs_from_positions(pos, n));

        if (prime_q) {
          res.nonzero_verdicts += prime_verdict_nonzero ? 1 : 0;
        } else {
          ErdosianFunction f = ErdosianFunction::from_string(
              q, detail::signs_from_positions(pos, n));
          if (criterion_verdict(f, verdict_bound).outcome ==
              CriterionOutcome::Nonzero)
            ++res.nonzero_verdicts;
        }
        ++res.processed;
      }
      ++rank;
    } while (detail::next_combination(pos, n));
  };

  std::vector<detail::BruteWorkerResult> results(workers);
  if (workers == 1) {
    run_worker(0, results[0]);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back(run_worker, w, std::ref(results[w]));
    for (auto& t : threads) t.join();
  }

  BruteReport report;
  report.q = q;
  report.threshold = threshold;
  report.min_abs_value = std::numeric_limits<double>::infinity();
  std::vector<std::pair<std::uint64_t, std::string>> offenders;
  for (const auto& res : results) {
    report.enumerated += res.processed;
    report.nonzero_verdicts += res.nonzero_verdicts;
    if (res.argmin.empty()) continue;
    const bool better =
        report.argmin_signs.empty() || res.min_abs < report.min_abs_value ||
        (res.min_abs == report.min_abs_value && res.argmin < report.argmin_signs);
    if (better) {
      report.min_abs_value = res.min_abs;
      report.argmin_signs = res.argmin;
    }
  }
  for (auto& res : results)
    offenders.insert(offenders.end(), res.offenders.begin(),
                     res.offenders.end());
  std::sort(offenders.begin(), offenders.end());
  for (auto& [rank, s] : offenders) report.offenders.push_back(std::move(s));
  report.all_nonzero = report.offenders.empty();
  return report;
}

// Same as run_brute_force but escalates instead of returning a failing
// report.
inline BruteReport brute_force_verify(std::uint64_t q, double threshold = 1e-8,
                                      unsigned workers = 1,
                                      std::uint64_t ceiling = 29,
                                      std::uint64_t verdict_bound = 1000) {
  BruteReport r = run_brute_force(q, threshold, workers, ceiling, verdict_bound);
  if (!r.all_nonzero) throw brute_escalation(std::move(r));
  return r;
}

}  // namespace erdos
