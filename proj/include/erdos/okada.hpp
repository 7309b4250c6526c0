#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "erdos/divisor_sums.hpp"
#include "erdos/erdosian.hpp"
#include "erdos/factored.hpp"
#include "erdos/rational.hpp"

namespace erdos {

// Weight of residue r at prime p | q: v_p(r) while below v_p(q), else
// v_p(q) + 1/(p-1).
inline Rational epsilon(std::uint64_t r, std::uint64_t p,
                        const FactoredInteger& q) {
  const unsigned vq = q.v_p(p);
  if (vq == 0)
    throw std::domain_error("epsilon: p does not divide q");
  unsigned vr = 0;
  std::uint64_t m = r;
  while (m % p == 0 && vr < vq) {
    m /= p;
    ++vr;
  }
  if (vr < vq) return make_rational(vr);
  return make_rational(vq) + make_rational(1, p - 1);
}

struct ConditionBValue {
  std::uint64_t p;
  Rational value;
};

// For each prime p | q: sum over r in [1,q] with (r,q) > 1 of
// f(r) epsilon(r,p). A finite sum, exact.
inline std::vector<ConditionBValue> condition_b(const ErdosianFunction& f,
                                                const FactoredInteger& q) {
  if (q.value() < 3)
    throw std::domain_error("condition_b: q must be >= 3");
  std::vector<ConditionBValue> out;
  for (const auto& pf : q.factors()) {
    Rational sum(0);
    for (std::uint64_t r = 1; r <= q.value(); ++r) {
      if (std::gcd(r, q.value()) == 1) continue;
      const int fr = f.at(r);
      if (fr == 0) continue;
      Rational e = epsilon(r, pf.prime, q);
      if (fr > 0)
        sum += e;
      else
        sum -= e;
    }
    out.push_back({pf.prime, std::move(sum)});
  }
  return out;
}

struct ConditionAInterval {
  std::uint64_t a;
  Rational partial;  // sum of f(am)/m over M(q)-members m <= bound
  Rational tail;     // bound on the omitted mass, exact

  Rational low() const { return partial - tail; }
  Rational high() const { return partial + tail; }
  bool excludes_zero() const {
    return sgn(partial - tail) > 0 || sgn(partial + tail) < 0;
  }
};

// Bracketing interval for sum_{m in M(q)} f(am)/m. The omitted terms
// are bounded in absolute value by the exact smooth-sum tail, so the
// true value lies inside [partial - tail, partial + tail].
inline ConditionAInterval condition_a(const ErdosianFunction& f,
                                      const FactoredInteger& q,
                                      std::uint64_t a, std::uint64_t bound) {
  if (a == 0 || a >= q.value() || std::gcd(a, q.value()) != 1)
    throw std::domain_error("condition_a: a must satisfy 1 <= a < q, (a,q)=1");
  Rational partial(0);
  for (std::uint64_t m : smooth_members(q, bound)) {
    const int fam = f.at(a * m);
    if (fam == 0) continue;
    Rational term = make_rational(1, m);
    if (fam > 0)
      partial += term;
    else
      partial -= term;
  }
  Rational tail = smooth_sum_partial(q, bound).tail;
  return {a, std::move(partial), std::move(tail)};
}

enum class CriterionOutcome { Nonzero, Zero, Undecided };

inline const char* to_string(CriterionOutcome o) {
  switch (o) {
    case CriterionOutcome::Nonzero: return "nonzero";
    case CriterionOutcome::Zero: return "zero";
    case CriterionOutcome::Undecided: return "undecided";
  }
  return "?";
}

struct CriterionVerdict {
  CriterionOutcome outcome;
  std::vector<ConditionBValue> condition_b;  // per prime p | q, ascending
  std::vector<ConditionAInterval> condition_a;  // per coprime a, ascending
};

// L(1,f) = 0 exactly when every condition-A sum and every condition-B
// sum vanishes. Any exact nonzero B value or any A interval excluding 0
// certifies nonvanishing. Zero would need every A sum proven 0, which a
// finite truncation cannot do while the tail is positive, so composite
// q can only yield Nonzero or Undecided.
inline CriterionVerdict criterion_verdict(const ErdosianFunction& f,
                                          std::uint64_t bound) {
  if (!f.balanced())
    throw std::domain_error(
        "criterion_verdict: period sum is nonzero, L(1,f) diverges");
  const FactoredInteger q = factorize(f.period());
  CriterionVerdict v;
  v.condition_b = condition_b(f, q);
  for (std::uint64_t a = 1; a < q.value(); ++a) {
    if (std::gcd(a, q.value()) != 1) continue;
    v.condition_a.push_back(condition_a(f, q, a, bound));
  }

  bool some_b_nonzero = false;
  for (const auto& b : v.condition_b)
    if (sgn(b.value) != 0) some_b_nonzero = true;
  bool some_a_excludes = false;
  bool all_a_exactly_zero = true;
  for (const auto& ia : v.condition_a) {
    if (ia.excludes_zero()) some_a_excludes = true;
    if (sgn(ia.partial) != 0 || sgn(ia.tail) != 0) all_a_exactly_zero = false;
  }

  if (some_b_nonzero || some_a_excludes)
    v.outcome = CriterionOutcome::Nonzero;
  else if (!some_b_nonzero && all_a_exactly_zero)
    v.outcome = CriterionOutcome::Zero;
  else
    v.outcome = CriterionOutcome::Undecided;
  return v;
}

}  // namespace erdos
