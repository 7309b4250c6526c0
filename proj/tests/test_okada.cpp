#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "erdos/brute.hpp"
#include "erdos/digamma.hpp"
#include "erdos/erdosian.hpp"
#include "erdos/l_one.hpp"
#include "erdos/okada.hpp"
#include "oracles.hpp"

using erdos::CriterionOutcome;
using erdos::ErdosianFunction;
using erdos::make_rational;

namespace {

// every balanced sign vector mod q, in enumeration order
std::vector<ErdosianFunction> all_balanced(std::uint64_t q) {
  const std::uint64_t n = q - 1;
  std::vector<ErdosianFunction> out;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcountll(mask)) != n / 2) continue;
    std::vector<std::int8_t> signs(n, -1);
    for (std::uint64_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) signs[i] = 1;
    out.emplace_back(q, std::move(signs));
  }
  return out;
}

}  // namespace

TEST_CASE("erdosian construction and the period sum") {
  const auto f = ErdosianFunction::from_string(5, "+--+");
  CHECK(f.period_sum() == 0);
  CHECK(f.balanced());
  CHECK(f.at(1) == 1);
  CHECK(f.at(5) == 0);
  CHECK(f.at(6) == 1);  // periodic extension
  CHECK(f.sign_string() == "+--+");
  CHECK(f.negated().sign_string() == "-++-");

  CHECK(ErdosianFunction::from_string(5, "+++-").period_sum() == 2);

  // even period: q - 1 signs of +-1 sum to an odd number, never zero
  for (const auto& g : {"+++", "++-", "+-+", "-++", "+--", "-+-", "--+", "---"})
    CHECK(ErdosianFunction::from_string(4, g).period_sum() % 2 != 0);

  CHECK_THROWS_AS(ErdosianFunction::from_string(5, "+-"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ErdosianFunction::from_string(5, "+-x+"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ErdosianFunction::from_string(1, ""), std::domain_error);
}

TEST_CASE("digamma at rational arguments") {
  // psi(1/2) = -gamma - 2 ln 2
  CHECK_THAT(erdos::digamma_fraction(1, 2),
             Catch::Matchers::WithinAbs(-1.963510026021423, 1e-12));
  CHECK_THAT(erdos::digamma_fraction(1, 5),
             Catch::Matchers::WithinAbs(-5.289039896592188, 1e-11));
  CHECK_THROWS_AS(erdos::digamma_fraction(0, 5), std::domain_error);
  CHECK_THROWS_AS(erdos::digamma_fraction(5, 5), std::domain_error);
}

TEST_CASE("digamma agrees with an independent series oracle") {
  for (std::uint64_t q = 2; q <= 50; ++q)
    for (std::uint64_t a = 1; a < q; ++a)
      REQUIRE_THAT(erdos::digamma_fraction(a, q),
                   Catch::Matchers::WithinAbs(
                       oracle::digamma_ref(static_cast<double>(a) / q), 1e-12));
}

TEST_CASE("digamma reflection identity to 1e-10 for all q <= 50") {
  for (std::uint64_t q = 2; q <= 50; ++q) {
    for (std::uint64_t a = 1; a < q; ++a) {
      if (2 * a == q) continue;  // cot(pi/2) = 0 handled by symmetry anyway
      const double lhs = erdos::digamma_fraction(q - a, q) -
                         erdos::digamma_fraction(a, q);
      const double rhs =
          erdos::kPiL / std::tan(erdos::kPiL * a / static_cast<double>(q));
      REQUIRE_THAT(lhs, Catch::Matchers::WithinAbs(rhs, 1e-10));
    }
  }
}

TEST_CASE("l_one closed form on the worked examples") {
  const auto quad = erdos::l_one(ErdosianFunction::from_string(5, "+--+"));
  CHECK_THAT(quad.value,
             Catch::Matchers::WithinAbs(0.430408940964004, 1e-10));
  CHECK(quad.error_bound <= 5 * 1e-12);

  // odd pattern: (pi/5)(cot(pi/5) + cot(2 pi/5))
  const auto odd = erdos::l_one(ErdosianFunction::from_string(5, "++--"));
  CHECK_THAT(odd.value, Catch::Matchers::WithinAbs(1.068959332115595, 1e-10));

  const auto q3 = erdos::l_one(ErdosianFunction::from_string(3, "+-"));
  CHECK_THAT(q3.value, Catch::Matchers::WithinAbs(0.604599788078073, 1e-10));

  CHECK_THROWS_AS(erdos::l_one(ErdosianFunction::from_string(5, "+++-")),
                  std::domain_error);
}

TEST_CASE("l_one negation symmetry is exact") {
  for (const auto& f : all_balanced(9)) {
    const double v = erdos::l_one(f).value;
    const double nv = erdos::l_one(f.negated()).value;
    REQUIRE(v == -nv);
  }
}

TEST_CASE("l_one agrees with direct partial summation") {
  for (const char* s : {"+--+", "++--", "+-+-"}) {
    const auto f = ErdosianFunction::from_string(5, s);
    const double direct = oracle::dirichlet_partial_sum(f, 1000000);
    REQUIRE_THAT(erdos::l_one(f).value,
                 Catch::Matchers::WithinAbs(direct, 1e-5));
  }
}

TEST_CASE("epsilon weights") {
  const auto q9 = erdos::factorize(9);
  CHECK(erdos::epsilon(3, 3, q9) == make_rational(1));
  CHECK(erdos::epsilon(6, 3, q9) == make_rational(1));
  CHECK(erdos::epsilon(9, 3, q9) == make_rational(5, 2));
  CHECK(erdos::epsilon(1, 3, q9) == make_rational(0));
  CHECK_THROWS_AS(erdos::epsilon(3, 5, q9), std::domain_error);
}

TEST_CASE("condition B finite sums") {
  // q prime: the only non-coprime residue is q itself, where f vanishes
  const auto q5 = erdos::factorize(5);
  const auto b5 =
      erdos::condition_b(ErdosianFunction::from_string(5, "+--+"), q5);
  REQUIRE(b5.size() == 1);
  CHECK(b5[0].p == 5);
  CHECK(b5[0].value == 0);

  const auto q9 = erdos::factorize(9);
  const auto all_plus =
      erdos::condition_b(ErdosianFunction::from_string(9, "++++++++"), q9);
  REQUIRE(all_plus.size() == 1);
  CHECK(all_plus[0].value == make_rational(2));

  // f(3) = +1, f(6) = -1 cancel; f(9) = 0 regardless
  const auto cancel =
      erdos::condition_b(ErdosianFunction::from_string(9, "++-+-+--"), q9);
  CHECK(cancel[0].value == 0);
}

TEST_CASE("condition A intervals") {
  const auto q5 = erdos::factorize(5);
  const auto f = ErdosianFunction::from_string(5, "+--+");
  const auto ia = erdos::condition_a(f, q5, 2, 1);
  CHECK(ia.partial == -make_rational(1));
  CHECK(ia.tail == make_rational(1, 4));
  CHECK(ia.low() == -make_rational(5, 4));
  CHECK(ia.high() == -make_rational(3, 4));
  CHECK(ia.excludes_zero());

  // prime q, bound 1: interval is f(a) +- 1/(q-1), always excluding 0
  const auto q13 = erdos::factorize(13);
  const auto g = ErdosianFunction::from_string(13, "++++++------");
  for (std::uint64_t a = 1; a < 13; ++a) {
    const auto i = erdos::condition_a(g, q13, a, 1);
    CHECK(i.tail == make_rational(1, 12));
    CHECK(i.excludes_zero());
  }

  // q = 15, a = 1, all signs +: members 1,3,5,9 contribute, 15 is a
  // multiple of the period so f kills it
  const auto q15 = erdos::factorize(15);
  const auto plus = ErdosianFunction::from_string(15, "++++++++++++++");
  const auto i15 = erdos::condition_a(plus, q15, 1, 15);
  CHECK(i15.partial == make_rational(74, 45));
  CHECK(i15.tail == make_rational(15, 8) - make_rational(77, 45));

  CHECK_THROWS_AS(erdos::condition_a(plus, q15, 3, 15), std::domain_error);
}

TEST_CASE("condition A intervals nest as the bound grows") {
  std::mt19937_64 rng(424242);
  const auto q15 = erdos::factorize(15);
  const auto fs = all_balanced(15);
  std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
  for (int trial = 0; trial < 25; ++trial) {
    const auto& f = fs[pick(rng)];
    for (std::uint64_t a : {1, 2, 4, 7, 8, 11, 13, 14}) {
      const auto wide = erdos::condition_a(f, q15, a, 10);
      const auto tight = erdos::condition_a(f, q15, a, 1000);
      REQUIRE(tight.low() >= wide.low());
      REQUIRE(tight.high() <= wide.high());
    }
  }
}

TEST_CASE("criterion verdict on explicit functions") {
  const auto quad = ErdosianFunction::from_string(5, "+--+");
  const auto v = erdos::criterion_verdict(quad, 100);
  CHECK(v.outcome == CriterionOutcome::Nonzero);
  for (const auto& ia : v.condition_a) CHECK(ia.excludes_zero());

  CHECK_THROWS_AS(
      erdos::criterion_verdict(ErdosianFunction::from_string(5, "+++-"), 100),
      std::domain_error);
}

TEST_CASE("prime periods always yield a Nonzero verdict") {
  for (std::uint64_t q : {5, 13}) {
    for (const auto& f : all_balanced(q)) {
      REQUIRE(erdos::criterion_verdict(f, 100).outcome ==
              CriterionOutcome::Nonzero);
    }
  }
}

TEST_CASE("criterion evidence is consistent with the closed form") {
  // whenever the verdict certifies nonvanishing, the numeric value is
  // decisively away from zero
  for (std::uint64_t q : {5, 9, 13, 15}) {
    const auto psi = erdos::digamma_table(q);
    for (const auto& f : all_balanced(q)) {
      const auto verdict = erdos::criterion_verdict(f, 1000);
      const auto value = erdos::l_one_from_table(f, psi);
      if (verdict.outcome == CriterionOutcome::Nonzero)
        REQUIRE(std::abs(value.value) > value.error_bound);
    }
  }
}

TEST_CASE("brute force at q = 5") {
  const auto r = erdos::brute_force_verify(5);
  CHECK(r.enumerated == 6);
  CHECK_THAT(r.min_abs_value,
             Catch::Matchers::WithinAbs(0.430408940964, 1e-9));
  CHECK(r.argmin_signs == "+--+");
  CHECK(r.all_nonzero);
  CHECK(r.nonzero_verdicts == 6);
}

TEST_CASE("brute force at q = 9 and q = 13") {
  const auto r9 = erdos::brute_force_verify(9);
  CHECK(r9.enumerated == 70);
  CHECK(r9.all_nonzero);
  CHECK_THAT(r9.min_abs_value,
             Catch::Matchers::WithinAbs(0.071894128209, 1e-9));
  CHECK(r9.argmin_signs == "+----+++");

  const auto r13 = erdos::brute_force_verify(13);
  CHECK(r13.enumerated == 924);
  CHECK(r13.all_nonzero);
  CHECK(r13.nonzero_verdicts == 924);
  CHECK_THAT(r13.min_abs_value,
             Catch::Matchers::WithinAbs(0.00526100946335, 1e-9));
}

TEST_CASE("brute force escalates on an unreachable threshold") {
  CHECK_THROWS_AS(erdos::brute_force_verify(5, 0.5), erdos::brute_escalation);
  const auto r = erdos::run_brute_force(5, 0.5);
  CHECK_FALSE(r.all_nonzero);
  CHECK(r.offenders.size() == 2);  // the argmin pair f and -f
  try {
    erdos::brute_force_verify(5, 0.5);
  } catch (const erdos::brute_escalation& e) {
    CHECK(e.report.offenders.front() == "+--+");
  }
}

TEST_CASE("brute force is deterministic across worker counts") {
  const auto a = erdos::run_brute_force(11, 1e-8, 1);
  const auto b = erdos::run_brute_force(11, 1e-8, 2);
  const auto c = erdos::run_brute_force(11, 1e-8, 8);
  CHECK(a.enumerated == b.enumerated);
  CHECK(a.enumerated == c.enumerated);
  CHECK(a.min_abs_value == b.min_abs_value);
  CHECK(a.min_abs_value == c.min_abs_value);
  CHECK(a.argmin_signs == b.argmin_signs);
  CHECK(a.argmin_signs == c.argmin_signs);
  CHECK(a.nonzero_verdicts == c.nonzero_verdicts);
}

TEST_CASE("brute force rejects out-of-domain periods") {
  CHECK_THROWS_AS(erdos::brute_force_verify(4), std::domain_error);
  CHECK_THROWS_AS(erdos::brute_force_verify(31), std::domain_error);
}
