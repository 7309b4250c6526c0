// Command-line surface over the certification, criterion, and density
// machinery. All machine-readable output is deterministic: fixed field
// order, floats at 12 significant digits.
//
// Exit codes: 0 success (certify: conjecture certified; brute: all
// nonzero), 2 usage error, 3 precondition violation from a module,
// 10 certify returned Unknown, 20 brute-force escalation.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "erdos/erdos.hpp"

namespace {

constexpr std::uint64_t kDefaultPrimeLimit = 1000000;
constexpr unsigned kDefaultDepth = 30;

std::uint64_t default_prime_limit() {
  if (const char* env = std::getenv("ERDOS_PRIME_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 3) return v;
    std::cerr << "warning: ignoring malformed ERDOS_PRIME_LIMIT='" << env
              << "'\n";
  }
  return kDefaultPrimeLimit;
}

std::string certificate_json(const erdos::Certificate& cert) {
  erdos::JsonObject witness;
  witness.field("phi", cert.witness.phi)
      .field("divisor_count", cert.witness.divisor_count)
      .field("smallest_prime_factor", cert.witness.smallest_prime_factor)
      .field("divisor_totient_sum",
             erdos::to_fraction_string(cert.witness.divisor_totient_sum));
  erdos::JsonObject out;
  out.field("q", cert.q)
      .field("status", erdos::to_string(cert.status))
      .field("rule", erdos::to_string(cert.rule))
      .raw("witness", witness.str());
  return out.str();
}

int cmd_certify(std::uint64_t q, const std::string& format) {
  const erdos::Certificate cert = erdos::certify(q);
  if (format == "human") {
    std::cout << "q = " << cert.q << ": " << erdos::to_string(cert.status)
              << " (rule " << erdos::to_string(cert.rule) << ", phi "
              << cert.witness.phi << ", d " << cert.witness.divisor_count
              << ", spf " << cert.witness.smallest_prime_factor << ", sum "
              << erdos::to_fraction_string(cert.witness.divisor_totient_sum)
              << ")\n";
  } else {
    std::cout << certificate_json(cert) << "\n";
  }
  return cert.status == erdos::Status::True ? 0 : 10;
}

int cmd_census(std::uint64_t x, unsigned workers, const std::string& out_path,
               const std::string& format) {
  const erdos::CensusReport report = erdos::census(x, workers);
  const erdos::Rule rules[] = {
      erdos::Rule::EvenModulus,   erdos::Rule::ThreeMod4,
      erdos::Rule::OkadaTotient,  erdos::Rule::DivisorTotientTest,
      erdos::Rule::SpfDivisorTest, erdos::Rule::None,
  };
  if (format == "json") {
    erdos::JsonObject counts;
    for (erdos::Rule r : rules) {
      const char* name =
          r == erdos::Rule::None ? "unknown" : erdos::to_string(r);
      counts.field(name, report.count(r));
    }
    erdos::JsonObject out;
    out.field("x", report.x)
        .field("total", report.total)
        .raw("counts", counts.str())
        .field("certified_fraction", report.certified_fraction)
        .field("unknown_count",
               static_cast<std::uint64_t>(report.unknown.size()));
    std::cout << out.str() << "\n";
  } else if (format == "csv") {
    const double total = static_cast<double>(report.total);
    std::cout << "rule,count,fraction\n";
    for (erdos::Rule r : rules) {
      const char* name =
          r == erdos::Rule::None ? "unknown" : erdos::to_string(r);
      std::cout << name << "," << report.count(r) << ","
                << erdos::format_double(report.count(r) / total) << "\n";
    }
    std::cout << "total," << report.total << ",1\n";
  } else {
    std::cout << "census to " << report.x << ": " << report.total
              << " moduli = 1 (mod 4), certified fraction "
              << erdos::format_double(report.certified_fraction) << ", "
              << report.unknown.size() << " unknown\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    for (std::uint64_t q : report.unknown) out << q << "\n";
  }
  return 0;
}

std::string brute_json(const erdos::BruteReport& r) {
  erdos::JsonObject out;
  out.field("q", r.q)
      .field("enumerated", r.enumerated)
      .field("min_abs_value", r.min_abs_value)
      .field("argmin_signs", r.argmin_signs)
      .field("threshold", r.threshold)
      .field("all_nonzero", r.all_nonzero)
      .field("nonzero_verdicts", r.nonzero_verdicts);
  return out.str();
}

int cmd_brute(std::uint64_t q, double threshold, const std::string& format) {
  const erdos::BruteReport report = erdos::run_brute_force(q, threshold);
  if (format == "human") {
    std::cout << "q = " << report.q << ": " << report.enumerated
              << " balanced functions, min |L(1,f)| = "
              << erdos::format_double(report.min_abs_value) << " at "
              << report.argmin_signs
              << (report.all_nonzero ? ", all nonzero" : ", ESCALATION")
              << "\n";
  } else {
    std::cout << brute_json(report) << "\n";
  }
  return report.all_nonzero ? 0 : 20;
}

int cmd_okada(std::uint64_t q, const std::string& signs, std::uint64_t bound,
              const std::string& format) {
  const erdos::ErdosianFunction f =
      erdos::ErdosianFunction::from_string(q, signs);
  const erdos::CriterionVerdict verdict = erdos::criterion_verdict(f, bound);
  const erdos::LOneValue value = erdos::l_one(f);
  if (format == "human") {
    std::cout << "q = " << q << " signs " << signs << ": verdict "
              << erdos::to_string(verdict.outcome)
              << ", L(1,f) = " << erdos::format_double(value.value) << "\n";
    return 0;
  }
  const std::string cond_b =
      erdos::json_array(verdict.condition_b, [](const auto& b) {
        erdos::JsonObject o;
        o.field("p", b.p).field("value", erdos::to_fraction_string(b.value));
        return o.str();
      });
  const std::string cond_a =
      erdos::json_array(verdict.condition_a, [](const auto& ia) {
        erdos::JsonObject o;
        o.field("a", ia.a)
            .field("low", erdos::to_fraction_string(ia.low()))
            .field("high", erdos::to_fraction_string(ia.high()))
            .field("excludes_zero", ia.excludes_zero());
        return o.str();
      });
  erdos::JsonObject out;
  out.field("q", q)
      .field("signs", signs)
      .field("bound", bound)
      .field("verdict", erdos::to_string(verdict.outcome))
      .raw("condition_b", cond_b)
      .raw("condition_a", cond_a)
      .field("l_one", value.value)
      .field("l_one_error_bound", value.error_bound);
  std::cout << out.str() << "\n";
  return 0;
}

int cmd_constant(const std::string& which, std::uint64_t prime_limit,
                 unsigned depth, const std::string& format) {
  erdos::ProductEstimate est;
  int exponent = 0;
  if (which == "first") {
    est = erdos::first_moment_constant(prime_limit);
    exponent = 1;
  } else {
    est = erdos::second_moment_constant(prime_limit, depth);
    exponent = 2;
  }
  if (format == "csv") {
    std::cout << "exponent,prime_limit,value,tail_bound\n"
              << exponent << "," << est.prime_limit << ","
              << erdos::format_double(est.value) << ","
              << erdos::format_double(est.tail_bound) << "\n";
  } else if (format == "human") {
    std::cout << which << "-moment constant at prime limit "
              << est.prime_limit << ": " << erdos::format_double(est.value)
              << " (tail <= " << erdos::format_double(est.tail_bound)
              << ")\n";
  } else {
    erdos::JsonObject out;
    out.field("constant", which).field("prime_limit", est.prime_limit);
    if (which == "second") out.field("depth", static_cast<int>(depth));
    out.field("value", est.value)
        .field("tail_bound", est.tail_bound)
        .field("rigorous", est.rigorous);
    std::cout << out.str() << "\n";
  }
  return 0;
}

int cmd_moment(double r, std::uint64_t x, const std::string& format) {
  const erdos::MomentPoint point = erdos::moment_sum_empirical(r, x);
  if (format == "csv") {
    std::cout << "exponent,x,value,tail_bound\n"
              << erdos::format_double(point.exponent) << "," << point.x << ","
              << erdos::format_double(point.normalized_value) << ",0\n";
  } else if (format == "human") {
    std::cout << "moment r = " << erdos::format_double(r) << " at X = " << x
              << ": " << erdos::format_double(point.normalized_value) << "\n";
  } else {
    erdos::JsonObject out;
    out.field("exponent", point.exponent)
        .field("x", point.x)
        .field("normalized_value", point.normalized_value);
    std::cout << out.str() << "\n";
  }
  return 0;
}

std::string minimum_json(const erdos::ScalarMinimum& m, const char* method,
                         std::uint64_t truncation, double lo, double hi) {
  erdos::JsonObject out;
  out.field("exponent_star", m.x)
      .field("value", m.value)
      .field("method", method)
      .field("truncation", truncation)
      .field("range_low", lo)
      .field("range_high", hi)
      .field("interior", m.interior);
  return out.str();
}

int cmd_moment_min(std::uint64_t x, double lo, double hi,
                   const std::string& format) {
  if (lo < 1 || hi > 12 || lo > hi)
    throw std::domain_error("moment-min: range must lie inside [1, 12]");
  const erdos::MomentTable table(x);
  const erdos::ScalarMinimum m = erdos::golden_section_min(
      [&](double r) { return table.moment(r); }, lo, hi);
  if (format == "human") {
    std::cout << "empirical moment minimum at r = " << erdos::format_double(m.x)
              << ", value " << erdos::format_double(m.value) << "\n";
  } else {
    std::cout << minimum_json(m, "empirical", x, lo, hi) << "\n";
  }
  return 0;
}

int cmd_alt(double alpha, std::uint64_t prime_limit, unsigned depth,
            const std::string& format) {
  const erdos::AltProducts::Parts parts =
      erdos::alt_bound(alpha, prime_limit, depth);
  if (format == "csv") {
    std::cout << "exponent,prime_limit,value,tail_bound\n"
              << erdos::format_double(alpha) << "," << prime_limit << ","
              << erdos::format_double(parts.bound) << ","
              << erdos::format_double((parts.p1.tail_bound +
                                       parts.p2.tail_bound) /
                                      std::pow(2.0, alpha))
              << "\n";
  } else if (format == "human") {
    std::cout << "alt bound at alpha = " << erdos::format_double(alpha)
              << ": " << erdos::format_double(parts.bound) << " (p1 "
              << erdos::format_double(parts.p1.value) << ", p2 "
              << erdos::format_double(parts.p2.value) << ")\n";
  } else {
    erdos::JsonObject out;
    out.field("alpha", alpha)
        .field("prime_limit", prime_limit)
        .field("depth", static_cast<int>(depth))
        .field("p1", parts.p1.value)
        .field("p1_tail_bound", parts.p1.tail_bound)
        .field("p2", parts.p2.value)
        .field("p2_rigorous", parts.p2.rigorous)
        .field("bound", parts.bound);
    std::cout << out.str() << "\n";
  }
  return 0;
}

int cmd_alt_min(std::uint64_t prime_limit, unsigned depth,
                const std::string& format) {
  const erdos::AltProducts products(prime_limit, depth);
  const double lo = 1.0, hi = 16.0;
  const erdos::ScalarMinimum m = erdos::golden_section_min(
      [&](double a) { return products.evaluate(a).bound; }, lo, hi);
  if (format == "human") {
    std::cout << "alt bound minimum at alpha = " << erdos::format_double(m.x)
              << ", value " << erdos::format_double(m.value)
              << " (truncation " << prime_limit << ")\n";
    return 0;
  }
  erdos::JsonObject out;
  out.field("exponent_star", m.x)
      .field("value", m.value)
      .field("method", "alt_product")
      .field("truncation", prime_limit)
      .field("depth", static_cast<int>(depth))
      .field("p2_rigorous", false)
      .field("range_low", lo)
      .field("range_high", hi)
      .field("interior", m.interior);
  std::cout << out.str() << "\n";
  return 0;
}

int cmd_mertens(std::uint64_t x, const std::string& format) {
  const double ratio = erdos::mertens_ratio(x);
  const double limit = std::exp(-erdos::kEulerGamma);
  if (format == "human") {
    std::cout << "log X * prod(1 - 1/p) at X = " << x << ": "
              << erdos::format_double(ratio) << " (limit "
              << erdos::format_double(limit) << ")\n";
    return 0;
  }
  erdos::JsonObject out;
  out.field("x", x)
      .field("ratio", ratio)
      .field("limit", limit)
      .field("abs_error", std::abs(ratio - limit));
  std::cout << out.str() << "\n";
  return 0;
}

int cmd_wirsing(double alpha, std::uint64_t x, const std::string& format) {
  const erdos::WirsingCheck check = erdos::wirsing_check(alpha, x);
  if (format == "human") {
    std::cout << "wirsing alpha = " << erdos::format_double(alpha)
              << " at X = " << x << ": empirical/predicted = "
              << erdos::format_double(check.ratio) << "\n";
    return 0;
  }
  erdos::JsonObject out;
  out.field("alpha", check.alpha)
      .field("x", check.x)
      .field("empirical", check.empirical)
      .field("predicted", check.predicted)
      .field("ratio", check.ratio);
  std::cout << out.str() << "\n";
  return 0;
}

int cmd_dense(double target, std::uint64_t cap, const std::string& format) {
  const erdos::DenseSegment seg =
      erdos::dense_counterexample_primes(target, cap);
  if (format == "human") {
    std::cout << "target " << erdos::format_double(target) << ": "
              << seg.primes.size() << " primes, product "
              << erdos::format_double(seg.product) << ", log10 q = "
              << erdos::format_double(seg.log10_q) << "\n";
    return 0;
  }
  erdos::JsonObject out;
  out.field("target", target)
      .field("count", static_cast<std::uint64_t>(seg.primes.size()))
      .raw("primes", erdos::json_array(seg.primes,
                                       [](std::uint64_t p) {
                                         return std::to_string(p);
                                       }))
      .field("product", seg.product)
      .field("log10_q", seg.log10_q);
  std::cout << out.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Certification and density experiments for the nonvanishing of "
      "L(1,f) over period-q sign functions"};
  app.require_subcommand(1);

  std::string format = "json";

  std::uint64_t q = 0;
  double threshold = 1e-8;
  std::string signs;
  std::uint64_t bound = 10000;
  std::uint64_t x = 0;
  unsigned workers = 1;
  std::string out_path;
  std::string which;
  std::uint64_t prime_limit = default_prime_limit();
  unsigned depth = kDefaultDepth;
  double r = 1.0;
  double alpha = 1.0;
  std::string range = "1,10";
  double target = 1.0;
  std::uint64_t cap = 100000000;

  auto* certify_cmd = app.add_subcommand("certify", "Certify one modulus");
  certify_cmd->add_option("q", q, "modulus")->required();
  certify_cmd->add_option("--format", format, "json|human");

  auto* census_cmd =
      app.add_subcommand("census", "Certify every q = 1 (mod 4) up to X");
  census_cmd->add_option("--max", x, "upper bound X")->required();
  census_cmd->add_option("--workers", workers, "worker count");
  census_cmd->add_option("--out", out_path, "file for unknown moduli");
  std::string census_format = "csv";
  census_cmd->add_option("--format", census_format, "csv|json|human");

  auto* brute_cmd = app.add_subcommand(
      "brute", "Enumerate all balanced sign functions mod q");
  brute_cmd->add_option("q", q, "modulus (odd, small)")->required();
  brute_cmd->add_option("--threshold", threshold, "nonzero threshold");
  brute_cmd->add_option("--format", format, "json|human");

  auto* okada_cmd =
      app.add_subcommand("okada", "Criterion verdict for an explicit f");
  okada_cmd->add_option("q", q, "modulus")->required();
  okada_cmd->add_option("--signs", signs, "sign string of length q-1")
      ->required();
  okada_cmd->add_option("--bound", bound, "smooth-sum truncation");
  okada_cmd->add_option("--format", format, "json|human");

  auto* constant_cmd =
      app.add_subcommand("constant", "Moment-bound Euler product");
  constant_cmd->add_option("which", which, "first|second")
      ->required()
      ->check(CLI::IsMember({"first", "second"}));
  constant_cmd->add_option("--prime-limit", prime_limit, "truncation");
  constant_cmd->add_option("--depth", depth, "local exponent depth");
  constant_cmd->add_option("--format", format, "json|csv|human");

  auto* moment_cmd =
      app.add_subcommand("moment", "Empirical fractional moment");
  moment_cmd->add_option("--r", r, "exponent (>= 1)")->required();
  moment_cmd->add_option("--max", x, "upper bound X")->required();
  moment_cmd->add_option("--format", format, "json|csv|human");

  auto* moment_min_cmd =
      app.add_subcommand("moment-min", "Minimize the empirical moment");
  moment_min_cmd->add_option("--max", x, "upper bound X")->required();
  moment_min_cmd->add_option("--range", range, "exponent range a,b");
  moment_min_cmd->add_option("--format", format, "json|human");

  auto* alt_cmd =
      app.add_subcommand("alt", "Character-split bound at one alpha");
  alt_cmd->add_option("--alpha", alpha, "exponent (> 0)")->required();
  alt_cmd->add_option("--prime-limit", prime_limit, "truncation");
  alt_cmd->add_option("--depth", depth, "local exponent depth");
  alt_cmd->add_option("--format", format, "json|csv|human");

  auto* alt_min_cmd =
      app.add_subcommand("alt-min", "Minimize the character-split bound");
  alt_min_cmd->add_option("--prime-limit", prime_limit, "truncation");
  alt_min_cmd->add_option("--depth", depth, "local exponent depth");
  alt_min_cmd->add_option("--format", format, "json|human");

  auto* mertens_cmd = app.add_subcommand("mertens", "Mertens-product ratio");
  mertens_cmd->add_option("--max", x, "upper bound X")->required();
  mertens_cmd->add_option("--format", format, "json|human");

  auto* wirsing_cmd =
      app.add_subcommand("wirsing", "Wirsing mean-value validation");
  wirsing_cmd->add_option("--alpha", alpha, "exponent in [0, 4]")->required();
  wirsing_cmd->add_option("--max", x, "upper bound X")->required();
  wirsing_cmd->add_option("--format", format, "json|human");

  auto* dense_cmd = app.add_subcommand(
      "dense-q", "Initial prime segment forcing a large divisor sum");
  dense_cmd->add_option("--target", target, "divisor-sum target in [1, 4]")
      ->required();
  dense_cmd->add_option("--cap", cap, "prime search cap");
  dense_cmd->add_option("--format", format, "json|human");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (certify_cmd->parsed()) return cmd_certify(q, format);
    if (census_cmd->parsed())
      return cmd_census(x, workers, out_path, census_format);
    if (brute_cmd->parsed()) return cmd_brute(q, threshold, format);
    if (okada_cmd->parsed()) {
      if (q < 2 || signs.size() != q - 1 ||
          signs.find_first_not_of("+-") != std::string::npos) {
        std::cerr << "okada: --signs must be a +- string of length q-1\n";
        return 2;
      }
      return cmd_okada(q, signs, bound, format);
    }
    if (constant_cmd->parsed())
      return cmd_constant(which, prime_limit, depth, format);
    if (moment_cmd->parsed()) return cmd_moment(r, x, format);
    if (moment_min_cmd->parsed()) {
      double lo = 0, hi = 0;
      if (std::sscanf(range.c_str(), "%lf,%lf", &lo, &hi) != 2) {
        std::cerr << "moment-min: --range expects a,b\n";
        return 2;
      }
      return cmd_moment_min(x, lo, hi, format);
    }
    if (alt_cmd->parsed()) return cmd_alt(alpha, prime_limit, depth, format);
    if (alt_min_cmd->parsed()) return cmd_alt_min(prime_limit, depth, format);
    if (mertens_cmd->parsed()) return cmd_mertens(x, format);
    if (wirsing_cmd->parsed()) return cmd_wirsing(alpha, x, format);
    if (dense_cmd->parsed()) return cmd_dense(target, cap, format);
  } catch (const erdos::non_unimodal_error& e) {
    std::cerr << e.what() << "\nexponent,value\n";
    for (const auto& s : e.samples)
      std::cerr << erdos::format_double(s.x) << ","
                << erdos::format_double(s.value) << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
