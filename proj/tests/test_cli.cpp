// Subprocess tests for the CLI's exit-code and output contracts.
#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#ifndef ERDOS_CLI_PATH
#error "ERDOS_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ERDOS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
    r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("certify: exit codes and certificate shape") {
  const auto unknown = run_cli("certify 105");
  CHECK(unknown.exit_code == 10);
  CHECK(contains(unknown.out, "\"q\":105"));
  CHECK(contains(unknown.out, "\"status\":\"unknown\""));
  CHECK(contains(unknown.out, "\"rule\":\"none\""));
  CHECK(contains(unknown.out, "\"divisor_totient_sum\":\"19/16\""));

  const auto even = run_cli("certify 4");
  CHECK(even.exit_code == 0);
  CHECK(contains(even.out, "\"rule\":\"even_modulus\""));

  CHECK(run_cli("certify 1").exit_code == 3);   // precondition
  CHECK(run_cli("certify").exit_code == 2);     // usage
  CHECK(run_cli("nonsense 5").exit_code == 2);  // unknown subcommand
}

TEST_CASE("brute: report fields and escalation code") {
  const auto ok = run_cli("brute 5");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "\"enumerated\":6"));
  CHECK(contains(ok.out, "\"min_abs_value\":0.430408940964"));
  CHECK(contains(ok.out, "\"argmin_signs\":\"+--+\""));
  CHECK(contains(ok.out, "\"all_nonzero\":true"));

  const auto esc = run_cli("brute 5 --threshold 0.5");
  CHECK(esc.exit_code == 20);
  CHECK(contains(esc.out, "\"all_nonzero\":false"));
}

TEST_CASE("okada: verdict output and sign-string validation") {
  const auto v = run_cli("okada 5 --signs \"+--+\"");
  CHECK(v.exit_code == 0);
  CHECK(contains(v.out, "\"verdict\":\"nonzero\""));
  CHECK(contains(v.out, "\"l_one\":0.430408940964"));
  CHECK(contains(v.out, "\"condition_b\":[{\"p\":5,\"value\":\"0/1\"}]"));

  CHECK(run_cli("okada 5 --signs \"+-\"").exit_code == 2);     // wrong length
  CHECK(run_cli("okada 5 --signs \"+-x+\"").exit_code == 2);   // bad chars
  CHECK(run_cli("okada 5 --signs \"+++-\"").exit_code == 3);   // divergent f
}

TEST_CASE("census: CSV buckets and the unknown file") {
  const auto r = run_cli("census --max 105");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "rule,count,fraction"));
  CHECK(contains(r.out, "okada_totient,25,"));
  CHECK(contains(r.out, "unknown,1,"));
  CHECK(contains(r.out, "total,26,1"));

  const auto j = run_cli("census --max 105 --format json");
  CHECK(contains(j.out, "\"total\":26"));
  CHECK(contains(j.out, "\"certified_fraction\":0.961538461538"));

  const std::string path = "/tmp/erdos_cli_test_unknown.txt";
  run_cli("census --max 1000 --out " + path);
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string listed;
  std::array<char, 256> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), f))
    listed.append(buf.data(), got);
  std::fclose(f);
  std::remove(path.c_str());
  CHECK(listed == "105\n165\n525\n585\n825\n945\n");
}

TEST_CASE("census: byte-identical output across worker counts") {
  const auto w1 = run_cli("census --max 20000 --workers 1");
  const auto w8 = run_cli("census --max 20000 --workers 8");
  CHECK(w1.out == w8.out);
}

TEST_CASE("deterministic reruns produce identical bytes") {
  for (const char* cmd :
       {"constant first --prime-limit 10000", "moment --r 2.5 --max 20000",
        "alt --alpha 3.5 --prime-limit 10000", "dense-q --target 1.3",
        "certify 105", "brute 9"}) {
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("constant: json and csv projections") {
  const auto j = run_cli("constant first --prime-limit 100000");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.out, "\"constant\":\"first\""));
  CHECK(contains(j.out, "\"prime_limit\":100000"));
  CHECK(contains(j.out, "\"value\":0.3223128970"));
  CHECK(contains(j.out, "\"rigorous\":true"));

  const auto c = run_cli("constant first --prime-limit 100000 --format csv");
  CHECK(contains(c.out, "exponent,prime_limit,value,tail_bound"));
  CHECK(contains(c.out, "1,100000,0.322312897033,"));

  const auto s = run_cli("constant second --prime-limit 100000 --depth 20");
  CHECK(contains(s.out, "\"depth\":20"));
  CHECK(contains(s.out, "\"value\":0.22252"));
}

TEST_CASE("minimizers report exponent_star and truncation") {
  const auto m = run_cli("moment-min --max 200000 --range 1,8");
  CHECK(m.exit_code == 0);
  CHECK(contains(m.out, "\"method\":\"empirical\""));
  CHECK(contains(m.out, "\"truncation\":200000"));

  const auto a = run_cli("alt-min --prime-limit 20000");
  CHECK(a.exit_code == 0);
  CHECK(contains(a.out, "\"method\":\"alt_product\""));
  CHECK(contains(a.out, "\"p2_rigorous\":false"));
  CHECK(contains(a.out, "\"interior\":true"));

  CHECK(run_cli("moment-min --max 200000 --range 0.2,8").exit_code == 3);
  CHECK(run_cli("moment-min --max 200000 --range nonsense").exit_code == 2);
}

TEST_CASE("mertens, wirsing, dense-q surface their numbers") {
  const auto m = run_cli("mertens --max 100000");
  CHECK(m.exit_code == 0);
  CHECK(contains(m.out, "\"limit\":0.561459483567"));

  const auto w = run_cli("wirsing --alpha 1 --max 100000");
  CHECK(w.exit_code == 0);
  CHECK(contains(w.out, "\"ratio\":"));

  const auto d = run_cli("dense-q --target 1.3");
  CHECK(d.exit_code == 0);
  CHECK(contains(d.out, "\"primes\":[5,13]"));
  CHECK(contains(d.out, "\"product\":1.35416666667"));
}

TEST_CASE("environment variable sets the default prime limit") {
  const std::string cmd = std::string("ERDOS_PRIME_LIMIT=1000 ") +
                          ERDOS_CLI_PATH + " constant first 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), got);
  pclose(pipe);
  CHECK(contains(out, "\"prime_limit\":1000"));
}
