#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hyplat/special_functions.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HYPLAT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return Run{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

// Value after "<key> = " on its own line.
double field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + " = ", 0) == 0) return std::stod(line.substr(key.size() + 3));
  }
  FAIL("missing field " << key);
  return NAN;
}

}  // namespace

TEST_CASE("a: plain and JSON") {
  const auto plain = run("a --k 1");
  CHECK(plain.status == 0);
  CHECK(std::round(field(plain.out, "a(1)") * 1e4) / 1e4 == doctest::Approx(7.4163).epsilon(1e-12));

  const auto js = run("a --k 1 --json");
  REQUIRE(js.status == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j.size() == 4);
  CHECK(j["k"].get<double>() == 1.0);
  CHECK(j["a"].get<double>() == doctest::Approx(field(plain.out, "a(1)")).epsilon(1e-11));
  CHECK(std::abs(j["residual"].get<double>()) <= 1e-10);
  CHECK(j.contains("lambda_star"));

  // 4 + k da/dk(0), da/dk(0) = (8/pi) ln 4
  const double small = field(run("a --k 0.05").out, "a(0.05)");
  CHECK(small > 4.17);
  CHECK(small < 4.18);
}

TEST_CASE("argument errors exit 1 with nothing on stdout") {
  for (const char* args : {"a --k -1", "a --k abc", "a", "a --k 100", "sweep --k-min 0.01 --k-max 2 --points 3",
                           "sweep --k-min 1 --k-max 2 --points 1", "bogus", "a --k 1 --tol 0"}) {
    CAPTURE(args);
    const auto r = run(args);
    CHECK(r.status == 1);
    CHECK(r.out.empty());
  }
  const auto unwritable = run("sweep --k-min 0.5 --k-max 2 --points 3 --out /nonexistent-dir/x.csv");
  CHECK(unwritable.status == 1);
  CHECK(unwritable.out.empty());
}

TEST_CASE("sweep writes the CSV file") {
  const std::string path = "cli_sweep_test.csv";
  const auto r = run("sweep --k-min 0.1 --k-max 10 --points 41 --out " + path);
  REQUIRE(r.status == 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  const std::string csv = text.str();
  CHECK(csv.rfind("k,two_omega,a_native,a_normalized,a_normalized_x2\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.find("\n1,0.707106781187,7.41629870") != std::string::npos);
  std::istringstream lines(csv);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 42);
  std::remove(path.c_str());
}

TEST_CASE("accessory output") {
  const auto sq = run("accessory --k 1");
  REQUIRE(sq.status == 0);
  CHECK(field(sq.out, "m") == doctest::Approx(field(sq.out, "m1")).epsilon(1e-8));
  const double lm = field(sq.out, "lambda-"), lp = field(sq.out, "lambda+"), ls = field(sq.out, "lambda*");
  CHECK(lm <= ls);
  CHECK(ls <= lp);
  CHECK(lm <= 0.0);
  CHECK(lp >= 0.0);
  const auto three = run("accessory --k 3");
  REQUIRE(three.status == 0);
  CHECK(std::abs(field(three.out, "e")) <= 1e-10);
}

TEST_CASE("max reports both presentations") {
  const auto r = run("max");
  REQUIRE(r.status == 0);
  CHECK(field(r.out, "two_omega") == doctest::Approx(0.7071).epsilon(2e-3));
  CHECK(field(r.out, "a_normalized_x2") == doctest::Approx(1.6693).epsilon(2e-3));
  CHECK(field(r.out, "a_normalized") == doctest::Approx(0.83465).epsilon(1e-3));
  CHECK(r.out.find("note:") != std::string::npos);
}

TEST_CASE("verify prints one line per check") {
  const auto r = run("verify --fast");
  std::istringstream in(r.out);
  std::string line;
  int checks = 0;
  bool gating_fail = false;
  while (std::getline(in, line)) {
    if (line.rfind("PASS ", 0) == 0 || line.rfind("FAIL ", 0) == 0) ++checks;
    if (line.rfind("FAIL ", 0) == 0) gating_fail = true;
  }
  CHECK(checks >= 7);
  CHECK(r.status == (gating_fail ? 2 : 0));
}
