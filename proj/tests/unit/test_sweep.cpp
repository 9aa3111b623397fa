#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hyplat/accessory.hpp"
#include "hyplat/errors.hpp"
#include "hyplat/sweep.hpp"

using namespace hyplat;

TEST_CASE("sweep rows: ordering, doubled column, exact k pairs") {
  const auto rows = sweep(0.1, 10.0, 41);
  REQUIRE(rows.size() == 41);
  CHECK(rows.front().k == 0.1);
  CHECK(rows.back().k == 10.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].a_normalized_x2 == 2.0 * rows[i].a_normalized);
    CHECK(rows[i].two_omega > 0.0);
    CHECK(rows[i].two_omega < 1.0);
    if (i > 0) CHECK(rows[i].two_omega > rows[i - 1].two_omega);
    // geometric spacing pairs k with 1/k
    const auto& mirror = rows[rows.size() - 1 - i];
    CHECK(rows[i].k * mirror.k == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(rows[i].a_normalized - mirror.a_normalized) <= 1e-8);
  }
  const auto& mid = rows[20];
  CHECK(mid.k == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mid.two_omega == doctest::Approx(0.707107).epsilon(1e-6));
  CHECK(mid.a_normalized_x2 == doctest::Approx(1.6693).epsilon(1e-4));
}

TEST_CASE("two-point sweep satisfies the functional equation") {
  const auto rows = sweep(0.5, 2.0, 2);
  CHECK(std::abs(rows[0].a_native - rows[1].a_native / 2.0) <= 1e-6 * rows[0].a_native);
}

TEST_CASE("worker count does not change the result") {
  const auto one = sweep(0.3, 3.0, 7, 1e-10, 1);
  const auto many = sweep(0.3, 3.0, 7, 1e-10, 4);
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].a_native == many[i].a_native);
}

TEST_CASE("CSV round trip at 12 significant digits") {
  const auto rows = sweep(0.2, 5.0, 9);
  std::stringstream buf;
  write_csv(buf, rows);
  const std::string text = buf.str();
  CHECK(text.rfind(std::string(kSweepHeader) + "\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  const auto back = read_csv(buf);
  const auto expect = rounded(rows);
  REQUIRE(back.size() == expect.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].k == expect[i].k);
    CHECK(back[i].two_omega == expect[i].two_omega);
    CHECK(back[i].a_native == expect[i].a_native);
    CHECK(back[i].a_normalized == expect[i].a_normalized);
    CHECK(back[i].a_normalized_x2 == expect[i].a_normalized_x2);
  }
  std::stringstream again;
  write_csv(again, back);
  CHECK(again.str() == text);
}

TEST_CASE("malformed CSV and bad sweep arguments") {
  std::stringstream no_header("1,2,3,4,5\n");
  CHECK_THROWS_AS(read_csv(no_header), std::runtime_error);
  std::stringstream short_row(std::string(kSweepHeader) + "\n1,2,3\n");
  CHECK_THROWS_AS(read_csv(short_row), std::runtime_error);
  std::stringstream junk(std::string(kSweepHeader) + "\n1,2,3,4,x5\n");
  CHECK_THROWS(read_csv(junk));
  CHECK_THROWS_AS(sweep(0.01, 1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(sweep(1.0, 60.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(sweep(2.0, 1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(sweep(0.5, 1.0, 1), std::invalid_argument);
}

TEST_CASE("maximum of the normalized curve") {
  const auto m = locate_maximum();
  CHECK(m.two_omega == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(2e-3));
  CHECK(m.a_normalized == doctest::Approx(0.83465).epsilon(1e-3));
  CHECK(m.a_normalized_x2 == doctest::Approx(1.6693).epsilon(1e-3));
  CHECK(m.symmetry_residual <= 1e-8);
  CHECK(m.a_normalized == doctest::Approx(a_normalized(1.0).a_norm).epsilon(1e-9));
}
