#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "edalab/rng.hpp"

using namespace edalab;

TEST_CASE("identical seeds give identical draw sequences") {
  RngStream a(123456789ull);
  RngStream b(123456789ull);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("golden vectors match bit-exactly") {
  std::ifstream in(std::string(EDALAB_TEST_DIR) + "/golden/rng_vectors.txt");
  REQUIRE(in.good());
  std::string line;
  RngStream rng(0);
  bool have_stream = false;
  std::size_t checked = 0;
  while (std::getline(in, line)) {
    if (line.rfind("seed ", 0) == 0) {
      rng = RngStream(std::stoull(line.substr(5), nullptr, 16));
      have_stream = true;
      continue;
    }
    REQUIRE(have_stream);
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(rng.next_u64()));
    CHECK(line == buf);
    ++checked;
  }
  CHECK(checked == 30000);
}

TEST_CASE("derive_seed: same tuple twice gives identical streams") {
  RngStream a = derive_stream(99, {3, 7});
  RngStream b = derive_stream(99, {3, 7});
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("derive_seed: adjacent indices give distinct streams") {
  RngStream a = derive_stream(5, {0});
  RngStream b = derive_stream(5, {1});
  bool any_diff = false;
  for (int i = 0; i < 1000; ++i) any_diff |= (a.next_u64() != b.next_u64());
  CHECK(any_diff);
}

TEST_CASE("derive_seed is pure") {
  const std::uint64_t first = derive_seed(17, {1, 2, 3});
  RngStream burn(4);
  burn.next_u64();
  CHECK(derive_seed(17, {1, 2, 3}) == first);
  CHECK(derive_seed(17, {1, 2}) != first);
}

TEST_CASE("next_double lies in [0,1), open variant in (0,1]") {
  RngStream rng(2024);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.next_double();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.next_double_open();
    REQUIRE(u > 0.0);
    REQUIRE(u <= 1.0);
  }
}

TEST_CASE("next_below is bounded and roughly uniform") {
  RngStream rng(31337);
  std::vector<int> counts(10, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const auto v = rng.next_below(10);
    REQUIRE(v < 10);
    ++counts[static_cast<std::size_t>(v)];
  }
  for (int c : counts) {
    CHECK(c > 10000 - 4 * 100);  // 4 sigma around draws/10
    CHECK(c < 10000 + 4 * 100);
  }
}

TEST_CASE("next_gaussian has standard-normal moments") {
  RngStream rng(555);
  const int draws = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double z = rng.next_gaussian();
    sum += z;
    sumsq += z * z;
  }
  const double mean = sum / draws;
  const double var = sumsq / draws - mean * mean;
  CHECK(std::abs(mean) < 0.02);
  CHECK(var == doctest::Approx(1.0).epsilon(0.03));
}
