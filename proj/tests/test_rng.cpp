#include <doctest.h>

#include <set>

#include "pleo/rng.hpp"

using namespace pleo;

TEST_CASE("splitmix64 reference output") {
  std::uint64_t state = 0;
  CHECK(splitmix64(state) == 0xE220A8397B1DCDAFULL);
  CHECK(state == 0x9E3779B97F4A7C15ULL);
}

TEST_CASE("mt19937_64 reference output") {
  Rng rng(5489);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng.next();
  CHECK(v == 9981545732273789042ULL);
}

TEST_CASE("substreams are reproducible and distinct") {
  CHECK(substream_seed(1, 0) == substream_seed(1, 0));
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(substream_seed(7, i));
  CHECK(seeds.size() == 1000);
  Rng a = Rng::substream(3, 4), b = Rng::substream(3, 4);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("below stays in range and covers it") {
  Rng rng(11);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 70000; ++i) {
    auto x = rng.below(7);
    REQUIRE(x < 7);
    ++hist[x];
  }
  for (int h : hist) CHECK(h > 9000);
  for (int h : hist) CHECK(h < 11000);
  CHECK(rng.below(1) == 0);
}

TEST_CASE("uniform and coin") {
  Rng rng(12);
  double sum = 0;
  int heads = 0;
  for (int i = 0; i < 100000; ++i) {
    double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    heads += rng.coin();
  }
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
  CHECK(heads > 49000);
  CHECK(heads < 51000);
}
