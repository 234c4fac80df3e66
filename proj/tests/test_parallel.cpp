#include "e8/roundtrip.hpp"
#include "e8/series.hpp"

#include <doctest.h>

#include <omp.h>

#include <random>

using namespace e8;

TEST_CASE("parallel expansion matches the serial one") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 3;
    BinomialProduct p(r);
    for (int f = 0; f < 5; ++f) {
      ExponentVector m(r);
      do {
        for (auto& x : m) x = static_cast<long>(rng() % 9);
      } while (total_degree(m) == 0);
      p.multiply(m, static_cast<long>(rng() % 5) - 2);
    }
    const long n = r == 1 ? 200 : r == 2 ? 40 : 18;
    CHECK(expand_parallel(p, n) == expand(p, n));
  }
}

TEST_CASE("parallel round trips match the serial ones") {
  omp_set_num_threads(4);
  for (auto mode : {RoundTripMode::curve, RoundTripMode::divisor, RoundTripMode::curves,
                    RoundTripMode::divisors}) {
    RoundTripOptions opt;
    opt.seed = 77;
    opt.count = 30;
    opt.branches = 3;
    opt.mode = mode;
    const auto a = run_roundtrips(opt), b = run_roundtrips_serial(opt);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].index == i);
      CHECK(a[i].pass == b[i].pass);
      CHECK(a[i].series == b[i].series);
      CHECK(a[i].pass);
    }
  }
  CHECK_THROWS_AS(parse_mode("curvez"), std::invalid_argument);
}
