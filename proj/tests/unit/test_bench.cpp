#include <doctest.h>

#include "scpp/bench.hpp"
#include "scpp/errors.hpp"
#include "scpp/wire.hpp"

using namespace scpp;

TEST_CASE("slope fit")
{
  auto s = log_log_slope({1, 2, 4, 8}, {3, 12, 48, 192});
  REQUIRE(s.has_value());
  CHECK(*s == doctest::Approx(2.0));
  CHECK_FALSE(log_log_slope({8}, {5}).has_value());
  CHECK_FALSE(log_log_slope({8, 8}, {5, 6}).has_value());
  CHECK_THROWS_AS(log_log_slope({0, 1}, {1, 1}), MalformedInput);
}

TEST_CASE("operation counts are deterministic")
{
  GenWord w = parse_genword(32, "6 4 1 2");
  BenchRow a = bench_scpp(w, 3), b = bench_scpp(w, 1);
  CHECK(a.operations == b.operations);
  CHECK(a.operations > 0u);
  CHECK(a.length == 4u);
  CHECK_THROWS_AS(bench_scpp(w, 0), MalformedInput);
}

TEST_CASE("random even words")
{
  GenWord w = random_even_word(16, 101, 7);
  CHECK(w.size() == 102u);
  CHECK(w == random_even_word(16, 101, 7));
  CHECK(parity(word_to_permutation(w)) == Parity::even);
}
