#include "scpp/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "scpp/cejtin_rivin.hpp"
#include "scpp/errors.hpp"
#include "scpp/op_counter.hpp"

namespace scpp
{

BenchRow bench_scpp(GenWord const &w, unsigned reps)
{
  if (reps == 0u)
    throw MalformedInput("repetition count must be positive");
  BenchRow row{w.degree(), w.size(), 0u, 0.0};
  auto start = std::chrono::steady_clock::now();
  for (unsigned r = 0; r < reps; ++r) {
    ops::CountingScope scope;
    scpp_solve(w);
    if (r > 0u && scope.count() != row.operations)
      throw InvariantBreach("operation count changed between repetitions");
    row.operations = scope.count();
  }
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  row.seconds = elapsed.count() / reps;
  return row;
}

GenWord random_even_word(unsigned degree, std::size_t length, std::uint64_t seed)
{
  if (degree < 2u)
    throw MalformedInput("random words need degree at least 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> letter(1u, degree - 1u);
  std::vector<unsigned> l(length + length % 2u);
  for (auto &x : l)
    x = letter(rng);
  return GenWord(degree, std::move(l));
}

std::optional<double> log_log_slope(std::vector<double> const &x,
                                    std::vector<double> const &y)
{
  if (x.size() != y.size())
    throw MalformedInput("slope fit needs equally many x and y values");
  std::size_t m = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(x[i] > 0) || !(y[i] > 0))
      throw MalformedInput("slope fit needs positive data");
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double denom = m * sxx - sx * sx;
  if (m < 2u || denom <= 1e-12 * std::max(1.0, sxx))
    return std::nullopt;
  return (m * sxy - sx * sy) / denom;
}

} // namespace scpp
