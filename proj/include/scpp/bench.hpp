#ifndef SCPP_BENCH_HPP
#define SCPP_BENCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "scpp/permutation.hpp"

/**
 * @file bench.hpp
 * @brief Operation counts and wall time of scpp_solve, with a log-log
 * least-squares slope fit.
 */

namespace scpp
{

struct BenchRow
{
  unsigned degree = 0;
  std::size_t length = 0;
  std::uint64_t operations = 0; ///< per run; identical across repetitions
  double seconds = 0.0;         ///< mean wall time per run
};

/// Runs scpp_solve(w) reps times (reps >= 1). Throws InvariantBreach if the
/// operation count differs between repetitions.
BenchRow bench_scpp(GenWord const &w, unsigned reps);

/// Even-length word of the given length over S_n, deterministic in seed.
/// An odd length is rounded up so the permutation stays even.
GenWord random_even_word(unsigned degree, std::size_t length, std::uint64_t seed);

/// Least-squares slope of log y against log x; nothing for fewer than two
/// distinct x values. Throws MalformedInput for non-positive data.
std::optional<double> log_log_slope(std::vector<double> const &x,
                                    std::vector<double> const &y);

} // namespace scpp

#endif // SCPP_BENCH_HPP
