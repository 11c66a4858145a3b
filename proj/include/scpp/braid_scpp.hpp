#ifndef SCPP_BRAID_SCPP_HPP
#define SCPP_BRAID_SCPP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scpp/braid.hpp"

/**
 * @file braid_scpp.hpp
 * @brief Simple commutators in B_n through the symmetric group solver:
 * lifting its output to permutation braids, membership in the set K of
 * braids recovered exactly by that lift, pure braid factorization and a
 * seeded random rewriting search.
 */

namespace scpp
{

struct CommutatorCandidate
{
  BraidWord x;
  BraidWord y;

  /// x y x^-1 y^-1.
  BraidWord assembled() const
  { return commutator(x, y); }

  bool operator==(CommutatorCandidate const &) const = default;
};

/// Solve the projection of b in S_n and lift both commutator entries to
/// canonical permutation braids. Throws PromiseViolation when the
/// projection is odd.
CommutatorCandidate lift_projection_commutator(BraidWord const &b);

/// The lifted candidate when it is braid-equal to b (b lies in K), nothing
/// otherwise. Throws PromiseViolation when the exponent sum is not 0.
std::optional<CommutatorCandidate> scpp_permutation_braids(BraidWord const &b);

struct PureFactorization
{
  BraidWord pure;            ///< b (x y x^-1 y^-1)^-1, letter for letter
  CommutatorCandidate commutator;
};

/// b = pure * [x, y] with pure in the kernel of the projection. Throws
/// PromiseViolation when the projection of b is odd.
PureFactorization pure_braid_factorization(BraidWord const &b);

/// A literal split w = a b a^-1 b^-1 (formal inverses), if one exists.
std::optional<CommutatorCandidate> literal_commutator(BraidWord const &w);

/// Every word obtainable from w by one move: a braid relation
/// i j i <-> j i j (|i - j| = 1, equal signs), a commutation of adjacent
/// letters with indices at least 2 apart, a free cancellation, or a free
/// insertion of g g^-1. Grouped by family in that order.
std::vector<std::vector<BraidWord>> single_moves(BraidWord const &w);

struct Milestone
{
  BraidWord word;
  std::uint64_t step = 0;   ///< total moves made when it was reached
  std::size_t prefix = 0;   ///< length of h in word = h [a, b]
};

struct SearchTrace
{
  static constexpr char const *rng_name = "mt19937_64";

  std::uint64_t seed = 0;
  unsigned budget = 0;                  ///< M, the number of rounds
  BraidWord start{2u, {}};              ///< b_0 = p [d1, d2]
  std::vector<std::uint64_t> schedule;  ///< N_i of each round entered
  std::vector<Milestone> milestones;    ///< the last one is the success word
  std::uint64_t steps = 0;
  bool success = false;
  std::optional<CommutatorCandidate> result;
};

/// Random rewriting from p [d1, d2] until a word of shape a b a^-1 b^-1
/// appears. Round i runs N_i moves (N_0 uniform in [|b|, 4|b|], then
/// doubling) from the latest milestone; finding a shorter prefix h before a
/// literal commutator suffix records a milestone and restarts the round's
/// move count. Deterministic in (b, budget, seed).
SearchTrace probabilistic_scpp_search(BraidWord const &b, unsigned budget,
                                      std::uint64_t seed);

/// One "-> word (steps)" line per milestone after a header line.
std::string format_trace(SearchTrace const &t);

} // namespace scpp

#endif // SCPP_BRAID_SCPP_HPP
