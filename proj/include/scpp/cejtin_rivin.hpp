#ifndef SCPP_CEJTIN_RIVIN_HPP
#define SCPP_CEJTIN_RIVIN_HPP

#include <string>
#include <vector>

#include "scpp/permutation.hpp"

/**
 * @file cejtin_rivin.hpp
 * @brief Even permutations of S_n as products of two n-cycles and as simple
 * commutators [x, y] = x y x^-1 y^-1.
 */

namespace scpp
{

enum class Branch
{
  single_odd_cycle, ///< an odd cycle c: c1 = c2 = (k+1)/2 copies of c
  equal_even_pair,  ///< two 2m-cycles: interleave them
  unequal_even_pair, ///< a 2s-cycle and a 2t-cycle, s < t
  peel_odd,         ///< split off one odd cycle, join with a transposition
  peel_even_pair,   ///< split off two even cycles, join with a transposition
};

std::string to_string(Branch b);

/// One dispatch decision inside two_ncycle_product.
struct BranchStep
{
  Branch branch;
  unsigned depth;
  std::vector<unsigned> support; ///< sorted points handled at this step
};

struct TwoCycleProduct
{
  CycleList c1; ///< not disjoint; evaluates to an n-cycle
  CycleList c2; ///< not disjoint; evaluates to an n-cycle
  std::vector<BranchStep> trace;
  unsigned max_depth = 0;
};

/// Two cycle products, each evaluating to an n-cycle, whose product is d.
/// d must be the disjoint decomposition, 1-cycles included, of an even
/// permutation. Throws PromiseViolation for odd input,
/// MalformedInput when d does not cover 1..n disjointly, and InvariantBreach
/// if the result fails its own evaluation check.
TwoCycleProduct two_ncycle_product(CycleList const &d);

/// Every intermediate value of the main algorithm.
struct ScppSolution
{
  Permutation sigma;
  CycleList decomposition;
  TwoCycleProduct products;
  NCycle c1; ///< evaluation of products.c1
  NCycle c2; ///< evaluation of products.c2
  NCycle c3; ///< c1 reversed, the inverse of c1
  CycleList tau; ///< conjugator with c2 = tau c3 tau^-1
  GenWord x; ///< word for c1
  GenWord y; ///< word for tau
  GenWord x_inverse; ///< word for c3
  GenWord y_inverse; ///< y reversed
};

/// Main algorithm: x, y with [x, y] evaluating to word_to_permutation(w).
/// Throws PromiseViolation when w is odd.
ScppSolution scpp_solve(GenWord const &w);

/// "x 0 y 0 x^-1 0 y^-1 0 0", empty words written as nothing between zeros.
std::string format_solution(ScppSolution const &s);

/// x y x^-1 y^-1 as one word.
GenWord commutator_word(ScppSolution const &s);

} // namespace scpp

#endif // SCPP_CEJTIN_RIVIN_HPP
