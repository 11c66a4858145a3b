#ifndef SCPP_BRAID_HPP
#define SCPP_BRAID_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scpp/permutation.hpp"

/**
 * @file braid.hpp
 * @brief Braid words over the Artin generators, permutation braids, R-sets
 * and the right-greedy normal form w_1 ... w_m Omega^p.
 *
 * Letters are signed: +i is sigma_i, -i is sigma_i^-1. Words are read with
 * the same right-to-left convention as GenWord, so the projection of a word
 * evaluates like the GenWord with the signs erased.
 */

namespace scpp
{

class BraidWord
{
public:
  /// Throws MalformedInput for strands < 2 or letters outside
  /// [-(n-1), -1] u [1, n-1].
  BraidWord(unsigned strands, std::vector<int> letters);

  unsigned strands() const noexcept
  { return strands_; }

  std::vector<int> const &letters() const noexcept
  { return letters_; }

  std::size_t size() const noexcept
  { return letters_.size(); }

  bool empty() const noexcept
  { return letters_.empty(); }

  bool operator==(BraidWord const &) const = default;

private:
  unsigned strands_;
  std::vector<int> letters_;
};

BraidWord concat(BraidWord const &a, BraidWord const &b);
/// Formal inverse: reversed, signs flipped.
BraidWord inverse(BraidWord const &b);
/// Cancels adjacent sigma_i sigma_i^-1 pairs until none remain.
BraidWord free_reduce(BraidWord const &b);
/// The word a b a^-1 b^-1.
BraidWord commutator(BraidWord const &a, BraidWord const &b);
int exponent_sum(BraidWord const &b);

/// Sign erasure, sigma_i^(+-1) -> tau_i.
GenWord project(BraidWord const &b);
/// Positive braid word with the letters of w.
BraidWord lift_letters(GenWord const &w);

/// Inversion set {(i, j) : i < j, p(j) < p(i)} as an n x n membership table.
class RSet
{
public:
  explicit RSet(unsigned n);

  unsigned degree() const noexcept
  { return n_; }

  bool contains(unsigned i, unsigned j) const
  { return bits_[index(i, j)]; }

  /// Throws MalformedInput unless 1 <= i < j <= n.
  void insert(unsigned i, unsigned j);

  std::size_t size() const noexcept
  { return count_; }

  /// Pairs in lexicographic order.
  std::vector<std::pair<unsigned, unsigned>> pairs() const;

  bool subset_of(RSet const &other) const;

  bool operator==(RSet const &) const = default;

private:
  std::size_t index(unsigned i, unsigned j) const
  { return static_cast<std::size_t>(i - 1u) * n_ + (j - 1u); }

  unsigned n_;
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

RSet r_set(Permutation const &p);

/// Largest inversion set of a permutation inside a n b, built by adding a
/// pair (i, k) of a n b, in order of increasing k - i, when every i < j < k
/// has (i, j) or (j, k) already added.
RSet meet(RSet const &a, RSet const &b);

/// The permutation with inversion set r, or nothing if r is not the
/// inversion set of any permutation.
std::optional<Permutation> permutation_from_rset(RSet const &r);

/// Positive braid in which no two strands cross twice, stored by its
/// projection; the word is the lift of the S_n canonical form.
class PermutationBraid
{
public:
  explicit PermutationBraid(Permutation p);

  unsigned strands() const noexcept
  { return perm_.degree(); }

  Permutation const &permutation() const noexcept
  { return perm_; }

  BraidWord const &canonical_word() const noexcept
  { return word_; }

  bool is_identity() const noexcept
  { return word_.empty(); }

  bool operator==(PermutationBraid const &o) const
  { return perm_ == o.perm_; }

private:
  Permutation perm_;
  BraidWord word_;
};

PermutationBraid lift_permutation(Permutation const &p);

/// Omega, the half twist, as a permutation braid.
PermutationBraid garside(unsigned n);
/// (sigma_1 ... sigma_{n-1})(sigma_1 ... sigma_{n-2}) ... (sigma_1).
BraidWord garside_formula_word(unsigned n);

/// The maximal tail t of a with t b still a permutation braid:
/// p(a) meet (p(Omega) o p(b)^-1) on inversion sets.
Permutation max_tail(Permutation const &a, Permutation const &b);

struct GreedyNormalForm
{
  unsigned strands = 0;
  std::vector<PermutationBraid> factors;
  long long omega_power = 0;

  bool operator==(GreedyNormalForm const &) const = default;
};

GreedyNormalForm rgnf(BraidWord const &b);

/// Concatenated factor words followed by Omega^p spelled with the
/// canonical Omega word or its inverse.
BraidWord reassemble(GreedyNormalForm const &f);

bool braid_equal(BraidWord const &a, BraidWord const &b);

/// "1 2 -1 -2"; "e" for the empty word.
BraidWord parse_braid_word(unsigned strands, std::string_view text);
std::string format_braid_word(BraidWord const &b);

/// "[1 2][2] OMEGA^-1"; "OMEGA^0" alone when there are no factors.
std::string format_normal_form(GreedyNormalForm const &f);
GreedyNormalForm parse_normal_form(unsigned strands, std::string_view text);

} // namespace scpp

#endif // SCPP_BRAID_HPP
