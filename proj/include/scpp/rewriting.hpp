#ifndef SCPP_REWRITING_HPP
#define SCPP_REWRITING_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "scpp/permutation.hpp"

/**
 * @file rewriting.hpp
 * @brief ShortLex ordered string rewriting, the S_n presentation and
 * Knuth-Bendix completion.
 *
 * ShortLex compares shorter words first and breaks ties at the first
 * differing position, scanning from the left by default or from the right
 * when the alphabet asks for it.
 */

namespace scpp
{

using Word = std::vector<unsigned>;

/// Direction in which equal-length words are scanned for their first
/// differing letter.
enum class TieBreak { left_to_right, right_to_left };

/// Symbols in increasing order; rank = position.
class OrderedAlphabet
{
public:
  /// Throws MalformedInput on duplicates.
  explicit OrderedAlphabet(std::vector<unsigned> symbols,
                           TieBreak tie_break = TieBreak::left_to_right);

  /// 1 < 2 < ... < n-1, the generators of S_n.
  static OrderedAlphabet sn(unsigned n,
                            TieBreak tie_break = TieBreak::left_to_right);

  TieBreak tie_break() const noexcept
  { return tie_break_; }

  std::vector<unsigned> const &symbols() const noexcept
  { return symbols_; }

  bool contains(unsigned s) const noexcept;

  /// Throws MalformedInput for symbols outside the alphabet.
  std::size_t rank(unsigned s) const;

  bool operator==(OrderedAlphabet const &) const = default;

private:
  std::vector<unsigned> symbols_;
  std::vector<std::size_t> rank_; // indexed by symbol, npos if absent
  TieBreak tie_break_;
};

enum class Order { less, equal, greater };

Order shortlex_compare(Word const &u, Word const &v, OrderedAlphabet const &a);

struct Rule
{
  Word lhs;
  Word rhs;

  bool operator==(Rule const &) const = default;
};

class RewriteSystem
{
public:
  /// Throws MalformedInput when a rule uses a foreign symbol or is not
  /// ShortLex decreasing.
  RewriteSystem(OrderedAlphabet alphabet, std::vector<Rule> rules);

  OrderedAlphabet const &alphabet() const noexcept
  { return alphabet_; }

  std::vector<Rule> const &rules() const noexcept
  { return rules_; }

  /// Reduction to an irreducible word. At each step the match starting
  /// furthest left is rewritten; ties go to the ShortLex smaller lhs, then
  /// the smaller rhs.
  Word reduce(Word w) const;

  bool is_irreducible(Word const &w) const;

private:
  OrderedAlphabet alphabet_;
  std::vector<Rule> rules_;
  // Rule indices grouped by first lhs symbol, each group sorted by the
  // lhs/rhs tie-break.
  std::vector<std::vector<std::size_t>> by_first_;
  std::size_t max_lhs_ = 0;
};

/// Relations i i = e, (i+1) i (i+1) = i (i+1) i and (i+k) i = i (i+k) for
/// k > 1, each oriented ShortLex decreasing. Left to right this gives
/// (i+k) i -> i (i+k); right to left the commutations turn around.
/// Throws MalformedInput for n < 2.
RewriteSystem sn_presentation(unsigned n,
                              TieBreak tie_break = TieBreak::left_to_right);

inline constexpr std::size_t default_completion_cap = 100000;

/// Knuth-Bendix completion with interreduction. Throws CompletionDiverged
/// after max_additions rule additions.
RewriteSystem knuth_bendix_complete(OrderedAlphabet const &alphabet,
                                    std::vector<Rule> const &rules,
                                    std::size_t max_additions =
                                        default_completion_cap);

/// Every critical pair of the system resolves.
bool is_confluent(RewriteSystem const &s);

/// Number of irreducible words, counting at most cap + 1 of them (so a
/// result above cap means "more than cap").
std::size_t count_irreducible(RewriteSystem const &s, std::size_t cap);

/// Completed system for S_n, built once per (n, tie_break) and shared
/// read-only.
std::shared_ptr<RewriteSystem const>
completed_sn(unsigned n, TieBreak tie_break = TieBreak::left_to_right);

/// Largest n for which canonical_form_sn goes through Knuth-Bendix.
inline constexpr unsigned completion_degree_limit = 12;

/// ShortLex least word for the permutation of w: the completed system's
/// normal form for n <= completion_degree_limit, and the equivalent direct
/// construction (shortlex_reduced_word) above that.
GenWord canonical_form_sn(GenWord const &w,
                          TieBreak tie_break = TieBreak::left_to_right);

/// ShortLex least word evaluating to p, built letter by letter from the
/// compared end by always taking the smallest descent on that side.
GenWord shortlex_reduced_word(Permutation const &p,
                              TieBreak tie_break = TieBreak::left_to_right);

/// "1 2 1 -> 2 1 2" per line; "e" for the empty word; '#' starts a comment.
std::vector<Rule> parse_rules(std::string_view text);
std::string format_rules(std::vector<Rule> const &rules);
std::string format_word(Word const &w);

} // namespace scpp

#endif // SCPP_REWRITING_HPP
