#ifndef SCPP_PERMUTATION_HPP
#define SCPP_PERMUTATION_HPP

#include <span>
#include <vector>

/**
 * @file permutation.hpp
 * @brief Permutation arithmetic over S_n and the conversions between
 * generator words, cycle lists and image arrays.
 *
 * Conventions used throughout the library:
 *  - points are 1..n;
 *  - a Permutation stores images, images[i-1] = p(i);
 *  - products are read right to left: compose(p, q) applies q first;
 *  - a GenWord "x1 x2 ... xk" denotes tau_x1 o tau_x2 o ... o tau_xk, so
 *    its last letter acts first;
 *  - a cycle (a1 a2 ... ak) sends a1 -> a2 -> ... -> ak -> a1, and a list
 *    of cycles is a product, its rightmost cycle acting first.
 */

namespace scpp
{

class Permutation
{
public:
  /// Identity of S_degree.
  explicit Permutation(unsigned degree);

  /// Throws MalformedInput unless images is a bijection of {1..n}.
  static Permutation from_images(std::vector<unsigned> images);

  unsigned degree() const noexcept
  { return static_cast<unsigned>(images_.size()); }

  /// p(i) for 1 <= i <= degree().
  unsigned operator()(unsigned i) const
  { return images_[i - 1u]; }

  std::span<unsigned const> images() const noexcept
  { return images_; }

  bool is_identity() const noexcept;

  bool operator==(Permutation const &) const = default;

private:
  explicit Permutation(std::vector<unsigned> images, int)
  : images_(std::move(images))
  {}

  std::vector<unsigned> images_;
};

enum class Parity { even, odd };

/// compose(p, q)(i) = p(q(i)). Throws MalformedInput on degree mismatch.
Permutation compose(Permutation const &p, Permutation const &q);
Permutation invert(Permutation const &p);
Parity parity(Permutation const &p);
bool is_n_cycle(Permutation const &p);

/// Reversal i -> n + 1 - i, the longest element of S_n.
Permutation reversal(unsigned degree);

/// Word in the adjacent transpositions tau_1..tau_{n-1} of S_n.
class GenWord
{
public:
  GenWord(unsigned degree, std::vector<unsigned> letters);

  unsigned degree() const noexcept
  { return degree_; }

  std::vector<unsigned> const &letters() const noexcept
  { return letters_; }

  std::size_t size() const noexcept
  { return letters_.size(); }

  bool empty() const noexcept
  { return letters_.empty(); }

  bool operator==(GenWord const &) const = default;

private:
  unsigned degree_;
  std::vector<unsigned> letters_;
};

/// Concatenation; evaluates to compose(evaluate(u), evaluate(v)).
GenWord concat(GenWord const &u, GenWord const &v);

/// Letters in reverse order. For words in involutions this is the inverse.
GenWord reversed(GenWord const &w);

using Cycle = std::vector<unsigned>;

struct CycleList
{
  unsigned degree = 0;
  std::vector<Cycle> cycles;
  bool disjoint = false;

  bool operator==(CycleList const &) const = default;
};

/// Throws MalformedInput when an entry lies outside 1..degree, a cycle is
/// empty or repeats a point, or (for disjoint lists) two cycles meet.
void validate(CycleList const &c);

/// A single cycle moving every point of {1..n}.
class NCycle
{
public:
  /// Throws PromiseViolation unless entries is a permutation of 1..n.
  NCycle(unsigned degree, std::vector<unsigned> entries);

  /// Throws PromiseViolation unless c consists of exactly one cycle that
  /// moves all degree() points (1-cycles are allowed only for n = 1).
  static NCycle from_cycles(CycleList const &c);

  unsigned degree() const noexcept
  { return static_cast<unsigned>(entries_.size()); }

  std::vector<unsigned> const &entries() const noexcept
  { return entries_; }

  CycleList as_cycle_list() const;

  bool operator==(NCycle const &) const = default;

private:
  std::vector<unsigned> entries_;
};

/// Evaluate a generator word right to left.
/// Throws MalformedInput for letters outside [1, n-1].
Permutation word_to_permutation(GenWord const &w);

/// Disjoint cycles covering 1..n, 1-cycles included. Each
/// cycle starts at its smallest element; cycles are sorted by that element.
CycleList cycle_decomposition(Permutation const &p);

/// Evaluate a (not necessarily disjoint) product of cycles.
Permutation cycles_to_permutation(CycleList const &c);

/// The permutation tau with tau c1 tau^-1 = c2, sending the
/// k-th entry of c1 to the k-th entry of c2, as its cycle decomposition.
CycleList conjugator_of_ncycles(NCycle const &c1, NCycle const &c2);

/// Spell a product of cycles in the adjacent generators.
/// A transposition (m p), m < p, becomes tau_m ... tau_{p-2} tau_{p-1}
/// tau_{p-2} ... tau_m.
GenWord cycles_to_genword(CycleList const &c);

/// The inverse n-cycle, entries listed in reverse order.
NCycle reverse_ncycle(NCycle const &c);

/// Column-position list of the permutation matrix built by swapping
/// columns: entry i is the row holding the 1 of column i, which is p^-1(i).
std::vector<unsigned> column_list(Permutation const &p);

} // namespace scpp

#endif // SCPP_PERMUTATION_HPP
