#include "scpp/permutation.hpp"

#include <algorithm>
#include <string>

#include "scpp/errors.hpp"
#include "scpp/op_counter.hpp"

namespace scpp
{

Permutation::Permutation(unsigned degree)
: images_(degree)
{
  for (unsigned i = 0u; i < degree; ++i)
    images_[i] = i + 1u;
  ops::tick(degree);
}

Permutation Permutation::from_images(std::vector<unsigned> images)
{
  std::vector<bool> seen(images.size() + 1u, false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    unsigned v = images[i];
    if (v < 1u || v > images.size())
      throw MalformedInput("image " + std::to_string(v) + " at position " +
                           std::to_string(i + 1u) + " is outside 1.." +
                           std::to_string(images.size()));
    if (seen[v])
      throw MalformedInput("image " + std::to_string(v) +
                           " appears twice; not a bijection");
    seen[v] = true;
  }
  return Permutation(std::move(images), 0);
}

bool Permutation::is_identity() const noexcept
{
  for (unsigned i = 0u; i < images_.size(); ++i) {
    if (images_[i] != i + 1u)
      return false;
  }
  return true;
}

namespace
{

void require_same_degree(unsigned a, unsigned b)
{
  if (a != b)
    throw MalformedInput("degree mismatch: " + std::to_string(a) + " vs " +
                         std::to_string(b));
}

} // namespace

Permutation compose(Permutation const &p, Permutation const &q)
{
  require_same_degree(p.degree(), q.degree());
  std::vector<unsigned> images(p.degree());
  for (unsigned i = 1u; i <= p.degree(); ++i)
    images[i - 1u] = p(q(i));
  ops::tick(p.degree());
  return Permutation::from_images(std::move(images));
}

Permutation invert(Permutation const &p)
{
  std::vector<unsigned> images(p.degree());
  for (unsigned i = 1u; i <= p.degree(); ++i)
    images[p(i) - 1u] = i;
  ops::tick(p.degree());
  return Permutation::from_images(std::move(images));
}

Parity parity(Permutation const &p)
{
  // n minus the number of cycles has the parity of the permutation.
  std::vector<bool> visited(p.degree() + 1u, false);
  unsigned cycles = 0u;
  for (unsigned i = 1u; i <= p.degree(); ++i) {
    if (visited[i])
      continue;
    ++cycles;
    for (unsigned j = i; !visited[j]; j = p(j))
      visited[j] = true;
  }
  ops::tick(p.degree());
  return (p.degree() - cycles) % 2u == 0u ? Parity::even : Parity::odd;
}

bool is_n_cycle(Permutation const &p)
{
  if (p.degree() == 0u)
    return false;
  unsigned length = 1u;
  for (unsigned j = p(1u); j != 1u; j = p(j))
    ++length;
  ops::tick(length);
  return length == p.degree();
}

Permutation reversal(unsigned degree)
{
  std::vector<unsigned> images(degree);
  for (unsigned i = 0u; i < degree; ++i)
    images[i] = degree - i;
  return Permutation::from_images(std::move(images));
}

GenWord::GenWord(unsigned degree, std::vector<unsigned> letters)
: degree_(degree),
  letters_(std::move(letters))
{
  if (degree_ == 0u)
    throw MalformedInput("degree must be positive");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] < 1u || letters_[i] + 1u > degree_)
      throw MalformedInput("letter " + std::to_string(letters_[i]) +
                           " at position " + std::to_string(i + 1u) +
                           " is outside [1, " + std::to_string(degree_ - 1u) +
                           "]");
  }
}

GenWord concat(GenWord const &u, GenWord const &v)
{
  require_same_degree(u.degree(), v.degree());
  std::vector<unsigned> letters(u.letters());
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return GenWord(u.degree(), std::move(letters));
}

GenWord reversed(GenWord const &w)
{
  std::vector<unsigned> letters(w.letters().rbegin(), w.letters().rend());
  return GenWord(w.degree(), std::move(letters));
}

void validate(CycleList const &c)
{
  if (c.degree == 0u)
    throw MalformedInput("cycle list has degree 0");
  std::vector<bool> seen_anywhere(c.degree + 1u, false);
  std::vector<unsigned> seen_in_cycle(c.degree + 1u, 0u);
  unsigned cycle_id = 0u;
  for (auto const &cycle : c.cycles) {
    ++cycle_id;
    if (cycle.empty())
      throw MalformedInput("empty cycle in cycle list");
    for (unsigned v : cycle) {
      if (v < 1u || v > c.degree)
        throw MalformedInput("cycle entry " + std::to_string(v) +
                             " is outside 1.." + std::to_string(c.degree));
      if (seen_in_cycle[v] == cycle_id)
        throw MalformedInput("cycle repeats entry " + std::to_string(v));
      seen_in_cycle[v] = cycle_id;
      if (c.disjoint && seen_anywhere[v])
        throw MalformedInput("entry " + std::to_string(v) +
                             " appears in two cycles of a disjoint list");
      seen_anywhere[v] = true;
    }
  }
}

NCycle::NCycle(unsigned degree, std::vector<unsigned> entries)
: entries_(std::move(entries))
{
  if (degree == 0u || entries_.size() != degree)
    throw PromiseViolation("expected a cycle of length " +
                           std::to_string(degree) + ", got length " +
                           std::to_string(entries_.size()));
  std::vector<bool> seen(degree + 1u, false);
  for (unsigned v : entries_) {
    if (v < 1u || v > degree || seen[v])
      throw PromiseViolation("cycle is not a permutation of 1.." +
                             std::to_string(degree));
    seen[v] = true;
  }
}

NCycle NCycle::from_cycles(CycleList const &c)
{
  std::vector<unsigned> entries;
  for (auto const &cycle : c.cycles) {
    if (cycle.size() == 1u && c.degree != 1u)
      continue;
    if (!entries.empty())
      throw PromiseViolation("more than one nontrivial cycle; not an n-cycle");
    entries = cycle;
  }
  return NCycle(c.degree, std::move(entries));
}

CycleList NCycle::as_cycle_list() const
{
  return CycleList{degree(), {entries_}, true};
}

Permutation word_to_permutation(GenWord const &w)
{
  unsigned n = w.degree();
  // images[i-1] = p(i). Right-multiplying by tau_x swaps the images at
  // positions x and x+1, so the letters are consumed left to right.
  std::vector<unsigned> images(n);
  for (unsigned i = 0u; i < n; ++i)
    images[i] = i + 1u;
  ops::tick(n);
  for (unsigned x : w.letters()) {
    std::swap(images[x - 1u], images[x]);
    ops::tick();
  }
  return Permutation::from_images(std::move(images));
}

CycleList cycle_decomposition(Permutation const &p)
{
  CycleList out{p.degree(), {}, true};
  std::vector<bool> visited(p.degree() + 1u, false);
  for (unsigned start = 1u; start <= p.degree(); ++start) {
    ops::tick();
    if (visited[start])
      continue;
    Cycle cycle;
    for (unsigned j = start; !visited[j]; j = p(j)) {
      visited[j] = true;
      cycle.push_back(j);
      ops::tick();
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

Permutation cycles_to_permutation(CycleList const &c)
{
  validate(c);
  // Accumulate p = c_1 o c_2 o ... o c_m left to right: right-multiplying
  // by a cycle (a_1 .. a_k) gives p'(a_j) = p(a_{j+1}).
  std::vector<unsigned> images(c.degree);
  for (unsigned i = 0u; i < c.degree; ++i)
    images[i] = i + 1u;
  ops::tick(c.degree);
  for (auto const &cycle : c.cycles) {
    if (cycle.size() < 2u)
      continue;
    unsigned first = images[cycle.front() - 1u];
    for (std::size_t j = 0; j + 1u < cycle.size(); ++j) {
      images[cycle[j] - 1u] = images[cycle[j + 1u] - 1u];
      ops::tick();
    }
    images[cycle.back() - 1u] = first;
  }
  return Permutation::from_images(std::move(images));
}

CycleList conjugator_of_ncycles(NCycle const &c1, NCycle const &c2)
{
  if (c1.degree() != c2.degree())
    throw PromiseViolation("n-cycles of different degree");
  std::vector<unsigned> images(c1.degree());
  for (std::size_t k = 0; k < c1.entries().size(); ++k) {
    images[c1.entries()[k] - 1u] = c2.entries()[k];
    ops::tick();
  }
  return cycle_decomposition(Permutation::from_images(std::move(images)));
}

namespace
{

void append_transposition(std::vector<unsigned> &letters, unsigned a, unsigned b)
{
  unsigned m = std::min(a, b);
  unsigned p = std::max(a, b);
  for (unsigned t = m; t < p; ++t) {
    letters.push_back(t);
    ops::tick();
  }
  for (unsigned t = p - 1u; t > m; --t) {
    letters.push_back(t - 1u);
    ops::tick();
  }
}

} // namespace

GenWord cycles_to_genword(CycleList const &c)
{
  validate(c);
  // (a_1 a_2 ... a_k) = (a_1 a_k) ... (a_1 a_3)(a_1 a_2).
  std::vector<unsigned> letters;
  for (auto const &cycle : c.cycles) {
    for (std::size_t j = cycle.size(); j-- > 1u;)
      append_transposition(letters, cycle.front(), cycle[j]);
  }
  return GenWord(c.degree, std::move(letters));
}

NCycle reverse_ncycle(NCycle const &c)
{
  std::vector<unsigned> entries(c.entries().rbegin(), c.entries().rend());
  ops::tick(entries.size());
  return NCycle(c.degree(), std::move(entries));
}

std::vector<unsigned> column_list(Permutation const &p)
{
  auto inv = invert(p);
  return {inv.images().begin(), inv.images().end()};
}

} // namespace scpp
