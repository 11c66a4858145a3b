#include "scpp/braid_scpp.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

#include "scpp/cejtin_rivin.hpp"
#include "scpp/errors.hpp"
#include "scpp/op_counter.hpp"
#include "scpp/rewriting.hpp"

namespace scpp
{

CommutatorCandidate lift_projection_commutator(BraidWord const &b)
{
  ScppSolution s = scpp_solve(project(b));
  auto d1 = lift_permutation(word_to_permutation(canonical_form_sn(s.x)));
  auto d2 = lift_permutation(word_to_permutation(canonical_form_sn(s.y)));
  return {d1.canonical_word(), d2.canonical_word()};
}

std::optional<CommutatorCandidate> scpp_permutation_braids(BraidWord const &b)
{
  if (exponent_sum(b) != 0)
    throw PromiseViolation("exponent sum " + std::to_string(exponent_sum(b)) +
                           " is not 0, so the braid is not a commutator");
  CommutatorCandidate c = lift_projection_commutator(b);
  if (!braid_equal(b, c.assembled()))
    return std::nullopt;
  return c;
}

PureFactorization pure_braid_factorization(BraidWord const &b)
{
  if (parity(word_to_permutation(project(b))) == Parity::odd)
    throw PromiseViolation("projection is odd, so the braid is not in the "
                           "commutator subgroup");
  CommutatorCandidate c = lift_projection_commutator(b);
  BraidWord pure = concat(b, inverse(c.assembled()));
  if (!word_to_permutation(project(pure)).is_identity())
    throw InvariantBreach("pure factor has a nontrivial projection");
  if (!braid_equal(b, concat(pure, c.assembled())))
    throw InvariantBreach("pure factorization does not reassemble the input");
  return {std::move(pure), std::move(c)};
}

namespace
{

bool inverse_match(std::vector<int> const &w, std::size_t from, std::size_t to,
                   std::size_t len)
{
  // w[to .. to + len) is the formal inverse of w[from .. from + len).
  for (std::size_t k = 0; k < len; ++k) {
    ops::tick();
    if (w[to + k] != -w[from + len - 1u - k])
      return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>>
commutator_split(std::vector<int> const &w, std::size_t start)
{
  std::size_t m = w.size() - start;
  if (m % 2u != 0u)
    return std::nullopt;
  std::size_t half = m / 2u;
  for (std::size_t a = 0; a <= half; ++a) {
    std::size_t b = half - a;
    if (inverse_match(w, start, start + half, a) &&
        inverse_match(w, start + a, start + half + a, b))
      return std::make_pair(a, b);
  }
  return std::nullopt;
}

enum class Family { relation, commutation, cancellation, insertion };

struct Move
{
  Family family;
  std::size_t pos;
  int letter = 0; // inserted g for insertion
};

std::vector<std::vector<Move>> enumerate_moves(BraidWord const &w)
{
  auto const &l = w.letters();
  int n = static_cast<int>(w.strands());
  std::vector<std::vector<Move>> out(4);
  for (std::size_t k = 0; k + 2u < l.size(); ++k) {
    ops::tick();
    int a = l[k], b = l[k + 1u];
    if (l[k + 2u] == a && (a > 0) == (b > 0) && std::abs(std::abs(a) - std::abs(b)) == 1)
      out[0].push_back({Family::relation, k});
  }
  for (std::size_t k = 0; k + 1u < l.size(); ++k) {
    ops::tick();
    int a = l[k], b = l[k + 1u];
    if (std::abs(std::abs(a) - std::abs(b)) >= 2)
      out[1].push_back({Family::commutation, k});
    if (a == -b)
      out[2].push_back({Family::cancellation, k});
  }
  for (std::size_t k = 0; k <= l.size(); ++k)
    for (int g = 1; g < n; ++g) {
      out[3].push_back({Family::insertion, k, g});
      out[3].push_back({Family::insertion, k, -g});
    }
  ops::tick(out[3].size());
  return out;
}

BraidWord apply(BraidWord const &w, Move const &m)
{
  std::vector<int> l = w.letters();
  auto at = l.begin() + static_cast<std::ptrdiff_t>(m.pos);
  switch (m.family) {
  case Family::relation: {
    int a = l[m.pos], b = l[m.pos + 1u];
    l[m.pos] = b;
    l[m.pos + 1u] = a;
    l[m.pos + 2u] = b;
    break;
  }
  case Family::commutation:
    std::swap(l[m.pos], l[m.pos + 1u]);
    break;
  case Family::cancellation:
    l.erase(at, at + 2);
    break;
  case Family::insertion:
    l.insert(at, {m.letter, -m.letter});
    break;
  }
  ops::tick(l.size());
  return BraidWord(w.strands(), std::move(l));
}

// Uniform draw from [0, bound) by rejection, independent of the standard
// library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound)
{
  std::uint64_t threshold = (0u - bound) % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold)
      return r % bound;
  }
}

// Shortest h, |h| < limit, with w = h [a, b] for nonempty a, b.
std::optional<std::size_t> shortest_prefix(BraidWord const &w, std::size_t limit)
{
  auto const &l = w.letters();
  for (std::size_t s = 0; s < limit && s + 2u <= l.size(); ++s) {
    auto split = commutator_split(l, s);
    if (split && split->first > 0u && split->second > 0u)
      return s;
  }
  return std::nullopt;
}

} // namespace

std::optional<CommutatorCandidate> literal_commutator(BraidWord const &w)
{
  auto split = commutator_split(w.letters(), 0u);
  if (!split)
    return std::nullopt;
  auto const &l = w.letters();
  auto a_end = l.begin() + static_cast<std::ptrdiff_t>(split->first);
  auto b_end = a_end + static_cast<std::ptrdiff_t>(split->second);
  return CommutatorCandidate{BraidWord(w.strands(), {l.begin(), a_end}),
                             BraidWord(w.strands(), {a_end, b_end})};
}

std::vector<std::vector<BraidWord>> single_moves(BraidWord const &w)
{
  std::vector<std::vector<BraidWord>> out;
  for (auto const &family : enumerate_moves(w)) {
    out.emplace_back();
    for (auto const &m : family)
      out.back().push_back(apply(w, m));
  }
  return out;
}

SearchTrace probabilistic_scpp_search(BraidWord const &b, unsigned budget,
                                      std::uint64_t seed)
{
  SearchTrace t;
  t.seed = seed;
  t.budget = budget;

  PureFactorization f = pure_braid_factorization(b);
  BraidWord pure = free_reduce(f.pure);
  if (braid_equal(pure, BraidWord(b.strands(), {})))
    pure = BraidWord(b.strands(), {});
  t.start = concat(pure, f.commutator.assembled());

  auto finish = [&](BraidWord const &w) {
    auto c = literal_commutator(w);
    if (!braid_equal(w, b))
      throw InvariantBreach("search reached a word not braid-equal to its input");
    t.success = true;
    t.result = std::move(c);
    t.milestones.push_back({w, t.steps, 0u});
    return t;
  };
  if (literal_commutator(t.start))
    return finish(t.start);

  std::mt19937_64 rng(seed);
  std::uint64_t length = std::max<std::uint64_t>(1u, b.size());
  std::uint64_t n_i = length + uniform_below(rng, 3u * length + 1u);
  std::size_t best_prefix = pure.size();
  BraidWord base = t.start;

  for (unsigned round = 0; round < budget; ++round) {
    if (round > 0u)
      n_i *= 2u;
    t.schedule.push_back(n_i);
    BraidWord w = base;
    std::uint64_t j = 0;
    while (j < n_i) {
      auto moves = enumerate_moves(w);
      std::vector<std::size_t> families;
      for (std::size_t k = 0; k < moves.size(); ++k)
        if (!moves[k].empty())
          families.push_back(k);
      auto const &family = moves[families[uniform_below(rng, families.size())]];
      w = apply(w, family[uniform_below(rng, family.size())]);
      ++t.steps;
      if (literal_commutator(w))
        return finish(w);
      if (auto h = shortest_prefix(w, best_prefix)) {
        best_prefix = *h;
        t.milestones.push_back({w, t.steps, *h});
        base = w;
        j = 0;
        continue;
      }
      ++j;
    }
  }
  return t;
}

std::string format_trace(SearchTrace const &t)
{
  std::ostringstream os;
  os << "seed " << t.seed << " rng " << SearchTrace::rng_name << " budget "
     << t.budget << '\n';
  os << format_braid_word(t.start) << " (0)\n";
  for (auto const &m : t.milestones)
    os << "-> " << format_braid_word(m.word) << " (" << m.step << ")\n";
  if (t.success && t.result)
    os << "success [" << format_braid_word(t.result->x) << "] ["
       << format_braid_word(t.result->y) << "] after " << t.steps
       << " steps\n";
  else
    os << "failure after " << t.steps << " steps\n";
  return os.str();
}

} // namespace scpp
