#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "scpp/errors.hpp"
#include "scpp/rewriting.hpp"

using namespace scpp;

namespace
{

std::size_t factorial(unsigned n)
{
  return n <= 1u ? 1u : n * factorial(n - 1u);
}

} // namespace

TEST_CASE("shortlex comparison")
{
  auto ltr = OrderedAlphabet::sn(4);
  auto rtl = OrderedAlphabet::sn(4, TieBreak::right_to_left);
  CHECK(shortlex_compare({1}, {1, 1}, ltr) == Order::less);
  CHECK(shortlex_compare({2, 1}, {1, 2}, ltr) == Order::greater);
  CHECK(shortlex_compare({2, 1}, {1, 2}, rtl) == Order::less);
  CHECK(shortlex_compare({3, 1}, {3, 1}, ltr) == Order::equal);
  OrderedAlphabet custom({3, 1, 2});
  CHECK(custom.rank(3) == 0u);
  CHECK(shortlex_compare({3}, {1}, custom) == Order::less);
  CHECK_THROWS_AS(OrderedAlphabet({1, 1}), MalformedInput);
  CHECK_THROWS_AS(custom.rank(4), MalformedInput);
}

TEST_CASE("rules must decrease")
{
  auto a = OrderedAlphabet::sn(3);
  CHECK_THROWS_AS(RewriteSystem(a, {{{1}, {1, 1}}}), MalformedInput);
  CHECK_THROWS_AS(RewriteSystem(a, {{{1, 2, 1}, {2, 1, 2}}}), MalformedInput);
  CHECK_THROWS_AS(RewriteSystem(a, {{{5}, {}}}), MalformedInput);
  RewriteSystem s(a, {{{2, 1, 2}, {1, 2, 1}}, {{1, 1}, {}}});
  CHECK(s.reduce({2, 1, 2, 2}) == Word{2, 1});
}

TEST_CASE("presentation orientation follows the tie break")
{
  auto l = sn_presentation(4);
  auto r = sn_presentation(4, TieBreak::right_to_left);
  auto has = [](RewriteSystem const &s, Rule const &rule) {
    return std::find(s.rules().begin(), s.rules().end(), rule) != s.rules().end();
  };
  CHECK(has(l, {{3, 1}, {1, 3}}));
  CHECK(has(r, {{1, 3}, {3, 1}}));
  CHECK(has(l, {{2, 1, 2}, {1, 2, 1}}));
  CHECK(has(l, {{1, 1}, {}}));
  CHECK_THROWS_AS(sn_presentation(1), MalformedInput);
}

TEST_CASE("completion terminates with n! irreducible words")
{
  std::size_t const expected_rules[] = {0, 0, 1, 3, 7, 13, 21, 31, 43};
  for (auto tb : {TieBreak::left_to_right, TieBreak::right_to_left})
    for (unsigned n = 2; n <= 6; ++n) {
      auto p = sn_presentation(n, tb);
      auto s = knuth_bendix_complete(p.alphabet(), p.rules());
      CHECK(is_confluent(s));
      CHECK(count_irreducible(s, factorial(n) + 5u) == factorial(n));
      CHECK(s.rules().size() == expected_rules[n]);
    }
}

TEST_CASE("normal forms agree with breadth-first shortlex words")
{
  for (unsigned n = 2; n <= 5; ++n) {
    auto s = completed_sn(n);
    for (auto const &[p, w] : oracle::shortlex_words(n)) {
      CHECK(s->is_irreducible(w));
      CHECK(shortlex_reduced_word(Permutation::from_images(p)).letters() == w);
    }
  }
}

TEST_CASE("reduce is idempotent and respects the relations")
{
  std::mt19937_64 rng(21);
  for (int t = 0; t < 2000; ++t) {
    unsigned n = 2u + static_cast<unsigned>(rng() % 5u);
    auto s = completed_sn(n);
    auto w = oracle::random_word(rng, n, rng() % 25u);
    Word r = s->reduce(w);
    CHECK(s->reduce(r) == r);
    CHECK(oracle::eval_word(n, r) == oracle::eval_word(n, w));
    auto idx = rng() % (w.size() + 1u);
    Word v = w;
    unsigned g = 1u + static_cast<unsigned>(rng() % (n - 1u));
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(idx), {g, g});
    CHECK(s->reduce(v) == r);
  }
}

TEST_CASE("canonical form is the direct construction above the completion limit")
{
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    unsigned n = completion_degree_limit + 1u + static_cast<unsigned>(rng() % 6u);
    auto w = oracle::random_word(rng, n, rng() % 40u);
    GenWord g(n, w);
    GenWord c = canonical_form_sn(g);
    CHECK(oracle::eval_word(n, c.letters()) == oracle::eval_word(n, w));
    CHECK(canonical_form_sn(c) == c);
  }
  for (unsigned n = 2; n <= 7; ++n)
    for (auto const &p : oracle::all_permutations(n)) {
      auto perm = Permutation::from_images(p);
      for (auto tb : {TieBreak::left_to_right, TieBreak::right_to_left}) {
        GenWord direct = shortlex_reduced_word(perm, tb);
        CHECK(canonical_form_sn(direct, tb) == direct);
      }
    }
}

TEST_CASE("completion of a non-group system and divergence cap")
{
  OrderedAlphabet a({1, 2});
  auto s = knuth_bendix_complete(a, {{{2, 1}, {1, 2}}});
  CHECK(is_confluent(s));
  CHECK(s.reduce({2, 2, 1, 1}) == Word{1, 1, 2, 2});
  // a b a -> b a b is never finitely completed under this order.
  OrderedAlphabet ab({1, 2});
  CHECK_THROWS_AS(knuth_bendix_complete(ab, {{{2, 1, 2}, {1, 2, 1}}}, 20),
                  CompletionDiverged);
}

TEST_CASE("rule text format")
{
  auto rules = parse_rules("# comment\n1 1 -> e\n2 1 2 -> 1 2 1\n\n");
  REQUIRE(rules.size() == 2u);
  CHECK(rules[0] == Rule{{1, 1}, {}});
  CHECK(format_rules(rules) == "1 1 -> e\n2 1 2 -> 1 2 1\n");
  CHECK(parse_rules(format_rules(rules)) == rules);
  CHECK_THROWS_AS(parse_rules("1 2 1"), MalformedInput);
  CHECK_THROWS_AS(parse_rules("1 x -> 2"), MalformedInput);
  CHECK(format_word({}) == "e");
}
