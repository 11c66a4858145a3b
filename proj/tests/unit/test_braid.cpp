#include <doctest.h>

#include <random>
#include <set>

#include "../oracles.hpp"
#include "scpp/braid.hpp"
#include "scpp/braid_scpp.hpp"
#include "scpp/errors.hpp"

using namespace scpp;

namespace
{

std::vector<unsigned> img(Permutation const &p)
{
  return {p.images().begin(), p.images().end()};
}

oracle::Pairs as_pairs(RSet const &r)
{
  auto v = r.pairs();
  return {v.begin(), v.end()};
}

RSet from_pairs(unsigned n, oracle::Pairs const &p)
{
  RSet r(n);
  for (auto [i, j] : p)
    r.insert(i, j);
  return r;
}

BraidWord bw(unsigned n, std::vector<int> l)
{
  return BraidWord(n, std::move(l));
}

} // namespace

TEST_CASE("braid word basics")
{
  CHECK_THROWS_AS(bw(1, {}), MalformedInput);
  CHECK_THROWS_AS(bw(3, {3}), MalformedInput);
  CHECK_THROWS_AS(bw(3, {0}), MalformedInput);
  auto w = bw(3, {1, 2, -1});
  CHECK(inverse(w).letters() == std::vector<int>{1, -2, -1});
  CHECK(free_reduce(bw(3, {1, 2, -2, -1, 2})).letters() == std::vector<int>{2});
  CHECK(commutator(bw(3, {1}), bw(3, {2})).letters() == std::vector<int>{1, 2, -1, -2});
  CHECK(exponent_sum(w) == 1);
  CHECK(project(w).letters() == std::vector<unsigned>{1, 2, 1});
  CHECK(project(bw(3, {})).empty());
  CHECK(lift_letters(GenWord(3, {2, 1})).letters() == std::vector<int>{2, 1});
}

TEST_CASE("projection is a homomorphism")
{
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    auto a = oracle::random_braid(rng, 4, 15), b = oracle::random_braid(rng, 4, 15);
    auto pa = word_to_permutation(project(bw(4, a)));
    auto pb = word_to_permutation(project(bw(4, b)));
    CHECK(word_to_permutation(project(concat(bw(4, a), bw(4, b)))) == compose(pa, pb));
  }
}

TEST_CASE("inversion sets")
{
  auto p = word_to_permutation(GenWord(3, {1, 2}));
  CHECK(as_pairs(r_set(p)) == oracle::Pairs{{1, 3}, {2, 3}});
  CHECK(r_set(Permutation(3)).size() == 0u);
  CHECK(as_pairs(r_set(reversal(3))) == oracle::Pairs{{1, 2}, {1, 3}, {2, 3}});
  for (auto const &q : oracle::all_permutations(5)) {
    auto perm = Permutation::from_images(q);
    CHECK(as_pairs(r_set(perm)) == oracle::inversions(q));
    CHECK(permutation_from_rset(r_set(perm)) == perm);
  }
  RSet bad(3);
  bad.insert(1, 3);
  CHECK_FALSE(permutation_from_rset(bad).has_value());
  CHECK_THROWS_AS(bad.insert(2, 2), MalformedInput);
}

TEST_CASE("meet examples")
{
  auto a = from_pairs(3, {{1, 3}, {2, 3}});
  auto b = from_pairs(3, {{1, 2}, {1, 3}});
  CHECK(meet(a, b).size() == 0u);
  CHECK(meet(a, a) == a);
  CHECK(meet(a, RSet(3)).size() == 0u);
}

TEST_CASE("meet is the greatest lower bound on S_3 and S_4")
{
  for (unsigned n : {3u, 4u}) {
    auto perms = oracle::all_permutations(n);
    for (auto const &p : perms)
      for (auto const &q : perms) {
        auto a = oracle::inversions(p), b = oracle::inversions(q);
        RSet m = meet(from_pairs(n, a), from_pairs(n, b));
        CHECK(as_pairs(m) == oracle::meet(n, a, b));
        CHECK(permutation_from_rset(m).has_value());
        CHECK(m.subset_of(from_pairs(n, a)));
        CHECK(m.subset_of(from_pairs(n, b)));
      }
  }
}

TEST_CASE("permutation braids")
{
  CHECK(lift_permutation(Permutation(4)).is_identity());
  auto c = word_to_permutation(GenWord(3, {2, 1}));
  CHECK(lift_permutation(c).canonical_word().letters() == std::vector<int>{2, 1});
  CHECK(lift_permutation(reversal(3)).canonical_word().letters() ==
        std::vector<int>{1, 2, 1});
  for (unsigned n = 2; n <= 5; ++n) {
    std::set<std::vector<int>> words;
    for (auto const &p : oracle::all_permutations(n)) {
      auto d = lift_permutation(Permutation::from_images(p));
      words.insert(d.canonical_word().letters());
      CHECK(img(word_to_permutation(project(d.canonical_word()))) == p);
      CHECK(d.canonical_word().size() == oracle::inversions(p).size());
    }
    std::size_t f = 1;
    for (unsigned k = 2; k <= n; ++k)
      f *= k;
    CHECK(words.size() == f);
  }
}

TEST_CASE("Garside element")
{
  CHECK(garside(3).canonical_word().letters() == std::vector<int>{1, 2, 1});
  CHECK(garside(2).canonical_word().letters() == std::vector<int>{1});
  for (unsigned n = 2; n <= 8; ++n) {
    CHECK(garside_formula_word(n).size() == n * (n - 1u) / 2u);
    CHECK(garside(n).permutation() == reversal(n));
    BraidWord omega = garside_formula_word(n);
    CHECK(oracle::braid_equal(n, omega.letters(), garside(n).canonical_word().letters()));
    for (int i = 1; i < static_cast<int>(n); ++i) {
      auto lhs = concat(omega, bw(n, {i}));
      auto rhs = concat(bw(n, {static_cast<int>(n) - i}), omega);
      CHECK(braid_equal(lhs, rhs));
    }
  }
}

TEST_CASE("normal form examples")
{
  auto f = rgnf(bw(3, {1, 2, -1, -2}));
  REQUIRE(f.factors.size() == 2u);
  CHECK(f.factors[0].canonical_word().letters() == std::vector<int>{1, 2});
  CHECK(f.factors[1].canonical_word().letters() == std::vector<int>{2});
  CHECK(f.omega_power == -1);
  CHECK(format_normal_form(f) == "[1 2][2] OMEGA^-1");
  CHECK(format_normal_form(rgnf(bw(3, {}))) == "OMEGA^0");
  CHECK(format_normal_form(rgnf(bw(3, {1, 2, 1}))) == "OMEGA^1");
  CHECK(format_normal_form(rgnf(bw(3, {-1}))) == "[2 1] OMEGA^-1");
  CHECK(oracle::braid_equal(3, reassemble(rgnf(bw(3, {-1}))).letters(), {-1}));
}

TEST_CASE("normal form reassembles to the input and has valid factors")
{
  std::mt19937_64 rng(2);
  for (int t = 0; t < 1500; ++t) {
    unsigned n = 2u + static_cast<unsigned>(rng() % 4u);
    auto w = oracle::random_braid(rng, n, 25);
    auto f = rgnf(bw(n, w));
    CHECK(oracle::braid_equal(n, reassemble(f).letters(), w));
    CHECK(exponent_sum(reassemble(f)) == exponent_sum(bw(n, w)));
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      CHECK_FALSE(f.factors[k].is_identity());
      CHECK(f.factors[k].permutation() != reversal(n));
      if (k + 1u < f.factors.size())
        CHECK(max_tail(f.factors[k].permutation(), f.factors[k + 1u].permutation())
                  .is_identity());
    }
    CHECK(parse_normal_form(n, format_normal_form(f)) == f);
  }
}

TEST_CASE("word problem agrees with the free group action")
{
  std::mt19937_64 rng(9);
  for (int t = 0; t < 1500; ++t) {
    unsigned n = 2u + static_cast<unsigned>(rng() % 3u);
    auto a = oracle::random_braid(rng, n, 8), b = oracle::random_braid(rng, n, 8);
    CHECK(braid_equal(bw(n, a), bw(n, b)) == oracle::braid_equal(n, a, b));
  }
  CHECK(braid_equal(bw(3, {1, 2, 1}), bw(3, {2, 1, 2})));
  CHECK(braid_equal(bw(3, {1, -1}), bw(3, {})));
  CHECK_FALSE(braid_equal(bw(3, {1}), bw(3, {2})));
}

TEST_CASE("single moves leave the normal form unchanged")
{
  std::mt19937_64 rng(12);
  for (int t = 0; t < 1000; ++t) {
    unsigned n = 3u + static_cast<unsigned>(rng() % 2u);
    auto w = bw(n, oracle::random_braid(rng, n, 30));
    auto f = rgnf(w);
    for (auto const &family : single_moves(w)) {
      if (family.empty())
        continue;
      CHECK(rgnf(family[rng() % family.size()]) == f);
    }
  }
}

TEST_CASE("braid word text formats")
{
  CHECK(format_braid_word(parse_braid_word(3, "1 2 -1 -2")) == "1 2 -1 -2");
  CHECK(parse_braid_word(3, "e").empty());
  CHECK(format_braid_word(bw(3, {})) == "e");
  CHECK_THROWS_AS(parse_braid_word(3, "1 3"), MalformedInput);
  CHECK_THROWS_AS(parse_braid_word(3, "1 0"), MalformedInput);
  CHECK_THROWS_AS(parse_braid_word(3, "1 a"), MalformedInput);
  CHECK_THROWS_AS(parse_normal_form(3, "[1 2 1] OMEGA^0"), MalformedInput);
  CHECK_THROWS_AS(parse_normal_form(3, "[1 2]"), MalformedInput);
}
