#ifndef SCPP_TESTS_ORACLES_HPP
#define SCPP_TESTS_ORACLES_HPP

// Brute-force reference implementations on raw vectors. None of them calls
// into the library.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle
{

using Images = std::vector<unsigned>; // images[i-1] = p(i)

inline Images identity(unsigned n)
{
  Images p(n);
  std::iota(p.begin(), p.end(), 1u);
  return p;
}

// p o q
inline Images compose(Images const &p, Images const &q)
{
  Images r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    r[i] = p[q[i] - 1u];
  return r;
}

inline Images inverse(Images const &p)
{
  Images r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[p[i] - 1u] = static_cast<unsigned>(i + 1u);
  return r;
}

// tau_{x1} o ... o tau_{xk}
inline Images eval_word(unsigned n, std::vector<unsigned> const &letters)
{
  Images p = identity(n);
  for (unsigned x : letters)
    std::swap(p[x - 1u], p[x]);
  return p;
}

// A word evaluating to p, by bubble sort.
inline std::vector<unsigned> word_of(Images p)
{
  std::vector<unsigned> swaps;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1u < p.size(); ++i)
      if (p[i] > p[i + 1u]) {
        std::swap(p[i], p[i + 1u]);
        swaps.push_back(static_cast<unsigned>(i + 1u));
        again = true;
      }
  }
  return {swaps.rbegin(), swaps.rend()};
}

inline Images eval_cycle(unsigned n, std::vector<unsigned> const &c)
{
  Images p = identity(n);
  for (std::size_t k = 0; k < c.size(); ++k)
    p[c[k] - 1u] = c[(k + 1u) % c.size()];
  return p;
}

// c_1 o c_2 o ... o c_m
inline Images eval_cycles(unsigned n, std::vector<std::vector<unsigned>> const &cs)
{
  Images p = identity(n);
  for (auto const &c : cs)
    p = compose(p, eval_cycle(n, c));
  return p;
}

inline bool is_ncycle(Images const &p)
{
  std::size_t len = 0;
  unsigned i = 1;
  do {
    i = p[i - 1u];
    ++len;
  } while (i != 1u && len <= p.size());
  return len == p.size();
}

inline bool is_even(Images const &p)
{
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      inversions += p[j] < p[i];
  return inversions % 2u == 0u;
}

inline std::vector<Images> all_permutations(unsigned n)
{
  std::vector<Images> out;
  Images p = identity(n);
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<Images> alternating_group(unsigned n)
{
  std::vector<Images> out;
  for (auto const &p : all_permutations(n))
    if (is_even(p))
      out.push_back(p);
  return out;
}

// x y x^-1 y^-1
inline Images commutator(Images const &x, Images const &y)
{
  return compose(compose(x, y), compose(inverse(x), inverse(y)));
}

using Pairs = std::set<std::pair<unsigned, unsigned>>;

inline Pairs inversions(Images const &p)
{
  Pairs r;
  for (unsigned i = 1; i <= p.size(); ++i)
    for (unsigned j = i + 1; j <= p.size(); ++j)
      if (p[j - 1u] < p[i - 1u])
        r.insert({i, j});
  return r;
}

// Largest inversion set of a permutation inside a and b, by enumeration.
inline Pairs meet(unsigned n, Pairs const &a, Pairs const &b)
{
  Pairs best;
  for (auto const &p : all_permutations(n)) {
    Pairs r = inversions(p);
    bool inside = std::all_of(r.begin(), r.end(), [&](auto const &x) {
      return a.contains(x) && b.contains(x);
    });
    if (inside && r.size() > best.size())
      best = r;
  }
  return best;
}

// ShortLex least word (left to right comparison) for every permutation,
// by breadth-first enumeration of words in ShortLex order.
inline std::map<Images, std::vector<unsigned>> shortlex_words(unsigned n)
{
  std::map<Images, std::vector<unsigned>> best;
  std::vector<std::vector<unsigned>> layer{{}};
  best[identity(n)] = {};
  while (!layer.empty()) {
    std::vector<std::vector<unsigned>> next;
    for (auto const &w : layer)
      for (unsigned g = 1; g < n; ++g) {
        auto v = w;
        v.push_back(g);
        Images p = eval_word(n, v);
        if (!best.contains(p)) {
          best[p] = v;
          next.push_back(v);
        }
      }
    layer = std::move(next);
  }
  return best;
}

// Free group words over +-1..n, freely reduced.
using FreeWord = std::vector<int>;

inline FreeWord free_reduce(FreeWord const &w)
{
  FreeWord s;
  for (int x : w) {
    if (!s.empty() && s.back() == -x)
      s.pop_back();
    else
      s.push_back(x);
  }
  return s;
}

inline FreeWord free_inverse(FreeWord const &w)
{
  FreeWord r(w.rbegin(), w.rend());
  for (auto &x : r)
    x = -x;
  return r;
}

// Images of the free generators x_1..x_n under the Artin action of a braid
// word. Two braid words are equal in B_n exactly when these agree.
inline std::vector<FreeWord> artin_action(unsigned n, std::vector<int> const &braid)
{
  std::vector<FreeWord> img(n);
  for (unsigned k = 0; k < n; ++k)
    img[k] = {static_cast<int>(k + 1u)};
  for (auto it = braid.rbegin(); it != braid.rend(); ++it) {
    int letter = *it;
    int i = std::abs(letter);
    auto image = [&](int g) {
      int a = std::abs(g);
      FreeWord r;
      if (letter > 0)
        r = a == i ? FreeWord{i, i + 1, -i} : a == i + 1 ? FreeWord{i} : FreeWord{a};
      else
        r = a == i ? FreeWord{i + 1} : a == i + 1 ? FreeWord{-i - 1, i, i + 1} : FreeWord{a};
      return g > 0 ? r : free_inverse(r);
    };
    for (auto &w : img) {
      FreeWord nw;
      for (int g : w) {
        FreeWord s = image(g);
        nw.insert(nw.end(), s.begin(), s.end());
      }
      w = free_reduce(nw);
    }
  }
  return img;
}

inline bool braid_equal(unsigned n, std::vector<int> const &a, std::vector<int> const &b)
{
  return artin_action(n, a) == artin_action(n, b);
}

inline std::vector<int> random_braid(std::mt19937_64 &rng, unsigned n, std::size_t max_len)
{
  std::size_t len = rng() % (max_len + 1u);
  std::vector<int> w(len);
  for (auto &x : w) {
    int g = 1 + static_cast<int>(rng() % (n - 1u));
    x = rng() % 2u ? g : -g;
  }
  return w;
}

inline std::vector<unsigned> random_word(std::mt19937_64 &rng, unsigned n, std::size_t len)
{
  std::vector<unsigned> w(len);
  for (auto &x : w)
    x = 1u + static_cast<unsigned>(rng() % (n - 1u));
  return w;
}

inline std::vector<int> braid_inverse(std::vector<int> const &w)
{
  return free_inverse(w);
}

inline std::vector<int> braid_commutator(std::vector<int> const &a, std::vector<int> const &b)
{
  std::vector<int> r = a;
  r.insert(r.end(), b.begin(), b.end());
  auto ai = braid_inverse(a), bi = braid_inverse(b);
  r.insert(r.end(), ai.begin(), ai.end());
  r.insert(r.end(), bi.begin(), bi.end());
  return r;
}

// Positive word crossing strands per a reduced word of p; every
// permutation braid of B_n, once each.
inline std::vector<std::vector<int>> permutation_braid_words(unsigned n)
{
  std::vector<std::vector<int>> out;
  for (auto const &[p, w] : shortlex_words(n))
    out.emplace_back(w.begin(), w.end());
  return out;
}

} // namespace oracle

#endif // SCPP_TESTS_ORACLES_HPP
