#include "scpp/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "scpp/errors.hpp"
#include "scpp/op_counter.hpp"
#include "scpp/rewriting.hpp"
#include "scpp/wire.hpp"

namespace scpp
{

BraidWord::BraidWord(unsigned strands, std::vector<int> letters)
: strands_(strands),
  letters_(std::move(letters))
{
  if (strands_ < 2u)
    throw MalformedInput("a braid needs at least 2 strands");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    int x = letters_[i];
    if (x == 0 || static_cast<unsigned>(std::abs(x)) >= strands_)
      throw MalformedInput("letter " + std::to_string(x) + " at position " +
                           std::to_string(i + 1u) + " is not a generator of B_" +
                           std::to_string(strands_));
  }
}

namespace
{

void require_same_strands(unsigned a, unsigned b)
{
  if (a != b)
    throw MalformedInput("strand count mismatch: " + std::to_string(a) +
                         " vs " + std::to_string(b));
}

} // namespace

BraidWord concat(BraidWord const &a, BraidWord const &b)
{
  require_same_strands(a.strands(), b.strands());
  std::vector<int> letters(a.letters());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(BraidWord const &b)
{
  std::vector<int> letters;
  letters.reserve(b.size());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it)
    letters.push_back(-*it);
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord free_reduce(BraidWord const &b)
{
  std::vector<int> stack;
  for (int x : b.letters()) {
    ops::tick();
    if (!stack.empty() && stack.back() == -x)
      stack.pop_back();
    else
      stack.push_back(x);
  }
  return BraidWord(b.strands(), std::move(stack));
}

BraidWord commutator(BraidWord const &a, BraidWord const &b)
{
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

int exponent_sum(BraidWord const &b)
{
  int s = 0;
  for (int x : b.letters())
    s += x > 0 ? 1 : -1;
  return s;
}

GenWord project(BraidWord const &b)
{
  std::vector<unsigned> letters;
  letters.reserve(b.size());
  for (int x : b.letters())
    letters.push_back(static_cast<unsigned>(std::abs(x)));
  ops::tick(b.size());
  return GenWord(b.strands(), std::move(letters));
}

BraidWord lift_letters(GenWord const &w)
{
  std::vector<int> letters(w.letters().begin(), w.letters().end());
  return BraidWord(w.degree() < 2u ? 2u : w.degree(), std::move(letters));
}

RSet::RSet(unsigned n)
: n_(n),
  bits_(static_cast<std::size_t>(n) * n, false)
{}

void RSet::insert(unsigned i, unsigned j)
{
  if (i < 1u || i >= j || j > n_)
    throw MalformedInput("pair (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not 1 <= i < j <= " + std::to_string(n_));
  if (!bits_[index(i, j)]) {
    bits_[index(i, j)] = true;
    ++count_;
  }
}

std::vector<std::pair<unsigned, unsigned>> RSet::pairs() const
{
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned i = 1u; i <= n_; ++i)
    for (unsigned j = i + 1u; j <= n_; ++j)
      if (contains(i, j))
        out.emplace_back(i, j);
  return out;
}

bool RSet::subset_of(RSet const &other) const
{
  if (n_ != other.n_)
    return false;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] && !other.bits_[k])
      return false;
  return true;
}

RSet r_set(Permutation const &p)
{
  unsigned n = p.degree();
  RSet r(n);
  for (unsigned i = 1u; i <= n; ++i)
    for (unsigned j = i + 1u; j <= n; ++j) {
      ops::tick();
      if (p(j) < p(i))
        r.insert(i, j);
    }
  return r;
}

RSet meet(RSet const &a, RSet const &b)
{
  if (a.degree() != b.degree())
    throw MalformedInput("R-sets of different degree");
  unsigned n = a.degree();
  RSet m(n);
  for (unsigned gap = 1u; gap < n; ++gap) {
    for (unsigned i = 1u; i + gap <= n; ++i) {
      unsigned k = i + gap;
      ops::tick();
      if (!a.contains(i, k) || !b.contains(i, k))
        continue;
      bool ok = true;
      for (unsigned j = i + 1u; j < k && ok; ++j) {
        ops::tick();
        ok = m.contains(i, j) || m.contains(j, k);
      }
      if (ok)
        m.insert(i, k);
    }
  }
  return m;
}

std::optional<Permutation> permutation_from_rset(RSet const &r)
{
  unsigned n = r.degree();
  if (n == 0u)
    return std::nullopt;
  // p(i) - 1 counts the points whose image lies below p(i).
  std::vector<unsigned> images(n);
  std::vector<bool> used(n + 1u, false);
  for (unsigned i = 1u; i <= n; ++i) {
    unsigned below = 0u;
    for (unsigned j = 1u; j <= n; ++j) {
      ops::tick();
      if (j > i && r.contains(i, j))
        ++below;
      if (j < i && !r.contains(j, i))
        ++below;
    }
    if (used[below + 1u])
      return std::nullopt;
    used[below + 1u] = true;
    images[i - 1u] = below + 1u;
  }
  auto p = Permutation::from_images(std::move(images));
  if (r_set(p) != r)
    return std::nullopt;
  return p;
}

namespace
{

BraidWord canonical_braid_word(Permutation const &p)
{
  if (p.degree() < 2u)
    return BraidWord(2u, {});
  GenWord w = canonical_form_sn(shortlex_reduced_word(p));
  return lift_letters(w);
}

} // namespace

PermutationBraid::PermutationBraid(Permutation p)
: perm_(std::move(p)),
  word_(canonical_braid_word(perm_))
{}

PermutationBraid lift_permutation(Permutation const &p)
{
  return PermutationBraid(p);
}

PermutationBraid garside(unsigned n)
{
  if (n < 2u)
    throw MalformedInput("Omega needs at least 2 strands");
  return PermutationBraid(reversal(n));
}

BraidWord garside_formula_word(unsigned n)
{
  if (n < 2u)
    throw MalformedInput("Omega needs at least 2 strands");
  std::vector<int> letters;
  for (unsigned top = n - 1u; top >= 1u; --top)
    for (unsigned i = 1u; i <= top; ++i)
      letters.push_back(static_cast<int>(i));
  return BraidWord(n, std::move(letters));
}

Permutation max_tail(Permutation const &a, Permutation const &b)
{
  auto complement = compose(reversal(b.degree()), invert(b));
  auto t = permutation_from_rset(meet(r_set(a), r_set(complement)));
  if (!t)
    throw InvariantBreach("meet of two inversion sets is not an inversion set");
  return *t;
}

namespace
{

// Word for the permutation braid sigma_i^-1 Omega, cached per (n, i).
std::vector<unsigned> const &omega_cofactor(unsigned n, unsigned i)
{
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, i);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<unsigned> tau(n);
    for (unsigned k = 0u; k < n; ++k)
      tau[k] = k + 1u;
    std::swap(tau[i - 1u], tau[i]);
    auto p = compose(Permutation::from_images(std::move(tau)), reversal(n));
    it = cache.emplace(key, shortlex_reduced_word(p).letters()).first;
  }
  return it->second;
}

// Right to left, the longest suffix with no two strands crossing twice.
std::vector<Permutation> factor_positive(unsigned n,
                                         std::vector<unsigned> const &letters)
{
  std::vector<Permutation> reversed_factors;
  std::vector<unsigned> images(n), inv(n);
  auto reset = [&] {
    for (unsigned k = 0u; k < n; ++k)
      images[k] = inv[k] = k + 1u;
  };
  reset();
  std::size_t current = 0;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    unsigned i = *it;
    ops::tick();
    // tau_i o c is longer than c exactly when c^-1(i) < c^-1(i+1).
    if (inv[i - 1u] > inv[i]) {
      reversed_factors.push_back(Permutation::from_images(images));
      reset();
      current = 0;
    }
    std::swap(inv[i - 1u], inv[i]);
    images[inv[i - 1u] - 1u] = i;
    images[inv[i] - 1u] = i + 1u;
    ++current;
  }
  if (current > 0u)
    reversed_factors.push_back(Permutation::from_images(images));
  return {reversed_factors.rbegin(), reversed_factors.rend()};
}

// Makes (a, b) right-weighted. Returns true when something moved.
bool slide(Permutation &a, Permutation &b)
{
  auto t = max_tail(a, b);
  if (t.is_identity())
    return false;
  a = compose(a, invert(t));
  b = compose(t, b);
  return true;
}

} // namespace

GreedyNormalForm rgnf(BraidWord const &b)
{
  unsigned n = b.strands();
  // Write sigma_i^-1 = (sigma_i^-1 Omega) Omega^-1 and push every Omega^-1
  // to the right end; Omega^-1 y = flip(y) Omega^-1 with flip(i) = n - i.
  std::vector<unsigned> positive;
  long long d = 0;
  for (int x : b.letters()) {
    ops::tick();
    unsigned i = static_cast<unsigned>(std::abs(x));
    if (d % 2 != 0)
      i = n - i;
    if (x > 0) {
      positive.push_back(i);
    } else {
      auto const &q = omega_cofactor(n, i);
      positive.insert(positive.end(), q.begin(), q.end());
      ops::tick(q.size());
      ++d;
    }
  }

  auto factors = factor_positive(n, positive);
  // Prepending one factor to a right-weighted sequence only needs one left
  // to right sweep; the outer loop is a safety net.
  std::deque<Permutation> nf;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    nf.push_front(*it);
    for (std::size_t k = 0; k + 1u < nf.size(); ++k)
      if (!slide(nf[k], nf[k + 1u]))
        break;
  }
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k + 1u < nf.size(); ++k)
      moved = slide(nf[k], nf[k + 1u]) || moved;
  }

  GreedyNormalForm out;
  out.strands = n;
  out.omega_power = -d;
  Permutation omega = reversal(n);
  while (!nf.empty() && nf.back() == omega) {
    nf.pop_back();
    ++out.omega_power;
  }
  for (auto &f : nf) {
    if (f.is_identity())
      continue;
    if (f == omega)
      throw InvariantBreach("Omega factor left inside the normal form");
    out.factors.emplace_back(std::move(f));
  }
  // Identity factors only ever collect on the left.
  return out;
}

BraidWord reassemble(GreedyNormalForm const &f)
{
  std::vector<int> letters;
  for (auto const &factor : f.factors)
    letters.insert(letters.end(), factor.canonical_word().letters().begin(),
                   factor.canonical_word().letters().end());
  BraidWord omega = garside(f.strands).canonical_word();
  BraidWord piece = f.omega_power >= 0 ? omega : inverse(omega);
  for (long long k = 0; k < std::llabs(f.omega_power); ++k)
    letters.insert(letters.end(), piece.letters().begin(), piece.letters().end());
  return BraidWord(f.strands, std::move(letters));
}

bool braid_equal(BraidWord const &a, BraidWord const &b)
{
  require_same_strands(a.strands(), b.strands());
  if (exponent_sum(a) != exponent_sum(b))
    return false;
  return rgnf(a) == rgnf(b);
}

BraidWord parse_braid_word(unsigned strands, std::string_view text)
{
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    return BraidWord(strands, {});
  auto last = text.find_last_not_of(" \t\r\n");
  if (text.substr(first, last - first + 1u) == "e")
    return BraidWord(strands, {});
  std::vector<int> letters;
  auto values = parse_integers(text);
  for (std::size_t k = 0; k < values.size(); ++k) {
    long long v = values[k];
    if (v == 0 || std::llabs(v) >= static_cast<long long>(strands))
      throw MalformedInput("token " + std::to_string(k + 1u) + " ('" +
                           std::to_string(v) + "') is not a generator of B_" +
                           std::to_string(strands));
    letters.push_back(static_cast<int>(v));
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_braid_word(BraidWord const &b)
{
  if (b.empty())
    return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < b.size(); ++i)
    os << (i ? " " : "") << b.letters()[i];
  return os.str();
}

std::string format_normal_form(GreedyNormalForm const &f)
{
  std::ostringstream os;
  for (auto const &factor : f.factors)
    os << '[' << format_braid_word(factor.canonical_word()) << ']';
  if (!f.factors.empty())
    os << ' ';
  os << "OMEGA^" << f.omega_power;
  return os.str();
}

GreedyNormalForm parse_normal_form(unsigned strands, std::string_view text)
{
  GreedyNormalForm f;
  f.strands = strands;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
  };
  skip_space();
  while (pos < text.size() && text[pos] == '[') {
    auto close = text.find(']', pos);
    if (close == std::string_view::npos)
      throw MalformedInput("character " + std::to_string(pos + 1u) +
                           ": unterminated factor");
    auto word = parse_braid_word(strands, text.substr(pos + 1u, close - pos - 1u));
    for (int x : word.letters())
      if (x < 0)
        throw MalformedInput("character " + std::to_string(pos + 1u) +
                             ": factor is not a positive word");
    auto p = word_to_permutation(project(word));
    if (r_set(p).size() != word.size())
      throw MalformedInput("character " + std::to_string(pos + 1u) +
                           ": factor has two strands crossing twice");
    f.factors.emplace_back(std::move(p));
    pos = close + 1u;
    skip_space();
  }
  std::string_view const tag = "OMEGA^";
  if (text.substr(pos, tag.size()) != tag)
    throw MalformedInput("character " + std::to_string(pos + 1u) +
                         ": expected OMEGA^p");
  pos += tag.size();
  auto rest = text.substr(pos);
  auto values = parse_integers(rest);
  if (values.size() != 1u)
    throw MalformedInput("character " + std::to_string(pos + 1u) +
                         ": expected one integer exponent");
  f.omega_power = values.front();
  Permutation const omega = reversal(strands);
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    Permutation const &p = f.factors[k].permutation();
    if (p.is_identity() || p == omega)
      throw MalformedInput("factor " + std::to_string(k + 1u) +
                           " is the identity or Omega");
    if (k + 1u < f.factors.size() &&
        !max_tail(p, f.factors[k + 1u].permutation()).is_identity())
      throw MalformedInput("factors " + std::to_string(k + 1u) + " and " +
                           std::to_string(k + 2u) + " are not right-greedy");
  }
  return f;
}

} // namespace scpp
