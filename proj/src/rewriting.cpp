#include "scpp/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "scpp/errors.hpp"
#include "scpp/op_counter.hpp"
#include "scpp/wire.hpp"

namespace scpp
{

namespace
{

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

bool occurs_at(Word const &w, std::size_t pos, Word const &pattern)
{
  if (pos + pattern.size() > w.size())
    return false;
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    ops::tick();
    if (w[pos + k] != pattern[k])
      return false;
  }
  return true;
}

Word splice(Word const &w, std::size_t pos, std::size_t len, Word const &with)
{
  Word out;
  out.reserve(w.size() - len + with.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), with.begin(), with.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len),
             w.end());
  ops::tick(out.size());
  return out;
}

Word concat_words(Word a, Word const &b)
{
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

} // namespace

OrderedAlphabet::OrderedAlphabet(std::vector<unsigned> symbols,
                                 TieBreak tie_break)
: symbols_(std::move(symbols)),
  tie_break_(tie_break)
{
  unsigned largest = 0u;
  for (unsigned s : symbols_)
    largest = std::max(largest, s);
  rank_.assign(static_cast<std::size_t>(largest) + 1u, npos);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (rank_[symbols_[i]] != npos)
      throw MalformedInput("alphabet repeats symbol " +
                           std::to_string(symbols_[i]));
    rank_[symbols_[i]] = i;
  }
}

OrderedAlphabet OrderedAlphabet::sn(unsigned n, TieBreak tie_break)
{
  std::vector<unsigned> symbols;
  for (unsigned i = 1u; i < n; ++i)
    symbols.push_back(i);
  return OrderedAlphabet(std::move(symbols), tie_break);
}

bool OrderedAlphabet::contains(unsigned s) const noexcept
{
  return s < rank_.size() && rank_[s] != npos;
}

std::size_t OrderedAlphabet::rank(unsigned s) const
{
  if (!contains(s))
    throw MalformedInput("symbol " + std::to_string(s) +
                         " is not in the alphabet");
  return rank_[s];
}

Order shortlex_compare(Word const &u, Word const &v, OrderedAlphabet const &a)
{
  for (unsigned s : u)
    a.rank(s);
  for (unsigned s : v)
    a.rank(s);
  if (u.size() != v.size())
    return u.size() < v.size() ? Order::less : Order::greater;
  std::size_t const len = u.size();
  for (std::size_t step = 0; step < len; ++step) {
    std::size_t k =
        a.tie_break() == TieBreak::left_to_right ? step : len - 1u - step;
    ops::tick();
    if (u[k] != v[k])
      return a.rank(u[k]) < a.rank(v[k]) ? Order::less : Order::greater;
  }
  return Order::equal;
}

RewriteSystem::RewriteSystem(OrderedAlphabet alphabet, std::vector<Rule> rules)
: alphabet_(std::move(alphabet)),
  rules_(std::move(rules))
{
  by_first_.assign(alphabet_.symbols().size(), {});
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    auto const &r = rules_[i];
    if (r.lhs.empty())
      throw MalformedInput("rule " + std::to_string(i + 1u) +
                           " has an empty left-hand side");
    if (shortlex_compare(r.rhs, r.lhs, alphabet_) != Order::less)
      throw MalformedInput("rule " + std::to_string(i + 1u) +
                           " is not ShortLex decreasing");
    by_first_[alphabet_.rank(r.lhs.front())].push_back(i);
    max_lhs_ = std::max(max_lhs_, r.lhs.size());
  }
  for (auto &group : by_first_) {
    std::stable_sort(group.begin(), group.end(),
                     [this](std::size_t x, std::size_t y) {
                       auto c = shortlex_compare(rules_[x].lhs, rules_[y].lhs,
                                                 alphabet_);
                       if (c != Order::equal)
                         return c == Order::less;
                       return shortlex_compare(rules_[x].rhs, rules_[y].rhs,
                                               alphabet_) == Order::less;
                     });
  }
}

Word RewriteSystem::reduce(Word w) const
{
  for (unsigned s : w)
    alphabet_.rank(s);
  std::size_t pos = 0;
  while (pos < w.size()) {
    ops::tick();
    Rule const *hit = nullptr;
    for (std::size_t idx : by_first_[alphabet_.rank(w[pos])]) {
      if (occurs_at(w, pos, rules_[idx].lhs)) {
        hit = &rules_[idx];
        break;
      }
    }
    if (!hit) {
      ++pos;
      continue;
    }
    w = splice(w, pos, hit->lhs.size(), hit->rhs);
    // No match started left of pos before; only ones overlapping the
    // replaced span can have appeared.
    pos = pos + 1u >= max_lhs_ ? pos + 1u - max_lhs_ : 0u;
  }
  return w;
}

bool RewriteSystem::is_irreducible(Word const &w) const
{
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (!alphabet_.contains(w[pos]))
      return false;
    for (std::size_t idx : by_first_[alphabet_.rank(w[pos])])
      if (occurs_at(w, pos, rules_[idx].lhs))
        return false;
  }
  return true;
}

RewriteSystem sn_presentation(unsigned n, TieBreak tie_break)
{
  if (n < 2u)
    throw MalformedInput("the S_n presentation needs n >= 2");
  auto alphabet = OrderedAlphabet::sn(n, tie_break);
  std::vector<Rule> rules;
  auto oriented = [&](Word a, Word b) {
    if (shortlex_compare(a, b, alphabet) == Order::less)
      std::swap(a, b);
    rules.push_back({std::move(a), std::move(b)});
  };
  for (unsigned i = 1u; i < n; ++i)
    oriented({i, i}, {});
  for (unsigned i = 1u; i + 1u < n; ++i)
    oriented({i + 1u, i, i + 1u}, {i, i + 1u, i});
  for (unsigned i = 1u; i < n; ++i)
    for (unsigned j = i + 2u; j < n; ++j)
      oriented({j, i}, {i, j});
  return RewriteSystem(std::move(alphabet), std::move(rules));
}

namespace
{

struct CriticalPair
{
  Word a;
  Word b;
};

// Overlaps of l1 (suffix) with l2 (prefix), and l2 occurring inside l1.
void critical_pairs(Rule const &r1, Rule const &r2, bool same,
                    std::vector<CriticalPair> &out)
{
  auto const &l1 = r1.lhs;
  auto const &l2 = r2.lhs;
  for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
    if (!std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(),
                    l2.begin()))
      continue;
    ops::tick(k);
    Word tail(l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
    Word head(l1.begin(), l1.end() - static_cast<std::ptrdiff_t>(k));
    out.push_back({concat_words(r1.rhs, tail), concat_words(head, r2.rhs)});
  }
  if (same || l2.size() > l1.size())
    return;
  for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
    if (occurs_at(l1, pos, l2))
      out.push_back({r1.rhs, splice(l1, pos, l2.size(), r2.rhs)});
  }
}

class Completion
{
public:
  Completion(OrderedAlphabet const &alphabet, std::size_t cap)
  : alphabet_(alphabet),
    cap_(cap)
  {}

  void push(Word a, Word b)
  { pending_.push_back({std::move(a), std::move(b)}); }

  void drain()
  {
    while (!pending_.empty()) {
      auto [a, b] = std::move(pending_.front());
      pending_.pop_front();
      a = reduce(std::move(a));
      b = reduce(std::move(b));
      if (a == b)
        continue;
      if (shortlex_compare(a, b, alphabet_) == Order::less)
        std::swap(a, b);
      add(Rule{std::move(a), std::move(b)});
    }
  }

  void run()
  {
    drain();
    std::vector<CriticalPair> pairs;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      for (std::size_t j = 0; j <= i && alive_[i]; ++j) {
        if (!alive_[j])
          continue;
        pairs.clear();
        critical_pairs(rules_[i], rules_[j], i == j, pairs);
        if (i != j)
          critical_pairs(rules_[j], rules_[i], false, pairs);
        for (auto &cp : pairs)
          push(std::move(cp.a), std::move(cp.b));
        drain();
      }
    }
  }

  std::vector<Rule> result() const
  {
    std::vector<Rule> out;
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (alive_[i])
        out.push_back(rules_[i]);
    std::sort(out.begin(), out.end(), [this](Rule const &x, Rule const &y) {
      auto c = shortlex_compare(x.lhs, y.lhs, alphabet_);
      if (c != Order::equal)
        return c == Order::less;
      return shortlex_compare(x.rhs, y.rhs, alphabet_) == Order::less;
    });
    return out;
  }

private:
  Word reduce(Word w) const
  {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
        for (std::size_t i = 0; i < rules_.size(); ++i) {
          if (alive_[i] && occurs_at(w, pos, rules_[i].lhs)) {
            w = splice(w, pos, rules_[i].lhs.size(), rules_[i].rhs);
            changed = true;
            break;
          }
        }
      }
    }
    return w;
  }

  static bool contains_word(Word const &w, Word const &pattern)
  {
    for (std::size_t pos = 0; pos + pattern.size() <= w.size(); ++pos)
      if (occurs_at(w, pos, pattern))
        return true;
    return false;
  }

  void add(Rule r)
  {
    if (++additions_ > cap_)
      throw CompletionDiverged("Knuth-Bendix completion exceeded " +
                               std::to_string(cap_) + " rule additions");
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (alive_[i] && contains_word(rules_[i].lhs, r.lhs)) {
        alive_[i] = false;
        push(rules_[i].lhs, rules_[i].rhs);
      }
    }
    rules_.push_back(std::move(r));
    alive_.push_back(true);
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (alive_[i])
        rules_[i].rhs = reduce(rules_[i].rhs);
  }

  OrderedAlphabet alphabet_;
  std::size_t cap_;
  std::size_t additions_ = 0;
  std::vector<Rule> rules_;
  std::vector<bool> alive_;
  std::deque<CriticalPair> pending_;
};

} // namespace

RewriteSystem knuth_bendix_complete(OrderedAlphabet const &alphabet,
                                    std::vector<Rule> const &rules,
                                    std::size_t max_additions)
{
  RewriteSystem(alphabet, rules); // validates orientation and symbols
  Completion c(alphabet, max_additions);
  for (auto const &r : rules)
    c.push(r.lhs, r.rhs);
  c.run();
  return RewriteSystem(alphabet, c.result());
}

bool is_confluent(RewriteSystem const &s)
{
  std::vector<CriticalPair> pairs;
  auto const &rules = s.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      pairs.clear();
      critical_pairs(rules[i], rules[j], i == j, pairs);
      if (i != j)
        critical_pairs(rules[j], rules[i], false, pairs);
      for (auto const &cp : pairs)
        if (s.reduce(cp.a) != s.reduce(cp.b))
          return false;
    }
  }
  return true;
}

std::size_t count_irreducible(RewriteSystem const &s, std::size_t cap)
{
  // Every prefix of an irreducible word is irreducible, so grow by letters
  // and only test the suffixes a new letter can complete.
  std::vector<Word> layer{Word{}};
  std::size_t count = 1u;
  while (!layer.empty() && count <= cap) {
    std::vector<Word> next;
    for (auto const &w : layer) {
      for (unsigned a : s.alphabet().symbols()) {
        Word v = w;
        v.push_back(a);
        bool reducible = false;
        for (auto const &r : s.rules()) {
          if (r.lhs.size() <= v.size() &&
              occurs_at(v, v.size() - r.lhs.size(), r.lhs)) {
            reducible = true;
            break;
          }
        }
        if (reducible)
          continue;
        next.push_back(std::move(v));
        if (++count > cap)
          return count;
      }
    }
    layer = std::move(next);
  }
  return count;
}

std::shared_ptr<RewriteSystem const> completed_sn(unsigned n,
                                                  TieBreak tie_break)
{
  static std::mutex mutex;
  static std::map<std::pair<unsigned, TieBreak>,
                  std::shared_ptr<RewriteSystem const>>
      cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, tie_break);
  auto it = cache.find(key);
  if (it != cache.end())
    return it->second;
  auto base = sn_presentation(n, tie_break);
  auto done = std::make_shared<RewriteSystem const>(
      knuth_bendix_complete(base.alphabet(), base.rules()));
  cache.emplace(key, done);
  return done;
}

GenWord shortlex_reduced_word(Permutation const &p, TieBreak tie_break)
{
  // Left to right, the least word for p is the reversal of the right to
  // left least word for p^-1.
  if (tie_break == TieBreak::left_to_right)
    return reversed(shortlex_reduced_word(invert(p), TieBreak::right_to_left));
  // p = p' o tau_i with p' shorter exactly when p(i) > p(i+1).
  std::vector<unsigned> images(p.images().begin(), p.images().end());
  std::vector<unsigned> reversed_letters;
  unsigned n = p.degree();
  unsigned i = 1u;
  while (i < n) {
    ops::tick();
    if (images[i - 1u] > images[i]) {
      std::swap(images[i - 1u], images[i]);
      reversed_letters.push_back(i);
      i = i > 1u ? i - 1u : 1u;
    } else {
      ++i;
    }
  }
  return GenWord(n, {reversed_letters.rbegin(), reversed_letters.rend()});
}

GenWord canonical_form_sn(GenWord const &w, TieBreak tie_break)
{
  if (w.degree() < 2u)
    return w;
  if (w.degree() > completion_degree_limit)
    return shortlex_reduced_word(word_to_permutation(w), tie_break);
  auto system = completed_sn(w.degree(), tie_break);
  return GenWord(w.degree(), system->reduce(w.letters()));
}

namespace
{

Word parse_side(std::string_view text, std::size_t line)
{
  auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    throw MalformedInput("line " + std::to_string(line) + ": empty side, use e");
  auto last = text.find_last_not_of(" \t\r");
  auto trimmed = text.substr(first, last - first + 1u);
  if (trimmed == "e")
    return {};
  Word w;
  try {
    for (long long v : parse_integers(trimmed)) {
      if (v <= 0 || v > std::numeric_limits<unsigned>::max())
        throw MalformedInput("symbol " + std::to_string(v) + " must be positive");
      w.push_back(static_cast<unsigned>(v));
    }
  } catch (MalformedInput const &e) {
    throw MalformedInput("line " + std::to_string(line) + ": " + e.what());
  }
  return w;
}

} // namespace

std::vector<Rule> parse_rules(std::string_view text)
{
  std::vector<Rule> rules;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    auto line = text.substr(start, end - start);
    ++line_no;
    start = end + 1u;
    auto hash = line.find('#');
    if (hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos)
      continue;
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos)
      throw MalformedInput("line " + std::to_string(line_no) +
                           ": expected 'lhs -> rhs'");
    rules.push_back({parse_side(line.substr(0, arrow), line_no),
                     parse_side(line.substr(arrow + 2u), line_no)});
  }
  return rules;
}

std::string format_word(Word const &w)
{
  if (w.empty())
    return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i)
    os << (i ? " " : "") << w[i];
  return os.str();
}

std::string format_rules(std::vector<Rule> const &rules)
{
  std::string out;
  for (auto const &r : rules)
    out += format_word(r.lhs) + " -> " + format_word(r.rhs) + "\n";
  return out;
}

} // namespace scpp
