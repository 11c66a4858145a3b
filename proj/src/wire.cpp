#include "scpp/wire.hpp"

#include <charconv>
#include <sstream>

#include "scpp/errors.hpp"

namespace scpp
{

namespace
{

std::vector<std::string_view> tokenize(std::string_view text)
{
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
            text[i] == '\r' || text[i] == ','))
      ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' &&
           text[i] != '\n' && text[i] != '\r' && text[i] != ',')
      ++i;
    if (i > start)
      tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

long long parse_token(std::string_view token, std::size_t index)
{
  long long value = 0;
  auto const *first = token.data();
  auto const *last = token.data() + token.size();
  if (!token.empty() && token.front() == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw MalformedInput("token " + std::to_string(index + 1u) + " ('" +
                         std::string(token) + "') is not an integer");
  return value;
}

bool is_empty_word(std::vector<std::string_view> const &tokens)
{
  return tokens.empty() || (tokens.size() == 1u && tokens.front() == "e");
}

unsigned as_point(long long v, std::size_t index)
{
  if (v < 0)
    throw MalformedInput("token " + std::to_string(index + 1u) +
                         " is negative");
  return static_cast<unsigned>(v);
}

// Splits zero-delimited text into products of cycles. A run of z zeros
// closes a cycle (z >= 1), a product (z >= 2) and the whole group (z >= 3).
struct ZeroRun
{
  std::vector<std::vector<Cycle>> products;
  unsigned final_run = 0u;
};

ZeroRun split_zero_runs(std::string_view text)
{
  auto tokens = tokenize(text);
  ZeroRun out;
  std::vector<Cycle> product;
  Cycle cycle;
  std::size_t i = 0;
  while (i < tokens.size()) {
    long long v = parse_token(tokens[i], i);
    if (v != 0) {
      if (out.final_run >= 2u && product.empty() && cycle.empty() &&
          !out.products.empty() && out.final_run >= 3u)
        throw MalformedInput("token " + std::to_string(i + 1u) +
                             " follows the closing 0 0 0");
      cycle.push_back(as_point(v, i));
      out.final_run = 0u;
      ++i;
      continue;
    }
    unsigned run = 0u;
    std::size_t run_start = i;
    while (i < tokens.size() && parse_token(tokens[i], i) == 0) {
      ++run;
      ++i;
    }
    if (cycle.empty())
      throw MalformedInput("token " + std::to_string(run_start + 1u) +
                           ": zero delimiter without a preceding cycle");
    if (run > 3u)
      throw MalformedInput("token " + std::to_string(run_start + 1u) +
                           ": run of " + std::to_string(run) + " zeros");
    product.push_back(std::move(cycle));
    cycle.clear();
    if (run >= 2u) {
      out.products.push_back(std::move(product));
      product.clear();
    }
    out.final_run = run;
  }
  if (!cycle.empty() || !product.empty())
    throw MalformedInput("input ends without a 0 0 terminator");
  return out;
}

void append_cycles(std::ostringstream &os, std::vector<Cycle> const &cycles,
                   bool &first_token)
{
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (c > 0u)
      os << " 0";
    for (unsigned v : cycles[c]) {
      if (!first_token)
        os << ' ';
      os << v;
      first_token = false;
    }
  }
}

} // namespace

std::vector<long long> parse_integers(std::string_view text)
{
  auto tokens = tokenize(text);
  std::vector<long long> values;
  values.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i)
    values.push_back(parse_token(tokens[i], i));
  return values;
}

GenWord parse_genword(unsigned degree, std::string_view text)
{
  auto tokens = tokenize(text);
  if (is_empty_word(tokens))
    return GenWord(degree, {});
  std::vector<unsigned> letters;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    long long v = parse_token(tokens[i], i);
    if (v < 1 || v >= static_cast<long long>(degree))
      throw MalformedInput("token " + std::to_string(i + 1u) + " ('" +
                           std::string(tokens[i]) + "') is not a generator of S_" +
                           std::to_string(degree));
    letters.push_back(static_cast<unsigned>(v));
  }
  return GenWord(degree, std::move(letters));
}

std::string format_genword(GenWord const &w)
{
  if (w.empty())
    return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i)
    os << (i ? " " : "") << w.letters()[i];
  return os.str();
}

CycleList parse_cycle_list(unsigned degree, std::string_view text)
{
  auto runs = split_zero_runs(text);
  if (runs.products.size() != 1u || runs.final_run != 2u)
    throw MalformedInput("expected exactly one cycle list terminated by 0 0");
  CycleList c{degree, std::move(runs.products.front()), false};
  validate(c);
  // Mark it disjoint when it is.
  CycleList probe = c;
  probe.disjoint = true;
  try {
    validate(probe);
    c.disjoint = true;
  } catch (MalformedInput const &) {
  }
  return c;
}

std::string format_cycle_list(CycleList const &c)
{
  std::ostringstream os;
  bool first = true;
  append_cycles(os, c.cycles, first);
  os << " 0 0";
  return os.str();
}

std::pair<CycleList, CycleList> parse_cycle_pair(unsigned degree,
                                                 std::string_view text)
{
  auto runs = split_zero_runs(text);
  if (runs.products.size() != 2u || runs.final_run != 3u)
    throw MalformedInput(
        "expected two cycle products separated by 0 0 and closed by 0 0 0");
  CycleList a{degree, std::move(runs.products[0]), false};
  CycleList b{degree, std::move(runs.products[1]), false};
  validate(a);
  validate(b);
  return {std::move(a), std::move(b)};
}

std::string format_cycle_pair(CycleList const &first, CycleList const &second)
{
  std::ostringstream os;
  bool first_token = true;
  append_cycles(os, first.cycles, first_token);
  os << " 0 0";
  append_cycles(os, second.cycles, first_token);
  os << " 0 0 0";
  return os.str();
}

std::string format_cycles_readable(CycleList const &c)
{
  std::ostringstream os;
  bool any = false;
  for (auto const &cycle : c.cycles) {
    if (cycle.size() < 2u)
      continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      os << (i ? " " : "") << cycle[i];
    os << ')';
  }
  if (!any)
    os << "()";
  return os.str();
}

} // namespace scpp
