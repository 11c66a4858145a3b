#include "scpp/turing.hpp"

#include <optional>
#include <sstream>

#include "scpp/op_counter.hpp"

namespace scpp
{

namespace
{

using Delta = std::map<std::pair<std::string, std::string>, Transition>;

std::string const blank = blank_symbol;
std::string const left_end = left_end_symbol;

std::string describe(std::pair<std::string, std::string> const &key)
{
  return "(" + key.first + ", " + key.second + ")";
}

} // namespace

TuringMachine::TuringMachine(std::string initial, std::string halt,
                             std::set<std::string> alphabet, Delta delta)
: initial_(std::move(initial)), halt_(std::move(halt)),
  alphabet_(std::move(alphabet)), delta_(std::move(delta))
{
  alphabet_.insert(blank);
  alphabet_.insert(left_end);
  for (auto const &[key, t] : delta_) {
    if (!alphabet_.contains(key.second))
      throw MalformedInput("transition " + describe(key) +
                           " reads a symbol outside the alphabet");
    if (key.first == halt_)
      throw MalformedInput("transition " + describe(key) +
                           " leaves the halting state");
    if (t.action.kind == Action::Kind::write) {
      if (!alphabet_.contains(t.action.symbol))
        throw MalformedInput("transition " + describe(key) +
                             " writes a symbol outside the alphabet");
      if (t.action.symbol == left_end)
        throw MalformedInput("transition " + describe(key) +
                             " writes the left end marker");
    }
    if (key.second == left_end && t.action.kind != Action::Kind::right)
      throw MalformedInput("transition " + describe(key) +
                           " does not move right off the left end");
  }
}

std::set<std::string> TuringMachine::states() const
{
  std::set<std::string> out{initial_, halt_};
  for (auto const &[key, t] : delta_) {
    out.insert(key.first);
    out.insert(t.next);
  }
  return out;
}

RunResult run(TuringMachine const &m, std::vector<std::string> const &input,
              std::uint64_t step_limit)
{
  RunResult r;
  r.tape.push_back(left_end);
  for (auto const &s : input) {
    if (s == left_end || !m.alphabet().contains(s))
      throw MalformedInput("input symbol '" + s + "' is not allowed");
    r.tape.push_back(s);
  }
  r.head = 1;
  r.state = m.initial();
  while (r.state != m.halt()) {
    if (r.steps == step_limit) {
      r.halted = false;
      break;
    }
    if (r.head >= r.tape.size())
      r.tape.resize(r.head + 1u, blank);
    auto key = std::make_pair(r.state, r.tape[r.head]);
    auto it = m.delta().find(key);
    if (it == m.delta().end())
      throw MachineStuck("no transition for " + describe(key) + " after " +
                         std::to_string(r.steps) + " steps");
    Transition const &t = it->second;
    switch (t.action.kind) {
    case Action::Kind::write:
      r.tape[r.head] = t.action.symbol;
      break;
    case Action::Kind::left:
      if (r.head > 0u)
        --r.head;
      break;
    case Action::Kind::right:
      ++r.head;
      break;
    }
    r.state = t.next;
    ++r.steps;
    ops::tick();
  }
  if (r.state == m.halt())
    r.halted = true;
  while (r.tape.size() > 1u && r.tape.back() == blank)
    r.tape.pop_back();
  return r;
}

std::string tape_segment(RunResult const &r, std::size_t from)
{
  std::string out;
  for (std::size_t i = from; i < r.tape.size() && r.tape[i] != blank; ++i)
    out += r.tape[i];
  return out;
}

TuringMachine adder_machine()
{
  Delta d;
  auto add = [&](std::string q, std::string s, std::string next, Action a) {
    d[{std::move(q), std::move(s)}] = {std::move(next), std::move(a)};
  };
  add("s_i", "1", "s_c", Action::right());
  add("s_i", "0", "s_nc", Action::right());
  add("s_c", "1", "s_1", Action::right());
  add("s_1", "_", "s_1", Action::write("1"));
  add("s_1", "1", "s_0", Action::right());
  add("s_0", "_", "s_f", Action::write("0"));
  add("s_c", "0", "s_1b", Action::right());
  add("s_nc", "1", "s_1b", Action::right());
  add("s_nc", "0", "s_0b", Action::right());
  add("s_1b", "_", "s_f", Action::write("1"));
  add("s_0b", "_", "s_f", Action::write("0"));
  return TuringMachine("s_i", "s_f", {"0", "1"}, std::move(d));
}

TuringMachine binary_adder_machine()
{
  Delta d;
  auto add = [&](std::string q, std::string s, std::string next, Action a) {
    d[{std::move(q), std::move(s)}] = {std::move(next), std::move(a)};
  };
  std::string const digits[2] = {"0", "1"};
  for (int c = 0; c < 2; ++c) {
    std::string cs = std::to_string(c);
    std::string seek_a = "seek_a" + cs;
    add(seek_a, "X", seek_a, Action::right());
    add(seek_a, "_", "fin" + cs, Action::right());
    for (int a = 0; a < 2; ++a) {
      std::string ca = cs + std::to_string(a);
      add(seek_a, digits[a], "got_a" + ca, Action::write("X"));
      add("got_a" + ca, "X", "skip_a" + ca, Action::right());
      for (auto const *s : {"0", "1", "X"})
        add("skip_a" + ca, s, "skip_a" + ca, Action::right());
      add("skip_a" + ca, "_", "seek_b" + ca, Action::right());
      add("seek_b" + ca, "Y", "seek_b" + ca, Action::right());
      for (int b = 0; b < 2; ++b)
        add("seek_b" + ca, digits[b], "got_b" + std::to_string(c + a + b),
            Action::write("Y"));
    }
    add("fin" + cs, "Y", "fin" + cs, Action::right());
    add("fin" + cs, "_", "fin_out" + cs, Action::right());
    for (auto const *s : {"0", "1"})
      add("fin_out" + cs, s, "fin_out" + cs, Action::right());
    add("fin_out" + cs, "_", "halt", Action::write(c == 1 ? "1" : "_"));
    std::string ret = "return" + cs;
    for (auto const *s : {"0", "1", "X", "Y", "_"})
      add(ret, s, ret, Action::left());
    add(ret, ">", seek_a, Action::right());
  }
  for (int t = 0; t < 4; ++t) {
    std::string ts = std::to_string(t);
    add("got_b" + ts, "Y", "skip_b" + ts, Action::right());
    for (auto const *s : {"0", "1", "Y"})
      add("skip_b" + ts, s, "skip_b" + ts, Action::right());
    add("skip_b" + ts, "_", "skip_out" + ts, Action::right());
    for (auto const *s : {"0", "1"})
      add("skip_out" + ts, s, "skip_out" + ts, Action::right());
    add("skip_out" + ts, "_", "return" + std::to_string(t / 2),
        Action::write(digits[t % 2]));
  }
  return TuringMachine("seek_a0", "halt", {"0", "1", "X", "Y"}, std::move(d));
}

std::string binary_adder_output(RunResult const &r)
{
  std::size_t blanks = 0, i = 1;
  for (; i < r.tape.size() && blanks < 2u; ++i)
    if (r.tape[i] == blank)
      ++blanks;
  return blanks < 2u ? std::string() : tape_segment(r, i);
}

TuringMachine parse_machine(std::string_view text)
{
  std::optional<std::string> initial, halt;
  std::set<std::string> alphabet;
  Delta delta;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;)
      tok.push_back(t);
    if (tok.empty())
      continue;
    auto fail = [&](std::string const &why) {
      return MalformedInput("line " + std::to_string(lineno) + ": " + why);
    };
    if (tok[0] == "initial" || tok[0] == "halt") {
      if (tok.size() != 2u)
        throw fail("expected '" + tok[0] + " <state>'");
      (tok[0] == "initial" ? initial : halt) = tok[1];
    } else if (tok[0] == "alphabet") {
      alphabet.insert(tok.begin() + 1, tok.end());
    } else {
      if (tok.size() != 5u || tok[2] != "->")
        throw fail("expected 'state symbol -> state action'");
      Action a = tok[4] == "L"   ? Action::left()
                 : tok[4] == "R" ? Action::right()
                                 : Action::write(tok[4]);
      if (!delta.emplace(std::make_pair(tok[0], tok[1]), Transition{tok[3], a})
               .second)
        throw fail("duplicate transition for (" + tok[0] + ", " + tok[1] + ")");
    }
  }
  if (!initial || !halt)
    throw MalformedInput("machine needs 'initial' and 'halt' directives");
  return TuringMachine(*initial, *halt, std::move(alphabet), std::move(delta));
}

std::string format_machine(TuringMachine const &m)
{
  std::ostringstream os;
  os << "initial " << m.initial() << "\nhalt " << m.halt() << "\nalphabet";
  for (auto const &s : m.alphabet())
    if (s != blank && s != left_end)
      os << ' ' << s;
  os << '\n';
  for (auto const &[key, t] : m.delta()) {
    os << key.first << ' ' << key.second << " -> " << t.next << ' ';
    switch (t.action.kind) {
    case Action::Kind::write: os << t.action.symbol; break;
    case Action::Kind::left: os << 'L'; break;
    case Action::Kind::right: os << 'R'; break;
    }
    os << '\n';
  }
  return os.str();
}

} // namespace scpp
