#ifndef SCPP_TURING_HPP
#define SCPP_TURING_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scpp/errors.hpp"

/**
 * @file turing.hpp
 * @brief Single-tape deterministic Turing machines.
 *
 * Symbols are strings. "_" is the blank and ">" the left end marker, which
 * always sits in cell 0. The head starts on cell 1 in the initial state.
 */

namespace scpp
{

inline constexpr char const *blank_symbol = "_";
inline constexpr char const *left_end_symbol = ">";

/// The machine has no transition for its current (state, symbol).
class MachineStuck : public Error
{
public:
  using Error::Error;
};

struct Action
{
  enum class Kind { write, left, right };
  Kind kind = Kind::right;
  std::string symbol; ///< for write

  static Action write(std::string s)
  { return {Kind::write, std::move(s)}; }
  static Action left()
  { return {Kind::left, {}}; }
  static Action right()
  { return {Kind::right, {}}; }

  bool operator==(Action const &) const = default;
};

struct Transition
{
  std::string next;
  Action action;

  bool operator==(Transition const &) const = default;
};

class TuringMachine
{
public:
  /// Throws MalformedInput when a transition reads ">" without moving
  /// right, writes ">", or uses a symbol outside the alphabet.
  TuringMachine(std::string initial, std::string halt,
                std::set<std::string> alphabet,
                std::map<std::pair<std::string, std::string>, Transition> delta);

  std::string const &initial() const noexcept
  { return initial_; }

  std::string const &halt() const noexcept
  { return halt_; }

  /// Input symbols plus blank and left end.
  std::set<std::string> const &alphabet() const noexcept
  { return alphabet_; }

  std::set<std::string> states() const;

  std::map<std::pair<std::string, std::string>, Transition> const &
  delta() const noexcept
  { return delta_; }

private:
  std::string initial_;
  std::string halt_;
  std::set<std::string> alphabet_;
  std::map<std::pair<std::string, std::string>, Transition> delta_;
};

struct RunResult
{
  bool halted = false; ///< false: the step limit was reached
  std::vector<std::string> tape; ///< cell 0 onward, trailing blanks trimmed
  std::size_t head = 0;
  std::string state;
  std::uint64_t steps = 0; ///< transition invocations
};

/// Input goes on cells 1.. and may contain blanks. Throws MalformedInput for
/// symbols outside the alphabet or equal to the left end, MachineStuck when
/// no transition applies.
RunResult run(TuringMachine const &m, std::vector<std::string> const &input,
              std::uint64_t step_limit);

/// Cells from `from` up to the first blank, concatenated.
std::string tape_segment(RunResult const &r, std::size_t from);

/// Adds two 1-digit binary numbers "a b"; the sum starts on cell 3.
TuringMachine adder_machine();

/// Adds two equally long binary numbers written least significant digit
/// first as "a_1 .. a_n _ b_1 .. b_n". Digits are marked X / Y as they are
/// consumed and the sum, least significant digit first, is written after
/// the blank that follows b.
TuringMachine binary_adder_machine();

/// Sum digits written by binary_adder_machine, least significant first.
std::string binary_adder_output(RunResult const &r);

/// Lines "state symbol -> state action" with action L, R or a symbol to
/// write (so L and R cannot be tape symbols), plus
/// "initial q", "halt q" and "alphabet s1 s2 ..." directives. '#' comments.
TuringMachine parse_machine(std::string_view text);
std::string format_machine(TuringMachine const &m);

} // namespace scpp

#endif // SCPP_TURING_HPP
