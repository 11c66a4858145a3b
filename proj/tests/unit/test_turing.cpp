#include <doctest.h>

#include "scpp/errors.hpp"
#include "scpp/turing.hpp"

using namespace scpp;

TEST_CASE("one-digit adder")
{
  TuringMachine m = adder_machine();
  struct Case
  {
    std::vector<std::string> in;
    std::string out;
  };
  for (auto const &c : {Case{{"0", "0"}, "0"}, Case{{"0", "1"}, "1"},
                        Case{{"1", "0"}, "1"}, Case{{"1", "1"}, "10"}}) {
    RunResult r = run(m, c.in, 100);
    CHECK(r.halted);
    CHECK(tape_segment(r, 3) == c.out);
    CHECK(r.steps <= 5u);
    CHECK(r.tape[0] == ">");
  }
  CHECK(run(m, {"1", "1"}, 100).steps == 5u);
}

TEST_CASE("step limit gives a timeout value")
{
  RunResult r = run(adder_machine(), {"1", "1"}, 2);
  CHECK_FALSE(r.halted);
  CHECK(r.steps == 2u);
}

TEST_CASE("missing transitions and bad input")
{
  CHECK_THROWS_AS(run(adder_machine(), {"1"}, 100), MachineStuck);
  CHECK_THROWS_AS(run(adder_machine(), {"2", "1"}, 100), MalformedInput);
  CHECK_THROWS_AS(run(adder_machine(), {">"}, 100), MalformedInput);
}

TEST_CASE("left end safety is enforced on construction")
{
  using D = std::map<std::pair<std::string, std::string>, Transition>;
  CHECK_THROWS_AS(TuringMachine("a", "h", {}, D{{{"a", ">"}, {"a", Action::left()}}}),
                  MalformedInput);
  CHECK_THROWS_AS(TuringMachine("a", "h", {}, D{{{"a", "_"}, {"a", Action::write(">")}}}),
                  MalformedInput);
  CHECK_THROWS_AS(TuringMachine("a", "h", {}, D{{{"a", "z"}, {"h", Action::right()}}}),
                  MalformedInput);
  TuringMachine walker("a", "h", {"1"},
                       D{{{"a", "1"}, {"b", Action::left()}},
                         {{"b", ">"}, {"c", Action::right()}},
                         {{"c", "1"}, {"h", Action::left()}}});
  RunResult r = run(walker, {"1"}, 10);
  CHECK(r.halted);
  CHECK(r.head == 0u);
  CHECK(r.steps == 3u);
}

TEST_CASE("binary adder on two digits and beyond")
{
  TuringMachine m = binary_adder_machine();
  std::uint64_t previous = 0;
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t worst = 0;
    for (int x = 0; x < (1 << n); ++x)
      for (int y = 0; y < (1 << n); ++y) {
        if (n > 3 && (x * 7 + y) % 5 != 0)
          continue;
        std::vector<std::string> in;
        for (int i = 0; i < n; ++i)
          in.push_back(std::to_string((x >> i) & 1));
        in.push_back("_");
        for (int i = 0; i < n; ++i)
          in.push_back(std::to_string((y >> i) & 1));
        RunResult r = run(m, in, 1000000);
        REQUIRE(r.halted);
        std::string want;
        for (int i = 0; i < n; ++i)
          want += std::to_string(((x + y) >> i) & 1);
        if ((x + y) >> n)
          want += "1";
        CHECK(binary_adder_output(r) == want);
        worst = std::max(worst, r.steps);
      }
    CHECK(worst > previous);
    previous = worst;
  }
}

TEST_CASE("binary adder step count grows quadratically")
{
  TuringMachine m = binary_adder_machine();
  auto steps = [&](int n) {
    std::vector<std::string> in(static_cast<std::size_t>(n), "1");
    in.push_back("_");
    for (int i = 0; i < n; ++i)
      in.push_back("1");
    return static_cast<double>(run(m, in, 10000000).steps);
  };
  double r = steps(64) / steps(32);
  CHECK(r > 3.5);
  CHECK(r < 4.5);
}

TEST_CASE("machine text format round trips")
{
  std::string text = "# adder\ninitial s_i\nhalt s_f\nalphabet 0 1\n"
                     "s_i 1 -> s_c R\ns_i 0 -> s_nc R\n"
                     "s_c 1 -> s_1 R\ns_1 _ -> s_1 1\ns_1 1 -> s_0 R\ns_0 _ -> s_f 0\n"
                     "s_c 0 -> s_1b R\ns_nc 1 -> s_1b R\ns_nc 0 -> s_0b R\n"
                     "s_1b _ -> s_f 1\ns_0b _ -> s_f 0\n";
  TuringMachine m = parse_machine(text);
  CHECK(m.delta() == adder_machine().delta());
  CHECK(parse_machine(format_machine(m)).delta() == m.delta());
  CHECK(m.states().size() == 8u);
  CHECK_THROWS_AS(parse_machine("initial a\nhalt h\na 1 -> b"), MalformedInput);
  CHECK_THROWS_AS(parse_machine("halt h\n"), MalformedInput);
  CHECK_THROWS_AS(parse_machine("initial a\nhalt h\nalphabet 1\na 1 -> h R\na 1 -> h L\n"),
                  MalformedInput);
}
