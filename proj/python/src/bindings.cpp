#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scpp/bench.hpp"
#include "scpp/braid.hpp"
#include "scpp/braid_scpp.hpp"
#include "scpp/cejtin_rivin.hpp"
#include "scpp/errors.hpp"
#include "scpp/rewriting.hpp"
#include "scpp/turing.hpp"
#include "scpp/wire.hpp"

namespace py = pybind11;
using namespace scpp;

namespace
{

std::vector<unsigned> images(Permutation const &p)
{
  return {p.images().begin(), p.images().end()};
}

std::vector<std::vector<unsigned>> cycles(CycleList const &c)
{
  return {c.cycles.begin(), c.cycles.end()};
}

py::tuple candidate(CommutatorCandidate const &c)
{
  return py::make_tuple(c.x.letters(), c.y.letters());
}

TieBreak tie_break(std::string const &s)
{
  if (s == "ltr")
    return TieBreak::left_to_right;
  if (s == "rtl")
    return TieBreak::right_to_left;
  throw MalformedInput("tie break must be 'ltr' or 'rtl'");
}

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Simple commutators in symmetric and braid groups";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<PromiseViolation>(m, "PromiseViolation", base.ptr());
  py::register_exception<MalformedInput>(m, "MalformedInput", base.ptr());
  py::register_exception<InvariantBreach>(m, "InvariantBreach", base.ptr());
  py::register_exception<CompletionDiverged>(m, "CompletionDiverged", base.ptr());
  py::register_exception<MachineStuck>(m, "MachineStuck", base.ptr());

  m.def("evaluate", [](unsigned n, std::vector<unsigned> w) {
    return images(word_to_permutation(GenWord(n, std::move(w))));
  }, py::arg("degree"), py::arg("word"), "Images p(1..n) of a generator word.");

  m.def("decompose", [](unsigned n, std::vector<unsigned> w) {
    return cycles(cycle_decomposition(word_to_permutation(GenWord(n, std::move(w)))));
  }, py::arg("degree"), py::arg("word"), "Disjoint cycles, 1-cycles included.");

  m.def("canonical", [](unsigned n, std::vector<unsigned> w, std::string const &tb) {
    return canonical_form_sn(GenWord(n, std::move(w)), tie_break(tb)).letters();
  }, py::arg("degree"), py::arg("word"), py::arg("tie_break") = "ltr",
     "ShortLex normal form of a generator word.");

  m.def("solve", [](unsigned n, std::vector<unsigned> w) {
    ScppSolution s = scpp_solve(GenWord(n, std::move(w)));
    py::list trace;
    for (auto const &step : s.products.trace)
      trace.append(py::dict(py::arg("branch") = to_string(step.branch),
                            py::arg("depth") = step.depth,
                            py::arg("support") = step.support));
    return py::dict(py::arg("sigma") = images(s.sigma),
                    py::arg("x") = s.x.letters(),
                    py::arg("y") = s.y.letters(),
                    py::arg("x_inverse") = s.x_inverse.letters(),
                    py::arg("y_inverse") = s.y_inverse.letters(),
                    py::arg("c1") = s.c1.entries(),
                    py::arg("c2") = s.c2.entries(),
                    py::arg("c3") = s.c3.entries(),
                    py::arg("tau") = cycles(s.tau),
                    py::arg("trace") = trace,
                    py::arg("max_depth") = s.products.max_depth,
                    py::arg("output") = format_solution(s));
  }, py::arg("degree"), py::arg("word"),
     "Words x, y with [x, y] equal to an even permutation.");

  m.def("two_ncycle_product", [](unsigned n, std::string const &wire) {
    TwoCycleProduct p = two_ncycle_product(parse_cycle_list(n, wire));
    return format_cycle_pair(p.c1, p.c2);
  }, py::arg("degree"), py::arg("cycle_list"),
     "Wire-format pair of cycle products, each evaluating to an n-cycle.");

  m.def("rgnf", [](unsigned n, std::vector<int> w) {
    GreedyNormalForm f = rgnf(BraidWord(n, std::move(w)));
    std::vector<std::vector<int>> factors;
    for (auto const &p : f.factors)
      factors.push_back(p.canonical_word().letters());
    return py::make_tuple(factors, f.omega_power);
  }, py::arg("strands"), py::arg("word"),
     "(factors, omega_power) of the right-greedy normal form.");

  m.def("format_rgnf", [](unsigned n, std::vector<int> w) {
    return format_normal_form(rgnf(BraidWord(n, std::move(w))));
  }, py::arg("strands"), py::arg("word"));

  m.def("braid_equal", [](unsigned n, std::vector<int> a, std::vector<int> b) {
    return braid_equal(BraidWord(n, std::move(a)), BraidWord(n, std::move(b)));
  }, py::arg("strands"), py::arg("a"), py::arg("b"));

  m.def("scpp_permutation_braids", [](unsigned n, std::vector<int> w) -> py::object {
    auto c = scpp_permutation_braids(BraidWord(n, std::move(w)));
    if (!c)
      return py::none();
    return candidate(*c);
  }, py::arg("strands"), py::arg("word"),
     "(x, y) permutation braids with [x, y] = word, or None.");

  m.def("pure_braid_factorization", [](unsigned n, std::vector<int> w) {
    PureFactorization f = pure_braid_factorization(BraidWord(n, std::move(w)));
    return py::make_tuple(f.pure.letters(), candidate(f.commutator));
  }, py::arg("strands"), py::arg("word"), "(pure, (x, y)).");

  m.def("search", [](unsigned n, std::vector<int> w, unsigned budget, std::uint64_t seed) {
    SearchTrace t = probabilistic_scpp_search(BraidWord(n, std::move(w)), budget, seed);
    py::list milestones;
    for (auto const &ms : t.milestones)
      milestones.append(py::make_tuple(ms.word.letters(), ms.step));
    return py::dict(py::arg("success") = t.success,
                    py::arg("steps") = t.steps,
                    py::arg("start") = t.start.letters(),
                    py::arg("milestones") = milestones,
                    py::arg("result") = t.result ? py::object(candidate(*t.result))
                                                 : py::object(py::none()),
                    py::arg("text") = format_trace(t));
  }, py::arg("strands"), py::arg("word"), py::arg("budget"), py::arg("seed"),
     "Seeded random rewriting search for a literal commutator.");

  m.def("complete_sn", [](unsigned n, std::string const &tb) {
    auto s = completed_sn(n, tie_break(tb));
    std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> rules;
    for (auto const &r : s->rules())
      rules.emplace_back(r.lhs, r.rhs);
    return rules;
  }, py::arg("degree"), py::arg("tie_break") = "ltr",
     "Completed ShortLex rewriting system of S_n as (lhs, rhs) pairs.");

  m.def("run_adder", [](std::vector<std::string> input, std::uint64_t limit) {
    RunResult r = run(adder_machine(), input, limit);
    return py::make_tuple(tape_segment(r, 3), r.steps, r.halted);
  }, py::arg("input"), py::arg("step_limit") = 100,
     "(output, steps, halted) of the one-digit adder.");

  m.def("run_machine", [](std::string const &text, std::vector<std::string> input,
                          std::uint64_t limit) {
    RunResult r = run(parse_machine(text), input, limit);
    return py::make_tuple(r.tape, r.steps, r.halted);
  }, py::arg("machine"), py::arg("input"), py::arg("step_limit"),
     "(tape, steps, halted) of a machine given in the text format.");

  m.def("operation_count", [](unsigned n, std::vector<unsigned> w) {
    return bench_scpp(GenWord(n, std::move(w)), 1).operations;
  }, py::arg("degree"), py::arg("word"), "Operation count of one solve.");
}
