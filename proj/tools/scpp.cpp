// Command-line front end. Exit codes: 0 success, 1 promise violation,
// 2 malformed input, 3 internal invariant breach, 4 completion cap reached.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scpp/bench.hpp"
#include "scpp/braid.hpp"
#include "scpp/braid_scpp.hpp"
#include "scpp/cejtin_rivin.hpp"
#include "scpp/errors.hpp"
#include "scpp/permutation.hpp"
#include "scpp/rewriting.hpp"
#include "scpp/turing.hpp"
#include "scpp/wire.hpp"

using nlohmann::json;
using namespace scpp;

namespace
{

enum Exit { ok = 0, promise = 1, malformed = 2, breach = 3, diverged = 4 };

bool g_json = false;

std::string read_all(std::istream &in)
{
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string text_or_stdin(std::optional<std::string> const &text)
{
  return text ? *text : read_all(std::cin);
}

std::string read_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw MalformedInput("cannot read file '" + path + "'");
  return read_all(in);
}

void emit(json const &j)
{
  std::cout << j.dump(2) << '\n';
}

json images_json(Permutation const &p)
{
  return json(std::vector<unsigned>(p.images().begin(), p.images().end()));
}

json cycles_json(CycleList const &c)
{
  return {{"wire", format_cycle_list(c)}, {"readable", format_cycles_readable(c)}};
}

json word_json(GenWord const &w)
{
  return format_genword(w);
}

json braid_json(BraidWord const &b)
{
  return format_braid_word(b);
}

json trace_json(std::vector<BranchStep> const &trace)
{
  json out = json::array();
  for (auto const &s : trace)
    out.push_back({{"branch", to_string(s.branch)},
                   {"depth", s.depth},
                   {"support", s.support}});
  return out;
}

json candidate_json(CommutatorCandidate const &c)
{
  return {{"x", braid_json(c.x)}, {"y", braid_json(c.y)}};
}

json normal_form_json(GreedyNormalForm const &f)
{
  json factors = json::array();
  for (auto const &p : f.factors)
    factors.push_back(braid_json(p.canonical_word()));
  return {{"text", format_normal_form(f)},
          {"factors", factors},
          {"omega_power", f.omega_power}};
}

TieBreak parse_tie_break(std::string const &s)
{
  if (s == "ltr")
    return TieBreak::left_to_right;
  if (s == "rtl")
    return TieBreak::right_to_left;
  throw MalformedInput("tie break must be 'ltr' or 'rtl'");
}

std::vector<std::string> split_symbols(std::string const &text)
{
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string s; in >> s;)
    out.push_back(s);
  return out;
}

struct Options
{
  unsigned degree = 0;
  unsigned strands = 0;
  std::optional<std::string> word;
  std::optional<std::string> other;
  std::string tie_break = "ltr";
  unsigned budget = 8;
  std::uint64_t seed = 0;
  std::optional<std::string> rules_file;
  std::optional<std::string> symbols;
  std::size_t cap = default_completion_cap;
  std::optional<std::string> machine_file;
  std::string builtin;
  std::string input;
  std::uint64_t step_limit = 1000000;
  std::string op = "scpp";
  std::vector<unsigned> n_list;
  std::vector<std::size_t> k_list;
  unsigned bench_degree = 16;
  unsigned reps = 1;
  std::string bench_word = "6 4 1 2";
  std::uint64_t bench_seed = 1;
};

void perm_solve(Options const &o)
{
  GenWord w = parse_genword(o.degree, text_or_stdin(o.word));
  ScppSolution s = scpp_solve(w);
  if (!g_json) {
    std::cout << format_solution(s) << '\n';
    return;
  }
  emit({{"degree", o.degree},
        {"input", word_json(w)},
        {"sigma", images_json(s.sigma)},
        {"decomposition", cycles_json(s.decomposition)},
        {"products", format_cycle_pair(s.products.c1, s.products.c2)},
        {"trace", trace_json(s.products.trace)},
        {"max_depth", s.products.max_depth},
        {"c1", format_cycles_readable(s.c1.as_cycle_list())},
        {"c2", format_cycles_readable(s.c2.as_cycle_list())},
        {"c3", format_cycles_readable(s.c3.as_cycle_list())},
        {"tau", format_cycles_readable(s.tau)},
        {"x", word_json(s.x)},
        {"y", word_json(s.y)},
        {"x_inverse", word_json(s.x_inverse)},
        {"y_inverse", word_json(s.y_inverse)},
        {"output", format_solution(s)}});
}

void perm_decompose(Options const &o)
{
  GenWord w = parse_genword(o.degree, text_or_stdin(o.word));
  Permutation p = word_to_permutation(w);
  CycleList c = cycle_decomposition(p);
  if (!g_json) {
    std::cout << format_cycle_list(c) << '\n';
    return;
  }
  emit({{"degree", o.degree},
        {"images", images_json(p)},
        {"columns", column_list(p)},
        {"cycles", cycles_json(c)}});
}

void perm_ncycles(Options const &o)
{
  CycleList d = parse_cycle_list(o.degree, text_or_stdin(o.word));
  TwoCycleProduct r = two_ncycle_product(d);
  if (!g_json) {
    std::cout << format_cycle_pair(r.c1, r.c2) << '\n';
    return;
  }
  emit({{"degree", o.degree},
        {"pair", format_cycle_pair(r.c1, r.c2)},
        {"c1", cycles_json(r.c1)},
        {"c2", cycles_json(r.c2)},
        {"trace", trace_json(r.trace)},
        {"max_depth", r.max_depth}});
}

void perm_canonical(Options const &o)
{
  GenWord w = parse_genword(o.degree, text_or_stdin(o.word));
  GenWord c = canonical_form_sn(w, parse_tie_break(o.tie_break));
  if (!g_json) {
    std::cout << format_genword(c) << '\n';
    return;
  }
  emit({{"degree", o.degree}, {"input", word_json(w)}, {"canonical", word_json(c)}});
}

void braid_rgnf(Options const &o)
{
  BraidWord b = parse_braid_word(o.strands, text_or_stdin(o.word));
  GreedyNormalForm f = rgnf(b);
  if (!g_json) {
    std::cout << format_normal_form(f) << '\n';
    return;
  }
  json j = normal_form_json(f);
  j["strands"] = o.strands;
  j["input"] = braid_json(b);
  emit(j);
}

void braid_equal_cmd(Options const &o)
{
  if (!o.word || !o.other)
    throw MalformedInput("braid equal needs two words");
  BraidWord a = parse_braid_word(o.strands, *o.word);
  BraidWord b = parse_braid_word(o.strands, *o.other);
  bool eq = braid_equal(a, b);
  if (!g_json) {
    std::cout << (eq ? "equal" : "not equal") << '\n';
    return;
  }
  emit({{"strands", o.strands},
        {"a", braid_json(a)},
        {"b", braid_json(b)},
        {"equal", eq},
        {"rgnf_a", format_normal_form(rgnf(a))},
        {"rgnf_b", format_normal_form(rgnf(b))}});
}

void braid_scpp_k(Options const &o)
{
  BraidWord b = parse_braid_word(o.strands, text_or_stdin(o.word));
  auto c = scpp_permutation_braids(b);
  if (!g_json) {
    if (c)
      std::cout << format_braid_word(c->x) << '\n'
                << format_braid_word(c->y) << '\n';
    else
      std::cout << "none\n";
    return;
  }
  emit({{"strands", o.strands},
        {"input", braid_json(b)},
        {"in_k", c.has_value()},
        {"candidate", c ? candidate_json(*c) : json(nullptr)}});
}

void braid_factor(Options const &o)
{
  BraidWord b = parse_braid_word(o.strands, text_or_stdin(o.word));
  PureFactorization f = pure_braid_factorization(b);
  if (!g_json) {
    std::cout << format_braid_word(f.pure) << '\n'
              << format_braid_word(f.commutator.x) << '\n'
              << format_braid_word(f.commutator.y) << '\n';
    return;
  }
  emit({{"strands", o.strands},
        {"input", braid_json(b)},
        {"pure", braid_json(f.pure)},
        {"pure_reduced", braid_json(free_reduce(f.pure))},
        {"commutator", candidate_json(f.commutator)}});
}

void braid_search(Options const &o)
{
  BraidWord b = parse_braid_word(o.strands, text_or_stdin(o.word));
  SearchTrace t = probabilistic_scpp_search(b, o.budget, o.seed);
  if (!g_json) {
    std::cout << format_trace(t);
    return;
  }
  json milestones = json::array();
  for (auto const &m : t.milestones)
    milestones.push_back({{"word", braid_json(m.word)},
                          {"step", m.step},
                          {"prefix", m.prefix}});
  emit({{"strands", o.strands},
        {"input", braid_json(b)},
        {"seed", t.seed},
        {"rng", SearchTrace::rng_name},
        {"budget", t.budget},
        {"start", braid_json(t.start)},
        {"schedule", t.schedule},
        {"milestones", milestones},
        {"steps", t.steps},
        {"success", t.success},
        {"result", t.result ? candidate_json(*t.result) : json(nullptr)}});
}

void rewrite_complete(Options const &o)
{
  std::optional<RewriteSystem> s;
  if (o.rules_file) {
    if (!o.symbols)
      throw MalformedInput("--rules needs --symbols");
    std::vector<unsigned> symbols;
    for (long long v : parse_integers(*o.symbols)) {
      if (v <= 0)
        throw MalformedInput("symbols must be positive integers");
      symbols.push_back(static_cast<unsigned>(v));
    }
    OrderedAlphabet a(symbols, parse_tie_break(o.tie_break));
    s = knuth_bendix_complete(a, parse_rules(read_file(*o.rules_file)), o.cap);
  } else {
    if (o.degree < 1u)
      throw MalformedInput("rewrite complete needs --degree or --rules");
    RewriteSystem p = sn_presentation(o.degree, parse_tie_break(o.tie_break));
    s = knuth_bendix_complete(p.alphabet(), p.rules(), o.cap);
  }
  bool confluent = is_confluent(*s);
  if (!g_json) {
    std::cout << format_rules(s->rules());
    std::cout << "# " << s->rules().size() << " rules, "
              << (confluent ? "confluent" : "not confluent") << '\n';
    return;
  }
  json rules = json::array();
  for (auto const &r : s->rules())
    rules.push_back({{"lhs", format_word(r.lhs)}, {"rhs", format_word(r.rhs)}});
  emit({{"rules", rules}, {"confluent", confluent}});
}

void tm_run(Options const &o)
{
  std::optional<TuringMachine> m;
  if (o.machine_file)
    m = parse_machine(read_file(*o.machine_file));
  else if (o.builtin == "adder")
    m = adder_machine();
  else if (o.builtin == "binary-adder")
    m = binary_adder_machine();
  else
    throw MalformedInput("tm run needs --machine FILE or --builtin adder|binary-adder");
  RunResult r = run(*m, split_symbols(o.input), o.step_limit);
  std::optional<std::string> output;
  if (o.builtin == "adder")
    output = tape_segment(r, 3);
  else if (o.builtin == "binary-adder")
    output = binary_adder_output(r);
  if (!g_json) {
    std::cout << (r.halted ? "halted" : "timeout") << '\n'
              << "steps " << r.steps << '\n'
              << "tape";
    for (auto const &s : r.tape)
      std::cout << ' ' << s;
    std::cout << '\n';
    if (output)
      std::cout << "output " << *output << '\n';
    return;
  }
  emit({{"halted", r.halted},
        {"steps", r.steps},
        {"state", r.state},
        {"head", r.head},
        {"tape", r.tape},
        {"output", output ? json(*output) : json(nullptr)}});
}

void bench_scaling(Options const &o)
{
  if (o.op != "scpp")
    throw MalformedInput("unknown bench operation '" + o.op + "'");
  std::vector<BenchRow> rows;
  std::vector<double> xs, ys;
  std::string variable;
  if (!o.k_list.empty()) {
    variable = "k";
    for (std::size_t k : o.k_list) {
      rows.push_back(bench_scpp(random_even_word(o.bench_degree, k, o.bench_seed), o.reps));
      xs.push_back(static_cast<double>(rows.back().length));
    }
  } else {
    variable = "n";
    std::vector<unsigned> ns = o.n_list;
    if (ns.empty())
      ns = {8u, 16u, 32u, 64u, 128u};
    for (unsigned n : ns) {
      rows.push_back(bench_scpp(parse_genword(n, o.bench_word), o.reps));
      xs.push_back(n);
    }
  }
  for (auto const &r : rows)
    ys.push_back(static_cast<double>(r.operations));
  std::optional<double> slope = log_log_slope(xs, ys);
  if (g_json) {
    json table = json::array();
    for (auto const &r : rows)
      table.push_back({{"n", r.degree},
                       {"length", r.length},
                       {"operations", r.operations},
                       {"seconds", r.seconds}});
    emit({{"op", o.op},
          {"variable", variable},
          {"reps", o.reps},
          {"rows", table},
          {"slope", slope ? json(*slope) : json(nullptr)}});
    return;
  }
  std::cout << "n length operations seconds\n";
  for (auto const &r : rows)
    std::cout << r.degree << ' ' << r.length << ' ' << r.operations << ' '
              << r.seconds << '\n';
  std::cout << "slope " << variable << ' ';
  if (slope)
    std::cout << *slope << '\n';
  else
    std::cout << "undefined\n";
}

int report(char const *kind, std::exception const &e, int code)
{
  std::cerr << "scpp: " << kind << ": " << e.what() << '\n';
  return code;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Simple commutators in symmetric and braid groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "structured JSON output");
  Options o;

  auto add_degree = [&](CLI::App *c, bool required = true) {
    auto *opt = c->add_option("-n,--degree", o.degree, "degree of S_n");
    if (required)
      opt->required();
  };
  auto add_strands = [&](CLI::App *c) {
    c->add_option("-n,--strands", o.strands, "strand count")
        ->envname("SCPP_STRANDS")
        ->required();
  };
  auto add_word = [&](CLI::App *c, char const *help) {
    c->add_option("word,--word", o.word, help);
  };

  auto *perm = app.add_subcommand("perm", "symmetric group operations");
  perm->require_subcommand(1);
  auto *solve = perm->add_subcommand("solve", "write an even permutation as [x, y]");
  add_degree(solve);
  add_word(solve, "generator word (stdin if absent)");
  solve->callback([&] { perm_solve(o); });
  auto *decompose = perm->add_subcommand("decompose", "disjoint cycles of a word");
  add_degree(decompose);
  add_word(decompose, "generator word (stdin if absent)");
  decompose->callback([&] { perm_decompose(o); });
  auto *ncycles = perm->add_subcommand("ncycles", "two n-cycles whose product is the input");
  add_degree(ncycles);
  add_word(ncycles, "disjoint cycle list (stdin if absent)");
  ncycles->callback([&] { perm_ncycles(o); });
  auto *canonical = perm->add_subcommand("canonical", "ShortLex normal form");
  add_degree(canonical);
  add_word(canonical, "generator word (stdin if absent)");
  canonical->add_option("--tie-break", o.tie_break, "ltr or rtl");
  canonical->callback([&] { perm_canonical(o); });

  auto *braid = app.add_subcommand("braid", "braid group operations");
  braid->require_subcommand(1);
  auto *rg = braid->add_subcommand("rgnf", "right-greedy normal form");
  add_strands(rg);
  add_word(rg, "braid word (stdin if absent)");
  rg->callback([&] { braid_rgnf(o); });
  auto *eq = braid->add_subcommand("equal", "word problem");
  add_strands(eq);
  eq->add_option("a", o.word, "first braid word")->required();
  eq->add_option("b", o.other, "second braid word")->required();
  eq->callback([&] { braid_equal_cmd(o); });
  auto *k = braid->add_subcommand("scpp-k", "commutator of permutation braids");
  add_strands(k);
  add_word(k, "braid word (stdin if absent)");
  k->callback([&] { braid_scpp_k(o); });
  auto *factor = braid->add_subcommand("factor", "pure braid times a commutator");
  add_strands(factor);
  add_word(factor, "braid word (stdin if absent)");
  factor->callback([&] { braid_factor(o); });
  auto *search = braid->add_subcommand("search", "random rewriting search");
  add_strands(search);
  add_word(search, "braid word (stdin if absent)");
  search->add_option("--budget", o.budget, "number of rounds M");
  search->add_option("--seed", o.seed, "RNG seed");
  search->callback([&] { braid_search(o); });

  auto *rewrite = app.add_subcommand("rewrite", "string rewriting");
  rewrite->require_subcommand(1);
  auto *complete = rewrite->add_subcommand("complete", "Knuth-Bendix completion");
  add_degree(complete, false);
  complete->add_option("--rules", o.rules_file, "rule file instead of the S_n presentation");
  complete->add_option("--symbols", o.symbols, "ordered alphabet for --rules");
  complete->add_option("--tie-break", o.tie_break, "ltr or rtl");
  complete->add_option("--cap", o.cap, "maximum number of rule additions");
  complete->callback([&] { rewrite_complete(o); });

  auto *tm = app.add_subcommand("tm", "Turing machines");
  tm->require_subcommand(1);
  auto *tmrun = tm->add_subcommand("run", "run a machine on an input");
  auto *mfile = tmrun->add_option("--machine", o.machine_file, "machine description file");
  tmrun->add_option("--builtin", o.builtin, "adder or binary-adder")->excludes(mfile);
  tmrun->add_option("--input", o.input, "space separated input symbols");
  tmrun->add_option("--step-limit", o.step_limit, "maximum transition invocations");
  tmrun->callback([&] { tm_run(o); });

  auto *bench = app.add_subcommand("bench", "operation count benchmarks");
  bench->require_subcommand(1);
  auto *scaling = bench->add_subcommand("scaling", "operation count scaling table");
  scaling->add_option("--op", o.op, "operation (scpp)");
  auto *nl = scaling->add_option("--n-list", o.n_list, "degrees at a fixed word")->delimiter(',');
  scaling->add_option("--k-list", o.k_list, "word lengths at a fixed degree")
      ->delimiter(',')
      ->excludes(nl);
  scaling->add_option("--degree", o.bench_degree, "degree for --k-list");
  scaling->add_option("--word", o.bench_word, "fixed word for --n-list");
  scaling->add_option("--seed", o.bench_seed, "seed of the random words for --k-list");
  scaling->add_option("--reps", o.reps, "repetitions per row")->check(CLI::PositiveNumber);
  scaling->callback([&] { bench_scaling(o); });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return malformed;
  } catch (PromiseViolation const &e) {
    return report("error", e, promise);
  } catch (MalformedInput const &e) {
    return report("malformed input", e, malformed);
  } catch (MachineStuck const &e) {
    return report("machine stuck", e, malformed);
  } catch (CompletionDiverged const &e) {
    return report("completion diverged", e, diverged);
  } catch (InvariantBreach const &e) {
    return report("error", e, breach);
  } catch (std::exception const &e) {
    return report("internal error", e, breach);
  }
  return ok;
}
