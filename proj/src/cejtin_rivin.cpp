#include "scpp/cejtin_rivin.hpp"

#include <algorithm>
#include <sstream>

#include "scpp/errors.hpp"
#include "scpp/op_counter.hpp"

namespace scpp
{

std::string to_string(Branch b)
{
  switch (b) {
  case Branch::single_odd_cycle:
    return "single-odd-cycle";
  case Branch::equal_even_pair:
    return "equal-even-pair";
  case Branch::unequal_even_pair:
    return "unequal-even-pair";
  case Branch::peel_odd:
    return "peel-odd";
  case Branch::peel_even_pair:
    return "peel-even-pair";
  }
  return "unknown";
}

namespace
{

using Product = std::vector<Cycle>;

struct Factorization
{
  Product c1;
  Product c2;
};

std::vector<unsigned> support_of(std::vector<Cycle> const &cycles)
{
  std::vector<unsigned> s;
  for (auto const &c : cycles)
    s.insert(s.end(), c.begin(), c.end());
  std::sort(s.begin(), s.end());
  ops::tick(s.size());
  return s;
}

unsigned max_of(std::vector<Cycle> const &cycles)
{
  unsigned m = 0u;
  for (auto const &c : cycles) {
    for (unsigned v : c)
      m = std::max(m, v);
    ops::tick(c.size());
  }
  return m;
}

// c of odd length k is c^(k+1)/2 squared, and c^(k+1)/2 is again a k-cycle.
Factorization odd_cycle(Cycle const &c)
{
  std::size_t copies = (c.size() + 1u) / 2u;
  Factorization f;
  f.c1.assign(copies, c);
  f.c2.assign(copies, c);
  ops::tick(2u * copies * c.size());
  return f;
}

// (a1 .. a2m)(b1 .. b2m) is the square of (a1 b1 a2 b2 ... a2m b2m).
Factorization equal_even(Cycle const &a, Cycle const &b)
{
  Cycle c;
  c.reserve(a.size() * 2u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    c.push_back(a[i]);
    c.push_back(b[i]);
  }
  ops::tick(c.size());
  return {{c}, {c}};
}

// A 2s-cycle a and a 2t-cycle b, s < t. Label i_1 .. i_n (n = 2s + 2t) so
// that a = (i_1 i_3 .. i_{4s-1}) and
// b = (i_2 i_4 .. i_n i_{4s+1} i_{4s+3} .. i_{n-1}). Then
// a b = (i_1 i_{4s+1} .. i_n i_2 .. i_{4s}) (i_1 i_2 .. i_n).
Factorization unequal_even(Cycle const &a, Cycle const &b)
{
  std::size_t s2 = a.size();
  std::size_t n = a.size() + b.size();
  std::vector<unsigned> label(n + 1u, 0u);
  for (std::size_t j = 0; j < s2; ++j)
    label[2u * j + 1u] = a[j];
  std::size_t k = 0;
  for (std::size_t idx = 2; idx <= n; idx += 2)
    label[idx] = b[k++];
  for (std::size_t idx = 2u * s2 + 1u; idx < n; idx += 2)
    label[idx] = b[k++];
  ops::tick(n);

  Cycle first;
  first.reserve(n);
  first.push_back(label[1]);
  for (std::size_t idx = 2u * s2 + 1u; idx <= n; ++idx)
    first.push_back(label[idx]);
  for (std::size_t idx = 2; idx <= 2u * s2; ++idx)
    first.push_back(label[idx]);
  Cycle second(label.begin() + 1, label.end());
  ops::tick(2u * n);
  return {{first}, {second}};
}

// sigma1 = a1 a2 on support S1, sigma2 = b1 b2 on a disjoint support S2,
// u = max S1, v = max S2. Then sigma1 sigma2 = (a1 b1 (u v)) ((u v) b2 a2)
// and both factors are (|S1| + |S2|)-cycles.
Factorization join(Factorization const &peeled, unsigned u,
                   Factorization const &rest, unsigned v)
{
  Factorization f;
  f.c1 = peeled.c1;
  f.c1.insert(f.c1.end(), rest.c1.begin(), rest.c1.end());
  f.c1.push_back({u, v});
  f.c2.push_back({u, v});
  f.c2.insert(f.c2.end(), rest.c2.begin(), rest.c2.end());
  f.c2.insert(f.c2.end(), peeled.c2.begin(), peeled.c2.end());
  ops::tick(f.c1.size() + f.c2.size());
  return f;
}

class Solver
{
public:
  std::vector<BranchStep> trace;
  unsigned max_depth = 0u;

  Factorization solve(std::vector<Cycle> cycles, unsigned depth)
  {
    max_depth = std::max(max_depth, depth);
    ops::tick(cycles.size());
    if (cycles.size() == 1u) {
      if (cycles.front().size() % 2u == 0u)
        throw InvariantBreach("single even cycle reached the n-cycle splitter");
      record(Branch::single_odd_cycle, depth, cycles);
      return odd_cycle(cycles.front());
    }
    if (cycles.size() == 2u && cycles[0].size() % 2u == 0u &&
        cycles[1].size() % 2u == 0u) {
      if (cycles[0].size() == cycles[1].size()) {
        record(Branch::equal_even_pair, depth, cycles);
        return equal_even(cycles[0], cycles[1]);
      }
      record(Branch::unequal_even_pair, depth, cycles);
      if (cycles[0].size() < cycles[1].size())
        return unequal_even(cycles[0], cycles[1]);
      return unequal_even(cycles[1], cycles[0]);
    }

    auto odd = std::find_if(cycles.begin(), cycles.end(),
                            [](Cycle const &c) { return c.size() % 2u == 1u; });
    std::vector<Cycle> peeled;
    if (odd != cycles.end()) {
      record(Branch::peel_odd, depth, cycles);
      peeled.push_back(std::move(*odd));
      cycles.erase(odd);
    } else {
      // No odd cycle: at least four even cycles remain.
      record(Branch::peel_even_pair, depth, cycles);
      peeled.push_back(std::move(cycles[0]));
      peeled.push_back(std::move(cycles[1]));
      cycles.erase(cycles.begin(), cycles.begin() + 2);
    }
    ops::tick(cycles.size());
    unsigned u = max_of(peeled);
    unsigned v = max_of(cycles);
    Factorization left = solve(std::move(peeled), depth + 1u);
    Factorization right = solve(std::move(cycles), depth + 1u);
    return join(left, u, right, v);
  }

private:
  void record(Branch b, unsigned depth, std::vector<Cycle> const &cycles)
  {
    trace.push_back({b, depth, support_of(cycles)});
  }
};

NCycle evaluate_ncycle(CycleList const &c, char const *name)
{
  auto decomposition = cycle_decomposition(cycles_to_permutation(c));
  if (decomposition.cycles.size() != 1u)
    throw InvariantBreach(std::string(name) + " does not evaluate to an n-cycle");
  return NCycle(c.degree, std::move(decomposition.cycles.front()));
}

} // namespace

TwoCycleProduct two_ncycle_product(CycleList const &d)
{
  if (d.cycles.empty())
    throw MalformedInput("empty cycle decomposition");
  CycleList checked = d;
  checked.disjoint = true;
  validate(checked);
  std::size_t covered = 0;
  for (auto const &c : d.cycles)
    covered += c.size();
  if (covered != d.degree)
    throw MalformedInput("cycle decomposition covers " + std::to_string(covered) +
                         " of " + std::to_string(d.degree) + " points");
  Permutation sigma = cycles_to_permutation(checked);
  if (parity(sigma) == Parity::odd)
    throw PromiseViolation("odd permutation is not a commutator");

  Solver solver;
  Factorization f = solver.solve(d.cycles, 0u);
  TwoCycleProduct out{CycleList{d.degree, std::move(f.c1), false},
                      CycleList{d.degree, std::move(f.c2), false},
                      std::move(solver.trace), solver.max_depth};

  auto p1 = cycles_to_permutation(out.c1);
  auto p2 = cycles_to_permutation(out.c2);
  if (!is_n_cycle(p1) || !is_n_cycle(p2))
    throw InvariantBreach("n-cycle splitter produced a factor that is not an n-cycle");
  if (compose(p1, p2) != sigma)
    throw InvariantBreach("n-cycle splitter factors do not multiply to the input");
  return out;
}

ScppSolution scpp_solve(GenWord const &w)
{
  Permutation sigma = word_to_permutation(w);
  if (parity(sigma) == Parity::odd)
    throw PromiseViolation("odd permutation is not a commutator");
  CycleList decomposition = cycle_decomposition(sigma);
  TwoCycleProduct products = two_ncycle_product(decomposition);
  NCycle c1 = evaluate_ncycle(products.c1, "c1");
  NCycle c2 = evaluate_ncycle(products.c2, "c2");
  NCycle c3 = reverse_ncycle(c1);
  CycleList tau = conjugator_of_ncycles(c3, c2);
  GenWord x = cycles_to_genword(c1.as_cycle_list());
  GenWord y = cycles_to_genword(tau);
  GenWord x_inverse = cycles_to_genword(c3.as_cycle_list());
  GenWord y_inverse = reversed(y);
  ScppSolution s{std::move(sigma), std::move(decomposition), std::move(products),
                 std::move(c1),    std::move(c2),            std::move(c3),
                 std::move(tau),   std::move(x),             std::move(y),
                 std::move(x_inverse), std::move(y_inverse)};
  if (word_to_permutation(commutator_word(s)) != s.sigma)
    throw InvariantBreach("commutator does not evaluate to the input");
  return s;
}

GenWord commutator_word(ScppSolution const &s)
{
  return concat(concat(s.x, s.y), concat(s.x_inverse, s.y_inverse));
}

std::string format_solution(ScppSolution const &s)
{
  std::ostringstream os;
  bool first = true;
  auto put = [&](unsigned v) {
    os << (first ? "" : " ") << v;
    first = false;
  };
  for (GenWord const *w : {&s.x, &s.y, &s.x_inverse, &s.y_inverse}) {
    for (unsigned letter : w->letters())
      put(letter);
    put(0u);
  }
  put(0u);
  return os.str();
}

} // namespace scpp
