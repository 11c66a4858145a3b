#ifndef SCPP_WIRE_HPP
#define SCPP_WIRE_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scpp/permutation.hpp"

/**
 * @file wire.hpp
 * @brief Zero-delimited integer text formats for words and cycle lists.
 *
 * A cycle list is written as its entries with a single 0 after each cycle
 * but the last, and "0 0" after the last one:
 *
 *     1 2 3 0 4 5 0 6 7 0 0
 *
 * A pair of cycle products is written as the first product, "0 0", the
 * second product and a closing "0 0 0":
 *
 *     1 2 3 0 1 2 3 0 0 1 2 3 0 1 2 3 0 0 0
 *
 * Parse errors are reported as MalformedInput naming the 1-based token.
 */

namespace scpp
{

/// Whitespace separated signed integers. "e" is not accepted here.
std::vector<long long> parse_integers(std::string_view text);

/// Generator word, "e" or blank text for the empty word.
GenWord parse_genword(unsigned degree, std::string_view text);
/// "e" for the empty word.
std::string format_genword(GenWord const &w);

CycleList parse_cycle_list(unsigned degree, std::string_view text);
std::string format_cycle_list(CycleList const &c);

std::pair<CycleList, CycleList> parse_cycle_pair(unsigned degree,
                                                 std::string_view text);
std::string format_cycle_pair(CycleList const &first, CycleList const &second);

/// "(1 2 3)(4 5)", 1-cycles elided; "()" for the identity.
std::string format_cycles_readable(CycleList const &c);

} // namespace scpp

#endif // SCPP_WIRE_HPP
