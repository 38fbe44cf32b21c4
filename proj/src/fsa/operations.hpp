// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstddef>
#include <limits>
#include <ostream>
#include <vector>

#include "fsa/alphabet.hpp"
#include "fsa/automaton.hpp"
#include "fsa/big_count.hpp"
#include "fsa/pattern.hpp"

namespace fslat::fsa {

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

// Thompson construction. Names, literals and classes must be present in the
// alphabet; `..` may not cross the alphabet's CLB class unless the node
// carries its own exclusion list.
Nfa fromPattern(const Pattern& pattern, const Alphabet& alphabet);

Dfa determinize(const Nfa& nfa);
// Keeps states that are reachable and co-reachable, renumbered in
// breadth-first order from the start state.
Dfa trim(const Dfa& dfa);
Dfa minimize(const Dfa& dfa);
// Accepts Σ* minus L(dfa), where Σ is every symbol except the internal mark.
Dfa complement(const Dfa& dfa, const Alphabet& alphabet);
Dfa complement(const Dfa& dfa, const SymbolSet& universe);
Dfa intersect(const Dfa& a, const Dfa& b);
Dfa unite(const Dfa& a, const Dfa& b);

bool isEmpty(const Dfa& dfa);
bool equivalent(const Dfa& a, const Dfa& b);
// True when the useful part of the automaton contains a cycle.
bool hasCycle(const Dfa& dfa);

// Exact number of accepted strings in one pass over a topological order.
// Throws InfiniteLanguage on a useful cycle and Precondition on a
// co-finite label.
BigCount countPaths(const Dfa& dfa);

// Up to `limit` accepted strings in shortlex order over symbol ids.
// Co-finite labels need the alphabet overload to be expanded.
std::vector<Word> enumerate(const Dfa& dfa, std::size_t limit);
std::vector<Word> enumerate(const Dfa& dfa, std::size_t limit, const Alphabet& alphabet);

Dfa acceptAll();
Dfa acceptEmptyString();
Dfa fromWords(const std::vector<Word>& words);
Nfa toNfa(const Dfa& dfa);

// Plain-text graph: `src TAB symbol TAB dst` lines ordered by state then
// symbol, then a `final:` header followed by one final state per line.
void dump(const Dfa& dfa, const Alphabet& alphabet, std::ostream& out);
void dump(const Nfa& nfa, const Alphabet& alphabet, std::ostream& out);

}  // namespace fslat::fsa
