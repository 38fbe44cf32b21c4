// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <string>
#include <vector>

#include "fsa/alphabet.hpp"
#include "fsa/automaton.hpp"
#include "grammar/grammar.hpp"

namespace fslat::grammar {

struct CompiledRule {
  std::string name;
  fsa::Dfa automaton;
  // Accepts every string.
  bool vacuous = false;
  // Rejects every string that contains the target.
  bool unsatisfiable = false;
  // Alphabet the symbol ids refer to.
  const fsa::Alphabet* alphabet = nullptr;
};

// Accepts w iff every factorization w = u x v with x in the target has a
// context i with u in (anything) left_i and v in right_i (anything).
// Literals are interned into the alphabet. The rule must be expanded.
// Throws Compile when the target accepts the empty string.
CompiledRule compileRule(const ImplicationRule& rule, fsa::Alphabet& alphabet);

// Expands and compiles every rule, in grammar order.
std::vector<CompiledRule> compileGrammar(const Grammar& grammar, fsa::Alphabet& alphabet);

// Reference evaluation of the rule semantics by checking every
// factorization of the reading directly on symbol texts. `..` stops at the
// node's exclusion list, or at @@ @/ @< @> when the list is empty.
bool bruteForceAccepts(const ImplicationRule& rule, const std::vector<std::string>& reading);

}  // namespace fslat::grammar
