// Licensed under the Apache License 2.0 (see LICENSE file).

// Rule compilation. An occurrence of the target is bracketed by a mark
// symbol that never occurs in readings:
//
//   Occ      = any* M T M any*
//   Licensed = U_i  any* L_i M any* M R_i any*
//   Bad      = Occ - Licensed
//
// Erasing the marks from Bad leaves exactly the strings with at least one
// unlicensed occurrence; the rule is its complement.

#include "grammar/compile.hpp"

#include <algorithm>

#include "fsa/operations.hpp"

namespace fslat::grammar {

namespace {

using fsa::Nfa;
using fsa::StateId;
using fsa::SymbolSet;
using K = Pattern::Kind;

struct Placed {
  StateId start;
  std::vector<StateId> finals;
};

Placed copyInto(Nfa& into, const Nfa& part) {
  const StateId base = static_cast<StateId>(into.stateCount());
  Placed placed{base + part.start(), {}};
  for (StateId s = 0; s < part.stateCount(); ++s) {
    into.addState();
    if (part.isFinal(s)) placed.finals.push_back(base + s);
  }
  for (StateId s = 0; s < part.stateCount(); ++s) {
    for (const auto& e : part.edges(s)) into.addEdge(base + s, e.label, base + e.target);
    for (StateId t : part.epsilons(s)) into.addEpsilon(base + s, base + t);
  }
  return placed;
}

Nfa sequence(const std::vector<const Nfa*>& parts) {
  Nfa out;
  std::vector<StateId> previous;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Placed p = copyInto(out, *parts[i]);
    if (i == 0) {
      out.setStart(p.start);
    } else {
      for (StateId f : previous) out.addEpsilon(f, p.start);
    }
    previous = std::move(p.finals);
  }
  for (StateId f : previous) out.setFinal(f);
  return out;
}

Nfa alternatives(const std::vector<Nfa>& parts) {
  Nfa out;
  const StateId start = out.addState();
  out.setStart(start);
  for (const Nfa& part : parts) {
    Placed p = copyInto(out, part);
    out.addEpsilon(start, p.start);
    for (StateId f : p.finals) out.setFinal(f);
  }
  return out;
}

Nfa anything() {
  Nfa n;
  StateId s = n.addState(true);
  n.addEdge(s, SymbolSet::any(), s);
  return n;
}

Nfa mark() {
  Nfa n;
  StateId a = n.addState();
  StateId b = n.addState(true);
  n.addEdge(a, SymbolSet::single(fsa::kMarkSymbol), b);
  return n;
}

Nfa eraseMarks(const fsa::Dfa& dfa) {
  Nfa n;
  for (StateId s = 0; s < dfa.stateCount(); ++s) n.addState(dfa.isFinal(s));
  n.setStart(dfa.start());
  const SymbolSet markOnly = SymbolSet::single(fsa::kMarkSymbol);
  for (StateId s = 0; s < dfa.stateCount(); ++s) {
    for (const auto& e : dfa.edges(s)) {
      if (e.label.contains(fsa::kMarkSymbol)) n.addEpsilon(s, e.target);
      SymbolSet rest = e.label - markOnly;
      if (!rest.empty()) n.addEdge(s, std::move(rest), e.target);
    }
  }
  return n;
}

void internLiterals(const Pattern& p, fsa::Alphabet& alphabet) {
  switch (p.kind) {
    case K::Symbol:
      alphabet.intern(p.text);
      break;
    case K::Name:
      if (!alphabet.findClass(p.text)) alphabet.intern(p.text);
      break;
    case K::Class:
    case K::NegatedClass:
    case K::ClauseGap:
      for (const auto& m : p.members) alphabet.intern(m);
      break;
    default:
      break;
  }
  for (const auto& c : p.children) internLiterals(c, alphabet);
}

}  // namespace

CompiledRule compileRule(const ImplicationRule& rule, fsa::Alphabet& alphabet) {
  if (rule.contexts.empty()) throw Error(ErrorKind::Compile, "rule " + rule.name + " has no contexts", rule.where);
  internLiterals(rule.target, alphabet);
  for (const auto& c : rule.contexts) {
    internLiterals(c.left, alphabet);
    internLiterals(c.right, alphabet);
  }

  const Nfa target = fsa::fromPattern(rule.target, alphabet);
  const fsa::Dfa targetDfa = fsa::determinize(target);
  if (targetDfa.isFinal(targetDfa.start())) {
    throw Error(ErrorKind::Compile, "target of rule " + rule.name + " matches the empty string", rule.target.where);
  }

  const Nfa any = anything();
  const Nfa m = mark();
  const fsa::Dfa occurrences = fsa::determinize(sequence({&any, &m, &target, &m, &any}));

  std::vector<Nfa> licensed;
  for (const auto& c : rule.contexts) {
    const Nfa left = fsa::fromPattern(c.left, alphabet);
    const Nfa right = fsa::fromPattern(c.right, alphabet);
    licensed.push_back(sequence({&any, &left, &m, &any, &m, &right, &any}));
  }
  const fsa::Dfa notLicensed = fsa::complement(fsa::determinize(alternatives(licensed)), SymbolSet::universe());
  const fsa::Dfa bad = fsa::intersect(occurrences, notLicensed);
  const fsa::Dfa violating = fsa::determinize(eraseMarks(bad));

  CompiledRule out;
  out.name = rule.name;
  out.alphabet = &alphabet;
  out.automaton = fsa::minimize(fsa::complement(violating, SymbolSet::any()));
  out.vacuous = fsa::isEmpty(violating);
  const fsa::Dfa containing = fsa::determinize(sequence({&any, &target, &any}));
  out.unsatisfiable = fsa::isEmpty(fsa::intersect(out.automaton, containing));
  return out;
}

std::vector<CompiledRule> compileGrammar(const Grammar& grammar, fsa::Alphabet& alphabet) {
  const Grammar expanded = expandConstants(grammar);
  std::vector<CompiledRule> out;
  out.reserve(expanded.rules.size());
  for (const auto& r : expanded.rules) out.push_back(compileRule(r, alphabet));
  return out;
}

}  // namespace fslat::grammar
