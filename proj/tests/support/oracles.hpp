// Licensed under the Apache License 2.0 (see LICENSE file).

// Test-only reference implementations. Nothing here calls into the
// automata algorithms under test; each oracle works directly on the
// definitions (membership by simulation, exhaustive enumeration, table
// filling).

#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "fsa/automaton.hpp"

namespace fslat::testing {

using fsa::StateId;
using fsa::SymbolId;
using fsa::Word;

// Every string over `symbols` of length <= maxLength, shortest first.
inline std::vector<Word> allWords(const std::vector<SymbolId>& symbols, std::size_t maxLength) {
  std::vector<Word> out{{}};
  std::vector<Word> layer{{}};
  for (std::size_t len = 1; len <= maxLength; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (SymbolId s : symbols) {
        Word v = w;
        v.push_back(s);
        next.push_back(std::move(v));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Subset simulation of an NFA, epsilon closure included.
inline bool nfaAccepts(const fsa::Nfa& nfa, const Word& word) {
  auto close = [&](std::set<StateId> states) {
    std::vector<StateId> stack(states.begin(), states.end());
    while (!stack.empty()) {
      StateId s = stack.back();
      stack.pop_back();
      for (StateId t : nfa.epsilons(s)) {
        if (states.insert(t).second) stack.push_back(t);
      }
    }
    return states;
  };
  std::set<StateId> current = close({nfa.start()});
  for (SymbolId sym : word) {
    std::set<StateId> next;
    for (StateId s : current) {
      for (const auto& e : nfa.edges(s)) {
        if (e.label.contains(sym)) next.insert(e.target);
      }
    }
    current = close(std::move(next));
  }
  return std::any_of(current.begin(), current.end(), [&](StateId s) { return nfa.isFinal(s); });
}

// Random partial DFA over single-symbol edges. With `acyclic`, edges only
// go from lower to higher state ids.
inline fsa::Dfa randomDfa(std::mt19937& rng, const std::vector<SymbolId>& symbols, std::size_t maxStates,
                          bool acyclic = false, double edgeProbability = 0.6) {
  std::uniform_int_distribution<std::size_t> stateCount(1, maxStates);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution edge(edgeProbability);
  const std::size_t n = stateCount(rng);
  fsa::Dfa dfa;
  for (std::size_t i = 1; i < n; ++i) dfa.addState();
  for (StateId s = 0; s < n; ++s) {
    dfa.setFinal(s, coin(rng));
    for (SymbolId sym : symbols) {
      if (!edge(rng)) continue;
      StateId lo = acyclic ? s + 1 : 0;
      if (lo >= n) continue;
      std::uniform_int_distribution<StateId> target(lo, static_cast<StateId>(n - 1));
      dfa.addEdge(s, fsa::SymbolSet::single(sym), target(rng));
    }
  }
  return dfa;
}

inline fsa::Nfa randomNfa(std::mt19937& rng, const std::vector<SymbolId>& symbols, std::size_t maxStates) {
  std::uniform_int_distribution<std::size_t> stateCount(1, maxStates);
  std::bernoulli_distribution coin(0.3);
  const std::size_t n = stateCount(rng);
  std::uniform_int_distribution<StateId> anyState(0, static_cast<StateId>(n - 1));
  fsa::Nfa nfa;
  for (std::size_t i = 0; i < n; ++i) nfa.addState(coin(rng));
  for (StateId s = 0; s < n; ++s) {
    for (SymbolId sym : symbols) {
      if (coin(rng)) nfa.addEdge(s, fsa::SymbolSet::single(sym), anyState(rng));
      if (coin(rng)) nfa.addEdge(s, fsa::SymbolSet::single(sym), anyState(rng));
    }
    if (coin(rng)) nfa.addEpsilon(s, anyState(rng));
  }
  return nfa;
}

// Number of states of the minimal trimmed DFA for L(dfa), via the
// table-filling algorithm on the completed automaton.
inline std::size_t minimalStateCount(const fsa::Dfa& dfa, const std::vector<SymbolId>& symbols) {
  const std::size_t n = dfa.stateCount() + 1;
  const StateId sink = static_cast<StateId>(dfa.stateCount());
  auto next = [&](StateId s, SymbolId sym) -> StateId {
    if (s == sink) return sink;
    auto t = dfa.step(s, sym);
    return t < 0 ? sink : static_cast<StateId>(t);
  };
  auto final = [&](StateId s) { return s != sink && dfa.isFinal(s); };

  std::vector<bool> reach(n, false);
  std::vector<StateId> stack{dfa.start(), sink};
  reach[dfa.start()] = reach[sink] = true;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (SymbolId sym : symbols) {
      StateId t = next(s, sym);
      if (!reach[t]) {
        reach[t] = true;
        stack.push_back(t);
      }
    }
  }

  std::vector<std::vector<bool>> distinct(n, std::vector<bool>(n, false));
  for (StateId p = 0; p < n; ++p)
    for (StateId q = 0; q < n; ++q) distinct[p][q] = final(p) != final(q);
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId p = 0; p < n; ++p) {
      for (StateId q = 0; q < n; ++q) {
        if (distinct[p][q]) continue;
        for (SymbolId sym : symbols) {
          if (distinct[next(p, sym)][next(q, sym)]) {
            distinct[p][q] = true;
            changed = true;
            break;
          }
        }
      }
    }
  }
  std::vector<StateId> reps;
  for (StateId s = 0; s < n; ++s) {
    if (!reach[s]) continue;
    bool fresh = std::none_of(reps.begin(), reps.end(), [&](StateId r) { return !distinct[r][s]; });
    if (fresh) reps.push_back(s);
  }
  // The class of the sink holds every dead state; trimming removes it.
  return reps.size() - 1;
}

}  // namespace fslat::testing
