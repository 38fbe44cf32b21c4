// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fsa/symbol_set.hpp"

namespace fslat::fsa {

using StateId = std::uint32_t;
using Word = std::vector<SymbolId>;

struct Edge {
  SymbolSet label;
  StateId target;
};

// Nondeterministic automaton with symbol-set and epsilon transitions.
class Nfa {
 public:
  StateId addState(bool final = false);
  void addEdge(StateId from, SymbolSet label, StateId to);
  void addEpsilon(StateId from, StateId to);
  void setStart(StateId state) { start_ = state; }
  void setFinal(StateId state, bool final = true) { final_.at(state) = final; }

  std::size_t stateCount() const { return edges_.size(); }
  StateId start() const { return start_; }
  bool isFinal(StateId state) const { return final_[state]; }
  std::span<const Edge> edges(StateId state) const { return edges_[state]; }
  std::span<const StateId> epsilons(StateId state) const { return epsilons_[state]; }

 private:
  std::vector<std::vector<Edge>> edges_;
  std::vector<std::vector<StateId>> epsilons_;
  std::vector<bool> final_;
  StateId start_ = 0;
};

// Deterministic automaton: the labels leaving one state are pairwise
// disjoint. Transitions are partial; a missing symbol rejects. A default
// constructed Dfa has a single non-final start state and accepts nothing.
class Dfa {
 public:
  Dfa() { addState(); }

  StateId addState(bool final = false);
  // Throws if the label overlaps an existing label of `from`.
  void addEdge(StateId from, SymbolSet label, StateId to);
  // Caller guarantees disjointness; used by the algorithms below.
  void appendEdge(StateId from, SymbolSet label, StateId to) { edges_[from].push_back({std::move(label), to}); }
  void setStart(StateId state) { start_ = state; }
  void setFinal(StateId state, bool final = true) { final_.at(state) = final; }

  std::size_t stateCount() const { return edges_.size(); }
  std::size_t transitionCount() const;
  StateId start() const { return start_; }
  bool isFinal(StateId state) const { return final_[state]; }
  std::span<const Edge> edges(StateId state) const { return edges_[state]; }

  // Successor on `symbol`, or -1 when undefined.
  std::int64_t step(StateId state, SymbolId symbol) const;
  bool accepts(std::span<const SymbolId> word) const;

 private:
  std::vector<std::vector<Edge>> edges_;
  std::vector<bool> final_;
  StateId start_ = 0;
};

}  // namespace fslat::fsa
