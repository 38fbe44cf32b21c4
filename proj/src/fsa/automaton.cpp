// Licensed under the Apache License 2.0 (see LICENSE file).

#include "fsa/automaton.hpp"

#include "common/error.hpp"

namespace fslat::fsa {

StateId Nfa::addState(bool final) {
  edges_.emplace_back();
  epsilons_.emplace_back();
  final_.push_back(final);
  return static_cast<StateId>(edges_.size() - 1);
}

void Nfa::addEdge(StateId from, SymbolSet label, StateId to) {
  if (label.empty()) return;
  edges_.at(from).push_back({std::move(label), to});
}

void Nfa::addEpsilon(StateId from, StateId to) { epsilons_.at(from).push_back(to); }

StateId Dfa::addState(bool final) {
  edges_.emplace_back();
  final_.push_back(final);
  return static_cast<StateId>(edges_.size() - 1);
}

void Dfa::addEdge(StateId from, SymbolSet label, StateId to) {
  if (label.empty()) return;
  auto& row = edges_.at(from);
  for (const Edge& e : row) {
    if (!(e.label & label).empty()) throw Error(ErrorKind::Internal, "overlapping labels on a deterministic state");
  }
  row.push_back({std::move(label), to});
}

std::size_t Dfa::transitionCount() const {
  std::size_t n = 0;
  for (const auto& row : edges_) n += row.size();
  return n;
}

std::int64_t Dfa::step(StateId state, SymbolId symbol) const {
  for (const Edge& e : edges_[state]) {
    if (e.label.contains(symbol)) return e.target;
  }
  return -1;
}

bool Dfa::accepts(std::span<const SymbolId> word) const {
  std::int64_t state = start_;
  for (SymbolId s : word) {
    state = step(static_cast<StateId>(state), s);
    if (state < 0) return false;
  }
  return final_[static_cast<std::size_t>(state)];
}

}  // namespace fslat::fsa
