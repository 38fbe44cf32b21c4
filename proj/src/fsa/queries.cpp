// Licensed under the Apache License 2.0 (see LICENSE file).

#include <algorithm>
#include <vector>

#include "common/error.hpp"
#include "fsa/operations.hpp"

namespace fslat::fsa {

namespace {

// Reverse topological order of the trimmed automaton; throws on a cycle.
std::vector<StateId> topologicalPostOrder(const Dfa& dfa) {
  std::vector<StateId> order;
  order.reserve(dfa.stateCount());
  std::vector<char> color(dfa.stateCount(), 0);
  std::vector<std::pair<StateId, std::size_t>> stack{{dfa.start(), 0}};
  color[dfa.start()] = 1;
  while (!stack.empty()) {
    auto& [s, i] = stack.back();
    auto edges = dfa.edges(s);
    if (i < edges.size()) {
      StateId t = edges[i++].target;
      if (color[t] == 1) throw Error(ErrorKind::InfiniteLanguage, "infinite language: the automaton has a useful cycle");
      if (color[t] == 0) {
        color[t] = 1;
        stack.emplace_back(t, 0);
      }
    } else {
      color[s] = 2;
      order.push_back(s);
      stack.pop_back();
    }
  }
  return order;
}

// Successors with concrete symbols, sorted by symbol.
using Successors = std::vector<std::vector<std::pair<SymbolId, StateId>>>;

Dfa concretize(const Dfa& dfa, const Alphabet* alphabet) {
  Dfa out;
  for (std::size_t i = 1; i < dfa.stateCount(); ++i) out.addState();
  for (StateId s = 0; s < dfa.stateCount(); ++s) {
    out.setFinal(s, dfa.isFinal(s));
    for (const Edge& e : dfa.edges(s)) {
      if (!e.label.cofinite()) {
        out.appendEdge(s, e.label, e.target);
        continue;
      }
      if (alphabet == nullptr) {
        throw Error(ErrorKind::Precondition, "enumerating a co-finite label needs an alphabet");
      }
      SymbolSet concrete = alphabet->symbols() & e.label;
      if (!concrete.empty()) out.appendEdge(s, std::move(concrete), e.target);
    }
  }
  out.setStart(dfa.start());
  return trim(out);
}

std::vector<Word> enumerateConcrete(const Dfa& dfa, std::size_t limit) {
  std::vector<Word> result;
  if (limit == 0 || isEmpty(dfa)) return result;

  const std::size_t n = dfa.stateCount();
  Successors next(n);
  for (StateId s = 0; s < n; ++s) {
    for (const Edge& e : dfa.edges(s)) {
      for (SymbolId sym : e.label.ids()) next[s].emplace_back(sym, e.target);
    }
    std::sort(next[s].begin(), next[s].end());
  }

  const bool cyclic = hasCycle(dfa);
  if (cyclic && limit == kUnlimited) {
    throw Error(ErrorKind::InfiniteLanguage, "cannot enumerate an infinite language without a limit");
  }
  std::size_t longest = 0;
  if (!cyclic) {
    std::vector<std::size_t> height(n, 0);
    for (StateId s : topologicalPostOrder(dfa)) {
      for (const auto& [sym, t] : next[s]) height[s] = std::max(height[s], height[t] + 1);
    }
    longest = height[dfa.start()];
  }

  // reaches[r][s]: some final state is exactly r steps away from s.
  std::vector<std::vector<bool>> reaches;
  reaches.emplace_back(n, false);
  for (StateId s = 0; s < n; ++s) reaches[0][s] = dfa.isFinal(s);

  Word word;
  // Depth-first in symbol order restricted to states that can still finish
  // in exactly the remaining number of steps yields lexicographic order.
  auto walk = [&](auto&& self, StateId s, std::size_t remaining) -> void {
    if (result.size() >= limit) return;
    if (remaining == 0) {
      result.push_back(word);
      return;
    }
    for (const auto& [sym, t] : next[s]) {
      if (!reaches[remaining - 1][t]) continue;
      word.push_back(sym);
      self(self, t, remaining - 1);
      word.pop_back();
      if (result.size() >= limit) return;
    }
  };

  for (std::size_t length = 0; cyclic || length <= longest; ++length) {
    if (length > 0) {
      std::vector<bool> layer(n, false);
      const auto& prev = reaches[length - 1];
      for (StateId s = 0; s < n; ++s) {
        for (const auto& [sym, t] : next[s]) {
          if (prev[t]) {
            layer[s] = true;
            break;
          }
        }
      }
      reaches.push_back(std::move(layer));
    }
    if (reaches[length][dfa.start()]) walk(walk, dfa.start(), length);
    if (result.size() >= limit) break;
  }
  return result;
}

void writeLabel(const SymbolSet& label, const Alphabet& alphabet, std::ostream& out) {
  auto name = [&](SymbolId id) -> std::string { return id == kMarkSymbol ? "@MARK" : alphabet.text(id); };
  out << '~';
  if (label.ids().size() == 1 && label.ids()[0] == kMarkSymbol) return;
  out << '{';
  bool first = true;
  for (SymbolId id : label.ids()) {
    if (id == kMarkSymbol) continue;
    if (!first) out << ' ';
    out << name(id);
    first = false;
  }
  out << '}';
}

template <typename Automaton>
void dumpEdges(const Automaton& a, StateId s, const Alphabet& alphabet, std::ostream& out) {
  std::vector<std::pair<SymbolId, StateId>> finite;
  std::vector<const Edge*> cofinite;
  for (const Edge& e : a.edges(s)) {
    if (e.label.cofinite()) {
      cofinite.push_back(&e);
    } else {
      for (SymbolId id : e.label.ids()) finite.emplace_back(id, e.target);
    }
  }
  std::sort(finite.begin(), finite.end());
  for (const auto& [id, t] : finite) {
    out << s << '\t' << (id == kMarkSymbol ? std::string("@MARK") : alphabet.text(id)) << '\t' << t << '\n';
  }
  for (const Edge* e : cofinite) {
    out << s << '\t';
    writeLabel(e->label, alphabet, out);
    out << '\t' << e->target << '\n';
  }
}

}  // namespace

BigCount countPaths(const Dfa& input) {
  const Dfa dfa = trim(input);
  if (isEmpty(dfa)) return BigCount(0);
  std::vector<BigCount> count(dfa.stateCount());
  for (StateId s : topologicalPostOrder(dfa)) {
    BigCount total = dfa.isFinal(s) ? 1 : 0;
    for (const Edge& e : dfa.edges(s)) {
      if (e.label.cofinite()) throw Error(ErrorKind::Precondition, "cannot count paths over a co-finite label");
      total += BigCount(e.label.size()) * count[e.target];
    }
    count[s] = std::move(total);
  }
  return count[dfa.start()];
}

std::vector<Word> enumerate(const Dfa& dfa, std::size_t limit) {
  return enumerateConcrete(concretize(dfa, nullptr), limit);
}

std::vector<Word> enumerate(const Dfa& dfa, std::size_t limit, const Alphabet& alphabet) {
  return enumerateConcrete(concretize(dfa, &alphabet), limit);
}

void dump(const Dfa& dfa, const Alphabet& alphabet, std::ostream& out) {
  out << "start:\t" << dfa.start() << '\n';
  for (StateId s = 0; s < dfa.stateCount(); ++s) dumpEdges(dfa, s, alphabet, out);
  out << "final:\n";
  for (StateId s = 0; s < dfa.stateCount(); ++s) {
    if (dfa.isFinal(s)) out << s << '\n';
  }
}

void dump(const Nfa& nfa, const Alphabet& alphabet, std::ostream& out) {
  out << "start:\t" << nfa.start() << '\n';
  for (StateId s = 0; s < nfa.stateCount(); ++s) {
    std::vector<StateId> eps(nfa.epsilons(s).begin(), nfa.epsilons(s).end());
    std::sort(eps.begin(), eps.end());
    for (StateId t : eps) out << s << "\t<eps>\t" << t << '\n';
    dumpEdges(nfa, s, alphabet, out);
  }
  out << "final:\n";
  for (StateId s = 0; s < nfa.stateCount(); ++s) {
    if (nfa.isFinal(s)) out << s << '\n';
  }
}

}  // namespace fslat::fsa
