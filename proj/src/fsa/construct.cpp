// Licensed under the Apache License 2.0 (see LICENSE file).

// Pattern compilation and subset construction.

#include <algorithm>
#include <map>
#include <vector>

#include "common/error.hpp"
#include "fsa/operations.hpp"

namespace fslat::fsa {

namespace {

struct Fragment {
  StateId in;
  StateId out;
};

class PatternBuilder {
 public:
  PatternBuilder(const Alphabet& alphabet, Nfa& nfa) : alphabet_(alphabet), nfa_(nfa) {}

  Fragment build(const Pattern& p) {
    using K = Pattern::Kind;
    switch (p.kind) {
      case K::Symbol:
        return single(SymbolSet::single(symbolId(p.text, p.where)));
      case K::Name:
        if (auto cls = alphabet_.findClass(p.text)) return single(*cls);
        return single(SymbolSet::single(symbolId(p.text, p.where)));
      case K::Class:
        return single(classSet(p));
      case K::NegatedClass:
        return single(SymbolSet::any() - classSet(p));
      case K::Concat: {
        if (p.children.empty()) {
          StateId s = nfa_.addState();
          return {s, s};
        }
        Fragment whole = build(p.children.front());
        for (std::size_t i = 1; i < p.children.size(); ++i) {
          Fragment next = build(p.children[i]);
          nfa_.addEpsilon(whole.out, next.in);
          whole.out = next.out;
        }
        return whole;
      }
      case K::Union: {
        StateId in = nfa_.addState();
        StateId out = nfa_.addState();
        for (const Pattern& child : p.children) {
          Fragment f = build(child);
          nfa_.addEpsilon(in, f.in);
          nfa_.addEpsilon(f.out, out);
        }
        return {in, out};
      }
      case K::Star: {
        Fragment f = build(p.children.at(0));
        StateId in = nfa_.addState();
        StateId out = nfa_.addState();
        nfa_.addEpsilon(in, f.in);
        nfa_.addEpsilon(f.out, out);
        nfa_.addEpsilon(in, out);
        nfa_.addEpsilon(f.out, f.in);
        return {in, out};
      }
      case K::Option: {
        Fragment f = build(p.children.at(0));
        StateId in = nfa_.addState();
        StateId out = nfa_.addState();
        nfa_.addEpsilon(in, f.in);
        nfa_.addEpsilon(f.out, out);
        nfa_.addEpsilon(in, out);
        return {in, out};
      }
      case K::ClauseGap: {
        SymbolSet stops;
        if (p.members.empty()) {
          auto cls = alphabet_.findClass(kClauseBreakClass);
          if (!cls) throw Error(ErrorKind::Compile, "alphabet has no CLB class for `..`", p.where);
          stops = *cls;
        } else {
          stops = resolveMembers(p.members, p.where);
        }
        return loop(SymbolSet::any() - stops);
      }
      case K::AnyGap:
        return loop(SymbolSet::any());
      case K::Position:
        throw Error(ErrorKind::Compile, "`_` is only allowed inside a rule context", p.where);
    }
    throw Error(ErrorKind::Internal, "unhandled pattern node");
  }

 private:
  Fragment single(SymbolSet label) {
    StateId in = nfa_.addState();
    StateId out = nfa_.addState();
    nfa_.addEdge(in, std::move(label), out);
    return {in, out};
  }

  Fragment loop(SymbolSet label) {
    StateId s = nfa_.addState();
    nfa_.addEdge(s, std::move(label), s);
    return {s, s};
  }

  SymbolId symbolId(const std::string& text, SourceLocation where) const {
    if (auto id = alphabet_.find(text)) return *id;
    throw Error(ErrorKind::Compile, "unknown symbol or class '" + text + "'", where);
  }

  SymbolSet resolveMembers(const std::vector<std::string>& members, SourceLocation where) const {
    std::vector<SymbolId> ids;
    ids.reserve(members.size());
    for (const auto& m : members) ids.push_back(symbolId(m, where));
    return SymbolSet::of(std::move(ids));
  }

  SymbolSet classSet(const Pattern& p) const {
    if (!p.members.empty()) return resolveMembers(p.members, p.where);
    if (auto cls = alphabet_.findClass(p.text)) return *cls;
    // A negated literal is written with the same syntax as a negated class.
    if (auto id = alphabet_.find(p.text)) return SymbolSet::single(*id);
    throw Error(ErrorKind::Compile, "unknown class '" + p.text + "'", p.where);
  }

  const Alphabet& alphabet_;
  Nfa& nfa_;
};

using StateList = std::vector<StateId>;

StateList closure(const Nfa& nfa, StateList seeds) {
  std::vector<bool> seen(nfa.stateCount(), false);
  StateList stack = seeds;
  StateList out;
  for (StateId s : seeds) seen[s] = true;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    out.push_back(s);
    for (StateId t : nfa.epsilons(s)) {
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Nfa fromPattern(const Pattern& pattern, const Alphabet& alphabet) {
  Nfa nfa;
  PatternBuilder builder(alphabet, nfa);
  Fragment f = builder.build(pattern);
  nfa.setStart(f.in);
  nfa.setFinal(f.out);
  return nfa;
}

Dfa determinize(const Nfa& nfa) {
  Dfa dfa;
  if (nfa.stateCount() == 0) return dfa;

  std::map<StateList, StateId> index;
  std::vector<StateList> pending;
  auto stateFor = [&](StateList set) -> StateId {
    auto it = index.find(set);
    if (it != index.end()) return it->second;
    bool final = std::any_of(set.begin(), set.end(), [&](StateId s) { return nfa.isFinal(s); });
    StateId id = index.empty() ? 0 : dfa.addState();
    dfa.setFinal(id, final);
    index.emplace(set, id);
    pending.push_back(std::move(set));
    return id;
  };
  stateFor(closure(nfa, {nfa.start()}));

  for (std::size_t next = 0; next < pending.size(); ++next) {
    const StateList current = pending[next];
    const StateId from = index.at(current);

    std::vector<const Edge*> out;
    std::vector<SymbolId> mentioned;
    for (StateId s : current) {
      for (const Edge& e : nfa.edges(s)) {
        out.push_back(&e);
        mentioned.insert(mentioned.end(), e.label.ids().begin(), e.label.ids().end());
      }
    }
    std::sort(mentioned.begin(), mentioned.end());
    mentioned.erase(std::unique(mentioned.begin(), mentioned.end()), mentioned.end());

    // Partition the alphabet into the mentioned symbols (each examined
    // individually) and the rest, which only co-finite labels contain.
    std::map<StateList, std::vector<SymbolId>> groups;
    for (SymbolId sym : mentioned) {
      StateList targets;
      for (const Edge* e : out) {
        if (e->label.contains(sym)) targets.push_back(e->target);
      }
      if (targets.empty()) continue;
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      groups[targets].push_back(sym);
    }
    StateList otherTargets;
    for (const Edge* e : out) {
      if (e->label.cofinite()) otherTargets.push_back(e->target);
    }
    std::sort(otherTargets.begin(), otherTargets.end());
    otherTargets.erase(std::unique(otherTargets.begin(), otherTargets.end()), otherTargets.end());

    std::vector<std::pair<StateList, SymbolSet>> labelled;
    bool otherMerged = otherTargets.empty();
    const SymbolSet rest = SymbolSet::universe() - SymbolSet::of(mentioned);
    for (auto& [targets, syms] : groups) {
      SymbolSet label = SymbolSet::of(syms);
      if (!otherMerged && targets == otherTargets) {
        label = label | rest;
        otherMerged = true;
      }
      labelled.emplace_back(targets, std::move(label));
    }
    if (!otherMerged) labelled.emplace_back(otherTargets, rest);

    std::sort(labelled.begin(), labelled.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    for (auto& [targets, label] : labelled) {
      StateId to = stateFor(closure(nfa, targets));
      dfa.addEdge(from, std::move(label), to);
    }
  }
  return trim(dfa);
}

Nfa toNfa(const Dfa& dfa) {
  Nfa nfa;
  for (StateId s = 0; s < dfa.stateCount(); ++s) nfa.addState(dfa.isFinal(s));
  for (StateId s = 0; s < dfa.stateCount(); ++s) {
    for (const Edge& e : dfa.edges(s)) nfa.addEdge(s, e.label, e.target);
  }
  nfa.setStart(dfa.start());
  return nfa;
}

Dfa unite(const Dfa& a, const Dfa& b) {
  Nfa nfa;
  StateId start = nfa.addState();
  for (const Dfa* d : {&a, &b}) {
    const StateId offset = static_cast<StateId>(nfa.stateCount());
    for (StateId s = 0; s < d->stateCount(); ++s) nfa.addState(d->isFinal(s));
    for (StateId s = 0; s < d->stateCount(); ++s) {
      for (const Edge& e : d->edges(s)) nfa.addEdge(offset + s, e.label, offset + e.target);
    }
    nfa.addEpsilon(start, offset + d->start());
  }
  nfa.setStart(start);
  return determinize(nfa);
}

Dfa acceptAll() {
  Dfa dfa;
  dfa.setFinal(0);
  dfa.addEdge(0, SymbolSet::any(), 0);
  return dfa;
}

Dfa acceptEmptyString() {
  Dfa dfa;
  dfa.setFinal(0);
  return dfa;
}

Dfa fromWords(const std::vector<Word>& words) {
  // Build a trie; it is deterministic by construction.
  Dfa dfa;
  std::vector<std::map<SymbolId, StateId>> children(1);
  for (const Word& w : words) {
    StateId s = 0;
    for (SymbolId sym : w) {
      auto it = children[s].find(sym);
      if (it == children[s].end()) {
        StateId t = dfa.addState();
        children.emplace_back();
        dfa.addEdge(s, SymbolSet::single(sym), t);
        it = children[s].emplace(sym, t).first;
      }
      s = it->second;
    }
    dfa.setFinal(s);
  }
  return trim(dfa);
}

}  // namespace fslat::fsa
