// Licensed under the Apache License 2.0 (see LICENSE file).

// Trimming, minimization and boolean operations on DFAs.

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <vector>

#include "fsa/operations.hpp"

namespace fslat::fsa {

namespace {

// Outgoing edges of one state with labels merged per target key, ordered
// by key. Equivalent states produce equal signatures.
struct Signature {
  std::uint64_t head = 0;
  std::vector<std::pair<StateId, SymbolSet>> out;

  auto operator<=>(const Signature& other) const {
    if (head != other.head) return head <=> other.head;
    if (out.size() != other.out.size()) return out.size() <=> other.out.size();
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].first != other.out[i].first) return out[i].first <=> other.out[i].first;
      if (out[i].second == other.out[i].second) continue;
      return out[i].second < other.out[i].second ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }
  bool operator==(const Signature& other) const { return (*this <=> other) == 0; }
};

Signature signatureOf(const Dfa& dfa, StateId s, std::uint64_t head, const std::vector<StateId>& key) {
  Signature sig;
  sig.head = head;
  for (const Edge& e : dfa.edges(s)) {
    const StateId k = key[e.target];
    auto it = std::find_if(sig.out.begin(), sig.out.end(), [&](const auto& p) { return p.first == k; });
    if (it == sig.out.end()) {
      sig.out.emplace_back(k, e.label);
    } else {
      it->second = it->second | e.label;
    }
  }
  std::sort(sig.out.begin(), sig.out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return sig;
}

Dfa quotient(const Dfa& dfa, const std::vector<StateId>& cls, std::size_t classes) {
  Dfa out;
  for (std::size_t i = 1; i < classes; ++i) out.addState();
  std::vector<bool> done(classes, false);
  for (StateId s = 0; s < dfa.stateCount(); ++s) {
    const StateId c = cls[s];
    if (done[c]) continue;
    done[c] = true;
    out.setFinal(c, dfa.isFinal(s));
    for (auto& [target, label] : signatureOf(dfa, s, 0, cls).out) out.appendEdge(c, label, target);
  }
  out.setStart(cls[dfa.start()]);
  return trim(out);
}

std::vector<StateId> postOrder(const Dfa& dfa) {
  std::vector<StateId> order;
  std::vector<char> state(dfa.stateCount(), 0);
  std::vector<std::pair<StateId, std::size_t>> stack{{dfa.start(), 0}};
  state[dfa.start()] = 1;
  while (!stack.empty()) {
    auto& [s, i] = stack.back();
    auto edges = dfa.edges(s);
    if (i < edges.size()) {
      StateId t = edges[i++].target;
      if (state[t] == 0) {
        state[t] = 1;
        stack.emplace_back(t, 0);
      }
    } else {
      order.push_back(s);
      stack.pop_back();
    }
  }
  return order;
}

Dfa minimizeAcyclic(const Dfa& dfa) {
  // Register-based: in post order every successor already has its final
  // representative, so one pass suffices.
  std::vector<StateId> key(dfa.stateCount(), 0);
  std::map<Signature, StateId> registry;
  for (StateId s : postOrder(dfa)) {
    Signature sig = signatureOf(dfa, s, dfa.isFinal(s) ? 1 : 0, key);
    auto [it, inserted] = registry.emplace(std::move(sig), static_cast<StateId>(registry.size()));
    key[s] = it->second;
  }
  return quotient(dfa, key, registry.size());
}

Dfa minimizeMoore(const Dfa& dfa) {
  const std::size_t n = dfa.stateCount();
  std::vector<StateId> cls(n);
  for (StateId s = 0; s < n; ++s) cls[s] = dfa.isFinal(s) ? 1 : 0;
  std::size_t count = std::count(cls.begin(), cls.end(), 1) == static_cast<std::ptrdiff_t>(n) ? 1 : 2;
  for (;;) {
    std::map<Signature, StateId> blocks;
    std::vector<StateId> next(n);
    for (StateId s = 0; s < n; ++s) {
      auto [it, inserted] = blocks.emplace(signatureOf(dfa, s, cls[s], cls), static_cast<StateId>(blocks.size()));
      next[s] = it->second;
    }
    const bool stable = blocks.size() == count;
    cls = std::move(next);
    count = blocks.size();
    if (stable) break;
  }
  return quotient(dfa, cls, count);
}

std::uint64_t pairKey(StateId a, StateId b) { return (std::uint64_t{a} << 32) | b; }

}  // namespace

Dfa trim(const Dfa& dfa) {
  const std::size_t n = dfa.stateCount();
  std::vector<std::vector<StateId>> reverse(n);
  std::vector<bool> reach(n, false);
  std::deque<StateId> queue{dfa.start()};
  reach[dfa.start()] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (const Edge& e : dfa.edges(s)) {
      reverse[e.target].push_back(s);
      if (!reach[e.target]) {
        reach[e.target] = true;
        queue.push_back(e.target);
      }
    }
  }
  std::vector<bool> useful(n, false);
  for (StateId s = 0; s < n; ++s) {
    if (reach[s] && dfa.isFinal(s)) {
      useful[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (StateId p : reverse[s]) {
      if (!useful[p]) {
        useful[p] = true;
        queue.push_back(p);
      }
    }
  }
  if (!useful[dfa.start()]) return Dfa();

  constexpr StateId kNone = std::numeric_limits<StateId>::max();
  std::vector<StateId> renumber(n, kNone);
  std::vector<StateId> order{dfa.start()};
  renumber[dfa.start()] = 0;
  Dfa out;
  out.setFinal(0, dfa.isFinal(dfa.start()));
  std::vector<const Edge*> sorted;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const StateId s = order[i];
    sorted.clear();
    for (const Edge& e : dfa.edges(s)) {
      if (useful[e.target]) sorted.push_back(&e);
    }
    std::sort(sorted.begin(), sorted.end(), [](const Edge* a, const Edge* b) { return a->label < b->label; });
    for (const Edge* e : sorted) {
      if (renumber[e->target] == kNone) {
        renumber[e->target] = out.addState(dfa.isFinal(e->target));
        order.push_back(e->target);
      }
      out.appendEdge(renumber[s], e->label, renumber[e->target]);
    }
  }
  return out;
}

Dfa minimize(const Dfa& dfa) {
  Dfa trimmed = trim(dfa);
  if (isEmpty(trimmed)) return trimmed;
  return hasCycle(trimmed) ? minimizeMoore(trimmed) : minimizeAcyclic(trimmed);
}

Dfa complement(const Dfa& dfa, const SymbolSet& universe) {
  Dfa out;
  for (std::size_t i = 1; i <= dfa.stateCount(); ++i) out.addState();
  const StateId sink = static_cast<StateId>(dfa.stateCount());
  for (StateId s = 0; s < dfa.stateCount(); ++s) {
    SymbolSet covered;
    for (const Edge& e : dfa.edges(s)) {
      SymbolSet label = e.label & universe;
      if (!label.empty()) out.appendEdge(s, std::move(label), e.target);
      covered = covered | e.label;
    }
    SymbolSet rest = universe - covered;
    if (!rest.empty()) out.appendEdge(s, std::move(rest), sink);
    out.setFinal(s, !dfa.isFinal(s));
  }
  out.appendEdge(sink, universe, sink);
  out.setFinal(sink, true);
  out.setStart(dfa.start());
  return trim(out);
}

Dfa complement(const Dfa& dfa, const Alphabet&) { return complement(dfa, SymbolSet::any()); }

Dfa intersect(const Dfa& a, const Dfa& b) {
  Dfa out;
  std::unordered_map<std::uint64_t, StateId> index;
  std::vector<std::pair<StateId, StateId>> pending{{a.start(), b.start()}};
  index.emplace(pairKey(a.start(), b.start()), 0);
  out.setFinal(0, a.isFinal(a.start()) && b.isFinal(b.start()));
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const auto [p, q] = pending[i];
    const StateId from = static_cast<StateId>(i);
    for (const Edge& ea : a.edges(p)) {
      for (const Edge& eb : b.edges(q)) {
        SymbolSet label = ea.label & eb.label;
        if (label.empty()) continue;
        auto [it, inserted] = index.try_emplace(pairKey(ea.target, eb.target), static_cast<StateId>(pending.size()));
        if (inserted) {
          out.addState(a.isFinal(ea.target) && b.isFinal(eb.target));
          pending.emplace_back(ea.target, eb.target);
        }
        out.appendEdge(from, std::move(label), it->second);
      }
    }
  }
  return trim(out);
}

bool isEmpty(const Dfa& dfa) {
  std::vector<bool> seen(dfa.stateCount(), false);
  std::vector<StateId> stack{dfa.start()};
  seen[dfa.start()] = true;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    if (dfa.isFinal(s)) return false;
    for (const Edge& e : dfa.edges(s)) {
      if (!seen[e.target]) {
        seen[e.target] = true;
        stack.push_back(e.target);
      }
    }
  }
  return true;
}

bool equivalent(const Dfa& a, const Dfa& b) {
  return isEmpty(intersect(a, complement(b, SymbolSet::any()))) &&
         isEmpty(intersect(b, complement(a, SymbolSet::any())));
}

bool hasCycle(const Dfa& input) {
  const Dfa dfa = trim(input);
  std::vector<char> color(dfa.stateCount(), 0);
  std::vector<std::pair<StateId, std::size_t>> stack{{dfa.start(), 0}};
  color[dfa.start()] = 1;
  while (!stack.empty()) {
    auto& [s, i] = stack.back();
    auto edges = dfa.edges(s);
    if (i < edges.size()) {
      StateId t = edges[i++].target;
      if (color[t] == 1) return true;
      if (color[t] == 0) {
        color[t] = 1;
        stack.emplace_back(t, 0);
      }
    } else {
      color[s] = 2;
      stack.pop_back();
    }
  }
  return false;
}

}  // namespace fslat::fsa
