// Licensed under the Apache License 2.0 (see LICENSE file).

// Direct evaluation of the implication-rule semantics. Nothing here uses
// the automata code; it is the reference the compiler is tested against.

#include <algorithm>
#include <set>

#include "grammar/compile.hpp"

namespace fslat::grammar {

namespace {

using K = Pattern::Kind;
using Reading = std::vector<std::string>;
using Ends = std::set<std::size_t>;

const std::vector<std::string> kDefaultClauseBreaks{"@@", "@/", "@<", "@>"};

bool member(const std::vector<std::string>& set, const std::string& s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

// Every j such that w[i, j) is in L(p).
Ends ends(const Pattern& p, const Reading& w, std::size_t i) {
  const std::size_t n = w.size();
  switch (p.kind) {
    case K::Symbol:
    case K::Name:
      return i < n && w[i] == p.text ? Ends{i + 1} : Ends{};
    case K::Class:
      return i < n && member(p.members, w[i]) ? Ends{i + 1} : Ends{};
    case K::NegatedClass: {
      const auto& excluded = p.members.empty() ? std::vector<std::string>{p.text} : p.members;
      return i < n && !member(excluded, w[i]) ? Ends{i + 1} : Ends{};
    }
    case K::ClauseGap: {
      const auto& stops = p.members.empty() ? kDefaultClauseBreaks : p.members;
      Ends out{i};
      for (std::size_t j = i; j < n && !member(stops, w[j]); ++j) out.insert(j + 1);
      return out;
    }
    case K::AnyGap: {
      Ends out;
      for (std::size_t j = i; j <= n; ++j) out.insert(j);
      return out;
    }
    case K::Concat: {
      Ends current{i};
      for (const auto& child : p.children) {
        Ends next;
        for (std::size_t k : current) {
          Ends e = ends(child, w, k);
          next.insert(e.begin(), e.end());
        }
        current = std::move(next);
        if (current.empty()) break;
      }
      return current;
    }
    case K::Union: {
      Ends out;
      for (const auto& child : p.children) {
        Ends e = ends(child, w, i);
        out.insert(e.begin(), e.end());
      }
      return out;
    }
    case K::Option: {
      Ends out = ends(p.children.at(0), w, i);
      out.insert(i);
      return out;
    }
    case K::Star: {
      Ends out{i};
      std::vector<std::size_t> frontier{i};
      while (!frontier.empty()) {
        std::size_t k = frontier.back();
        frontier.pop_back();
        for (std::size_t j : ends(p.children.at(0), w, k)) {
          if (out.insert(j).second) frontier.push_back(j);
        }
      }
      return out;
    }
    case K::Position:
      throw Error(ErrorKind::Precondition, "'_' inside a pattern", p.where);
  }
  return {};
}

bool licensed(const ImplicationRule& rule, const Reading& w, std::size_t from, std::size_t to) {
  for (const auto& c : rule.contexts) {
    bool leftOk = false;
    for (std::size_t k = 0; k <= from && !leftOk; ++k) leftOk = ends(c.left, w, k).contains(from);
    if (leftOk && !ends(c.right, w, to).empty()) return true;
  }
  return false;
}

}  // namespace

bool bruteForceAccepts(const ImplicationRule& rule, const std::vector<std::string>& reading) {
  for (std::size_t i = 0; i <= reading.size(); ++i) {
    for (std::size_t j : ends(rule.target, reading, i)) {
      if (!licensed(rule, reading, i, j)) return false;
    }
  }
  return true;
}

}  // namespace fslat::grammar
