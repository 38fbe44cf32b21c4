// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "engine/engine.hpp"
#include "fsa/operations.hpp"
#include "grammar/compile.hpp"
#include "lattice/lattice.hpp"
#include "support/random_rules.hpp"
#include "support/random_sentences.hpp"

namespace fslat::testing {

using Texts = std::vector<std::string>;

struct Pipeline {
  std::vector<lattice::MappedCohort> cohorts;
  std::vector<grammar::ImplicationRule> rules;
};

// Readings of the cohorts spelled out directly, without any automaton:
// every choice of block per token times every choice of boundary.
// `internal` restricts the boundaries between tokens.
inline std::set<Texts> spelledReadings(const std::vector<lattice::MappedCohort>& cohorts,
                                       const Texts& internal = {"@", "@/", "@<", "@>"}) {
  std::set<Texts> current{{"@@"}};
  for (std::size_t i = 0; i < cohorts.size(); ++i) {
    std::set<Texts> blocks;
    for (const auto& r : cohorts[i].readings) {
      for (const auto& a : r.analyses) {
        std::string lower;
        for (unsigned char c : cohorts[i].surface) lower += static_cast<char>(std::tolower(c));
        Texts b{"\"<" + lower + ">\""};
        b.insert(b.end(), r.reading.markers.begin(), r.reading.markers.end());
        b.insert(b.end(), r.reading.tags.begin(), r.reading.tags.end());
        if (!a.function.empty()) b.push_back(a.function);
        if (!a.clause.empty()) b.push_back(a.clause);
        blocks.insert(b);
      }
    }
    const Texts bounds = i + 1 == cohorts.size() ? Texts{"@@"} : internal;
    std::set<Texts> next;
    for (const auto& prefix : current) {
      for (const auto& b : blocks) {
        for (const auto& d : bounds) {
          Texts t = prefix;
          t.insert(t.end(), b.begin(), b.end());
          t.push_back(d);
          next.insert(std::move(t));
        }
      }
    }
    current = std::move(next);
  }
  return current;
}

inline std::set<Texts> oracleSurvivors(const Pipeline& p) {
  std::set<Texts> out;
  for (const auto& r : spelledReadings(p.cohorts)) {
    bool ok = true;
    for (const auto& rule : p.rules) {
      if (!grammar::bruteForceAccepts(rule, r)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(r);
  }
  return out;
}

inline std::set<Texts> texts(const fsa::Dfa& dfa, const fsa::Alphabet& alphabet) {
  std::set<Texts> out;
  for (const auto& w : fsa::enumerate(dfa, fsa::kUnlimited, alphabet)) {
    Texts t;
    for (auto id : w) t.push_back(alphabet.text(id));
    out.insert(std::move(t));
  }
  return out;
}

inline std::set<Texts> engineSurvivors(const Pipeline& p, engine::Order order, bool reversed = false) {
  fsa::Alphabet alphabet;
  lattice::TagRegistry::standard().internInto(alphabet);
  std::vector<grammar::CompiledRule> rules;
  for (const auto& r : p.rules) rules.push_back(grammar::compileRule(r, alphabet));
  if (reversed) std::reverse(rules.begin(), rules.end());
  auto lattice = lattice::buildLattice(p.cohorts, alphabet);
  engine::ApplyOptions options;
  options.order = order;
  auto applied = engine::applyGrammar(std::move(lattice), rules, options);
  return texts(applied.lattice.automaton, alphabet);
}

// At most 6 tokens, 4 readings per token, 5 rules and 10^4 readings.
inline Pipeline randomPipeline(std::mt19937& rng) {
  Pipeline p;
  for (;;) {
    p.cohorts = randomCohorts(rng, 6, 4, 2);
    double total = 1;
    for (const auto& c : p.cohorts) total *= static_cast<double>(c.combinations()) * 4;
    if (total / 4 <= 1e4) break;
  }
  std::set<std::string> symbols{"@", "@/", "@<", "@>", "@@"};
  for (const auto& c : p.cohorts) {
    for (const auto& r : c.readings) {
      symbols.insert(r.reading.tags.begin(), r.reading.tags.end());
      for (const auto& a : r.analyses) {
        symbols.insert(a.function);
        if (!a.clause.empty()) symbols.insert(a.clause);
      }
    }
  }
  RuleGenerator gen(rng, {symbols.begin(), symbols.end()});
  const std::size_t n = 1 + std::uniform_int_distribution<std::size_t>(0, 4)(rng);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = gen.rule(3);
    r.name = "r" + std::to_string(i);
    p.rules.push_back(std::move(r));
  }
  return p;
}

}  // namespace fslat::testing
