// Licensed under the Apache License 2.0 (see LICENSE file).

#include "engine/engine.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "fsa/operations.hpp"

namespace fslat::engine {

namespace {

using fsa::Dfa;
using grammar::CompiledRule;
using lattice::SentenceLattice;

Dfa step(const Dfa& current, const Dfa& rule, std::size_t minimizeAbove) {
  Dfa next = fsa::intersect(current, rule);
  if (next.stateCount() > minimizeAbove) next = fsa::minimize(next);
  return next;
}

// Random walk over a trimmed acyclic automaton with finite labels.
fsa::Word samplePath(const Dfa& dfa, std::mt19937& rng) {
  fsa::Word path;
  fsa::StateId s = dfa.start();
  for (;;) {
    const auto edges = dfa.edges(s);
    const std::size_t options = edges.size() + (dfa.isFinal(s) ? 1 : 0);
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, options - 1)(rng);
    if (pick == edges.size()) return path;
    const auto ids = edges[pick].label.ids();
    path.push_back(ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)]);
    s = edges[pick].target;
  }
}

std::vector<std::size_t> selectiveOrder(const Dfa& lattice, const std::vector<CompiledRule>& rules,
                                        const ApplyOptions& options) {
  std::vector<std::size_t> order(rules.size());
  std::iota(order.begin(), order.end(), 0);
  if (fsa::isEmpty(lattice)) return order;
  std::mt19937 rng(options.seed);
  std::vector<fsa::Word> paths;
  for (std::size_t i = 0; i < options.samples; ++i) paths.push_back(samplePath(lattice, rng));
  std::vector<std::size_t> kept(rules.size(), 0);
  for (std::size_t r = 0; r < rules.size(); ++r) {
    for (const auto& p : paths) kept[r] += rules[r].automaton.accepts(p) ? 1 : 0;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return kept[a] < kept[b]; });
  return order;
}

void checkAlphabet(const SentenceLattice& lattice, const std::vector<CompiledRule>& rules) {
  for (const auto& r : rules) {
    if (r.alphabet != lattice.alphabet) {
      throw Error(ErrorKind::Precondition, "rule " + r.name + " was compiled against a different alphabet");
    }
  }
}

}  // namespace

Applied applyGrammar(SentenceLattice lattice, const std::vector<CompiledRule>& rules, const ApplyOptions& options) {
  checkAlphabet(lattice, rules);
  lattice.automaton = fsa::trim(lattice.automaton);
  Applied out{std::move(lattice), {}};
  out.trace.initial = fsa::countPaths(out.lattice.automaton);

  std::vector<std::size_t> order(rules.size());
  std::iota(order.begin(), order.end(), 0);
  if (options.order == Order::SelectiveFirst) order = selectiveOrder(out.lattice.automaton, rules, options);

  fsa::BigCount before = out.trace.initial;
  for (std::size_t i : order) {
    const auto t0 = std::chrono::steady_clock::now();
    out.lattice.automaton = step(out.lattice.automaton, rules[i].automaton, options.minimizeAbove);
    fsa::BigCount after = fsa::countPaths(out.lattice.automaton);
    const auto t1 = std::chrono::steady_clock::now();
    out.trace.steps.push_back({rules[i].name, before, after,
                               std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0),
                               out.lattice.automaton.stateCount()});
    before = std::move(after);
  }
  return out;
}

std::vector<std::string> diagnoseEmpty(const SentenceLattice& lattice, const std::vector<CompiledRule>& rules) {
  checkAlphabet(lattice, rules);
  const Dfa start = fsa::trim(lattice.automaton);
  if (fsa::isEmpty(start)) return {};

  // prefix[i] = lattice restricted by rules [0, i)
  std::vector<Dfa> prefix{start};
  std::size_t emptiedAt = rules.size();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    prefix.push_back(fsa::trim(fsa::intersect(prefix.back(), rules[i].automaton)));
    if (emptiedAt == rules.size() && fsa::isEmpty(prefix.back())) emptiedAt = i;
  }
  if (emptiedAt == rules.size()) {
    throw Error(ErrorKind::Precondition, "the grammar accepts some reading; nothing to diagnose");
  }

  std::vector<std::string> culprits;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    Dfa rest = prefix[i];
    for (std::size_t j = i + 1; j < rules.size() && !fsa::isEmpty(rest); ++j) {
      rest = fsa::trim(fsa::intersect(rest, rules[j].automaton));
    }
    if (!fsa::isEmpty(rest)) culprits.push_back(rules[i].name);
  }
  if (culprits.empty()) {
    for (std::size_t i = 0; i <= emptiedAt; ++i) culprits.push_back(rules[i].name);
  }
  return culprits;
}

std::vector<lattice::DecodedReading> decodeReadings(const SentenceLattice& lattice, std::size_t limit) {
  if (!lattice.alphabet) throw Error(ErrorKind::Precondition, "lattice has no alphabet");
  std::vector<lattice::DecodedReading> out;
  if (limit == 0) return out;
  for (const auto& path : fsa::enumerate(lattice.automaton, limit, *lattice.alphabet)) {
    out.push_back(lattice::decodePath(path, lattice, *lattice.alphabet));
  }
  return out;
}

Parser::Parser(lexicon::Lexicon lexicon, lattice::SyntacticMap map, const grammar::Grammar& grammar)
    : alphabet_(std::make_unique<fsa::Alphabet>()), lexicon_(std::move(lexicon)), map_(std::move(map)) {
  lattice::TagRegistry::standard().internInto(*alphabet_);
  rules_ = grammar::compileGrammar(grammar, *alphabet_);
}

std::vector<lattice::MappedCohort> Parser::cohorts(const std::vector<std::string>& tokens) const {
  std::vector<lattice::MappedCohort> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(lattice::mapSyntax(lexicon::lookup(lexicon_, t), map_));
  return out;
}

SentenceLattice Parser::buildLattice(const std::vector<std::string>& tokens) {
  return lattice::buildLattice(cohorts(tokens), *alphabet_);
}

ParseResult Parser::parse(const std::vector<std::string>& tokens, const ParseOptions& options) {
  ParseResult out;
  out.tokens = tokens;
  SentenceLattice initial = buildLattice(tokens);
  out.morphological = lattice::morphologicalCount(initial.cohorts);
  out.withBoundaries = lattice::withBoundariesCount(initial.cohorts);

  Applied applied = applyGrammar(initial, rules_, options.apply);
  out.lattice = std::move(applied.lattice);
  out.trace = std::move(applied.trace);
  if (out.trace.final().isZero()) {
    out.status = Status::Empty;
    out.diagnosis = diagnoseEmpty(initial, rules_);
  } else {
    out.readings = decodeReadings(out.lattice, options.limit);
  }
  return out;
}

}  // namespace fslat::engine
