// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fsa/alphabet.hpp"
#include "fsa/big_count.hpp"
#include "grammar/compile.hpp"
#include "grammar/grammar.hpp"
#include "lattice/lattice.hpp"
#include "lattice/syntactic_map.hpp"
#include "lexicon/lexicon.hpp"

namespace fslat::engine {

enum class Order { AsWritten, SelectiveFirst };

struct TraceStep {
  std::string rule;
  fsa::BigCount before;
  fsa::BigCount after;
  std::chrono::microseconds elapsed{0};
  std::size_t states = 0;  // after trimming
};

struct TraceReport {
  fsa::BigCount initial;
  std::vector<TraceStep> steps;

  const fsa::BigCount& final() const { return steps.empty() ? initial : steps.back().after; }
};

struct ApplyOptions {
  Order order = Order::AsWritten;
  // Intermediate results above this many states are minimized.
  std::size_t minimizeAbove = 10000;
  // Paths sampled per sentence for the selective-first estimate.
  std::size_t samples = 64;
  std::uint32_t seed = 1;
};

struct Applied {
  lattice::SentenceLattice lattice;
  TraceReport trace;
};

// Intersects the lattice with every rule, trimming after each step.
// Throws Precondition naming the first rule compiled against another
// alphabet.
Applied applyGrammar(lattice::SentenceLattice lattice, const std::vector<grammar::CompiledRule>& rules,
                     const ApplyOptions& options = {});

// Called when the full intersection is empty. Returns every rule whose
// removal leaves some reading, or failing that the rules applied up to and
// including the one that emptied the lattice. An empty input lattice gives
// an empty list.
std::vector<std::string> diagnoseEmpty(const lattice::SentenceLattice& lattice,
                                       const std::vector<grammar::CompiledRule>& rules);

// Up to `limit` readings in shortlex order, split back into tokens.
std::vector<lattice::DecodedReading> decodeReadings(const lattice::SentenceLattice& lattice, std::size_t limit);

enum class Status { Ok, Empty };

struct ParseResult {
  std::vector<std::string> tokens;
  lattice::SentenceLattice lattice;  // after the grammar
  fsa::BigCount morphological;
  fsa::BigCount withBoundaries;
  std::vector<lattice::DecodedReading> readings;
  TraceReport trace;
  Status status = Status::Ok;
  std::vector<std::string> diagnosis;
};

struct ParseOptions {
  ApplyOptions apply;
  std::size_t limit = 16;
};

// Loaded resources plus the alphabet the rules were compiled against.
// Parsing interns new word forms, so one Parser is used by one thread at a
// time.
class Parser {
 public:
  Parser(lexicon::Lexicon lexicon, lattice::SyntacticMap map, const grammar::Grammar& grammar);

  const lexicon::Lexicon& lexicon() const { return lexicon_; }
  lexicon::Lexicon& lexicon() { return lexicon_; }
  const lattice::SyntacticMap& map() const { return map_; }
  const std::vector<grammar::CompiledRule>& rules() const { return rules_; }
  fsa::Alphabet& alphabet() { return *alphabet_; }

  // Lookup and mapping only.
  std::vector<lattice::MappedCohort> cohorts(const std::vector<std::string>& tokens) const;
  lattice::SentenceLattice buildLattice(const std::vector<std::string>& tokens);
  ParseResult parse(const std::vector<std::string>& tokens, const ParseOptions& options = {});

 private:
  std::unique_ptr<fsa::Alphabet> alphabet_;
  lexicon::Lexicon lexicon_;
  lattice::SyntacticMap map_;
  std::vector<grammar::CompiledRule> rules_;
};

}  // namespace fslat::engine
