// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fsa/alphabet.hpp"
#include "fsa/automaton.hpp"
#include "fsa/big_count.hpp"
#include "lattice/syntactic_map.hpp"
#include "lattice/tags.hpp"

namespace fslat::lattice {

// Acyclic automaton over the sentence alphabet. Every accepted string is
//
//   @@ block B block B ... block @@
//
// where a block is the word symbol, the reading's markers and morph tags,
// the function tag, the clause tag of a main verb, and B is one of
// @ @/ @< @>.
struct SentenceLattice {
  fsa::Dfa automaton;
  std::vector<MappedCohort> cohorts;
  // Distinct token blocks per token.
  std::vector<std::size_t> perTokenAmbiguity;
  std::size_t boundarySlots = 0;
  const fsa::Alphabet* alphabet = nullptr;

  std::size_t tokenCount() const { return cohorts.size(); }
};

// The opaque symbol for a word form: "<form>" in lower case, quotes
// included, so it can never collide with a marker such as <SVO>.
std::string wordSymbol(std::string_view surface);

// Symbol texts of one token block, boundary excluded.
std::vector<std::string> blockSymbols(std::string_view surface, const lexicon::MorphReading& reading,
                                      const Analysis& analysis);

SentenceLattice buildLattice(std::vector<MappedCohort> cohorts, fsa::Alphabet& alphabet,
                             const TagRegistry& registry = TagRegistry::standard());

fsa::BigCount readingCount(const SentenceLattice& lattice);
// Product of per-token reading counts, ignoring boundaries and tags.
fsa::BigCount morphologicalCount(const std::vector<MappedCohort>& cohorts);
// The same times four per internal boundary.
fsa::BigCount withBoundariesCount(const std::vector<MappedCohort>& cohorts);

struct TokenAnalysis {
  std::string surface;
  lexicon::MorphReading reading;
  Analysis analysis;
  std::string boundary;  // boundary symbol after the token

  bool operator==(const TokenAnalysis&) const = default;
};
using DecodedReading = std::vector<TokenAnalysis>;

// Splits an accepted string back into tokens. Throws Internal when the
// string does not have the lattice shape.
DecodedReading decodePath(const fsa::Word& path, const SentenceLattice& lattice, const fsa::Alphabet& alphabet,
                          const TagRegistry& registry = TagRegistry::standard());

}  // namespace fslat::lattice
