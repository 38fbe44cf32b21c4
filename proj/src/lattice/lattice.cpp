// Licensed under the Apache License 2.0 (see LICENSE file).

#include "lattice/lattice.hpp"

#include <algorithm>
#include <set>

#include "fsa/operations.hpp"

namespace fslat::lattice {

using fsa::Alphabet;
using fsa::BigCount;
using fsa::Dfa;
using fsa::StateId;
using fsa::SymbolSet;
using fsa::Word;

std::string wordSymbol(std::string_view surface) { return "\"<" + lexicon::toLower(surface) + ">\""; }

std::vector<std::string> blockSymbols(std::string_view surface, const lexicon::MorphReading& reading,
                                      const Analysis& analysis) {
  std::vector<std::string> out{wordSymbol(surface)};
  out.insert(out.end(), reading.markers.begin(), reading.markers.end());
  out.insert(out.end(), reading.tags.begin(), reading.tags.end());
  if (!analysis.function.empty()) out.push_back(analysis.function);
  if (!analysis.clause.empty()) out.push_back(analysis.clause);
  return out;
}

SentenceLattice buildLattice(std::vector<MappedCohort> cohorts, Alphabet& alphabet, const TagRegistry& registry) {
  if (cohorts.empty()) throw Error(ErrorKind::Precondition, "cannot build a lattice for an empty sentence");
  registry.internInto(alphabet);

  SentenceLattice out;
  out.alphabet = &alphabet;
  Dfa& dfa = out.automaton;
  StateId current = dfa.addState();
  dfa.appendEdge(dfa.start(), SymbolSet::single(fsa::kSentenceBoundary), current);

  for (std::size_t i = 0; i < cohorts.size(); ++i) {
    std::set<Word> blocks;
    for (const auto& r : cohorts[i].readings) {
      for (const auto& a : r.analyses) {
        Word w;
        for (const auto& text : blockSymbols(cohorts[i].surface, r.reading, a)) w.push_back(alphabet.intern(text));
        blocks.insert(std::move(w));
      }
    }
    out.perTokenAmbiguity.push_back(blocks.size());
    const Dfa token = fsa::minimize(fsa::fromWords({blocks.begin(), blocks.end()}));

    std::vector<StateId> map(token.stateCount());
    for (StateId s = 0; s < token.stateCount(); ++s) map[s] = s == token.start() ? current : dfa.addState();
    const StateId next = dfa.addState();
    const bool last = i + 1 == cohorts.size();
    const SymbolSet boundary = last ? SymbolSet::single(fsa::kSentenceBoundary) : Alphabet::internalBoundaries();
    for (StateId s = 0; s < token.stateCount(); ++s) {
      for (const auto& e : token.edges(s)) dfa.appendEdge(map[s], e.label, map[e.target]);
      if (token.isFinal(s)) dfa.appendEdge(map[s], boundary, next);
    }
    if (last) dfa.setFinal(next);
    current = next;
  }
  out.boundarySlots = cohorts.size() - 1;
  out.cohorts = std::move(cohorts);
  return out;
}

BigCount readingCount(const SentenceLattice& lattice) { return fsa::countPaths(lattice.automaton); }

BigCount morphologicalCount(const std::vector<MappedCohort>& cohorts) {
  BigCount n = cohorts.empty() ? 0 : 1;
  for (const auto& c : cohorts) n *= c.readings.size();
  return n;
}

BigCount withBoundariesCount(const std::vector<MappedCohort>& cohorts) {
  if (cohorts.empty()) return 0;
  return morphologicalCount(cohorts) * BigCount::power(4, static_cast<unsigned>(cohorts.size() - 1));
}

DecodedReading decodePath(const Word& path, const SentenceLattice& lattice, const Alphabet& alphabet,
                          const TagRegistry& registry) {
  auto malformed = [](const std::string& why) { return Error(ErrorKind::Internal, "malformed sentence reading: " + why); };
  if (path.empty() || path.front() != fsa::kSentenceBoundary) throw malformed("missing initial @@");

  DecodedReading out;
  std::size_t pos = 1;
  for (std::size_t i = 0; i < lattice.cohorts.size(); ++i) {
    const MappedCohort& cohort = lattice.cohorts[i];
    if (pos >= path.size() || alphabet.text(path[pos]) != wordSymbol(cohort.surface)) {
      throw malformed("expected the word symbol of '" + cohort.surface + "'");
    }
    ++pos;
    lexicon::MorphReading shape;
    Analysis analysis;
    for (; pos < path.size() && !Alphabet::isBoundary(path[pos]); ++pos) {
      const std::string& text = alphabet.text(path[pos]);
      if (registry.isFunctionTag(text)) {
        analysis.function = text;
      } else if (registry.isClauseTag(text)) {
        analysis.clause = text;
      } else if (text.size() > 1 && text.front() == '<' && text.back() == '>') {
        shape.markers.push_back(text);
      } else {
        shape.tags.push_back(text);
      }
    }
    if (pos >= path.size()) throw malformed("token '" + cohort.surface + "' has no boundary");

    const MappedReading* match = nullptr;
    for (const auto& r : cohort.readings) {
      if (r.reading.markers == shape.markers && r.reading.tags == shape.tags &&
          std::find(r.analyses.begin(), r.analyses.end(), analysis) != r.analyses.end()) {
        match = &r;
        break;
      }
    }
    if (!match) throw malformed("no reading of '" + cohort.surface + "' matches");

    const bool last = i + 1 == lattice.cohorts.size();
    const fsa::SymbolId b = path[pos++];
    if (last ? b != fsa::kSentenceBoundary : b == fsa::kSentenceBoundary) throw malformed("misplaced @@");
    out.push_back({cohort.surface, match->reading, analysis, alphabet.text(b)});
  }
  if (pos != path.size()) throw malformed("trailing symbols");
  return out;
}

}  // namespace fslat::lattice
