// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lattice/tags.hpp"
#include "lexicon/lexicon.hpp"

namespace fslat::lattice {

// One syntactic alternative for a reading. `clause` is set only for main
// verbs; `function` is empty for punctuation.
struct Analysis {
  std::string function;
  std::string clause;

  bool operator==(const Analysis&) const = default;
};

struct MappedReading {
  lexicon::MorphReading reading;
  std::vector<Analysis> analyses;
};

struct MappedCohort {
  std::string surface;
  std::vector<MappedReading> readings;

  // Reading x tag combinations offered by this token.
  std::size_t combinations() const;
};

struct MapRule {
  std::vector<std::string> required;  // morph tags or markers, all must be present
  std::vector<std::string> tags;      // candidate function (and clause) tags
  std::size_t line = 0;
};

// `N NOM -> @SUBJ @OBJ ...` lines, first match wins, `* -> ...` is the
// default and must be present.
class SyntacticMap {
 public:
  SyntacticMap(std::vector<MapRule> rules, MapRule fallback);

  const std::vector<MapRule>& rules() const { return rules_; }
  const MapRule& fallback() const { return fallback_; }
  const MapRule& match(const lexicon::MorphReading& reading) const;

 private:
  std::vector<MapRule> rules_;
  MapRule fallback_;
};

SyntacticMap parseSyntacticMap(std::string_view text, const TagRegistry& registry = TagRegistry::standard());

// Turns a list of syntactic tags into alternatives. Main-verb tags pair
// with the clause tags in the list, or with every clause tag of the same
// case when the list names none.
std::vector<Analysis> expandAnalyses(const std::vector<std::string>& tags, const TagRegistry& registry,
                                     SourceLocation where = {});

// Readings that already carry syntactic tags keep them; the rest go
// through the map.
MappedCohort mapSyntax(const lexicon::Cohort& cohort, const SyntacticMap& map,
                       const TagRegistry& registry = TagRegistry::standard());

}  // namespace fslat::lattice
