// Licensed under the Apache License 2.0 (see LICENSE file).

#include "lattice/syntactic_map.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace fslat::lattice {

std::size_t MappedCohort::combinations() const {
  std::size_t n = 0;
  for (const auto& r : readings) n += r.analyses.size();
  return n;
}

SyntacticMap::SyntacticMap(std::vector<MapRule> rules, MapRule fallback)
    : rules_(std::move(rules)), fallback_(std::move(fallback)) {}

const MapRule& SyntacticMap::match(const lexicon::MorphReading& reading) const {
  auto has = [&](const std::string& item) {
    return std::find(reading.tags.begin(), reading.tags.end(), item) != reading.tags.end() ||
           std::find(reading.markers.begin(), reading.markers.end(), item) != reading.markers.end();
  };
  for (const auto& rule : rules_) {
    if (std::all_of(rule.required.begin(), rule.required.end(), has)) return rule;
  }
  return fallback_;
}

SyntacticMap parseSyntacticMap(std::string_view text, const TagRegistry& registry) {
  std::vector<MapRule> rules;
  std::optional<MapRule> fallback;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos && (hash == 0 || std::isspace(static_cast<unsigned char>(line[hash - 1])))) {
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const SourceLocation where{number, 1};
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw Error(ErrorKind::Parse, "expected 'PATTERN -> TAGS'", where);
    MapRule rule;
    rule.line = number;
    std::istringstream lhs(line.substr(0, arrow)), rhs(line.substr(arrow + 2));
    for (std::string item; lhs >> item;) rule.required.push_back(item);
    for (std::string item; rhs >> item;) rule.tags.push_back(item);
    if (rule.required.empty()) throw Error(ErrorKind::Parse, "empty tag pattern", where);
    expandAnalyses(rule.tags, registry, where);

    if (rule.required.size() == 1 && rule.required[0] == "*") {
      if (fallback) throw Error(ErrorKind::Parse, "second default line", where);
      fallback = std::move(rule);
    } else {
      if (fallback) throw Error(ErrorKind::Parse, "rule after the default line is unreachable", where);
      rules.push_back(std::move(rule));
    }
  }
  if (!fallback) throw Error(ErrorKind::Parse, "map has no default line '* -> ...'");
  return SyntacticMap(std::move(rules), std::move(*fallback));
}

std::vector<Analysis> expandAnalyses(const std::vector<std::string>& tags, const TagRegistry& registry,
                                     SourceLocation where) {
  std::vector<std::string> functions, clauses;
  for (const auto& t : tags) {
    if (registry.isFunctionTag(t)) {
      if (std::find(functions.begin(), functions.end(), t) == functions.end()) functions.push_back(t);
    } else if (registry.isClauseTag(t)) {
      if (std::find(clauses.begin(), clauses.end(), t) == clauses.end()) clauses.push_back(t);
    } else {
      throw Error(ErrorKind::Parse, "unregistered syntactic tag " + t, where);
    }
  }
  if (functions.empty()) {
    if (!clauses.empty()) throw Error(ErrorKind::Parse, "clause tag without a main-verb tag", where);
    return {Analysis{}};
  }
  const bool anyMainVerb = std::any_of(functions.begin(), functions.end(), [&](const std::string& f) { return registry.isMainVerbTag(f); });
  if (!clauses.empty() && !anyMainVerb) throw Error(ErrorKind::Parse, "clause tag without a main-verb tag", where);

  std::vector<Analysis> out;
  for (const auto& f : functions) {
    if (!registry.isMainVerbTag(f)) {
      out.push_back({f, ""});
      continue;
    }
    for (const auto& c : clauses.empty() ? registry.clauseTagsFor(f) : clauses) out.push_back({f, c});
  }
  return out;
}

MappedCohort mapSyntax(const lexicon::Cohort& cohort, const SyntacticMap& map, const TagRegistry& registry) {
  if (cohort.readings.empty()) throw Error(ErrorKind::Precondition, "cohort for '" + cohort.surface + "' has no readings");
  MappedCohort out{cohort.surface, {}};
  for (const auto& r : cohort.readings) {
    MappedReading mapped{r, {}};
    if (!r.syntax.empty()) {
      mapped.analyses = expandAnalyses(r.syntax, registry);
    } else {
      const MapRule& rule = map.match(r);
      mapped.analyses = expandAnalyses(rule.tags, registry, {rule.line, 1});
    }
    out.readings.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace fslat::lattice
