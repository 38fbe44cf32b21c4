// Licensed under the Apache License 2.0 (see LICENSE file).

#include "lattice/tags.hpp"

#include <algorithm>
#include <cctype>

namespace fslat::lattice {

TagRegistry::TagRegistry() {
  functionTags_ = {"@SUBJ", "@F-SUBJ", "@OBJ", "@F-OBJ", "@I-OBJ", "@SC", "@OC", "@P<<", "@>>P", "@APP",
                   "@>A",   "@A<",     "@>N",  "@>P",   "@N<",    "@ADVL", "@ADVL/N<", "@CC", "@CS", "@AUX",
                   "@MV",   "@subj",   "@f-subj", "@obj", "@f-obj", "@i-obj", "@sc", "@oc", "@p<<", "@app",
                   "@aux",  "@mv"};
  clauseTags_ = {"MAINC@", "SUBJ@",  "OBJ@",  "SC@", "P<<@", "N<@", "ADVL@",
                 "mainc@", "subj@",  "obj@",  "sc@", "p<<@", "n<@", "advl@"};
  boundaryTags_ = {"@@", "@", "@/", "@<", "@>"};

  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"@SUBJ", "@subj"}, {"@F-SUBJ", "@f-subj"}, {"@OBJ", "@obj"}, {"@F-OBJ", "@f-obj"}, {"@I-OBJ", "@i-obj"},
      {"@SC", "@sc"},     {"@OC", "@oc"},         {"@P<<", "@p<<"}, {"@APP", "@app"},     {"@AUX", "@aux"},
      {"@MV", "@mv"},     {"MAINC@", "mainc@"},   {"SUBJ@", "subj@"}, {"OBJ@", "obj@"},   {"SC@", "sc@"},
      {"P<<@", "p<<@"},   {"N<@", "n<@"},         {"ADVL@", "advl@"}};
  for (const auto& [upper, lower] : pairs) {
    counterparts_[upper] = lower;
    counterparts_[lower] = upper;
  }
}

const TagRegistry& TagRegistry::standard() {
  static const TagRegistry registry;
  return registry;
}

bool TagRegistry::isFunctionTag(std::string_view tag) const {
  return std::find(functionTags_.begin(), functionTags_.end(), tag) != functionTags_.end();
}

bool TagRegistry::isClauseTag(std::string_view tag) const {
  return std::find(clauseTags_.begin(), clauseTags_.end(), tag) != clauseTags_.end();
}

bool TagRegistry::isLowerCase(std::string_view tag) {
  bool anyLetter = false;
  for (unsigned char c : tag) {
    if (std::isupper(c)) return false;
    anyLetter = anyLetter || std::isalpha(c);
  }
  return anyLetter;
}

std::vector<std::string> TagRegistry::clauseTagsFor(std::string_view mainVerbTag) const {
  std::vector<std::string> out;
  if (!isMainVerbTag(mainVerbTag)) return out;
  const bool lower = isLowerCase(mainVerbTag);
  for (const auto& c : clauseTags_) {
    if (isLowerCase(c) == lower) out.push_back(c);
  }
  return out;
}

std::optional<std::string> TagRegistry::counterpart(std::string_view tag) const {
  if (auto it = counterparts_.find(std::string(tag)); it != counterparts_.end()) return it->second;
  return std::nullopt;
}

void TagRegistry::internInto(fsa::Alphabet& alphabet) const {
  for (const auto& t : functionTags_) alphabet.intern(t);
  for (const auto& t : clauseTags_) alphabet.intern(t);
}

}  // namespace fslat::lattice
