// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fsa/alphabet.hpp"

namespace fslat::lattice {

// Syntactic tag inventory. Function tags start with '@'; clause-function
// tags end with '@'. Upper case marks finite constructions, lower case
// non-finite ones.
class TagRegistry {
 public:
  static const TagRegistry& standard();

  const std::vector<std::string>& functionTags() const { return functionTags_; }
  const std::vector<std::string>& clauseTags() const { return clauseTags_; }
  const std::vector<std::string>& boundaryTags() const { return boundaryTags_; }

  bool isFunctionTag(std::string_view tag) const;
  bool isClauseTag(std::string_view tag) const;
  bool isMainVerbTag(std::string_view tag) const { return tag == "@MV" || tag == "@mv"; }
  // True for tags written in lower case (non-finite constructions).
  static bool isLowerCase(std::string_view tag);

  // Clause-function tags a main-verb tag pairs with: upper case for @MV,
  // lower case for @mv. Empty for any other tag.
  std::vector<std::string> clauseTagsFor(std::string_view mainVerbTag) const;
  // @SUBJ <-> @subj, MAINC@ <-> mainc@, ...; nullopt when the tag has no
  // case counterpart (@>N, @CC, ...).
  std::optional<std::string> counterpart(std::string_view tag) const;

  // Interns every tag in registry order so that symbol ids, and with them
  // shortlex enumeration order, do not depend on input order.
  void internInto(fsa::Alphabet& alphabet) const;

 private:
  TagRegistry();

  std::vector<std::string> functionTags_;
  std::vector<std::string> clauseTags_;
  std::vector<std::string> boundaryTags_;
  std::unordered_map<std::string, std::string> counterparts_;
};

}  // namespace fslat::lattice
