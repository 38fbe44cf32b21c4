// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "common/error.hpp"

namespace fslat::lexicon {

// One morphological analysis: ("see" <SVO> V PRES -SG3 VFIN).
struct MorphReading {
  std::string base;
  std::vector<std::string> markers;  // <SVO>, <*>, <Deferred>, ...
  std::vector<std::string> tags;     // V PRES -SG3 VFIN
  // Syntactic tags already attached in the source (@OBJ, MAINC@). Present
  // only in pre-mapped cohort fixtures; they restrict the mapping stage.
  std::vector<std::string> syntax;

  bool operator==(const MorphReading&) const = default;
  const std::string& partOfSpeech() const { return tags.front(); }
};

struct Cohort {
  std::string surface;
  std::vector<MorphReading> readings;
};

struct Entry {
  std::string headword;  // text between the angle brackets, e.g. "*i" or "$."
  std::string key;       // headword with '*' and a leading '$' removed
  bool punctuation = false;
  std::vector<MorphReading> readings;
  SourceLocation where;
};

enum class UnknownWordPolicy { Closed, OpenClassGuess };

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<Entry> entries, std::vector<std::string> warnings = {});

  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  // Entries stored under `key`, in file order.
  std::vector<const Entry*> find(std::string_view key) const;

  UnknownWordPolicy policy() const { return policy_; }
  void setPolicy(UnknownWordPolicy policy) { policy_ = policy; }

 private:
  std::vector<Entry> entries_;
  std::vector<std::string> warnings_;
  std::unordered_map<std::string, std::vector<std::size_t>> index_;
  UnknownWordPolicy policy_ = UnknownWordPolicy::OpenClassGuess;
};

// Parses the parenthesized cohort listing. Lines starting with '#' are
// comments. Throws Error(Parse) with a line number.
Lexicon parseLexicon(std::string_view text);
std::string serialize(const Lexicon& lexicon);
std::string serialize(const Entry& entry);

// FULLSTOP, COMMA, QUESTION, ... for a punctuation token.
std::string punctuationCategory(std::string_view token);
bool isPunctuation(std::string_view token);

// Exact key first, then the lower-cased token. Unknown tokens get the
// open-class guesses (N NOM SG, V INF, A ABS, ADV) or throw UnknownWord
// under the closed policy. Never returns an empty cohort.
Cohort lookup(const Lexicon& lexicon, const std::string& token);

std::vector<std::string> tokenize(std::string_view text);
bool isSentenceEnd(std::string_view token);
// Splits after each "." "?" or "!" token.
std::vector<std::vector<std::string>> splitSentences(const std::vector<std::string>& tokens);

std::string toLower(std::string_view text);

}  // namespace fslat::lexicon
