// Licensed under the Apache License 2.0 (see LICENSE file).

// Hand-built readings for the clause-boundary and subject rules, each
// labelled with whether the rule should license it.

#pragma once

#include <string>
#include <vector>

namespace fslat::testing {

struct ToyReading {
  std::string text;  // space-separated symbols
  bool licensed;
};

inline const char* clauseBoundaryRule() { return "@/ => VFIN .. _ .. VFIN ;"; }

inline const std::vector<ToyReading>& clauseBoundaryToys() {
  static const std::vector<ToyReading> toys{
      {"@@ x VFIN @ y @/ z @ w VFIN @@", true},
      {"@@ x VFIN @ y @ w VFIN @@", true},
      {"@@ VFIN @/ VFIN @/ VFIN @@", true},
      {"@@ x @/ w VFIN @@", false},
      {"@@ x VFIN @/ w @@", false},
      {"@@ VFIN @/ x @/ VFIN @@", false},
      {"@@ VFIN @< x @/ VFIN @@", false},
  };
  return toys;
}

// The subject rule is the first rule of grammar/reference_rules.fsg.
inline const std::vector<ToyReading>& subjectToys() {
  static const std::vector<ToyReading> toys{
      {"@@ \"<he>\" PRON @SUBJ @ \"<runs>\" V PRES VFIN @MV MAINC@ @@", true},
      {"@@ \"<are>\" V PRES VFIN @AUX @ \"<you>\" PRON @SUBJ @ \"<talking>\" PCP1 @MV MAINC@ @ \"<?>\" QUESTION @@",
       true},
      {"@@ \"<run>\" V IMP VFIN @MV MAINC@ @@", true},
      {"@@ \"<he>\" PRON @SUBJ @ \"<has>\" V PRES VFIN @AUX @ \"<run>\" PCP2 @MV MAINC@ @@", true},
      {"@@ \"<runs>\" V PRES VFIN @MV MAINC@ @ \"<he>\" PRON @SUBJ @@", false},
      {"@@ \"<he>\" PRON @SUBJ @/ \"<runs>\" V PRES VFIN @MV MAINC@ @@", false},
      {"@@ \"<are>\" V PRES VFIN @AUX @ \"<you>\" PRON @SUBJ @ \"<talking>\" PCP1 @MV MAINC@ @ \"<.>\" FULLSTOP @@",
       false},
      {"@@ \"<he>\" PRON @SUBJ @ \"<running>\" PCP1 @mv MAINC@ @@", false},
  };
  return toys;
}

}  // namespace fslat::testing
