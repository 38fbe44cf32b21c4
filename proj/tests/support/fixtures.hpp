// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "engine/engine.hpp"
#include "grammar/grammar.hpp"
#include "lattice/syntactic_map.hpp"
#include "lexicon/lexicon.hpp"

namespace fslat::testing {

inline std::string dataPath(const std::string& relative) { return std::string(FSLAT_DATA_DIR) + "/" + relative; }

inline std::string readData(const std::string& relative) {
  std::ifstream in(dataPath(relative), std::ios::binary);
  if (!in) throw std::runtime_error("missing data file " + relative);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The six sentence fixtures shipped with goldens.
inline const std::vector<std::string>& goldenFixtures() {
  static const std::vector<std::string> names{"i_see_a_bird", "henry",     "what_makes",
                                              "pushkin",      "providing", "they_established"};
  return names;
}

inline std::unique_ptr<engine::Parser> fixtureParser(const std::string& name,
                                                     const std::string& grammarFile = "grammar/demo.fsg") {
  return std::make_unique<engine::Parser>(lexicon::parseLexicon(readData("fixtures/" + name + ".lex")),
                                          lattice::parseSyntacticMap(readData("map/demo.map")),
                                          grammar::parseGrammar(readData(grammarFile)));
}

inline std::vector<std::string> fixtureTokens(const std::string& name) {
  return lexicon::tokenize(readData("fixtures/" + name + ".txt"));
}

}  // namespace fslat::testing
