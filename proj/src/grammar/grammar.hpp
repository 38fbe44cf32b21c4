// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "common/error.hpp"
#include "fsa/pattern.hpp"

namespace fslat::grammar {

using fsa::Pattern;

struct Context {
  Pattern left;
  Pattern right;
};

// Target => left_1 _ right_1 , ... , left_n _ right_n ;
struct ImplicationRule {
  std::string name;
  bool labeled = false;  // name written in the source as `Name:`
  Pattern target;
  std::vector<Context> contexts;
  SourceLocation where;
};

struct Constant {
  std::string name;
  Pattern pattern;
  SourceLocation where;
};

struct ClassDef {
  std::string name;
  std::vector<std::string> members;
  SourceLocation where;
};

struct Grammar {
  std::vector<ClassDef> classes;
  std::vector<Constant> constants;
  std::vector<ImplicationRule> rules;

  const ClassDef* findClass(std::string_view name) const;
  const Constant* findConstant(std::string_view name) const;
};

// Concrete syntax:
//   Name = pattern ;              constant
//   Name := sym sym ... ;         class
//   [Label:] Target => LC _ RC , ... ;
// Patterns: juxtaposition, `|`, postfix `*`, `( )`, `[ ]` option, `..`
// (same clause), `...` (anything), `~X` (any one symbol not in class or
// not equal to symbol X). `#` starts a comment. Rules without a label are
// named after their target text.
Grammar parseGrammar(std::string_view text);

// Inlines constants, resolves class references to their members and plain
// names to literals. A grammar-level CLB class becomes the exclusion list
// of every `..`. Throws Compile on a constant cycle.
Grammar expandConstants(const Grammar& grammar);

std::string formatPattern(const Pattern& pattern);
std::string formatRule(const ImplicationRule& rule);
std::string formatGrammar(const Grammar& grammar);

bool sameGrammar(const Grammar& a, const Grammar& b);

}  // namespace fslat::grammar
