// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <string>
#include <vector>

#include "common/error.hpp"

namespace fslat::fsa {

// Regular-expression tree over symbol texts. Produced by the grammar parser
// and consumed by fromPattern().
struct Pattern {
  enum class Kind {
    Name,          // unresolved identifier: constant, class or literal
    Symbol,        // literal symbol text
    Class,         // one symbol out of a class
    NegatedClass,  // one symbol not in a class
    Concat,        // zero children denotes the empty string
    Union,
    Star,
    Option,
    ClauseGap,     // `..`
    AnyGap,        // `...`
    Position,      // `_`, only inside rule contexts
  };

  Kind kind = Kind::Concat;
  // Literal text or class/constant name.
  std::string text;
  // Resolved class members (Class, NegatedClass) or the symbols a ClauseGap
  // may not cross. Empty means "look the name up in the alphabet".
  std::vector<std::string> members;
  std::vector<Pattern> children;
  SourceLocation where;

  static Pattern name(std::string text, SourceLocation where = {}) { return leaf(Kind::Name, std::move(text), where); }
  static Pattern symbol(std::string text, SourceLocation where = {}) { return leaf(Kind::Symbol, std::move(text), where); }
  static Pattern classRef(std::string name, std::vector<std::string> members = {}, SourceLocation where = {});
  static Pattern negatedClass(std::string name, std::vector<std::string> members = {}, SourceLocation where = {});
  static Pattern concat(std::vector<Pattern> parts, SourceLocation where = {}) { return node(Kind::Concat, std::move(parts), where); }
  static Pattern alternatives(std::vector<Pattern> parts, SourceLocation where = {}) { return node(Kind::Union, std::move(parts), where); }
  static Pattern star(Pattern inner, SourceLocation where = {}) { return node(Kind::Star, {std::move(inner)}, where); }
  static Pattern option(Pattern inner, SourceLocation where = {}) { return node(Kind::Option, {std::move(inner)}, where); }
  static Pattern clauseGap(SourceLocation where = {}) { return leaf(Kind::ClauseGap, "..", where); }
  static Pattern anyGap(SourceLocation where = {}) { return leaf(Kind::AnyGap, "...", where); }
  static Pattern position(SourceLocation where = {}) { return leaf(Kind::Position, "_", where); }
  static Pattern empty() { return concat({}); }

  // Structural equality; source locations are ignored.
  bool sameAs(const Pattern& other) const;

 private:
  static Pattern leaf(Kind kind, std::string text, SourceLocation where);
  static Pattern node(Kind kind, std::vector<Pattern> children, SourceLocation where);
};

}  // namespace fslat::fsa
