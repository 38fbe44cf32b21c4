// Licensed under the Apache License 2.0 (see LICENSE file).

#include "fsa/pattern.hpp"

namespace fslat::fsa {

Pattern Pattern::leaf(Kind kind, std::string text, SourceLocation where) {
  Pattern p;
  p.kind = kind;
  p.text = std::move(text);
  p.where = where;
  return p;
}

Pattern Pattern::node(Kind kind, std::vector<Pattern> children, SourceLocation where) {
  Pattern p;
  p.kind = kind;
  p.children = std::move(children);
  p.where = where;
  return p;
}

Pattern Pattern::classRef(std::string name, std::vector<std::string> members, SourceLocation where) {
  Pattern p = leaf(Kind::Class, std::move(name), where);
  p.members = std::move(members);
  return p;
}

Pattern Pattern::negatedClass(std::string name, std::vector<std::string> members, SourceLocation where) {
  Pattern p = leaf(Kind::NegatedClass, std::move(name), where);
  p.members = std::move(members);
  return p;
}

bool Pattern::sameAs(const Pattern& other) const {
  if (kind != other.kind || text != other.text || members != other.members) return false;
  if (children.size() != other.children.size()) return false;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (!children[i].sameAs(other.children[i])) return false;
  }
  return true;
}

}  // namespace fslat::fsa
