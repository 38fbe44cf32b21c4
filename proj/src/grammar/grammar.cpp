// Licensed under the Apache License 2.0 (see LICENSE file).

#include "grammar/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace fslat::grammar {

namespace {

using K = Pattern::Kind;

struct Token {
  enum class Kind {
    Word,
    Quoted,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Bar,
    Star,
    Comma,
    Semi,
    Tilde,
    ClauseGap,
    AnyGap,
    Arrow,
    Define,
    ClassDefine,
    Colon,
    End
  } kind;
  std::string text;
  SourceLocation where;
};

bool isWordChar(char c) {
  static constexpr std::string_view kSpecial = "()[]|*,;~#\"=:.";
  return !std::isspace(static_cast<unsigned char>(c)) && kSpecial.find(c) == std::string_view::npos;
}

std::vector<Token> scan(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0, line = 1, lineStart = 0;
  auto here = [&] { return SourceLocation{line, pos - lineStart + 1}; };
  auto error = [&](const std::string& msg) { return Error(ErrorKind::Parse, msg, here()); };

  while (true) {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '\n') {
        ++line;
        lineStart = ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
    const SourceLocation where = here();
    if (pos >= text.size()) {
      out.push_back({Token::Kind::End, "", where});
      return out;
    }
    auto punct = [&](Token::Kind kind, std::size_t length) {
      out.push_back({kind, std::string(text.substr(pos, length)), where});
      pos += length;
    };
    const char c = text[pos];
    const std::string_view rest = text.substr(pos);
    if (rest.starts_with("...")) {
      punct(Token::Kind::AnyGap, 3);
    } else if (rest.starts_with("..")) {
      punct(Token::Kind::ClauseGap, 2);
    } else if (c == '.') {
      throw error("a single '.' is not an operator; quote punctuation words as \"<.>\"");
    } else if (rest.starts_with("=>")) {
      punct(Token::Kind::Arrow, 2);
    } else if (rest.starts_with(":=")) {
      punct(Token::Kind::ClassDefine, 2);
    } else if (c == '=') {
      punct(Token::Kind::Define, 1);
    } else if (c == ':') {
      punct(Token::Kind::Colon, 1);
    } else if (c == '(') {
      punct(Token::Kind::LParen, 1);
    } else if (c == ')') {
      punct(Token::Kind::RParen, 1);
    } else if (c == '[') {
      punct(Token::Kind::LBracket, 1);
    } else if (c == ']') {
      punct(Token::Kind::RBracket, 1);
    } else if (c == '|') {
      punct(Token::Kind::Bar, 1);
    } else if (c == '*') {
      punct(Token::Kind::Star, 1);
    } else if (c == ',') {
      punct(Token::Kind::Comma, 1);
    } else if (c == ';') {
      punct(Token::Kind::Semi, 1);
    } else if (c == '~') {
      punct(Token::Kind::Tilde, 1);
    } else if (c == '"') {
      std::size_t end = text.find('"', pos + 1);
      std::size_t eol = text.find('\n', pos + 1);
      if (end == std::string_view::npos || end < pos + 2 || (eol != std::string_view::npos && eol < end)) {
        throw error("unterminated quoted symbol");
      }
      punct(Token::Kind::Quoted, end - pos + 1);
    } else if (c == '<') {
      // Markers such as <SVO> or <*> run to the closing bracket.
      std::size_t end = text.find('>', pos);
      std::size_t stop = pos;
      while (stop < text.size() && !std::isspace(static_cast<unsigned char>(text[stop]))) ++stop;
      if (end != std::string_view::npos && end < stop) {
        std::size_t length = end - pos + 1;
        while (pos + length < text.size() && isWordChar(text[pos + length])) ++length;
        punct(Token::Kind::Word, length);
      } else {
        std::size_t length = 0;
        while (pos + length < text.size() && isWordChar(text[pos + length])) ++length;
        punct(Token::Kind::Word, length);
      }
    } else {
      std::size_t length = 0;
      while (pos + length < text.size() && isWordChar(text[pos + length])) ++length;
      if (length == 0) throw error(std::string("unexpected character '") + c + "'");
      punct(Token::Kind::Word, length);
    }
  }
}

Pattern flatten(K kind, std::vector<Pattern> items, SourceLocation where) {
  std::vector<Pattern> flat;
  for (auto& item : items) {
    if (item.kind == kind) {
      for (auto& child : item.children) flat.push_back(std::move(child));
    } else {
      flat.push_back(std::move(item));
    }
  }
  if (flat.size() == 1) return std::move(flat.front());
  return kind == K::Concat ? Pattern::concat(std::move(flat), where) : Pattern::alternatives(std::move(flat), where);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(scan(text)) {}

  Grammar parse() {
    Grammar g;
    while (peek().kind != Token::Kind::End) statement(g);
    return g;
  }

 private:
  using T = Token::Kind;

  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  const Token& take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    std::string found = at.kind == T::End ? "end of input" : "'" + at.text + "'";
    throw Error(ErrorKind::Parse, message + ", found " + found, at.where);
  }

  const Token& expect(T kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what, peek());
    return take();
  }

  void claimName(const std::string& name, SourceLocation where) {
    if (!names_.insert(name).second) throw Error(ErrorKind::Parse, "'" + name + "' is defined twice", where);
  }

  void statement(Grammar& g) {
    const Token& first = peek();
    if (first.kind == T::Word && peek(1).kind == T::Define) {
      claimName(first.text, first.where);
      Constant c{take().text, {}, first.where};
      take();
      c.pattern = alternatives(false);
      if (c.pattern.kind == K::Concat && c.pattern.children.empty()) fail("constant '" + c.name + "' is empty", peek());
      expect(T::Semi, "';' after the constant definition");
      g.constants.push_back(std::move(c));
      return;
    }
    if (first.kind == T::Word && peek(1).kind == T::ClassDefine) {
      claimName(first.text, first.where);
      ClassDef c{take().text, {}, first.where};
      take();
      while (peek().kind == T::Word || peek().kind == T::Quoted) {
        const std::string& m = take().text;
        if (std::find(c.members.begin(), c.members.end(), m) == c.members.end()) c.members.push_back(m);
      }
      if (c.members.empty()) fail("class '" + c.name + "' needs at least one member", peek());
      expect(T::Semi, "';' after the class members");
      g.classes.push_back(std::move(c));
      return;
    }
    rule(g);
  }

  void rule(Grammar& g) {
    ImplicationRule r;
    r.where = peek().where;
    if (peek().kind == T::Word && peek(1).kind == T::Colon) {
      r.name = take().text;
      r.labeled = true;
      take();
      if (!ruleNames_.insert(r.name).second) throw Error(ErrorKind::Parse, "rule '" + r.name + "' is defined twice", r.where);
    }
    r.target = alternatives(false);
    if (r.target.kind == K::Concat && r.target.children.empty()) fail("expected a rule target", peek());
    expect(T::Arrow, "'=>' after the rule target");
    if (peek().kind == T::Semi) fail("rule has no contexts", peek());
    while (true) {
      r.contexts.push_back(context());
      if (peek().kind == T::Comma) {
        take();
        continue;
      }
      expect(T::Semi, "',' or ';' after a context");
      break;
    }
    if (!r.labeled) {
      const std::string base = formatPattern(r.target);
      r.name = base;
      for (int n = 2; !ruleNames_.insert(r.name).second; ++n) r.name = base + " #" + std::to_string(n);
    }
    g.rules.push_back(std::move(r));
  }

  Context context() {
    const SourceLocation where = peek().where;
    std::vector<Pattern> items = sequence(true);
    auto it = std::find_if(items.begin(), items.end(), [](const Pattern& p) { return p.kind == K::Position; });
    if (it == items.end()) throw Error(ErrorKind::Parse, "context has no '_'", where);
    if (std::count_if(items.begin(), items.end(), [](const Pattern& p) { return p.kind == K::Position; }) > 1) {
      throw Error(ErrorKind::Parse, "context has more than one '_'", where);
    }
    Context c;
    c.left = Pattern::concat({items.begin(), it}, where);
    c.right = Pattern::concat({it + 1, items.end()}, where);
    return c;
  }

  Pattern alternatives(bool topLevelContext) {
    const SourceLocation where = peek().where;
    std::vector<Pattern> alts;
    alts.push_back(flatten(K::Concat, sequence(topLevelContext), where));
    while (peek().kind == T::Bar) {
      take();
      alts.push_back(flatten(K::Concat, sequence(topLevelContext), where));
    }
    return flatten(K::Union, std::move(alts), where);
  }

  std::vector<Pattern> sequence(bool allowPosition) {
    std::vector<Pattern> items;
    while (true) {
      switch (peek().kind) {
        case T::Bar:
        case T::RParen:
        case T::RBracket:
        case T::Comma:
        case T::Semi:
        case T::Arrow:
        case T::End:
          return items;
        default:
          break;
      }
      Pattern item = postfix(allowPosition);
      if (item.kind == K::Concat) {
        for (auto& child : item.children) items.push_back(std::move(child));
      } else {
        items.push_back(std::move(item));
      }
    }
  }

  Pattern postfix(bool allowPosition) {
    Pattern p = atom(allowPosition);
    while (peek().kind == T::Star) {
      const Token& star = take();
      if (p.kind == K::Position) throw Error(ErrorKind::Parse, "'_' cannot be repeated", star.where);
      p = Pattern::star(std::move(p), star.where);
    }
    return p;
  }

  Pattern atom(bool allowPosition) {
    const Token& t = take();
    switch (t.kind) {
      case T::Word:
        if (t.text == "_") {
          if (!allowPosition) throw Error(ErrorKind::Parse, "'_' is only allowed at the top level of a rule context", t.where);
          return Pattern::position(t.where);
        }
        return Pattern::name(t.text, t.where);
      case T::Quoted:
        return Pattern::symbol(t.text, t.where);
      case T::Tilde: {
        const Token& n = take();
        if (n.kind != T::Word && n.kind != T::Quoted) fail("expected a class or symbol after '~'", n);
        return Pattern::negatedClass(n.text, {}, t.where);
      }
      case T::LParen: {
        Pattern inner = alternatives(false);
        expect(T::RParen, "')'");
        return inner;
      }
      case T::LBracket: {
        Pattern inner = alternatives(false);
        expect(T::RBracket, "']'");
        return Pattern::option(std::move(inner), t.where);
      }
      case T::ClauseGap:
        return Pattern::clauseGap(t.where);
      case T::AnyGap:
        return Pattern::anyGap(t.where);
      case T::Colon:
        fail("a rule label must come first", t);
      case T::Define:
      case T::ClassDefine:
        fail("definitions must start a statement", t);
      default:
        fail("expected a pattern", t);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::set<std::string> names_;
  std::set<std::string> ruleNames_;
};

class Expander {
 public:
  explicit Expander(const Grammar& g) : g_(g) {
    if (const ClassDef* clb = g.findClass("CLB")) clauseBreaks_ = clb->members;
  }

  Pattern resolve(const Pattern& p) {
    switch (p.kind) {
      case K::Name: {
        if (const Constant* c = g_.findConstant(p.text)) return constant(*c, p.where);
        if (const ClassDef* cls = g_.findClass(p.text)) return Pattern::classRef(cls->name, cls->members, p.where);
        return Pattern::symbol(p.text, p.where);
      }
      case K::NegatedClass: {
        if (!p.members.empty()) return p;
        if (g_.findConstant(p.text)) throw Error(ErrorKind::Compile, "'~' needs a class or symbol, not constant '" + p.text + "'", p.where);
        if (const ClassDef* cls = g_.findClass(p.text)) return Pattern::negatedClass(cls->name, cls->members, p.where);
        return Pattern::negatedClass(p.text, {p.text}, p.where);
      }
      case K::ClauseGap: {
        Pattern out = p;
        if (out.members.empty()) out.members = clauseBreaks_;
        return out;
      }
      case K::Symbol:
      case K::Class:
      case K::AnyGap:
      case K::Position:
        return p;
      case K::Concat:
      case K::Union:
      case K::Star:
      case K::Option: {
        Pattern out = p;
        for (auto& child : out.children) child = resolve(child);
        return out;
      }
    }
    throw Error(ErrorKind::Internal, "unhandled pattern node");
  }

  Pattern constant(const Constant& c, SourceLocation use) {
    auto it = std::find(stack_.begin(), stack_.end(), c.name);
    if (it != stack_.end()) {
      std::string cycle;
      for (; it != stack_.end(); ++it) cycle += *it + " -> ";
      throw Error(ErrorKind::Compile, "cyclic constant: " + cycle + c.name, use.known() ? use : c.where);
    }
    stack_.push_back(c.name);
    Pattern out = resolve(c.pattern);
    stack_.pop_back();
    return out;
  }

 private:
  const Grammar& g_;
  std::vector<std::string> clauseBreaks_;
  std::vector<std::string> stack_;
};

std::string format(const Pattern& p, int level) {
  auto wrap = [](std::string s, bool parens) { return parens ? "(" + s + ")" : s; };
  switch (p.kind) {
    case K::Name:
    case K::Symbol:
    case K::Class:
      return p.text;
    case K::NegatedClass:
      return "~" + p.text;
    case K::ClauseGap:
      return "..";
    case K::AnyGap:
      return "...";
    case K::Position:
      return "_";
    case K::Star:
      return format(p.children.at(0), 2) + "*";
    case K::Option:
      return "[" + format(p.children.at(0), 0) + "]";
    case K::Concat: {
      if (p.children.empty()) return "()";
      std::string s;
      for (const auto& c : p.children) s += (s.empty() ? "" : " ") + format(c, 1);
      return wrap(s, level >= 2 && p.children.size() > 1);
    }
    case K::Union: {
      std::string s;
      for (const auto& c : p.children) s += (s.empty() ? "" : " | ") + format(c, 1);
      return wrap(s, level >= 1);
    }
  }
  return "";
}

std::string formatSide(const Pattern& side) {
  if (side.kind == K::Concat) {
    std::string s;
    for (const auto& c : side.children) s += (s.empty() ? "" : " ") + format(c, 1);
    return s;
  }
  return format(side, 1);
}

}  // namespace

const ClassDef* Grammar::findClass(std::string_view name) const {
  auto it = std::find_if(classes.begin(), classes.end(), [&](const ClassDef& c) { return c.name == name; });
  return it == classes.end() ? nullptr : &*it;
}

const Constant* Grammar::findConstant(std::string_view name) const {
  auto it = std::find_if(constants.begin(), constants.end(), [&](const Constant& c) { return c.name == name; });
  return it == constants.end() ? nullptr : &*it;
}

Grammar parseGrammar(std::string_view text) { return Parser(text).parse(); }

Grammar expandConstants(const Grammar& grammar) {
  Expander expander(grammar);
  Grammar out;
  out.classes = grammar.classes;
  for (const auto& c : grammar.constants) out.constants.push_back({c.name, expander.constant(c, {}), c.where});
  for (const auto& r : grammar.rules) {
    ImplicationRule e = r;
    e.target = expander.resolve(r.target);
    for (auto& ctx : e.contexts) {
      ctx.left = expander.resolve(ctx.left);
      ctx.right = expander.resolve(ctx.right);
    }
    out.rules.push_back(std::move(e));
  }
  return out;
}

std::string formatPattern(const Pattern& pattern) { return format(pattern, 0); }

std::string formatRule(const ImplicationRule& rule) {
  std::string s = rule.labeled ? rule.name + ": " : "";
  s += formatPattern(rule.target) + " =>";
  for (std::size_t i = 0; i < rule.contexts.size(); ++i) {
    std::string left = formatSide(rule.contexts[i].left), right = formatSide(rule.contexts[i].right);
    s += (i == 0 ? " " : " , ") + (left.empty() ? "" : left + " ") + "_" + (right.empty() ? "" : " " + right);
  }
  return s + " ;";
}

std::string formatGrammar(const Grammar& grammar) {
  std::string out;
  for (const auto& c : grammar.classes) {
    out += c.name + " :=";
    for (const auto& m : c.members) out += " " + m;
    out += " ;\n";
  }
  for (const auto& c : grammar.constants) out += c.name + " = " + formatPattern(c.pattern) + " ;\n";
  for (const auto& r : grammar.rules) out += formatRule(r) + "\n";
  return out;
}

bool sameGrammar(const Grammar& a, const Grammar& b) {
  if (a.classes.size() != b.classes.size() || a.constants.size() != b.constants.size() || a.rules.size() != b.rules.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    if (a.classes[i].name != b.classes[i].name || a.classes[i].members != b.classes[i].members) return false;
  }
  for (std::size_t i = 0; i < a.constants.size(); ++i) {
    if (a.constants[i].name != b.constants[i].name || !a.constants[i].pattern.sameAs(b.constants[i].pattern)) return false;
  }
  for (std::size_t i = 0; i < a.rules.size(); ++i) {
    const auto& x = a.rules[i];
    const auto& y = b.rules[i];
    if (x.name != y.name || x.labeled != y.labeled || !x.target.sameAs(y.target) || x.contexts.size() != y.contexts.size()) {
      return false;
    }
    for (std::size_t j = 0; j < x.contexts.size(); ++j) {
      if (!x.contexts[j].left.sameAs(y.contexts[j].left) || !x.contexts[j].right.sameAs(y.contexts[j].right)) return false;
    }
  }
  return true;
}

}  // namespace fslat::grammar
