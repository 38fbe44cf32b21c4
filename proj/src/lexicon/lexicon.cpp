// Licensed under the Apache License 2.0 (see LICENSE file).

#include "lexicon/lexicon.hpp"

#include <algorithm>
#include <cctype>

namespace fslat::lexicon {

namespace {

struct Token {
  enum class Kind { Open, Close, Quoted, Atom, End } kind;
  std::string text;
  SourceLocation where;
};

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  Token next() {
    skipSpaceAndComments();
    SourceLocation where{line_, column()};
    if (pos_ >= text_.size()) return {Token::Kind::End, "", where};
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      return {Token::Kind::Open, "(", where};
    }
    if (c == ')') {
      ++pos_;
      return {Token::Kind::Close, ")", where};
    }
    if (c == '"') {
      std::size_t end = text_.find('"', pos_ + 1);
      std::size_t eol = text_.find('\n', pos_ + 1);
      if (end == std::string_view::npos || (eol != std::string_view::npos && eol < end)) {
        throw Error(ErrorKind::Parse, "unterminated quoted string", where);
      }
      std::string value(text_.substr(pos_ + 1, end - pos_ - 1));
      pos_ = end + 1;
      return {Token::Kind::Quoted, std::move(value), where};
    }
    std::size_t start = pos_;
    if (c == '<') {
      // Markers may contain any character up to the closing bracket.
      std::size_t end = text_.find('>', pos_);
      if (end == std::string_view::npos) throw Error(ErrorKind::Parse, "unterminated <marker>", where);
      pos_ = end + 1;
    } else {
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '"') {
        ++pos_;
      }
    }
    return {Token::Kind::Atom, std::string(text_.substr(start, pos_ - start)), where};
  }

 private:
  void skipSpaceAndComments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        lineStart_ = ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' && atLineStart()) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool atLineStart() const {
    for (std::size_t i = lineStart_; i < pos_; ++i) {
      if (!std::isspace(static_cast<unsigned char>(text_[i]))) return false;
    }
    return true;
  }

  std::size_t column() const { return pos_ - lineStart_ + 1; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t lineStart_ = 0;
};

bool isSyntacticTag(const std::string& tag) {
  return tag.size() > 1 && (tag.front() == '@' || tag.back() == '@');
}

class LexiconParser {
 public:
  explicit LexiconParser(std::string_view text) : scanner_(text) { advance(); }

  Lexicon parse() {
    std::vector<Entry> entries;
    while (current_.kind != Token::Kind::End) entries.push_back(entry());
    if (entries.empty()) throw Error(ErrorKind::Parse, "lexicon is empty", current_.where);
    return Lexicon(std::move(entries), std::move(warnings_));
  }

 private:
  Entry entry() {
    expect(Token::Kind::Open, "expected '(' to open an entry");
    Entry e;
    e.where = current_.where;
    if (current_.kind != Token::Kind::Quoted) throw Error(ErrorKind::Parse, "expected a quoted headword \"<word>\"", current_.where);
    const std::string& head = current_.text;
    if (head.size() < 3 || head.front() != '<' || head.back() != '>') {
      throw Error(ErrorKind::Parse, "headword must be written \"<word>\"", current_.where);
    }
    e.headword = head.substr(1, head.size() - 2);
    e.key = e.headword;
    e.key.erase(std::remove(e.key.begin(), e.key.end(), '*'), e.key.end());
    if (!e.key.empty() && e.key.front() == '$' && e.key.size() > 1) e.key.erase(0, 1);
    if (e.key.empty()) throw Error(ErrorKind::Parse, "empty headword", current_.where);
    advance();

    while (current_.kind == Token::Kind::Open) {
      SourceLocation where = current_.where;
      MorphReading r = reading();
      if (std::find(e.readings.begin(), e.readings.end(), r) != e.readings.end()) {
        warnings_.push_back("line " + std::to_string(where.line) + ": duplicate reading for <" + e.headword + "> collapsed");
        continue;
      }
      e.readings.push_back(std::move(r));
    }
    expect(Token::Kind::Close, "expected ')' to close the entry for <" + e.headword + ">");
    if (e.readings.empty()) {
      e.punctuation = true;
      e.readings.push_back(MorphReading{e.key, {}, {punctuationCategory(e.key)}, {}});
    }
    return e;
  }

  MorphReading reading() {
    expect(Token::Kind::Open, "expected '('");
    if (current_.kind != Token::Kind::Quoted) throw Error(ErrorKind::Parse, "expected a quoted base form", current_.where);
    MorphReading r;
    r.base = current_.text;
    SourceLocation where = current_.where;
    advance();
    while (current_.kind == Token::Kind::Atom) {
      const std::string& atom = current_.text;
      if (atom.size() > 1 && atom.front() == '<' && atom.back() == '>') {
        r.markers.push_back(atom);
      } else if (isSyntacticTag(atom)) {
        r.syntax.push_back(atom);
      } else {
        r.tags.push_back(atom);
      }
      advance();
    }
    if (current_.kind == Token::Kind::Quoted) throw Error(ErrorKind::Parse, "unexpected quoted string inside a reading", current_.where);
    expect(Token::Kind::Close, "expected ')' to close the reading");
    if (r.tags.empty()) throw Error(ErrorKind::Parse, "reading \"" + r.base + "\" has no tags", where);
    return r;
  }

  void expect(Token::Kind kind, const std::string& message) {
    if (current_.kind != kind) {
      if (current_.kind == Token::Kind::End) throw Error(ErrorKind::Parse, "unbalanced parentheses: " + message, current_.where);
      throw Error(ErrorKind::Parse, message + ", found '" + current_.text + "'", current_.where);
    }
    advance();
  }

  void advance() { current_ = scanner_.next(); }

  Scanner scanner_;
  Token current_{Token::Kind::End, "", {}};
  std::vector<std::string> warnings_;
};

void appendReading(std::string& out, const MorphReading& r) {
  out += "(\"" + r.base + "\"";
  for (const auto& m : r.markers) out += " " + m;
  for (const auto& t : r.tags) out += " " + t;
  for (const auto& s : r.syntax) out += " " + s;
  out += ")";
}

}  // namespace

Lexicon::Lexicon(std::vector<Entry> entries, std::vector<std::string> warnings)
    : entries_(std::move(entries)), warnings_(std::move(warnings)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) index_[entries_[i].key].push_back(i);
}

std::vector<const Entry*> Lexicon::find(std::string_view key) const {
  std::vector<const Entry*> out;
  if (auto it = index_.find(std::string(key)); it != index_.end()) {
    for (std::size_t i : it->second) out.push_back(&entries_[i]);
  }
  return out;
}

Lexicon parseLexicon(std::string_view text) { return LexiconParser(text).parse(); }

std::string serialize(const Entry& entry) {
  std::string out = "(\"<" + entry.headword + ">\"";
  if (entry.punctuation) return out + ")\n";
  for (const auto& r : entry.readings) {
    out += "\n  ";
    appendReading(out, r);
  }
  return out + ")\n";
}

std::string serialize(const Lexicon& lexicon) {
  std::string out;
  for (const auto& e : lexicon.entries()) out += serialize(e);
  return out;
}

std::string punctuationCategory(std::string_view token) {
  if (token == ".") return "FULLSTOP";
  if (token == ",") return "COMMA";
  if (token == "?") return "QUESTION";
  if (token == "!") return "EXCLAMATION";
  if (token == ";") return "SEMICOLON";
  if (token == ":") return "COLON";
  return "PUNCT";
}

bool isPunctuation(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::ispunct(c); });
}

std::string toLower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

Cohort lookup(const Lexicon& lexicon, const std::string& token) {
  if (token.empty()) throw Error(ErrorKind::Precondition, "cannot look up an empty token");
  Cohort cohort{token, {}};
  auto matches = lexicon.find(token);
  if (matches.empty()) matches = lexicon.find(toLower(token));
  for (const Entry* e : matches) {
    for (const auto& r : e->readings) {
      if (std::find(cohort.readings.begin(), cohort.readings.end(), r) == cohort.readings.end()) {
        cohort.readings.push_back(r);
      }
    }
  }
  if (!cohort.readings.empty()) return cohort;

  if (lexicon.policy() == UnknownWordPolicy::Closed) {
    throw Error(ErrorKind::UnknownWord, "unknown word '" + token + "'");
  }
  if (isPunctuation(token)) {
    cohort.readings.push_back(MorphReading{token, {}, {punctuationCategory(token)}, {}});
    return cohort;
  }
  const std::string base = toLower(token);
  cohort.readings = {
      MorphReading{base, {}, {"N", "NOM", "SG"}, {}},
      MorphReading{base, {}, {"V", "INF"}, {}},
      MorphReading{base, {}, {"A", "ABS"}, {}},
      MorphReading{base, {}, {"ADV"}, {}},
  };
  return cohort;
}

std::vector<std::string> tokenize(std::string_view text) {
  static constexpr std::string_view kSplit = ".?!,;";
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) break;
    std::string_view chunk = text.substr(start, pos - start);
    std::vector<std::string> trailing;
    while (chunk.size() > 1 && kSplit.find(chunk.back()) != std::string_view::npos) {
      trailing.emplace_back(1, chunk.back());
      chunk.remove_suffix(1);
    }
    tokens.emplace_back(chunk);
    tokens.insert(tokens.end(), trailing.rbegin(), trailing.rend());
  }
  return tokens;
}

bool isSentenceEnd(std::string_view token) { return token == "." || token == "?" || token == "!"; }

std::vector<std::vector<std::string>> splitSentences(const std::vector<std::string>& tokens) {
  std::vector<std::vector<std::string>> sentences;
  std::vector<std::string> current;
  for (const auto& t : tokens) {
    current.push_back(t);
    if (isSentenceEnd(t)) {
      sentences.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) sentences.push_back(std::move(current));
  return sentences;
}

}  // namespace fslat::lexicon
