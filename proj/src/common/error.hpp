// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fslat {

enum class ErrorKind {
  Parse,         // malformed lexicon, map or grammar text
  Compile,       // grammar semantically invalid
  UnknownWord,   // closed lexicon policy
  InfiniteLanguage,
  Precondition,
  Io,
  Internal,
};

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;

  bool known() const { return line != 0; }
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, SourceLocation where = {})
      : std::runtime_error(format(message, where)), kind_(kind), where_(where) {}

  ErrorKind kind() const { return kind_; }
  SourceLocation where() const { return where_; }

 private:
  static std::string format(const std::string& message, SourceLocation where) {
    if (!where.known()) return message;
    std::string out = "line " + std::to_string(where.line);
    if (where.column != 0) out += ", column " + std::to_string(where.column);
    return out + ": " + message;
  }

  ErrorKind kind_;
  SourceLocation where_;
};

}  // namespace fslat
