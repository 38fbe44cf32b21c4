// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <deque>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fsa/symbol_set.hpp"

namespace fslat::fsa {

// Reserved boundary symbols, interned first in every alphabet.
inline constexpr SymbolId kSentenceBoundary = 0;  // @@
inline constexpr SymbolId kWordBoundary = 1;      // @
inline constexpr SymbolId kClauseBoundary = 2;    // @/
inline constexpr SymbolId kEmbeddingOpen = 3;     // @<
inline constexpr SymbolId kEmbeddingClose = 4;    // @>

// Name of the class whose members the within-clause gap `..` may not cross.
inline constexpr std::string_view kClauseBreakClass = "CLB";

// Interned symbol inventory plus named classes. Interning is thread-safe so
// sentences carrying new word forms can be built concurrently against one
// alphabet; references returned by text() stay valid for the alphabet's
// lifetime.
class Alphabet {
 public:
  Alphabet();
  Alphabet(const Alphabet&) = delete;
  Alphabet& operator=(const Alphabet&) = delete;

  SymbolId intern(std::string_view text);
  std::optional<SymbolId> find(std::string_view text) const;
  const std::string& text(SymbolId id) const;
  std::size_t size() const;
  // All interned ids, as a finite set.
  SymbolSet symbols() const;

  void defineClass(const std::string& name, std::vector<SymbolId> members);
  std::optional<SymbolSet> findClass(std::string_view name) const;
  std::vector<std::string> classNames() const;

  static bool isBoundary(SymbolId id) { return id <= kEmbeddingClose; }
  static SymbolSet boundaries();
  // Boundaries between tokens inside a sentence: @ @/ @< @>.
  static SymbolSet internalBoundaries();

 private:
  mutable std::shared_mutex mutex_;
  std::deque<std::string> texts_;
  std::unordered_map<std::string, SymbolId> ids_;
  std::map<std::string, SymbolSet, std::less<>> classes_;
};

}  // namespace fslat::fsa
