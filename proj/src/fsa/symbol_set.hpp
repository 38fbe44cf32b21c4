// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace fslat::fsa {

using SymbolId = std::uint32_t;

// Reserved id that is never interned. Rule compilation uses it to mark
// occurrence boundaries; SymbolSet::any() excludes it.
inline constexpr SymbolId kMarkSymbol = std::numeric_limits<SymbolId>::max();

// A set of symbols that is either finite (the listed ids) or co-finite
// (every id except the listed ones). Co-finite sets keep class and gap
// transitions valid when new word symbols are interned later.
class SymbolSet {
 public:
  SymbolSet() = default;

  static SymbolSet of(std::initializer_list<SymbolId> ids);
  static SymbolSet of(std::vector<SymbolId> ids);
  static SymbolSet single(SymbolId id) { return SymbolSet(false, Ids{id}); }
  static SymbolSet allBut(std::vector<SymbolId> ids);
  // Every symbol except the internal mark.
  static SymbolSet any() { return SymbolSet(true, Ids{kMarkSymbol}); }
  // Every symbol including the mark.
  static SymbolSet universe() { return SymbolSet(true, Ids{}); }

  bool cofinite() const { return cofinite_; }
  // Members when finite, exclusions when co-finite. Sorted, unique.
  std::span<const SymbolId> ids() const { return {ids_.data(), ids_.size()}; }

  bool empty() const { return !cofinite_ && ids_.empty(); }
  bool contains(SymbolId id) const;
  // Number of members; only meaningful for finite sets.
  std::size_t size() const { return ids_.size(); }
  // Smallest member; finite non-empty sets only.
  SymbolId first() const { return ids_.front(); }

  SymbolSet operator&(const SymbolSet& other) const;
  SymbolSet operator|(const SymbolSet& other) const;
  SymbolSet operator-(const SymbolSet& other) const;
  SymbolSet complement() const { return SymbolSet(!cofinite_, ids_); }

  bool operator==(const SymbolSet&) const = default;
  // Total order used to sort edges: finite sets by their smallest member,
  // co-finite sets last.
  bool operator<(const SymbolSet& other) const;

 private:
  // Most labels hold a handful of ids; keep them inline.
  using Ids = boost::container::small_vector<SymbolId, 4>;
  SymbolSet(bool cofinite, Ids ids) : cofinite_(cofinite), ids_(std::move(ids)) {}

  bool cofinite_ = false;
  Ids ids_;
};

}  // namespace fslat::fsa
