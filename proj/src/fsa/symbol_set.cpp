// Licensed under the Apache License 2.0 (see LICENSE file).

#include "fsa/symbol_set.hpp"

#include <algorithm>
#include <iterator>

namespace fslat::fsa {

namespace {

using Ids = boost::container::small_vector<SymbolId, 4>;

Ids setUnion(const Ids& a, const Ids& b) {
  Ids out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Ids setIntersection(const Ids& a, const Ids& b) {
  Ids out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Ids setDifference(const Ids& a, const Ids& b) {
  Ids out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void normalize(Ids& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

}  // namespace

SymbolSet SymbolSet::of(std::initializer_list<SymbolId> ids) {
  Ids out(ids.begin(), ids.end());
  normalize(out);
  return SymbolSet(false, std::move(out));
}

SymbolSet SymbolSet::of(std::vector<SymbolId> ids) {
  Ids out(ids.begin(), ids.end());
  normalize(out);
  return SymbolSet(false, std::move(out));
}

SymbolSet SymbolSet::allBut(std::vector<SymbolId> ids) {
  Ids out(ids.begin(), ids.end());
  out.push_back(kMarkSymbol);
  normalize(out);
  return SymbolSet(true, std::move(out));
}

bool SymbolSet::contains(SymbolId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id) != cofinite_;
}

SymbolSet SymbolSet::operator&(const SymbolSet& other) const {
  if (!cofinite_ && !other.cofinite_) return SymbolSet(false, setIntersection(ids_, other.ids_));
  if (cofinite_ && other.cofinite_) return SymbolSet(true, setUnion(ids_, other.ids_));
  if (cofinite_) return SymbolSet(false, setDifference(other.ids_, ids_));
  return SymbolSet(false, setDifference(ids_, other.ids_));
}

SymbolSet SymbolSet::operator|(const SymbolSet& other) const {
  if (!cofinite_ && !other.cofinite_) return SymbolSet(false, setUnion(ids_, other.ids_));
  if (cofinite_ && other.cofinite_) return SymbolSet(true, setIntersection(ids_, other.ids_));
  if (cofinite_) return SymbolSet(true, setDifference(ids_, other.ids_));
  return SymbolSet(true, setDifference(other.ids_, ids_));
}

SymbolSet SymbolSet::operator-(const SymbolSet& other) const {
  return *this & other.complement();
}

bool SymbolSet::operator<(const SymbolSet& other) const {
  if (cofinite_ != other.cofinite_) return !cofinite_;
  return std::lexicographical_compare(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end());
}

}  // namespace fslat::fsa
