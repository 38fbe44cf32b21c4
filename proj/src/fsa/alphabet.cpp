// Licensed under the Apache License 2.0 (see LICENSE file).

#include "fsa/alphabet.hpp"

#include <mutex>

#include "common/error.hpp"

namespace fslat::fsa {

Alphabet::Alphabet() {
  for (const char* text : {"@@", "@", "@/", "@<", "@>"}) intern(text);
  defineClass(std::string(kClauseBreakClass),
              {kClauseBoundary, kEmbeddingOpen, kEmbeddingClose, kSentenceBoundary});
}

SymbolId Alphabet::intern(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::Precondition, "symbol text must not be empty");
  {
    std::shared_lock lock(mutex_);
    if (auto it = ids_.find(std::string(text)); it != ids_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = ids_.try_emplace(std::string(text), static_cast<SymbolId>(texts_.size()));
  if (inserted) texts_.emplace_back(text);
  return it->second;
}

std::optional<SymbolId> Alphabet::find(std::string_view text) const {
  std::shared_lock lock(mutex_);
  if (auto it = ids_.find(std::string(text)); it != ids_.end()) return it->second;
  return std::nullopt;
}

const std::string& Alphabet::text(SymbolId id) const {
  std::shared_lock lock(mutex_);
  if (id >= texts_.size()) throw Error(ErrorKind::Internal, "symbol id out of range: " + std::to_string(id));
  return texts_[id];
}

std::size_t Alphabet::size() const {
  std::shared_lock lock(mutex_);
  return texts_.size();
}

SymbolSet Alphabet::symbols() const {
  std::vector<SymbolId> ids(size());
  for (SymbolId i = 0; i < ids.size(); ++i) ids[i] = i;
  return SymbolSet::of(std::move(ids));
}

void Alphabet::defineClass(const std::string& name, std::vector<SymbolId> members) {
  std::unique_lock lock(mutex_);
  for (SymbolId id : members) {
    if (id >= texts_.size()) throw Error(ErrorKind::Precondition, "class " + name + " has a member outside the alphabet");
  }
  classes_.insert_or_assign(name, SymbolSet::of(std::move(members)));
}

std::optional<SymbolSet> Alphabet::findClass(std::string_view name) const {
  std::shared_lock lock(mutex_);
  if (auto it = classes_.find(name); it != classes_.end()) return it->second;
  return std::nullopt;
}

std::vector<std::string> Alphabet::classNames() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> names;
  for (const auto& [name, set] : classes_) names.push_back(name);
  return names;
}

SymbolSet Alphabet::boundaries() {
  return SymbolSet::of({kSentenceBoundary, kWordBoundary, kClauseBoundary, kEmbeddingOpen, kEmbeddingClose});
}

SymbolSet Alphabet::internalBoundaries() {
  return SymbolSet::of({kWordBoundary, kClauseBoundary, kEmbeddingOpen, kEmbeddingClose});
}

}  // namespace fslat::fsa
