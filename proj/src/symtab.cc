#include "symtab.h"

#include <stdexcept>

namespace asrscore {

SymbolTable::SymbolTable() {
  entries_.push_back({"<eps>", Kind::kEpsilon});
  entries_.push_back({"<sub>", Kind::kAux});
}

SymbolId SymbolTable::AddToken(const std::string &token) {
  auto it = token_index_.find(token);
  if (it != token_index_.end()) return it->second;
  SymbolId id = static_cast<SymbolId>(entries_.size());
  entries_.push_back({token, Kind::kToken});
  token_index_.emplace(token, id);
  ++num_tokens_;
  return id;
}

SymbolId SymbolTable::FindToken(const std::string &token) const {
  auto it = token_index_.find(token);
  return it == token_index_.end() ? kEpsilonId : it->second;
}

SymbolId SymbolTable::AddTag(const std::string &tag) {
  auto it = tag_index_.find(tag);
  if (it != tag_index_.end()) return it->second;
  SymbolId id = static_cast<SymbolId>(entries_.size());
  entries_.push_back({tag, Kind::kTag});
  tag_index_.emplace(tag, id);
  return id;
}

const std::string &SymbolTable::Name(SymbolId id) const {
  if (id < 0 || static_cast<size_t>(id) >= entries_.size())
    throw std::out_of_range("symbol id out of range");
  return entries_[id].name;
}

SymbolTable::Kind SymbolTable::KindOf(SymbolId id) const {
  if (id < 0 || static_cast<size_t>(id) >= entries_.size())
    throw std::out_of_range("symbol id out of range");
  return entries_[id].kind;
}

std::vector<SymbolId> SymbolTable::TokenIds() const {
  std::vector<SymbolId> out;
  out.reserve(num_tokens_);
  for (size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].kind == Kind::kToken) out.push_back(static_cast<SymbolId>(i));
  return out;
}

}  // namespace asrscore
