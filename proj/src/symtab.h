// symtab.h -- bidirectional token <-> integer-id map shared by all FSTs in
// one scoring run. Id 0 is epsilon and id 1 the substitution auxiliary
// symbol; DAE hash-tag symbols live in their own namespace so they can never
// collide with real tokens.

#ifndef ASRSCORE_SYMTAB_H_
#define ASRSCORE_SYMTAB_H_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace asrscore {

using SymbolId = int32_t;

constexpr SymbolId kEpsilonId = 0;
constexpr SymbolId kSubAuxId = 1;

class SymbolTable {
 public:
  enum class Kind : uint8_t { kEpsilon, kAux, kToken, kTag };

  SymbolTable();

  // Registers (or finds) a token, returning its dense id.
  SymbolId AddToken(const std::string &token);
  // Lookup without insertion; returns kEpsilonId when absent.
  SymbolId FindToken(const std::string &token) const;
  // Registers (or finds) a DAE hash-tag symbol such as "#3".
  SymbolId AddTag(const std::string &tag);

  const std::string &Name(SymbolId id) const;
  Kind KindOf(SymbolId id) const;
  bool IsToken(SymbolId id) const { return KindOf(id) == Kind::kToken; }

  // Total number of registered symbols of every kind.
  size_t Size() const { return entries_.size(); }
  // Number of real tokens (the vocabulary size V).
  size_t NumTokens() const { return num_tokens_; }

  // Every token id in registration order.
  std::vector<SymbolId> TokenIds() const;

 private:
  struct Entry {
    std::string name;
    Kind kind;
  };
  std::vector<Entry> entries_;
  std::unordered_map<std::string, SymbolId> token_index_;
  std::unordered_map<std::string, SymbolId> tag_index_;
  size_t num_tokens_ = 0;
};

}  // namespace asrscore

#endif  // ASRSCORE_SYMTAB_H_
