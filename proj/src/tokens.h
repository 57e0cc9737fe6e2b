// tokens.h -- word-level token sequences, edit operations and alignments.

#ifndef ASRSCORE_TOKENS_H_
#define ASRSCORE_TOKENS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace asrscore {

// A token is a non-empty string without whitespace; a TokenSeq is the
// normalized word sequence of one utterance side (reference or hypothesis).
using Token = std::string;
using TokenSeq = std::vector<Token>;

// Splits on runs of whitespace, dropping empty fragments. Empty input
// yields an empty sequence.
TokenSeq Tokenize(const std::string &text);

// Joins with single spaces; Tokenize(JoinTokens(s)) == s.
std::string JoinTokens(const TokenSeq &seq);

enum class EditKind : uint8_t { kCor = 0, kSub = 1, kDel = 2, kIns = 3 };

const char *EditKindName(EditKind kind);  // "COR", "SUB", "DEL", "INS"

// One aligned column. COR/SUB carry both tokens, DEL carries ref only,
// INS carries hyp only; COR implies ref == hyp exactly.
struct EditOp {
  EditKind kind;
  std::optional<Token> ref;
  std::optional<Token> hyp;

  static EditOp Cor(Token t) { return {EditKind::kCor, t, t}; }
  static EditOp Sub(Token r, Token h) { return {EditKind::kSub, std::move(r), std::move(h)}; }
  static EditOp Del(Token r) { return {EditKind::kDel, std::move(r), std::nullopt}; }
  static EditOp Ins(Token h) { return {EditKind::kIns, std::nullopt, std::move(h)}; }
};

// Ordered edit operations plus their tallies. Always satisfies
//   cor + sub + del == |ref|,  cor + sub + ins == |hyp|,
//   cost == sub + ins + del.
struct Alignment {
  std::vector<EditOp> ops;
  int64_t cor = 0;
  int64_t sub = 0;
  int64_t ins = 0;
  int64_t del = 0;
  int64_t cost = 0;

  int64_t RefLen() const { return cor + sub + del; }
  int64_t HypLen() const { return cor + sub + ins; }

  // Tallies counts from `ops` and checks the structural invariants,
  // throwing std::logic_error on violation (internal bug signal).
  static Alignment FromOps(std::vector<EditOp> ops);
};

// Per-utterance scoring record (the JSONL unit). `ter` is empty when the
// reference is empty; `hyp_len` is the selected-variant length when the
// alignment was produced with alternative expansion.
struct UtteranceScore {
  std::string uid;
  Alignment alignment;
  std::optional<double> ter;
  double mter = 0.0;
  int64_t ref_len = 0;
  int64_t hyp_len = 0;
};

}  // namespace asrscore

#endif  // ASRSCORE_TOKENS_H_
