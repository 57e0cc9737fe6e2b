// wfst.h -- minimal weighted finite-state transducer engine over the
// tropical semiring (min, +): linear and sausage acceptor construction,
// on-the-fly composition and shortest-path extraction with deterministic
// tie-breaking. Exactly what the scoring pipeline needs, nothing more.

#ifndef ASRSCORE_WFST_H_
#define ASRSCORE_WFST_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "alternatives.h"
#include "symtab.h"
#include "tokens.h"

namespace asrscore {

using StateId = int32_t;

constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

struct Arc {
  SymbolId ilabel = kEpsilonId;
  SymbolId olabel = kEpsilonId;
  double weight = 0.0;
  StateId next = 0;
  // Hash-tag symbol marking arcs that belong to one expanded alternative
  // branch; 0 for untagged arcs. Propagated through composition.
  SymbolId tag = 0;
};

class Wfst {
 public:
  StateId AddState();
  void AddArc(StateId src, Arc arc);
  void SetFinal(StateId s, double cost = 0.0);

  StateId Start() const { return start_; }
  void SetStart(StateId s) { start_ = s; }
  bool IsFinal(StateId s) const { return final_[s] != kInfiniteCost; }
  double FinalCost(StateId s) const { return final_[s]; }
  const std::vector<Arc> &ArcsFrom(StateId s) const { return arcs_[s]; }
  size_t NumStates() const { return arcs_.size(); }
  size_t NumArcs() const;

 private:
  StateId start_ = 0;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<double> final_;
};

// Chain acceptor: one state per prefix of `seq`, all costs 0. Registers
// unseen tokens in `table`.
Wfst LinearFst(const TokenSeq &seq, SymbolTable *table);

// Sausage acceptor for hypothesis-side alternative expansion: every maximal
// span of `seq` matching a member of an AlternativeSet becomes a slot with
// one parallel branch per member, each branch marked with a unique hash tag
// so it is consumed as a whole; spans are detected greedily, longest match
// first, left to right. Unmatched tokens stay a linear chain.
Wfst SausageFst(const TokenSeq &seq, const std::vector<AlternativeSet> &alts,
                SymbolTable *table);

// On-the-fly composition: only pairs reachable from (a.start, b.start) are
// materialized. The join tape is a's output against b's input; epsilons on
// the join tape move one side at a time (duplicate min-cost paths are
// harmless in the tropical semiring).
Wfst Compose(const Wfst &a, const Wfst &b);

struct PathArc {
  StateId src = 0;
  Arc arc;
};

struct ShortestPathResult {
  double cost = 0.0;
  std::vector<PathArc> arcs;
};

// Minimum-cost start->final path. Requires non-negative weights. Among
// minimum-cost paths, ties break deterministically by (fewest emitted
// output tokens, lexicographically smallest emitted token sequence, then
// lexicographically smallest operation sequence under COR < SUB < DEL <
// INS). Empty-language input yields nullopt.
std::optional<ShortestPathResult> ShortestPath(const Wfst &f, const SymbolTable &table);

// Edit-operation rank of an arc: COR 0, SUB 1, DEL 2, INS 3 (epsilon-only
// arcs rank last).
int ArcOpRank(const Arc &arc);

// Line-oriented debug dump: `src TAB dst TAB in TAB out TAB cost` per arc
// (plus a TAB tag column on tagged arcs), finals as `state TAB cost`.
std::string DumpWfst(const Wfst &f, const SymbolTable &table);

}  // namespace asrscore

#endif  // ASRSCORE_WFST_H_
