// align.h -- alignment between normalized reference and hypothesis, through
// the WFST engine (production path) and an independent dynamic-programming
// implementation (oracle path), plus hypothesis-side alternative expansion.

#ifndef ASRSCORE_ALIGN_H_
#define ASRSCORE_ALIGN_H_

#include <vector>

#include "alternatives.h"
#include "lev.h"
#include "symtab.h"
#include "tokens.h"
#include "wfst.h"

namespace asrscore {

// Classical O(|ref|*|hyp|) edit-distance DP with backtrace. Ties prefer the
// lexicographically smallest operation sequence under COR < SUB < DEL < INS,
// the same order the FST path uses.
Alignment AlignDp(const TokenSeq &ref, const TokenSeq &hyp);

// shortest_path(ref o L o hyp): identical cost and operation sequence to
// AlignDp on the same inputs. `lev` must have been built after every token
// of both sides was registered in `table`.
Alignment AlignFst(const TokenSeq &ref, const TokenSeq &hyp, const LevTransducer &lev,
                   SymbolTable *table);

struct DaeResult {
  Alignment alignment;
  // The hypothesis variant realized by the optimal path; its length is the
  // mTER denominator contribution.
  TokenSeq selected_hyp;

  int64_t SelectedHypLen() const { return static_cast<int64_t>(selected_hyp.size()); }
};

// Alignment over the sausage-expanded hypothesis. The reference is never
// expanded. Cost equals the minimum DP cost over every complete-alternative
// variant of `hyp`; equal-cost variants resolve to the shorter one, then the
// lexicographically smaller one.
DaeResult AlignDae(const TokenSeq &ref, const TokenSeq &hyp,
                   const std::vector<AlternativeSet> &alts, const LevTransducer &lev,
                   SymbolTable *table);

}  // namespace asrscore

#endif  // ASRSCORE_ALIGN_H_
