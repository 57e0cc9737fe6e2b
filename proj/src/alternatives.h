// alternatives.h -- equivalence classes of token sequences used by
// hypothesis-side dynamic alternative expansion.

#ifndef ASRSCORE_ALTERNATIVES_H_
#define ASRSCORE_ALTERNATIVES_H_

#include <cstddef>
#include <string>
#include <vector>

#include "tokens.h"

namespace asrscore {

// All members are mutually interchangeable at scoring time. Validated sets
// (from parse time) carry at least two distinct non-empty members; tests may
// construct degenerate sets directly.
struct AlternativeSet {
  std::vector<TokenSeq> members;
};

// Throws std::invalid_argument unless the set has >= 2 members, no empty
// member and no duplicate member.
void ValidateAlternativeSet(const AlternativeSet &set);

// One detected occurrence: seq[begin, begin+len) equals some member of
// alts[set_index].
struct AlternativeSpan {
  size_t begin = 0;
  size_t len = 0;
  size_t set_index = 0;
};

// Greedy left-to-right scan for maximal member occurrences: at each
// position the longest matching member wins (ties: first set in list order,
// then first member in set order), and scanning resumes after the span.
std::vector<AlternativeSpan> MatchAlternativeSpans(const TokenSeq &seq,
                                                   const std::vector<AlternativeSet> &alts);

}  // namespace asrscore

#endif  // ASRSCORE_ALTERNATIVES_H_
