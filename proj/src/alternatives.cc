#include "alternatives.h"

#include <algorithm>
#include <stdexcept>

namespace asrscore {

void ValidateAlternativeSet(const AlternativeSet &set) {
  if (set.members.size() < 2)
    throw std::invalid_argument("alternative set needs at least 2 members");
  for (const TokenSeq &m : set.members)
    if (m.empty()) throw std::invalid_argument("alternative set member may not be empty");
  for (size_t i = 0; i < set.members.size(); ++i)
    for (size_t j = i + 1; j < set.members.size(); ++j)
      if (set.members[i] == set.members[j])
        throw std::invalid_argument("duplicate member in alternative set");
}

namespace {

bool SpanEquals(const TokenSeq &seq, size_t begin, const TokenSeq &member) {
  if (begin + member.size() > seq.size()) return false;
  return std::equal(member.begin(), member.end(), seq.begin() + begin);
}

}  // namespace

std::vector<AlternativeSpan> MatchAlternativeSpans(const TokenSeq &seq,
                                                   const std::vector<AlternativeSet> &alts) {
  std::vector<AlternativeSpan> spans;
  size_t pos = 0;
  while (pos < seq.size()) {
    size_t best_len = 0;
    size_t best_set = 0;
    for (size_t si = 0; si < alts.size(); ++si) {
      for (const TokenSeq &member : alts[si].members) {
        if (member.size() > best_len && SpanEquals(seq, pos, member)) {
          best_len = member.size();
          best_set = si;
        }
      }
    }
    if (best_len > 0) {
      spans.push_back({pos, best_len, best_set});
      pos += best_len;
    } else {
      ++pos;
    }
  }
  return spans;
}

}  // namespace asrscore
