#include "align.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace asrscore {

Alignment AlignDp(const TokenSeq &ref, const TokenSeq &hyp) {
  const size_t m = ref.size();
  const size_t n = hyp.size();
  // d(i,j) = edit distance between ref[i..] and hyp[j..]; suffix form so the
  // backtrace runs forward and greedy op preference is lexicographic.
  std::vector<int32_t> d((m + 1) * (n + 1));
  auto at = [&](size_t i, size_t j) -> int32_t & { return d[i * (n + 1) + j]; };
  for (size_t j = 0; j <= n; ++j) at(m, j) = static_cast<int32_t>(n - j);
  for (size_t i = 0; i <= m; ++i) at(i, n) = static_cast<int32_t>(m - i);
  for (size_t i = m; i-- > 0;) {
    for (size_t j = n; j-- > 0;) {
      if (ref[i] == hyp[j]) {
        at(i, j) = at(i + 1, j + 1);
      } else {
        at(i, j) = 1 + std::min({at(i + 1, j + 1), at(i + 1, j), at(i, j + 1)});
      }
    }
  }

  std::vector<EditOp> ops;
  ops.reserve(m + n);
  size_t i = 0, j = 0;
  while (i < m || j < n) {
    if (i < m && j < n && ref[i] == hyp[j] && at(i, j) == at(i + 1, j + 1)) {
      ops.push_back(EditOp::Cor(ref[i]));
      ++i, ++j;
    } else if (i < m && j < n && ref[i] != hyp[j] && at(i, j) == at(i + 1, j + 1) + 1) {
      ops.push_back(EditOp::Sub(ref[i], hyp[j]));
      ++i, ++j;
    } else if (i < m && at(i, j) == at(i + 1, j) + 1) {
      ops.push_back(EditOp::Del(ref[i]));
      ++i;
    } else if (j < n && at(i, j) == at(i, j + 1) + 1) {
      ops.push_back(EditOp::Ins(hyp[j]));
      ++j;
    } else {
      throw std::logic_error("edit-distance backtrace stuck");
    }
  }
  return Alignment::FromOps(std::move(ops));
}

namespace {

Alignment AlignmentFromPath(const ShortestPathResult &path, const SymbolTable &table) {
  std::vector<EditOp> ops;
  ops.reserve(path.arcs.size());
  for (const PathArc &pa : path.arcs) {
    const Arc &a = pa.arc;
    switch (ArcOpRank(a)) {
      case 0: ops.push_back(EditOp::Cor(table.Name(a.ilabel))); break;
      case 1: ops.push_back(EditOp::Sub(table.Name(a.ilabel), table.Name(a.olabel))); break;
      case 2: ops.push_back(EditOp::Del(table.Name(a.ilabel))); break;
      case 3: ops.push_back(EditOp::Ins(table.Name(a.olabel))); break;
      default: break;  // epsilon-only arcs carry no operation
    }
  }
  Alignment alignment = Alignment::FromOps(std::move(ops));
  if (alignment.cost != std::llround(path.cost))
    throw std::logic_error("path cost disagrees with operation tally");
  return alignment;
}

void CheckCovered(const SymbolTable &table, const LevTransducer &lev) {
  if (table.Size() > lev.covered_symbols)
    throw std::logic_error(
        "Levenshtein transducer built before the vocabulary was complete; "
        "register all tokens (including alternative members) first");
}

}  // namespace

Alignment AlignFst(const TokenSeq &ref, const TokenSeq &hyp, const LevTransducer &lev,
                   SymbolTable *table) {
  Wfst ref_fst = LinearFst(ref, table);
  Wfst hyp_fst = LinearFst(hyp, table);
  CheckCovered(*table, lev);
  Wfst lattice = ComposeScoringLattice(ref_fst, lev, hyp_fst);
  std::optional<ShortestPathResult> path = ShortestPath(lattice, *table);
  if (!path) throw std::logic_error("scoring lattice has no accepting path");
  return AlignmentFromPath(*path, *table);
}

DaeResult AlignDae(const TokenSeq &ref, const TokenSeq &hyp,
                   const std::vector<AlternativeSet> &alts, const LevTransducer &lev,
                   SymbolTable *table) {
  Wfst ref_fst = LinearFst(ref, table);
  Wfst hyp_fst = SausageFst(hyp, alts, table);
  CheckCovered(*table, lev);
  Wfst lattice = ComposeScoringLattice(ref_fst, lev, hyp_fst);
  std::optional<ShortestPathResult> path = ShortestPath(lattice, *table);
  if (!path) throw std::logic_error("scoring lattice has no accepting path");

  DaeResult result;
  result.alignment = AlignmentFromPath(*path, *table);
  for (const PathArc &pa : path->arcs)
    if (pa.arc.olabel != kEpsilonId) result.selected_hyp.push_back(table->Name(pa.arc.olabel));
  return result;
}

}  // namespace asrscore
