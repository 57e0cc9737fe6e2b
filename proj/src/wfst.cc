#include "wfst.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace asrscore {

StateId Wfst::AddState() {
  arcs_.emplace_back();
  final_.push_back(kInfiniteCost);
  return static_cast<StateId>(arcs_.size() - 1);
}

void Wfst::AddArc(StateId src, Arc arc) {
  if (src < 0 || static_cast<size_t>(src) >= arcs_.size() || arc.next < 0 ||
      static_cast<size_t>(arc.next) >= arcs_.size())
    throw std::logic_error("arc endpoints must be existing states");
  if (arc.weight < 0.0) throw std::invalid_argument("arc weights must be non-negative");
  arcs_[src].push_back(arc);
}

void Wfst::SetFinal(StateId s, double cost) {
  if (s < 0 || static_cast<size_t>(s) >= arcs_.size())
    throw std::logic_error("final state must exist");
  final_[s] = cost;
}

size_t Wfst::NumArcs() const {
  size_t n = 0;
  for (const auto &v : arcs_) n += v.size();
  return n;
}

Wfst LinearFst(const TokenSeq &seq, SymbolTable *table) {
  Wfst f;
  StateId cur = f.AddState();
  f.SetStart(cur);
  for (const Token &t : seq) {
    SymbolId id = table->AddToken(t);
    StateId next = f.AddState();
    f.AddArc(cur, {id, id, 0.0, next, 0});
    cur = next;
  }
  f.SetFinal(cur, 0.0);
  return f;
}

Wfst SausageFst(const TokenSeq &seq, const std::vector<AlternativeSet> &alts,
                SymbolTable *table) {
  std::vector<AlternativeSpan> spans = MatchAlternativeSpans(seq, alts);
  Wfst f;
  StateId cur = f.AddState();
  f.SetStart(cur);
  size_t pos = 0;
  size_t span_idx = 0;
  int branch_counter = 0;
  while (pos < seq.size()) {
    if (span_idx < spans.size() && spans[span_idx].begin == pos) {
      const AlternativeSpan &span = spans[span_idx++];
      StateId exit = f.AddState();
      for (const TokenSeq &member : alts[span.set_index].members) {
        SymbolId tag = table->AddTag("#" + std::to_string(++branch_counter));
        StateId s = cur;
        for (size_t k = 0; k < member.size(); ++k) {
          SymbolId id = table->AddToken(member[k]);
          StateId next = (k + 1 == member.size()) ? exit : f.AddState();
          f.AddArc(s, {id, id, 0.0, next, tag});
          s = next;
        }
      }
      cur = exit;
      pos += span.len;
    } else {
      SymbolId id = table->AddToken(seq[pos]);
      StateId next = f.AddState();
      f.AddArc(cur, {id, id, 0.0, next, 0});
      cur = next;
      ++pos;
    }
  }
  f.SetFinal(cur, 0.0);
  return f;
}

namespace {

struct LabelIndex {
  std::unordered_map<SymbolId, std::vector<int>> by_label;
};

LabelIndex BuildIndex(const std::vector<Arc> &arcs, bool by_input) {
  LabelIndex idx;
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    SymbolId l = by_input ? arcs[i].ilabel : arcs[i].olabel;
    if (l != kEpsilonId) idx.by_label[l].push_back(i);
  }
  return idx;
}

}  // namespace

Wfst Compose(const Wfst &a, const Wfst &b) {
  Wfst c;
  if (a.NumStates() == 0 || b.NumStates() == 0) {
    c.AddState();
    return c;  // empty language
  }

  std::unordered_map<int64_t, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  auto pair_key = [&](StateId sa, StateId sb) {
    return static_cast<int64_t>(sa) * static_cast<int64_t>(b.NumStates()) + sb;
  };
  auto state_for = [&](StateId sa, StateId sb) {
    auto [it, inserted] = ids.try_emplace(pair_key(sa, sb),
                                          static_cast<StateId>(pairs.size()));
    if (inserted) {
      pairs.emplace_back(sa, sb);
      c.AddState();
    }
    return it->second;
  };

  // Lazy per-state label indexes so the smaller arc list can be iterated
  // against an index on the bigger one.
  std::vector<std::unique_ptr<LabelIndex>> a_by_out(a.NumStates());
  std::vector<std::unique_ptr<LabelIndex>> b_by_in(b.NumStates());

  state_for(a.Start(), b.Start());
  c.SetStart(0);

  for (size_t qi = 0; qi < pairs.size(); ++qi) {
    auto [sa, sb] = pairs[qi];
    StateId cs = static_cast<StateId>(qi);
    const std::vector<Arc> &arcs_a = a.ArcsFrom(sa);
    const std::vector<Arc> &arcs_b = b.ArcsFrom(sb);

    auto emit = [&](const Arc &aa, const Arc &bb) {
      c.AddArc(cs, {aa.ilabel, bb.olabel, aa.weight + bb.weight,
                    state_for(aa.next, bb.next), bb.tag ? bb.tag : aa.tag});
    };

    if (arcs_a.size() <= arcs_b.size()) {
      if (!b_by_in[sb]) b_by_in[sb] = std::make_unique<LabelIndex>(BuildIndex(arcs_b, true));
      const LabelIndex &bi = *b_by_in[sb];
      for (const Arc &aa : arcs_a) {
        if (aa.olabel == kEpsilonId) continue;
        auto it = bi.by_label.find(aa.olabel);
        if (it == bi.by_label.end()) continue;
        for (int j : it->second) emit(aa, arcs_b[j]);
      }
    } else {
      if (!a_by_out[sa]) a_by_out[sa] = std::make_unique<LabelIndex>(BuildIndex(arcs_a, false));
      const LabelIndex &ai = *a_by_out[sa];
      for (const Arc &bb : arcs_b) {
        if (bb.ilabel == kEpsilonId) continue;
        auto it = ai.by_label.find(bb.ilabel);
        if (it == ai.by_label.end()) continue;
        for (int i : it->second) emit(arcs_a[i], bb);
      }
    }

    // Epsilon on the join tape advances one side alone. In the tropical
    // semiring the duplicated interleavings this allows cannot change the
    // minimum, so no composition filter is needed.
    for (const Arc &aa : arcs_a)
      if (aa.olabel == kEpsilonId)
        c.AddArc(cs, {aa.ilabel, kEpsilonId, aa.weight, state_for(aa.next, sb), aa.tag});
    for (const Arc &bb : arcs_b)
      if (bb.ilabel == kEpsilonId)
        c.AddArc(cs, {kEpsilonId, bb.olabel, bb.weight, state_for(sa, bb.next), bb.tag});

    if (a.IsFinal(sa) && b.IsFinal(sb)) c.SetFinal(cs, a.FinalCost(sa) + b.FinalCost(sb));
  }
  return c;
}

int ArcOpRank(const Arc &arc) {
  if (arc.ilabel != kEpsilonId && arc.olabel != kEpsilonId)
    return arc.ilabel == arc.olabel ? 0 : 1;  // COR : SUB
  if (arc.ilabel != kEpsilonId) return 2;     // DEL
  if (arc.olabel != kEpsilonId) return 3;     // INS
  return 4;
}

namespace {

bool ApproxEq(double x, double y) {
  return std::abs(x - y) <= 1e-9 * std::max({1.0, std::abs(x), std::abs(y)});
}

constexpr int kStop = -1;
constexpr int kUnset = -2;

struct BestInfo {
  int choice = kUnset;      // arc index, kStop for "end here"
  int64_t emit_len = 0;     // output tokens on the chosen completion
};

// Walks the chosen completion chain starting with an explicit candidate.
struct CompletionWalker {
  const Wfst &f;
  const std::vector<BestInfo> &best;
  StateId state;
  int choice;

  const Arc *NextArc() {
    if (choice < 0) return nullptr;
    const Arc *a = &f.ArcsFrom(state)[choice];
    state = a->next;
    choice = best[state].choice;
    return a;
  }
  const Arc *NextEmitting() {
    while (const Arc *a = NextArc())
      if (a->olabel != kEpsilonId) return a;
    return nullptr;
  }
};

// Orders two equal-cost completions from the same state: fewer emitted
// tokens first, then emitted tokens lexicographically, then operation ranks
// lexicographically. Returns true when candidate A is strictly better.
bool CompletionLess(const Wfst &f, const SymbolTable &table, const std::vector<BestInfo> &best,
                    StateId s, int choice_a, int64_t len_a, int choice_b, int64_t len_b) {
  if (len_a != len_b) return len_a < len_b;
  CompletionWalker wa{f, best, s, choice_a};
  CompletionWalker wb{f, best, s, choice_b};
  while (true) {
    const Arc *aa = wa.NextEmitting();
    const Arc *ab = wb.NextEmitting();
    if (!aa || !ab) break;  // same length, so both exhaust together
    if (aa->olabel != ab->olabel) {
      int cmp = table.Name(aa->olabel).compare(table.Name(ab->olabel));
      if (cmp != 0) return cmp < 0;
    }
  }
  CompletionWalker oa{f, best, s, choice_a};
  CompletionWalker ob{f, best, s, choice_b};
  while (true) {
    const Arc *aa = oa.NextArc();
    const Arc *ab = ob.NextArc();
    if (!aa && !ab) return false;  // identical
    if (!aa) return true;          // prefix is smaller
    if (!ab) return false;
    int ra = ArcOpRank(*aa), rb = ArcOpRank(*ab);
    if (ra != rb) return ra < rb;
  }
}

}  // namespace

std::optional<ShortestPathResult> ShortestPath(const Wfst &f, const SymbolTable &table) {
  const size_t n = f.NumStates();
  if (n == 0) return std::nullopt;

  // Backward Dijkstra: dist[s] = cheapest cost from s to any final state.
  struct RevArc {
    StateId src;
    int arc_idx;
  };
  std::vector<std::vector<RevArc>> rev(n);
  for (StateId s = 0; s < static_cast<StateId>(n); ++s)
    for (int i = 0; i < static_cast<int>(f.ArcsFrom(s).size()); ++i)
      rev[f.ArcsFrom(s)[i].next].push_back({s, i});

  std::vector<double> dist(n, kInfiniteCost);
  using QueueEntry = std::pair<double, StateId>;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> pq;
  for (StateId s = 0; s < static_cast<StateId>(n); ++s)
    if (f.IsFinal(s)) {
      dist[s] = f.FinalCost(s);
      pq.push({dist[s], s});
    }
  while (!pq.empty()) {
    auto [d, s] = pq.top();
    pq.pop();
    if (d > dist[s]) continue;
    for (const RevArc &r : rev[s]) {
      double nd = d + f.ArcsFrom(r.src)[r.arc_idx].weight;
      if (nd < dist[r.src]) {
        dist[r.src] = nd;
        pq.push({nd, r.src});
      }
    }
  }
  if (dist[f.Start()] == kInfiniteCost) return std::nullopt;

  // Choose one optimal path deterministically. Post-order DFS over the
  // optimal subgraph computes each state's best completion; arcs closing a
  // cycle (possible only with zero-cost cycles, which the scoring lattices
  // never contain) are skipped.
  std::vector<BestInfo> best(n);
  std::vector<uint8_t> color(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<std::pair<StateId, int>> stack;
  stack.emplace_back(f.Start(), 0);
  color[f.Start()] = 1;
  while (!stack.empty()) {
    auto &[s, next_arc] = stack.back();
    const std::vector<Arc> &arcs = f.ArcsFrom(s);
    if (next_arc < static_cast<int>(arcs.size())) {
      const Arc &a = arcs[next_arc++];
      if (ApproxEq(a.weight + dist[a.next], dist[s]) && color[a.next] == 0) {
        color[a.next] = 1;
        stack.emplace_back(a.next, 0);
      }
      continue;
    }
    BestInfo chosen;
    if (f.IsFinal(s) && ApproxEq(f.FinalCost(s), dist[s])) chosen = {kStop, 0};
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
      const Arc &a = arcs[i];
      if (!ApproxEq(a.weight + dist[a.next], dist[s])) continue;
      if (color[a.next] != 2 || best[a.next].choice == kUnset) continue;
      int64_t len = (a.olabel != kEpsilonId ? 1 : 0) + best[a.next].emit_len;
      if (chosen.choice == kUnset ||
          CompletionLess(f, table, best, s, i, len, chosen.choice, chosen.emit_len))
        chosen = {i, len};
    }
    best[s] = chosen;
    color[s] = 2;
    stack.pop_back();
  }
  if (best[f.Start()].choice == kUnset)
    throw std::logic_error("shortest-path extraction failed (zero-cost cycle)");

  ShortestPathResult result;
  result.cost = dist[f.Start()];
  StateId s = f.Start();
  while (best[s].choice != kStop) {
    const Arc &a = f.ArcsFrom(s)[best[s].choice];
    result.arcs.push_back({s, a});
    s = a.next;
  }
  return result;
}

std::string DumpWfst(const Wfst &f, const SymbolTable &table) {
  std::ostringstream out;
  for (StateId s = 0; s < static_cast<StateId>(f.NumStates()); ++s) {
    for (const Arc &a : f.ArcsFrom(s)) {
      out << s << '\t' << a.next << '\t' << table.Name(a.ilabel) << '\t'
          << table.Name(a.olabel) << '\t' << a.weight;
      if (a.tag != 0) out << '\t' << table.Name(a.tag);
      out << '\n';
    }
  }
  for (StateId s = 0; s < static_cast<StateId>(f.NumStates()); ++s)
    if (f.IsFinal(s)) out << s << '\t' << f.FinalCost(s) << '\n';
  return out.str();
}

}  // namespace asrscore
