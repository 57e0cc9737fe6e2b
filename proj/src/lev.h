// lev.h -- the Levenshtein transducer, factored through an auxiliary
// substitution symbol so its size stays linear in the vocabulary instead of
// quadratic. Composing left o right between two linear acceptors assigns
// every alignment its edit cost (COR 0, SUB 1, INS 1, DEL 1).

#ifndef ASRSCORE_LEV_H_
#define ASRSCORE_LEV_H_

#include <cstdint>

#include "symtab.h"
#include "wfst.h"

namespace asrscore {

struct LevTransducer {
  // Left factor: token -> itself (COR carry, 0), token -> <sub> (1) and
  // token -> epsilon (DEL, 1). Right factor: token -> itself (carry, 0),
  // <sub> -> token (0) and epsilon -> token (INS, 1).
  Wfst left;
  Wfst right;
  // Symbols covered at build time; scoring a token registered later is a
  // caller bug.
  size_t covered_symbols = 0;

  size_t TotalArcs() const { return left.NumArcs() + right.NumArcs(); }
};

// Builds both factors over every token currently in `table`.
LevTransducer BuildLev(const SymbolTable &table);

// Arc count of the unfactored transducer with explicit substitution pairs,
// for comparison: V^2 substitutions plus V each of COR, DEL, INS.
int64_t NaiveLevArcCount(int64_t vocab_size);

// cost_of_shortest_path(ref o L o hyp) operand: the full scoring lattice
// for a reference acceptor and a hypothesis (linear or sausage) acceptor.
Wfst ComposeScoringLattice(const Wfst &ref_fst, const LevTransducer &lev, const Wfst &hyp_fst);

}  // namespace asrscore

#endif  // ASRSCORE_LEV_H_
