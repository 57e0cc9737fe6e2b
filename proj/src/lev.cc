#include "lev.h"

namespace asrscore {

LevTransducer BuildLev(const SymbolTable &table) {
  LevTransducer lev;
  StateId l = lev.left.AddState();
  lev.left.SetStart(l);
  lev.left.SetFinal(l, 0.0);
  StateId r = lev.right.AddState();
  lev.right.SetStart(r);
  lev.right.SetFinal(r, 0.0);
  for (SymbolId id : table.TokenIds()) {
    lev.left.AddArc(l, {id, id, 0.0, l, 0});
    lev.left.AddArc(l, {id, kSubAuxId, 1.0, l, 0});
    lev.left.AddArc(l, {id, kEpsilonId, 1.0, l, 0});
    lev.right.AddArc(r, {id, id, 0.0, r, 0});
    lev.right.AddArc(r, {kSubAuxId, id, 0.0, r, 0});
    lev.right.AddArc(r, {kEpsilonId, id, 1.0, r, 0});
  }
  lev.covered_symbols = table.Size();
  return lev;
}

int64_t NaiveLevArcCount(int64_t vocab_size) {
  return vocab_size * vocab_size + 3 * vocab_size;
}

Wfst ComposeScoringLattice(const Wfst &ref_fst, const LevTransducer &lev, const Wfst &hyp_fst) {
  // Associating as (ref o left) o (right o hyp) keeps every intermediate
  // machine linear in the inputs; the final composition is the edit lattice.
  Wfst ref_side = Compose(ref_fst, lev.left);
  Wfst hyp_side = Compose(lev.right, hyp_fst);
  return Compose(ref_side, hyp_side);
}

}  // namespace asrscore
