#pragma once

#include "cycmon/datum.hpp"

namespace cycmon {

// Pinching a handle of the base curve degenerates a cover with datum
// (d, g', theta) to an admissible cover over a 1-nodal curve; normalizing
// the node yields the cover with datum (d, g'-1, theta + {1, d-1}). The
// covering genus drops by exactly one, the nontrivial eigenspace
// multiplicities are unchanged, and the Prym variety of the nodal cover is
// isogenous to the Prym of the normalization (kernel order divides d), so
// the Prym dimension g - g' is preserved.
struct DegenerationResult {
  MonodromyDatum normalized;
  Int genus_drop = 1;  // total genus of original minus normalized; always 1
  Int prym_dim = 0;    // g - g', equal on both sides

  bool operator==(const DegenerationResult&) const = default;
};

// Requires genus_base >= 1 (throws InputError(BaseGenusZero) otherwise).
// The appended exponent pair {1, d-1} keeps the sum 0 mod d, and the 1
// generates Z/d, so the normalized datum is always valid; its theta is kept
// sorted.
DegenerationResult delta0_degenerate(const MonodromyDatum& datum);

// True iff the nontrivial multiplicities m_1, ..., m_{d-1} agree between the
// datum and its degeneration. Always true: an exponent pair {1, d-1}
// contributes exactly d to each nontrivial character sum, cancelling the
// drop of g' by one.
bool check_profile_preservation(const MonodromyDatum& datum);

// dim Prym(C, C') = g - g'.
Int prym_dimension(const MonodromyDatum& datum);

}  // namespace cycmon
