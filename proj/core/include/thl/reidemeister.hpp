#pragma once

#include <utility>
#include <vector>

#include "thl/tangle.hpp"

namespace thl {

/// Removable kink: an arc joining two cyclically adjacent ports of one
/// crossing.
struct R1Site {
  int arc = -1;
};

/// Removable bigon: a two-sided face between two distinct crossings where one
/// strand runs over at both of them.
struct R2Site {
  int arc1 = -1, arc2 = -1;
};

/// Slidable triangle: a three-sided face on three distinct crossings with the
/// arc `slide` running over both of its end crossings, or under both.
struct R3Site {
  int slide = -1;
  int other1 = -1, other2 = -1;  // the remaining triangle arcs
};

/// All sites currently present.  Detection requires a closed diagram.
std::vector<R1Site> r1_sites(const Tangle& t);
std::vector<R2Site> r2_sites(const Tangle& t);
std::vector<R3Site> r3_sites(const Tangle& t);

/// Undo a kink: the through strand heals, the crossing disappears.
Tangle r1_remove(const Tangle& t, const R1Site& site);

/// Undo a poke: both crossings disappear, the four loose strands heal
/// pairwise.
Tangle r2_remove(const Tangle& t, const R2Site& site);

/// Slide the uniform strand across the opposite crossing.  Involutive at the
/// matching site of the result; preserves crossing count, signs, and faces.
Tangle r3_slide(const Tangle& t, const R3Site& site);

/// Put a kink into an arc.  The new crossing's sign is +1 when `over02` is
/// false, -1 otherwise.
Tangle r1_add(const Tangle& t, int arc, bool over02);

/// Poke one arc across another.  The two sides (arc, forward?) must lie on a
/// common face; `first_over` puts the first strand on top at both new
/// crossings.  Throws NotApplicable when the sides do not border the same
/// face.
Tangle r2_add(const Tangle& t, std::pair<int, bool> side_a,
              std::pair<int, bool> side_b, bool first_over);

}  // namespace thl
