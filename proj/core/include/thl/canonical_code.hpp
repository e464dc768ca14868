#pragma once

#include <string>
#include <vector>

#include "thl/tangle.hpp"

namespace thl {

/// One pass of a strand through a crossing, entering at `enter_slot` and
/// leaving at the opposite slot.
struct Visit {
  int crossing = -1;
  int enter_slot = -1;
};

/// The closed strands of an oriented closed diagram, each listed as its
/// flow-ordered cycle of crossing visits.  Cycles are ordered by their
/// smallest arc index and start at that arc's head; loops without crossings
/// are counted in `free_loops` and do not appear here.
std::vector<std::vector<Visit>> strand_cycles(const Tangle& t);

/// Relabelling-invariant key for a closed oriented diagram: two connected
/// diagrams get the same key exactly when some renumbering of crossings,
/// rotation of strands, or reversal of every strand at once carries one to
/// the other.  Equal keys always mean equal skein polynomials.  The bytes are
/// opaque; use them only for ordering and equality.
std::string canonical_code(const Tangle& t);

}  // namespace thl
