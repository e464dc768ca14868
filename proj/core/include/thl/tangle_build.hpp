#pragma once

#include "thl/signs.hpp"
#include "thl/tangle.hpp"
#include "thl/thompson.hpp"

namespace thl {

/// Over/under choice for every turn-back crossing the builders emit.  The
/// mirrored convention flips all of them, producing mirror-image diagrams.
enum class Convention : unsigned char { standard, mirrored };

/// Boundary signs of the diagram object attached to a sign row of length n:
/// nu(1) = sigma(1) and (nu(2i-2), nu(2i-1)) = (not sigma(i), sigma(i)) for
/// i >= 2; the result has length 2n-1.
SignSeq object_signs(const SignSeq& row);

/// Vertical strands, one per boundary sign.
Tangle identity_tangle(const SignSeq& boundary);

/// Elementary piece for a caret applied at 1-based position i of the sign
/// row: one crossing where the new strand turns back, flanked by vertical
/// strands.  Bottom boundary object_signs(row), top boundary object_signs of
/// the row with the negated sign inserted after position i.
Tangle caret_piece(const SignSeq& row, int i, Convention conv);

/// Image of a forest under the tangle functor: caret pieces stacked in
/// schedule order on the identity of object_signs(sigma).  Requires
/// root_count == sigma length.
Tangle phi_of_forest(const Forest& f, const SignSeq& sigma, Convention conv);

/// Single-tree case seeded with the vacuum sign "+".
Tangle phi_of_tree(const Tree& t, Convention conv);

/// Closed diagram of a group element given by a reduced tree pair: the minus
/// tree's image reflected on top of the plus tree's image, then closed.  Uses
/// the representative as given (no reduction).  Throws NotOriented, carrying
/// the first mismatching boundary position, when the two leaf sign rows
/// disagree.
Tangle build_link(const GroupElement& g, Convention conv);

/// Same construction with flow forgotten (positional gluing), defined for
/// every element; used to shade diagrams of non-members.
Tangle build_unoriented_link(const GroupElement& g, Convention conv);

/// Stack one crossing swapping adjacent boundary points pos, pos+1 (1-based)
/// on top of t.  The strand leaving bottom position pos crosses over iff
/// `left_strand_over`.
Tangle conjugate_by_crossing(const Tangle& t, int pos, bool left_strand_over);

/// Crossingless top-boundary tangle pairing each "-" point with a "+" point
/// by noncrossing arcs; exists iff the row has equally many "+" and "-".
/// Throws NotApplicable otherwise.
Tangle matching_tangle(const SignSeq& sigma);

}  // namespace thl
