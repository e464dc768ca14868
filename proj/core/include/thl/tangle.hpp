#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thl/errors.hpp"
#include "thl/signs.hpp"

namespace thl {

/// Where a strand segment is attached: a crossing port, or a point on the
/// bottom/top boundary row.
enum class EndKind : unsigned char { port, bottom, top };

/// Crossing ports are numbered 0..3 counter-clockwise starting at east; the
/// strand through ports {0,2} is strand A, the one through {1,3} is strand B.
struct End {
  EndKind kind = EndKind::port;
  int idx = 0;   // crossing index, or 0-based boundary position
  int slot = 0;  // port number; 0 for boundary ends

  static End port(int c, int s) { return {EndKind::port, c, s}; }
  static End at_bottom(int i) { return {EndKind::bottom, i, 0}; }
  static End at_top(int i) { return {EndKind::top, i, 0}; }

  auto operator<=>(const End&) const = default;
};

/// A crossing-free strand segment.  When the tangle is oriented the strand
/// flows from `from` to `to`; positional (unoriented) tangles treat the pair
/// as unordered.
struct Arc {
  End from, to;
  bool operator==(const Arc&) const = default;
};

struct Crossing {
  bool over02 = false;  // true iff strand A (ports 0,2) is the over strand
};

/// Planar diagram of an oriented tangle: a rotation system.  Boundary points
/// sit on two horizontal rows; sign semantics are "+" = strand points upward
/// at that point (ingoing at the bottom row, outgoing at the top row).
/// Crossing-free closed loops are counted in `free_loops` rather than stored.
struct Tangle {
  std::vector<Crossing> crossings;
  std::vector<Arc> arcs;
  SignSeq bottom;
  SignSeq top;
  int free_loops = 0;
  bool oriented = true;

  /// Set by close(): a directed arc side (arc index, traverse from->to?)
  /// whose left face under the rotation rule is the unbounded region.
  std::optional<std::pair<int, bool>> outer_side;

  int crossing_count() const { return int(crossings.size()); }
  bool is_closed() const { return bottom.size() == 0 && top.size() == 0; }

  /// Structural soundness: every boundary point and every port is used by
  /// exactly one arc end; flow directions are consistent when oriented.
  void validate() const;
};

inline bool slot_is_over(const Crossing& c, int slot) {
  return (slot % 2 == 0) ? c.over02 : !c.over02;
}

/// Unit direction pointing out of a crossing through the given port.
inline std::pair<int, int> port_direction(int slot) {
  switch (slot & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

/// Handedness of a crossing: +1 when the under strand's direction turned a
/// quarter counter-clockwise gives the over strand's direction.  Requires an
/// oriented tangle.
int crossing_sign(const Tangle& t, int c);
int writhe(const Tangle& t);

/// Entry slots (where the flow arrives) of strands A and B at crossing c,
/// as a pair (entry in {0,2}, entry in {1,3}).  Requires oriented.
std::pair<int, int> entry_slots(const Tangle& t, int c);

/// Glue lower.top to upper.bottom.  For oriented operands the interface sign
/// sequences must agree (BoundaryMismatch carries the 1-based index of the
/// first disagreement); if either operand is positional the result is too.
Tangle stack(const Tangle& upper, const Tangle& lower);

/// Reflection across a horizontal axis followed by reversal of every strand:
/// bottom and top swap (same signs), ports 1 and 3 swap at each crossing,
/// over/under flags are kept.  Crossing handedness flips.
Tangle star(const Tangle& t);

/// Swap over and under at every crossing.
Tangle mirror(Tangle t);

/// Reverse the flow of every strand (all boundary signs negate).
Tangle reverse_strands(Tangle t);

/// Join top point i to bottom point i for every i by arcs passing around the
/// left of the diagram, outermost for the rightmost point.  Requires equal
/// sign rows when oriented.  Sets `outer_side` (the unbounded region lies to
/// the right of the downward closure flow).
Tangle close_tangle(const Tangle& t);

Tangle switch_crossing(Tangle t, int c);

/// Oriented resolution: remove crossing c joining each in-port to the
/// cyclically adjacent out-port.
Tangle smooth_crossing(const Tangle& t, int c);

/// Number of link components of a closed tangle (free loops included).
int component_count(const Tangle& t);

/// Connected pieces of the underlying 4-valent graph of a closed tangle,
/// with crossings and arcs reindexed; free loops are not distributed.
std::vector<Tangle> split_components(const Tangle& t);

/// Faces of a closed diagram from the rotation system.  Each face is the
/// cyclic list of directed arc sides (arc, forward?) whose left side it is.
struct FaceSet {
  std::vector<std::vector<std::pair<int, bool>>> faces;
  std::vector<std::pair<int, int>> side_face;  // [arc] -> (face left of forward, face left of backward)

  int left_of(int arc, bool forward) const {
    return forward ? side_face[size_t(arc)].first : side_face[size_t(arc)].second;
  }
  int size() const { return int(faces.size()); }
};

FaceSet faces(const Tangle& t);

/// Endpoint occupancy: every arc end, keyed by attachment point; the mapped
/// flag says whether the arc's `from` end sits there.
std::map<End, std::pair<int, bool>> attachments(const Tangle& t);

std::string to_text(const Tangle& t);

}  // namespace thl
