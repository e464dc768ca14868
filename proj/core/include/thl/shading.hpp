#pragma once

#include <vector>

#include "thl/tangle.hpp"

namespace thl {

/// Chequerboard analysis of a closed connected diagram.
struct Shading {
  std::vector<int> face_color;  ///< 0/1 per face; adjacent faces differ
  int outer_face = -1;          ///< face carrying the unbounded region
  int shaded_color = -1;        ///< the colour class not containing it
  bool orientable = false;      ///< shaded faces admit alternating labels
  std::vector<int> face_label;  ///< +1/-1 on shaded faces when orientable, else 0
};

/// Two-colour the faces, shade the class away from the unbounded region, and
/// test whether the shaded faces can be labelled +1/-1 so that the two shaded
/// corners at every crossing get opposite labels.  Crossingless diagrams are
/// trivially orientable.  Requires a closed diagram that is connected and
/// carries the unbounded-region hint; throws NotApplicable otherwise.
Shading shade(const Tangle& t);

bool shading_orientable(const Tangle& t);

/// Face at the corner between ports s and s+1 (mod 4) of crossing c: the
/// face left of the strand side arriving at port s+1.
int corner_face(const Tangle& t, const FaceSet& fs, int c, int s);

}  // namespace thl
