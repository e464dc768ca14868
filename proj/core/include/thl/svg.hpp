#pragma once

#include <string>

#include "thl/tangle.hpp"
#include "thl/thompson.hpp"

namespace thl {

/// Best-effort picture of a diagram: crossings in a row, each drawn as two
/// transversal segments with the under strand broken, arcs as curves between
/// attachment points.  Layout is decorative, not an embedding.
std::string tangle_svg(const Tangle& t);

/// A tree pair drawn with shared leaf row: the plus tree grows downwards,
/// the minus tree upwards.
std::string element_svg(const GroupElement& g);

}  // namespace thl
