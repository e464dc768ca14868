#include <doctest.h>

#include "support/builders.hpp"
#include "thl/errors.hpp"
#include "thl/shading.hpp"
#include "thl/signs.hpp"
#include "thl/tangle_build.hpp"
#include "thl/thompson.hpp"

using namespace thl;
using namespace thl::testsupport;

TEST_CASE("chequerboard colouring exists and alternates") {
  Tangle cl = closed_braid(3, true);
  Shading sh = shade(cl);
  FaceSet fs = faces(cl);
  for (int a = 0; a < int(cl.arcs.size()); ++a)
    CHECK(sh.face_color[size_t(fs.left_of(a, true))] !=
          sh.face_color[size_t(fs.left_of(a, false))]);
  CHECK(sh.outer_face >= 0);
  CHECK(sh.shaded_color == 1 - sh.face_color[size_t(sh.outer_face)]);
}

TEST_CASE("corner faces agree with the face walk") {
  Tangle cl = closed_braid(2, true);
  FaceSet fs = faces(cl);
  for (int c = 0; c < cl.crossing_count(); ++c) {
    // opposite corners share a colour class, adjacent ones do not
    Shading sh = shade(cl);
    auto colour = [&](int s) {
      return sh.face_color[size_t(corner_face(cl, fs, c, s))];
    };
    CHECK(colour(0) == colour(2));
    CHECK(colour(1) == colour(3));
    CHECK(colour(0) != colour(1));
  }
}

TEST_CASE("braid closures: kink and trefoil shade odd, hopf shades even") {
  CHECK(!shade(closed_braid(1, true)).orientable);
  CHECK(shade(closed_braid(2, true)).orientable);
  CHECK(!shade(closed_braid(3, true)).orientable);
  CHECK(!shade(closed_braid(1, false)).orientable);
  CHECK(shade(closed_braid(2, false)).orientable);
  CHECK(!shade(closed_braid(3, false)).orientable);
}

TEST_CASE("orientable shadings carry alternating labels") {
  Shading sh = shade(closed_braid(2, true));
  REQUIRE(sh.orientable);
  int labelled = 0;
  for (int l : sh.face_label)
    if (l != 0) ++labelled;
  CHECK(labelled >= 2);
}

TEST_CASE("crossingless closures are trivially orientable") {
  Tangle l = build_link(identity_element(), Convention::standard);
  CHECK(shade(l).orientable);
}

TEST_CASE("shading needs closure, connectivity, and the region hint") {
  CHECK_THROWS_AS(shade(braid_sigma1(true)), NotApplicable);

  Tangle closed = closed_braid(2, true);
  Tangle merged = closed;
  int offset = closed.crossing_count();
  merged.crossings.insert(merged.crossings.end(), closed.crossings.begin(),
                          closed.crossings.end());
  for (Arc a : closed.arcs) {
    a.from.idx += offset;
    a.to.idx += offset;
    merged.arcs.push_back(a);
  }
  CHECK_THROWS_AS(shade(merged), NotApplicable);

  Tangle unhinted = closed;
  unhinted.outer_side.reset();
  CHECK_THROWS_AS(shade(unhinted), NotApplicable);
}

TEST_CASE("diagram orientability matches sign membership on small pairs") {
  int members = 0, total = 0;
  for (const GroupElement& g : all_reduced_pairs(5)) {
    Tangle l = build_unoriented_link(g, Convention::standard);
    bool fromDiagram = shading_orientable(l);
    bool fromSigns = is_oriented(g);
    CHECK(fromDiagram == fromSigns);
    ++total;
    if (fromSigns) ++members;
  }
  CHECK(total > members);
  CHECK(members > 0);
}

TEST_CASE("mirrored diagrams shade the same way") {
  GroupElement g = multiply(generator_x0(), generator_x1());
  CHECK(shading_orientable(build_unoriented_link(g, Convention::mirrored)));
  CHECK(shading_orientable(build_unoriented_link(multiply(g, g), Convention::mirrored)));
  CHECK(!shading_orientable(build_unoriented_link(generator_x0(), Convention::mirrored)));
}
