#include <doctest.h>

#include <algorithm>
#include <random>
#include <utility>

#include "support/builders.hpp"
#include "thl/errors.hpp"
#include "thl/reidemeister.hpp"
#include "thl/signs.hpp"
#include "thl/tangle_build.hpp"
#include "thl/thompson.hpp"

using namespace thl;
using namespace thl::testsupport;

namespace {

// arc order is not meaningful, so compare diagrams up to it
std::string sorted_text(Tangle t) {
  t.outer_side.reset();
  std::sort(t.arcs.begin(), t.arcs.end(), [](const Arc& p, const Arc& q) {
    return std::make_pair(p.from, p.to) < std::make_pair(q.from, q.to);
  });
  return to_text(t);
}

int euler(const Tangle& t) {
  return t.crossing_count() - int(t.arcs.size()) + int(faces(t).faces.size());
}

}  // namespace

TEST_CASE("kink detection and removal") {
  Tangle kink = closed_braid(1, true);
  REQUIRE(kink.crossing_count() == 1);

  // both the curl and the return loop join adjacent ports
  auto sites = r1_sites(kink);
  REQUIRE(sites.size() == 2);

  for (const auto& s : sites) {
    Tangle flat = r1_remove(kink, s);
    flat.validate();
    CHECK(flat.crossing_count() == 0);
    CHECK(flat.arcs.empty());
    CHECK(flat.free_loops == 1);
    CHECK(component_count(flat) == component_count(kink));
  }

  CHECK(r1_sites(hopf_positive()).empty());
}

TEST_CASE("adding a kink and undoing it restores the diagram") {
  Tangle hopf = hopf_positive();
  for (bool over02 : {false, true}) {
    for (int a = 0; a < int(hopf.arcs.size()); ++a) {
      Tangle kinked = r1_add(hopf, a, over02);
      kinked.validate();
      CHECK(kinked.crossing_count() == 3);
      CHECK(writhe(kinked) == writhe(hopf) + (over02 ? -1 : 1));
      CHECK(crossing_sign(kinked, 2) == (over02 ? -1 : 1));
      CHECK(component_count(kinked) == component_count(hopf));
      CHECK(euler(kinked) == 2);

      auto sites = r1_sites(kinked);
      REQUIRE(sites.size() == 1);
      Tangle back = r1_remove(kinked, sites[0]);
      back.validate();
      CHECK(sorted_text(back) == sorted_text(hopf));
    }
  }
}

TEST_CASE("poke detection: clasps are not pokes") {
  Tangle hopf = hopf_positive();
  CHECK(r2_sites(hopf).empty());
  CHECK(r3_sites(hopf).empty());

  Tangle cancelling = close_tangle(stack(braid_sigma1(false), braid_sigma1(true)));
  cancelling.validate();
  REQUIRE(cancelling.crossing_count() == 2);
  CHECK(writhe(cancelling) == 0);

  auto sites = r2_sites(cancelling);
  REQUIRE(!sites.empty());
  Tangle undone = r2_remove(cancelling, sites[0]);
  undone.validate();
  CHECK(undone.crossing_count() == 0);
  CHECK(component_count(undone) == 2);
  CHECK(component_count(undone) == component_count(cancelling));
}

TEST_CASE("poking and unpoking restores the diagram") {
  Tangle hopf = hopf_positive();
  FaceSet fs = faces(hopf);
  int checked = 0;
  for (const auto& face : fs.faces) {
    if (face.size() < 2 || face[0].first == face[1].first) continue;
    for (bool first_over : {true, false}) {
      Tangle poked = r2_add(hopf, face[0], face[1], first_over);
      poked.validate();
      CHECK(poked.crossing_count() == 4);
      CHECK(writhe(poked) == writhe(hopf));
      CHECK(crossing_sign(poked, 2) + crossing_sign(poked, 3) == 0);
      CHECK(component_count(poked) == component_count(hopf));
      CHECK(euler(poked) == 2);

      auto sites = r2_sites(poked);
      bool restored = false;
      for (const auto& s : sites) {
        const Arc& a1 = poked.arcs[size_t(s.arc1)];
        if (a1.from.idx < 2 || a1.to.idx < 2) continue;
        Tangle back = r2_remove(poked, s);
        back.validate();
        if (sorted_text(back) == sorted_text(hopf)) restored = true;
      }
      CHECK(restored);
      ++checked;
    }
  }
  CHECK(checked >= 4);
}

TEST_CASE("poke rejects sides of different faces") {
  Tangle hopf = hopf_positive();
  FaceSet fs = faces(hopf);
  CHECK_THROWS_AS(r2_add(hopf, {0, true}, {0, false}, true), NotApplicable);

  bool found = false;
  for (int a = 1; a < int(hopf.arcs.size()) && !found; ++a)
    for (bool d : {true, false})
      if (fs.left_of(a, d) != fs.left_of(0, true)) {
        CHECK_THROWS_AS(r2_add(hopf, {0, true}, {a, d}, true), NotApplicable);
        found = true;
        break;
      }
  CHECK(found);
}

TEST_CASE("triangle slide preserves structure and is involutive") {
  Tangle braid = closed_word("+++", {{1, true}, {2, true}, {1, true}});
  braid.validate();
  REQUIRE(braid.crossing_count() == 3);
  CHECK(component_count(braid) == 2);

  auto sites = r3_sites(braid);
  REQUIRE(!sites.empty());
  for (const auto& s : sites) {
    Tangle slid = r3_slide(braid, s);
    slid.validate();
    CHECK(slid.crossing_count() == 3);
    CHECK(int(slid.arcs.size()) == int(braid.arcs.size()));
    CHECK(writhe(slid) == writhe(braid));
    for (int c = 0; c < 3; ++c)
      CHECK(crossing_sign(slid, c) == crossing_sign(braid, c));
    CHECK(component_count(slid) == component_count(braid));
    CHECK(faces(slid).faces.size() == faces(braid).faces.size());
    CHECK(euler(slid) == 2);
    CHECK(sorted_text(slid) != sorted_text(braid));

    Tangle back = r3_slide(slid, s);
    back.validate();
    CHECK(sorted_text(back) == sorted_text(braid));
  }
}

TEST_CASE("triangle slide works with mixed crossings") {
  Tangle braid = closed_word("+++", {{1, true}, {2, false}, {1, true}});
  braid.validate();
  auto sites = r3_sites(braid);
  for (const auto& s : sites) {
    Tangle slid = r3_slide(braid, s);
    slid.validate();
    CHECK(writhe(slid) == writhe(braid));
    CHECK(euler(slid) == 2);
    Tangle back = r3_slide(slid, s);
    CHECK(sorted_text(back) == sorted_text(braid));
  }
}

TEST_CASE("moves compose: random churn keeps the diagram coherent") {
  std::mt19937 rng(20260815);
  GroupElement x0x1 = multiply(generator_x0(), generator_x1());
  Tangle t = build_link(x0x1, Convention::standard);
  const int comps = component_count(t);
  const int wr = writhe(t);
  int expected_writhe = wr;

  for (int step = 0; step < 120; ++step) {
    int kind = int(rng() % 5);
    if (kind == 0 && !t.arcs.empty()) {
      bool o = rng() % 2 == 0;
      t = r1_add(t, int(rng() % t.arcs.size()), o);
      expected_writhe += o ? -1 : 1;
    } else if (kind == 1) {
      FaceSet fs = faces(t);
      std::vector<const std::vector<std::pair<int, bool>>*> big;
      for (const auto& f : fs.faces)
        if (f.size() >= 2 && f[0].first != f[1].first) big.push_back(&f);
      if (big.empty()) continue;
      const auto& f = *big[rng() % big.size()];
      t = r2_add(t, f[0], f[1], rng() % 2 == 0);
    } else if (kind == 2) {
      auto sites = r1_sites(t);
      if (sites.empty()) continue;
      const auto& s = sites[rng() % sites.size()];
      const Arc& kink = t.arcs[size_t(s.arc)];
      expected_writhe -= crossing_sign(t, kink.from.idx);
      t = r1_remove(t, s);
    } else if (kind == 3) {
      auto sites = r2_sites(t);
      if (sites.empty()) continue;
      t = r2_remove(t, sites[rng() % sites.size()]);
    } else {
      auto sites = r3_sites(t);
      if (sites.empty()) continue;
      t = r3_slide(t, sites[rng() % sites.size()]);
    }
    t.validate();
    CHECK(component_count(t) == comps);
  }
  CHECK(writhe(t) == expected_writhe);
}

TEST_CASE("kink search is safe on open tangles; poke needs two arcs") {
  Tangle sigma = braid_sigma1(true);
  CHECK(r1_sites(sigma).empty());
  Tangle hopf = hopf_positive();
  CHECK_THROWS_AS(r2_add(hopf, {0, true}, {0, false}, true), NotApplicable);
}
