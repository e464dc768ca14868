#include <doctest.h>

#include <random>

#include "support/builders.hpp"
#include "thl/errors.hpp"
#include "thl/signs.hpp"
#include "thl/tangle_build.hpp"
#include "thl/thompson.hpp"

using namespace thl;

namespace {

SignSeq random_row(std::mt19937_64& rng, int len) {
  SignSeq s;
  for (int i = 0; i < len; ++i)
    s.push_back((rng() & 1) ? Sign::plus : Sign::minus);
  return s;
}

}  // namespace

TEST_CASE("object signs interleave the row with its negation") {
  CHECK(object_signs(SignSeq::parse("+")).text() == "+");
  CHECK(object_signs(SignSeq::parse("-")).text() == "-");
  CHECK(object_signs(SignSeq::parse("+-")).text() == "++-");
  CHECK(object_signs(SignSeq::parse("+--")).text() == "++-+-");
  CHECK(object_signs(SignSeq::parse("+-+")).text() == "++--+");
  CHECK(object_signs(SignSeq::parse("+-+-")).text() == "++--++-");
  CHECK_THROWS_AS(object_signs(SignSeq{}), DimensionMismatch);
}

TEST_CASE("caret pieces are valid and carry one negative crossing") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 1 + int(rng() % 5);
    SignSeq row = random_row(rng, m);
    int i = 1 + int(rng() % uint64_t(m));
    Tangle p = caret_piece(row, i, Convention::standard);
    p.validate();
    CHECK(p.crossing_count() == 1);
    CHECK(p.bottom.size() == 2 * m - 1);
    CHECK(p.top.size() == 2 * m + 1);
    CHECK(crossing_sign(p, 0) == -1);
    CHECK(crossing_sign(caret_piece(row, i, Convention::mirrored), 0) == 1);
  }
  CHECK_THROWS_AS(caret_piece(SignSeq::parse("+"), 2, Convention::standard),
                  DimensionMismatch);
}

TEST_CASE("tree image stacks one piece per caret") {
  Tangle t = phi_of_tree(Tree::parse("((ll)l)"), Convention::standard);
  t.validate();
  CHECK(t.crossing_count() == 2);
  CHECK(t.bottom.text() == "+");
  CHECK(t.top.text() == object_signs(SignSeq::parse("+--")).text());
  CHECK(writhe(t) == -2);

  Tangle m = phi_of_tree(Tree::parse("(l(ll))"), Convention::standard);
  m.validate();
  CHECK(m.top.text() == object_signs(SignSeq::parse("+-+")).text());

  Tangle leaf = phi_of_tree(Tree::parse("l"), Convention::standard);
  CHECK(leaf.crossing_count() == 0);
  CHECK(leaf.bottom.text() == "+");
  CHECK(leaf.top.text() == "+");
}

TEST_CASE("identity element closes to a single free loop") {
  Tangle l = build_link(identity_element(), Convention::standard);
  l.validate();
  CHECK(l.is_closed());
  CHECK(l.crossing_count() == 0);
  CHECK(l.arcs.empty());
  CHECK(l.free_loops == 1);
  CHECK(component_count(l) == 1);
}

TEST_CASE("non-members are rejected with the first bad boundary point") {
  CHECK_THROWS_AS(build_link(generator_x0(), Convention::standard), NotOriented);
  try {
    build_link(generator_x0(), Convention::standard);
  } catch (const NotOriented& e) {
    CHECK(e.mismatch_index == 4);
  }
  CHECK_THROWS_AS(build_link(generator_x1(), Convention::standard), NotOriented);
}

TEST_CASE("smallest oriented element builds a balanced closed diagram") {
  GroupElement g = multiply(generator_x0(), generator_x1());
  REQUIRE(is_oriented(g));
  Tangle l = build_link(g, Convention::standard);
  l.validate();
  CHECK(l.is_closed());
  CHECK(l.crossing_count() == 6);  // one per caret of either tree
  CHECK(writhe(l) == 0);           // reflected pieces flip handedness
  CHECK(l.free_loops == 0);
  CHECK(split_components(l).size() == 1);
  CHECK(faces(l).size() == int(l.arcs.size()) - l.crossing_count() + 2);
  REQUIRE(l.outer_side.has_value());

  Tangle lm = build_link(g, Convention::mirrored);
  lm.validate();
  CHECK(lm.crossing_count() == 6);
  for (int c = 0; c < 6; ++c)
    CHECK(crossing_sign(lm, c) == -crossing_sign(l, c));
}

TEST_CASE("every small member yields one connected diagram") {
  for (const GroupElement& g : enumerate_oriented(5)) {
    Tangle l = build_link(g, Convention::standard);
    l.validate();
    CHECK(l.is_closed());
    CHECK(l.crossing_count() ==
          2 * (g.plus.leaf_count() - 1));
    if (l.crossing_count() > 0) {
      CHECK(l.free_loops == 0);
      CHECK(split_components(l).size() == 1);
      CHECK(faces(l).size() == int(l.arcs.size()) - l.crossing_count() + 2);
    }
  }
}

TEST_CASE("positional variant accepts non-members") {
  Tangle l = build_unoriented_link(generator_x0(), Convention::standard);
  CHECK(!l.oriented);
  l.validate();
  CHECK(l.is_closed());
  CHECK(l.crossing_count() == 4);
  CHECK(l.free_loops == 0);
  CHECK(split_components(l).size() == 1);
  CHECK(faces(l).size() == int(l.arcs.size()) - l.crossing_count() + 2);

  GroupElement g = multiply(generator_x0(), generator_x1());
  Tangle u = build_unoriented_link(g, Convention::standard);
  u.validate();
  CHECK(u.crossing_count() == 6);
}

TEST_CASE("matching tangles pair opposite signs without crossings") {
  Tangle m = matching_tangle(SignSeq::parse("++--"));
  m.validate();
  CHECK(m.crossing_count() == 0);
  CHECK(m.bottom.size() == 0);
  CHECK(m.top.text() == "++--");
  REQUIRE(m.arcs.size() == 2);
  CHECK(m.arcs[0].from == End::at_top(2));
  CHECK(m.arcs[0].to == End::at_top(1));
  CHECK(m.arcs[1].from == End::at_top(3));
  CHECK(m.arcs[1].to == End::at_top(0));

  matching_tangle(SignSeq::parse("-+")).validate();
  matching_tangle(SignSeq::parse("+-+--+")).validate();
  CHECK_THROWS_AS(matching_tangle(SignSeq::parse("+++")), NotApplicable);
  CHECK_THROWS_AS(matching_tangle(SignSeq::parse("+")), NotApplicable);

  Tangle closed = stack(star(m), m);
  CHECK(closed.is_closed());
  CHECK(closed.free_loops == 2);
}

TEST_CASE("conjugation by a crossing swaps two boundary points") {
  Tangle v = matching_tangle(SignSeq::parse("+++---"));
  Tangle w = conjugate_by_crossing(v, 3, true);
  w.validate();
  CHECK(w.top.text() == "++-+--");
  CHECK(w.crossing_count() == 1);
  CHECK(w.bottom.size() == 0);

  Tangle back = conjugate_by_crossing(w, 3, false);
  back.validate();
  CHECK(back.top.text() == "+++---");
  CHECK(back.crossing_count() == 2);

  CHECK_THROWS_AS(conjugate_by_crossing(v, 6, true), DimensionMismatch);
  CHECK_THROWS_AS(conjugate_by_crossing(v, 0, true), DimensionMismatch);
}

TEST_CASE("braid pieces agree with the hand-built generator") {
  Tangle id2 = identity_tangle(SignSeq::parse("++"));
  Tangle viaConj = conjugate_by_crossing(id2, 1, true);
  viaConj.validate();
  CHECK(crossing_sign(viaConj, 0) == 1);
  CHECK(to_text(close_tangle(viaConj)) ==
        to_text(close_tangle(testsupport::braid_sigma1(true))));
}
