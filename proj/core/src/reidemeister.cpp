#include "thl/reidemeister.hpp"

#include <algorithm>

#include "thl/errors.hpp"

namespace thl {

namespace {

bool adjacent_slots(int s1, int s2) {
  int d = (s1 - s2) & 3;
  return d == 1 || d == 3;
}

void drop_crossings(Tangle& t, std::vector<int> gone) {
  std::sort(gone.begin(), gone.end());
  for (int k = int(gone.size()) - 1; k >= 0; --k)
    t.crossings.erase(t.crossings.begin() + gone[size_t(k)]);
  for (auto& a : t.arcs)
    for (End* e : {&a.from, &a.to})
      if (e->kind == EndKind::port) {
        int shift = 0;
        for (int g : gone) {
          if (e->idx == g) throw InvariantViolation("dropped crossing still referenced");
          if (e->idx > g) ++shift;
        }
        e->idx -= shift;
      }
}

void drop_arcs(Tangle& t, std::vector<int> gone) {
  std::sort(gone.begin(), gone.end());
  for (int k = int(gone.size()) - 1; k >= 0; --k)
    t.arcs.erase(t.arcs.begin() + gone[size_t(k)]);
}

// re-knit arcs whose loose ends pair up at the listed junctions (same
// machinery close/smooth use, reduced to what the moves need: chases chains
// and counts closed-off loops)
void heal(Tangle& t, const std::vector<std::pair<End, End>>& junctions) {
  for (auto [x, y] : junctions) {
    auto at = attachments(t);
    auto ix = at.find(x), iy = at.find(y);
    if (ix == at.end() || iy == at.end())
      throw InvariantViolation("healing: loose end not found");
    auto [ax, x_from] = ix->second;
    auto [ay, y_from] = iy->second;
    if (ax == ay) {
      ++t.free_loops;
      drop_arcs(t, {ax});
      continue;
    }
    Arc& first = t.arcs[size_t(ax)];
    Arc& second = t.arcs[size_t(ay)];
    if (t.oriented && x_from == y_from)
      throw InvariantViolation("healing: flow clash");
    End far_from = x_from ? (y_from ? second.to : second.from) : first.from;
    End far_to = x_from ? first.to : (y_from ? second.to : second.from);
    first = {far_from, far_to};
    drop_arcs(t, {ay});
  }
}

}  // namespace

std::vector<R1Site> r1_sites(const Tangle& t) {
  std::vector<R1Site> out;
  for (int a = 0; a < int(t.arcs.size()); ++a) {
    const Arc& arc = t.arcs[size_t(a)];
    if (arc.from.kind == EndKind::port && arc.to.kind == EndKind::port &&
        arc.from.idx == arc.to.idx && adjacent_slots(arc.from.slot, arc.to.slot))
      out.push_back({a});
  }
  return out;
}

std::vector<R2Site> r2_sites(const Tangle& t) {
  std::vector<R2Site> out;
  FaceSet fs = faces(t);
  for (const auto& face : fs.faces) {
    if (face.size() != 2) continue;
    int a1 = face[0].first, a2 = face[1].first;
    if (a1 == a2) continue;
    const Arc& arc = t.arcs[size_t(a1)];
    if (arc.from.kind != EndKind::port || arc.to.kind != EndKind::port)
      continue;
    int x = arc.from.idx, y = arc.to.idx;
    if (x == y) continue;
    if (slot_is_over(t.crossings[size_t(x)], arc.from.slot) !=
        slot_is_over(t.crossings[size_t(y)], arc.to.slot))
      continue;
    out.push_back({a1, a2});
  }
  return out;
}

std::vector<R3Site> r3_sites(const Tangle& t) {
  std::vector<R3Site> out;
  FaceSet fs = faces(t);
  for (const auto& face : fs.faces) {
    if (face.size() != 3) continue;
    int a[3] = {face[0].first, face[1].first, face[2].first};
    if (a[0] == a[1] || a[0] == a[2] || a[1] == a[2]) continue;
    std::vector<int> cs;
    bool all_ports = true;
    for (int i = 0; i < 3; ++i) {
      const Arc& arc = t.arcs[size_t(a[i])];
      for (const End& e : {arc.from, arc.to}) {
        if (e.kind != EndKind::port) all_ports = false;
        if (std::find(cs.begin(), cs.end(), e.idx) == cs.end())
          cs.push_back(e.idx);
      }
    }
    if (!all_ports || cs.size() != 3) continue;
    for (int i = 0; i < 3; ++i) {
      const Arc& arc = t.arcs[size_t(a[i])];
      if (slot_is_over(t.crossings[size_t(arc.from.idx)], arc.from.slot) ==
          slot_is_over(t.crossings[size_t(arc.to.idx)], arc.to.slot))
        out.push_back({a[i], a[(i + 1) % 3], a[(i + 2) % 3]});
    }
  }
  return out;
}

Tangle r1_remove(const Tangle& t, const R1Site& site) {
  const Arc kink = t.arcs.at(size_t(site.arc));
  if (kink.from.kind != EndKind::port || kink.from.idx != kink.to.idx ||
      !adjacent_slots(kink.from.slot, kink.to.slot))
    throw NotApplicable("arc is not a kink");
  const int c = kink.from.idx;
  Tangle r = t;
  r.outer_side.reset();
  drop_arcs(r, {site.arc});
  heal(r, {{End::port(c, (kink.from.slot + 2) & 3), End::port(c, (kink.to.slot + 2) & 3)}});
  drop_crossings(r, {c});
  return r;
}

Tangle r2_remove(const Tangle& t, const R2Site& site) {
  const Arc a1 = t.arcs.at(size_t(site.arc1));
  const Arc a2 = t.arcs.at(size_t(site.arc2));
  const int x = a1.from.idx, y = a1.to.idx;
  if (site.arc1 == site.arc2 || x == y ||
      !((a2.from.idx == x && a2.to.idx == y) || (a2.from.idx == y && a2.to.idx == x)))
    throw NotApplicable("arcs do not bound a bigon between two crossings");
  if (slot_is_over(t.crossings[size_t(x)], a1.from.slot) !=
      slot_is_over(t.crossings[size_t(y)], a1.to.slot))
    throw NotApplicable("bigon is clasped, not poked");

  End a2x = a2.from.idx == x ? a2.from : a2.to;
  End a2y = a2.from.idx == x ? a2.to : a2.from;
  Tangle r = t;
  r.outer_side.reset();
  drop_arcs(r, {site.arc1, site.arc2});
  heal(r, {{End::port(x, (a1.from.slot + 2) & 3), End::port(y, (a1.to.slot + 2) & 3)},
           {End::port(x, (a2x.slot + 2) & 3), End::port(y, (a2y.slot + 2) & 3)}});
  drop_crossings(r, {x, y});
  return r;
}

Tangle r3_slide(const Tangle& t, const R3Site& site) {
  const Arc& e1 = t.arcs.at(size_t(site.slide));
  const int x = e1.from.idx, y = e1.to.idx;
  auto touches = [&](int arcIdx, int c) {
    const Arc& a = t.arcs.at(size_t(arcIdx));
    return a.from.idx == c || a.to.idx == c;
  };
  int e3i = touches(site.other1, x) ? site.other1 : site.other2;
  int e2i = e3i == site.other1 ? site.other2 : site.other1;
  const Arc& e3 = t.arcs.at(size_t(e3i));
  const Arc& e2 = t.arcs.at(size_t(e2i));
  const int z = e3.from.idx == x ? e3.to.idx : e3.from.idx;
  if (!touches(e3i, x) || !touches(e2i, y) || !touches(e2i, z) || x == y ||
      x == z || y == z)
    throw NotApplicable("arcs do not bound a triangle");
  if (slot_is_over(t.crossings[size_t(x)], e1.from.slot) !=
      slot_is_over(t.crossings[size_t(y)], e1.to.slot))
    throw NotApplicable("strand is not uniform over its crossings");

  const int s1x = e1.from.slot, s1y = e1.to.slot;
  const int x3 = (e3.from.idx == x ? e3.from : e3.to).slot;
  const int z3 = (e3.from.idx == x ? e3.to : e3.from).slot;
  const int y2 = (e2.from.idx == y ? e2.from : e2.to).slot;
  const int z2 = (e2.from.idx == y ? e2.to : e2.from).slot;

  // The triangle rotates through its centre: every edge moves to the
  // opposite pair of slots, and the strand beyond each corner re-crosses on
  // the far side, so each external end hops to the edge's other crossing.
  auto at = attachments(t);
  struct Edit {
    int arc;
    bool from_end;
    End target;
  };
  std::vector<Edit> edits;
  auto relocate = [&](End where, End target) {
    auto it = at.find(where);
    if (it == at.end()) throw InvariantViolation("triangle: port unused");
    edits.push_back({it->second.first, it->second.second, target});
  };
  relocate(End::port(x, (s1x + 2) & 3), End::port(y, s1y));
  relocate(End::port(y, (s1y + 2) & 3), End::port(x, s1x));
  relocate(End::port(x, (x3 + 2) & 3), End::port(z, z3));
  relocate(End::port(z, (z3 + 2) & 3), End::port(x, x3));
  relocate(End::port(y, (y2 + 2) & 3), End::port(z, z2));
  relocate(End::port(z, (z2 + 2) & 3), End::port(y, y2));

  Tangle r = t;
  r.outer_side.reset();
  for (const Edit& e : edits)
    (e.from_end ? r.arcs[size_t(e.arc)].from : r.arcs[size_t(e.arc)].to) = e.target;
  auto shift_and_flip = [&](int arcIdx) {
    Arc& a = r.arcs[size_t(arcIdx)];
    a.from.slot = (a.from.slot + 2) & 3;
    a.to.slot = (a.to.slot + 2) & 3;
    std::swap(a.from, a.to);
  };
  shift_and_flip(site.slide);
  shift_and_flip(e3i);
  shift_and_flip(e2i);
  return r;
}

Tangle r1_add(const Tangle& t, int arc, bool over02) {
  const Arc a = t.arcs.at(size_t(arc));
  const int n = t.crossing_count();
  Tangle r = t;
  r.outer_side.reset();
  drop_arcs(r, {arc});
  r.crossings.push_back({over02});
  r.arcs.push_back({a.from, End::port(n, 3)});
  r.arcs.push_back({End::port(n, 1), End::port(n, 0)});
  r.arcs.push_back({End::port(n, 2), a.to});
  return r;
}

Tangle r2_add(const Tangle& t, std::pair<int, bool> side_a,
              std::pair<int, bool> side_b, bool first_over) {
  if (side_a.first == side_b.first)
    throw NotApplicable("poke needs two distinct arcs");
  FaceSet fs = faces(t);
  if (fs.left_of(side_a.first, side_a.second) !=
      fs.left_of(side_b.first, side_b.second))
    throw NotApplicable("sides do not border a common face");

  const Arc a = t.arcs.at(size_t(side_a.first));
  const Arc b = t.arcs.at(size_t(side_b.first));
  const End u = side_a.second ? a.from : a.to;
  const End v = side_a.second ? a.to : a.from;
  const End xe = side_b.second ? b.to : b.from;
  const End ye = side_b.second ? b.from : b.to;

  const int c1 = t.crossing_count(), c2 = c1 + 1;
  Tangle r = t;
  r.outer_side.reset();
  drop_arcs(r, {std::max(side_a.first, side_b.first),
                std::min(side_a.first, side_b.first)});
  r.crossings.push_back({!first_over});
  r.crossings.push_back({!first_over});

  std::vector<Arc> alpha = {{u, End::port(c1, 3)},
                            {End::port(c1, 1), End::port(c2, 1)},
                            {End::port(c2, 3), v}};
  std::vector<Arc> beta = {{xe, End::port(c1, 2)},
                           {End::port(c1, 0), End::port(c2, 2)},
                           {End::port(c2, 0), ye}};
  if (!side_a.second)
    for (Arc& p : alpha) std::swap(p.from, p.to);
  if (side_b.second)
    for (Arc& p : beta) std::swap(p.from, p.to);
  for (const Arc& p : alpha) r.arcs.push_back(p);
  for (const Arc& p : beta) r.arcs.push_back(p);
  return r;
}

}  // namespace thl
