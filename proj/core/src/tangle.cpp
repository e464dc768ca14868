#include "thl/tangle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace thl {

namespace {

std::string end_text(const End& e) {
  std::ostringstream os;
  switch (e.kind) {
    case EndKind::port: os << "c" << e.idx << "." << e.slot; break;
    case EndKind::bottom: os << "b" << e.idx; break;
    case EndKind::top: os << "t" << e.idx; break;
  }
  return os.str();
}

// Merging arcs through identified endpoint pairs.  Each listed End must be
// referenced by exactly one arc endpoint; chains of identifications are
// followed and closed cycles are counted as free loops.
struct FuseOutcome {
  std::vector<int> arc_map;    // original arc -> surviving arc, -1 if looped
  std::vector<char> flipped;   // original arc ended up reversed?
  int loops = 0;
};

FuseOutcome fuse(std::vector<Arc>& arcs,
                 const std::vector<std::pair<End, End>>& junctions,
                 bool respect_flow) {
  struct Chain {
    std::vector<std::pair<int, bool>> members;  // (orig arc, reversed?)
    End head, tail;                             // flow runs head -> tail
    bool alive = true;
  };
  const int n = int(arcs.size());
  std::vector<Chain> chains(n);
  std::map<End, std::pair<int, bool>> at;  // End -> (chain, is_tail)
  for (int i = 0; i < n; ++i) {
    chains[i].members = {{i, false}};
    chains[i].head = arcs[i].from;
    chains[i].tail = arcs[i].to;
    if (!at.emplace(arcs[i].from, std::make_pair(i, false)).second ||
        !at.emplace(arcs[i].to, std::make_pair(i, true)).second)
      throw InvariantViolation("fuse: endpoint referenced twice");
  }

  auto flip = [&](int ci) {
    Chain& c = chains[ci];
    std::reverse(c.members.begin(), c.members.end());
    for (auto& m : c.members) m.second = !m.second;
    std::swap(c.head, c.tail);
    at[c.head] = {ci, false};
    at[c.tail] = {ci, true};
  };

  FuseOutcome out;
  out.arc_map.assign(n, -2);
  out.flipped.assign(n, 0);

  for (const auto& [x, y] : junctions) {
    auto ix = at.find(x), iy = at.find(y);
    if (ix == at.end() || iy == at.end())
      throw InvariantViolation("fuse: junction end " + end_text(ix == at.end() ? x : y) + " not attached");
    auto [cx, x_tail] = ix->second;
    auto [cy, y_tail] = iy->second;
    if (cx == cy) {
      // the chain closes on itself through this junction
      if (respect_flow && !((x_tail && !y_tail) || (y_tail && !x_tail)))
        throw InvariantViolation("fuse: flow clash closing a loop");
      Chain& c = chains[cx];
      for (auto& m : c.members) out.arc_map[size_t(m.first)] = -1;
      ++out.loops;
      at.erase(c.head);
      at.erase(c.tail);
      c.alive = false;
      continue;
    }
    int a = cx, b = cy;  // want: x = tail of a, y = head of b
    if (respect_flow) {
      if (x_tail && !y_tail) {
        // as is
      } else if (y_tail && !x_tail) {
        std::swap(a, b);
      } else {
        throw InvariantViolation("fuse: flow clash at junction " + end_text(x) + "/" + end_text(y));
      }
    } else {
      if (x_tail && !y_tail) {
      } else if (y_tail && !x_tail) {
        std::swap(a, b);
      } else if (x_tail && y_tail) {
        flip(cy);
      } else {
        flip(cx);
      }
    }
    Chain& ca = chains[a];
    Chain& cb = chains[b];
    at.erase(ca.tail);
    at.erase(cb.head);
    ca.members.insert(ca.members.end(), cb.members.begin(), cb.members.end());
    ca.tail = cb.tail;
    at[ca.tail] = {a, true};
    cb.alive = false;
    cb.members.clear();
  }

  std::vector<Arc> rebuilt;
  rebuilt.reserve(size_t(n));
  for (int i = 0; i < n; ++i) {
    const Chain& c = chains[size_t(i)];
    if (!c.alive || c.members.empty()) continue;
    int ni = int(rebuilt.size());
    rebuilt.push_back({c.head, c.tail});
    for (auto& m : c.members) {
      out.arc_map[size_t(m.first)] = ni;
      out.flipped[size_t(m.first)] = char(m.second);
    }
  }
  arcs = std::move(rebuilt);
  return out;
}

End shift_ports(const End& e, int crossing_offset) {
  if (e.kind == EndKind::port) return End::port(e.idx + crossing_offset, e.slot);
  return e;
}

}  // namespace

std::map<End, std::pair<int, bool>> attachments(const Tangle& t) {
  std::map<End, std::pair<int, bool>> at;
  for (int i = 0; i < int(t.arcs.size()); ++i) {
    if (!at.emplace(t.arcs[size_t(i)].from, std::make_pair(i, true)).second ||
        !at.emplace(t.arcs[size_t(i)].to, std::make_pair(i, false)).second)
      throw InvariantViolation("tangle: endpoint referenced twice");
  }
  return at;
}


void Tangle::validate() const {
  if (free_loops < 0) throw InvariantViolation("tangle: negative loop count");
  auto at = attachments(*this);
  size_t expected = size_t(bottom.size()) + size_t(top.size()) + 4 * crossings.size();
  if (at.size() != 2 * arcs.size() || at.size() != expected)
    throw InvariantViolation("tangle: endpoint count mismatch");
  for (int i = 0; i < bottom.size(); ++i) {
    auto it = at.find(End::at_bottom(i));
    if (it == at.end()) throw InvariantViolation("tangle: unused bottom point");
    if (oriented && it->second.second != (bottom.at(i + 1) == Sign::plus))
      throw InvariantViolation("tangle: flow against bottom sign");
  }
  for (int i = 0; i < top.size(); ++i) {
    auto it = at.find(End::at_top(i));
    if (it == at.end()) throw InvariantViolation("tangle: unused top point");
    if (oriented && it->second.second != (top.at(i + 1) == Sign::minus))
      throw InvariantViolation("tangle: flow against top sign");
  }
  for (int c = 0; c < crossing_count(); ++c) {
    for (int pair = 0; pair < 2; ++pair) {
      auto a = at.find(End::port(c, pair));
      auto b = at.find(End::port(c, pair + 2));
      if (a == at.end() || b == at.end())
        throw InvariantViolation("tangle: unused crossing port");
      if (oriented && a->second.second == b->second.second)
        throw InvariantViolation("tangle: strand enters or leaves a crossing twice");
    }
  }
}

std::pair<int, int> entry_slots(const Tangle& t, int c) {
  if (!t.oriented) throw NotApplicable("entry slots need an oriented tangle");
  auto at = attachments(t);
  int ea = -1, eb = -1;
  for (int s = 0; s < 4; ++s) {
    auto it = at.find(End::port(c, s));
    if (it == at.end()) throw InvariantViolation("tangle: unused crossing port");
    if (!it->second.second) (s % 2 == 0 ? ea : eb) = s;  // an arc ends here
  }
  if (ea < 0 || eb < 0) throw InvariantViolation("tangle: crossing without two entries");
  return {ea, eb};
}

int crossing_sign(const Tangle& t, int c) {
  auto [ea, eb] = entry_slots(t, c);
  auto da = port_direction(ea);  // flow direction = -outward direction
  auto db = port_direction(eb);
  da = {-da.first, -da.second};
  db = {-db.first, -db.second};
  auto o = t.crossings[size_t(c)].over02 ? da : db;
  auto u = t.crossings[size_t(c)].over02 ? db : da;
  int det = o.first * u.second - o.second * u.first;
  return det > 0 ? 1 : -1;
}

int writhe(const Tangle& t) {
  int w = 0;
  for (int c = 0; c < t.crossing_count(); ++c) w += crossing_sign(t, c);
  return w;
}

Tangle stack(const Tangle& upper, const Tangle& lower) {
  const int k = lower.top.size();
  if (upper.bottom.size() != k)
    throw DimensionMismatch("stack: interface widths differ");
  const bool flow = lower.oriented && upper.oriented;
  if (flow)
    for (int i = 1; i <= k; ++i)
      if (lower.top.at(i) != upper.bottom.at(i))
        throw BoundaryMismatch("stack: interface signs differ", i);

  Tangle r;
  r.oriented = flow;
  r.bottom = lower.bottom;
  r.top = upper.top;
  r.free_loops = lower.free_loops + upper.free_loops;
  r.crossings = lower.crossings;
  r.crossings.insert(r.crossings.end(), upper.crossings.begin(), upper.crossings.end());

  // interface keys out of the valid boundary ranges
  const int bo = lower.bottom.size();  // lower top(i)  -> bottom(bo + i)
  const int to = upper.top.size();     // upper bottom(i) -> top(to + i)
  auto remap_lower = [&](const End& e) {
    if (e.kind == EndKind::top) return End::at_bottom(bo + e.idx);
    return e;
  };
  auto remap_upper = [&](const End& e) {
    if (e.kind == EndKind::bottom) return End::at_top(to + e.idx);
    return shift_ports(e, lower.crossing_count());
  };
  for (const Arc& a : lower.arcs) r.arcs.push_back({remap_lower(a.from), remap_lower(a.to)});
  for (const Arc& a : upper.arcs) r.arcs.push_back({remap_upper(a.from), remap_upper(a.to)});

  std::vector<std::pair<End, End>> js;
  js.reserve(size_t(k));
  for (int i = 0; i < k; ++i)
    js.push_back({End::at_bottom(bo + i), End::at_top(to + i)});
  auto outcome = fuse(r.arcs, js, flow);
  r.free_loops += outcome.loops;
  return r;
}

Tangle star(const Tangle& t) {
  auto reflect = [](const End& e) {
    switch (e.kind) {
      case EndKind::port: return End::port(e.idx, e.slot % 2 == 1 ? 4 - e.slot : e.slot);
      case EndKind::bottom: return End::at_top(e.idx);
      default: return End::at_bottom(e.idx);
    }
  };
  Tangle r;
  r.crossings = t.crossings;  // over/under kept; handedness flips via the flows
  r.bottom = t.top;
  r.top = t.bottom;
  r.free_loops = t.free_loops;
  r.oriented = t.oriented;
  r.arcs.reserve(t.arcs.size());
  for (const Arc& a : t.arcs) r.arcs.push_back({reflect(a.to), reflect(a.from)});
  return r;
}

Tangle mirror(Tangle t) {
  for (auto& c : t.crossings) c.over02 = !c.over02;
  return t;
}

Tangle reverse_strands(Tangle t) {
  for (auto& a : t.arcs) std::swap(a.from, a.to);
  auto neg = [](const SignSeq& s) {
    std::vector<Sign> v;
    v.reserve(size_t(s.size()));
    for (Sign x : s.signs()) v.push_back(negate(x));
    return SignSeq(std::move(v));
  };
  t.bottom = neg(t.bottom);
  t.top = neg(t.top);
  if (t.outer_side) t.outer_side = {t.outer_side->first, !t.outer_side->second};
  return t;
}

Tangle close_tangle(const Tangle& t) {
  if (t.is_closed()) return t;
  const int m = t.bottom.size();
  if (t.top.size() != m) throw DimensionMismatch("close: rows differ in width");
  if (t.oriented)
    for (int i = 1; i <= m; ++i)
      if (t.bottom.at(i) != t.top.at(i))
        throw BoundaryMismatch("close: top and bottom signs differ", i);

  Tangle r = t;
  r.outer_side.reset();
  std::vector<std::pair<End, End>> js;
  std::vector<int> closure_arc(static_cast<size_t>(m));
  std::vector<char> stored_down(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    bool down = !t.oriented || t.bottom.at(i + 1) == Sign::plus;
    End ct = End::at_top(m + i), cb = End::at_bottom(m + i);
    closure_arc[size_t(i)] = int(r.arcs.size());
    stored_down[size_t(i)] = char(down);
    r.arcs.push_back(down ? Arc{ct, cb} : Arc{cb, ct});
    js.push_back({End::at_top(i), ct});
    js.push_back({End::at_bottom(i), cb});
  }
  auto outcome = fuse(r.arcs, js, t.oriented);
  r.free_loops += outcome.loops;
  r.bottom = SignSeq();
  r.top = SignSeq();
  if (m > 0) {
    // the rightmost closure arc is the outermost one; the unbounded region
    // lies to the right of its downward flow
    int orig = closure_arc[size_t(m - 1)];
    int a = outcome.arc_map[size_t(orig)];
    if (a >= 0) {
      bool f = bool(outcome.flipped[size_t(orig)]);
      r.outer_side = {a, stored_down[size_t(m - 1)] ? f : !f};
    }
  }
  return r;
}

Tangle switch_crossing(Tangle t, int c) {
  t.crossings.at(size_t(c)).over02 = !t.crossings.at(size_t(c)).over02;
  return t;
}

Tangle smooth_crossing(const Tangle& t, int c) {
  auto [ea, eb] = entry_slots(t, c);
  auto exit_neighbor = [&](int e, int other_entry) {
    int u = (e + 1) & 3, v = (e + 3) & 3;
    return u == other_entry ? v : u;
  };
  Tangle r = t;
  r.outer_side.reset();
  std::vector<std::pair<End, End>> js = {
      {End::port(c, ea), End::port(c, exit_neighbor(ea, eb))},
      {End::port(c, eb), End::port(c, exit_neighbor(eb, ea))},
  };
  auto outcome = fuse(r.arcs, js, true);
  r.free_loops += outcome.loops;
  r.crossings.erase(r.crossings.begin() + c);
  for (auto& a : r.arcs) {
    for (End* e : {&a.from, &a.to})
      if (e->kind == EndKind::port && e->idx > c) --e->idx;
  }
  return r;
}

int component_count(const Tangle& t) {
  if (!t.is_closed()) throw NotApplicable("component count needs a closed tangle");
  const int n = int(t.arcs.size());
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
    return x;
  };
  auto at = attachments(t);
  for (int c = 0; c < t.crossing_count(); ++c)
    for (int pair = 0; pair < 2; ++pair) {
      int a = at.at(End::port(c, pair)).first;
      int b = at.at(End::port(c, pair + 2)).first;
      parent[size_t(find(a))] = find(b);
    }
  int cycles = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++cycles;
  return cycles + t.free_loops;
}

std::vector<Tangle> split_components(const Tangle& t) {
  if (!t.is_closed()) throw NotApplicable("splitting needs a closed tangle");
  const int n = t.crossing_count();
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
    return x;
  };
  for (const Arc& a : t.arcs)
    parent[size_t(find(a.from.idx))] = find(a.to.idx);

  std::vector<int> roots;
  for (int c = 0; c < n; ++c)
    if (find(c) == c) roots.push_back(c);
  std::vector<Tangle> out;
  for (int root : roots) {
    Tangle piece;
    piece.oriented = t.oriented;
    std::vector<int> newidx(size_t(n), -1);
    for (int c = 0; c < n; ++c)
      if (find(c) == root) {
        newidx[size_t(c)] = piece.crossing_count();
        piece.crossings.push_back(t.crossings[size_t(c)]);
      }
    for (const Arc& a : t.arcs)
      if (find(a.from.idx) == root)
        piece.arcs.push_back({End::port(newidx[size_t(a.from.idx)], a.from.slot),
                              End::port(newidx[size_t(a.to.idx)], a.to.slot)});
    out.push_back(std::move(piece));
  }
  return out;
}

FaceSet faces(const Tangle& t) {
  if (!t.is_closed()) throw NotApplicable("faces need a closed tangle");
  auto at = attachments(t);
  const int n = int(t.arcs.size());
  FaceSet fs;
  fs.side_face.assign(size_t(n), {-1, -1});
  auto face_of = [&](int arc, bool fwd) -> int& {
    return fwd ? fs.side_face[size_t(arc)].first : fs.side_face[size_t(arc)].second;
  };
  for (int a0 = 0; a0 < n; ++a0)
    for (bool d0 : {true, false}) {
      if (face_of(a0, d0) >= 0) continue;
      int id = fs.size();
      fs.faces.emplace_back();
      int a = a0;
      bool d = d0;
      do {
        face_of(a, d) = id;
        fs.faces.back().push_back({a, d});
        End h = d ? t.arcs[size_t(a)].to : t.arcs[size_t(a)].from;
        auto [a2, is_from] = at.at(End::port(h.idx, (h.slot + 3) & 3));
        a = a2;
        d = is_from;
      } while (!(a == a0 && d == d0));
    }
  return fs;
}

std::string to_text(const Tangle& t) {
  std::ostringstream os;
  os << "crossings " << t.crossing_count() << ":";
  for (const auto& c : t.crossings) os << " " << (c.over02 ? "A" : "B");
  os << "\narcs:";
  for (const Arc& a : t.arcs) os << " " << end_text(a.from) << ">" << end_text(a.to);
  os << "\nbottom " << t.bottom.text() << " top " << t.top.text();
  os << " loops " << t.free_loops << (t.oriented ? "" : " positional") << "\n";
  return os.str();
}

}  // namespace thl
