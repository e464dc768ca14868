#include "thl/svg.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "thl/tree.hpp"

namespace thl {

namespace {

struct Pt {
  double x = 0, y = 0;
};

std::string num(double v) {
  std::ostringstream os;
  os << (v == int(v) ? int(v) : v);
  return os.str();
}

// Crossings sit on a centre line; ports stick out east, north, west, south
// (SVG y grows downwards, so north subtracts).
Pt port_point(int crossing, int slot, double mid) {
  const double cx = 70.0 + 110.0 * crossing, r = 22.0;
  switch (slot & 3) {
    case 0: return {cx + r, mid};
    case 1: return {cx, mid - r};
    case 2: return {cx - r, mid};
    default: return {cx, mid + r};
  }
}

Pt end_point(const End& e, const Tangle& t, double mid, double height) {
  if (e.kind == EndKind::port) return port_point(e.idx, e.slot, mid);
  const double step = 46.0;
  const double x = 70.0 + step * e.idx;
  (void)t;
  return {x, e.kind == EndKind::bottom ? height - 18.0 : 18.0};
}

Pt control_dir(const End& e) {
  if (e.kind == EndKind::bottom) return {0, -1};
  if (e.kind == EndKind::top) return {0, 1};
  switch (e.slot & 3) {
    case 0: return {1, 0};
    case 1: return {0, -1};
    case 2: return {-1, 0};
    default: return {0, 1};
  }
}

void draw_arc(std::ostringstream& os, const Tangle& t, const Arc& arc,
              double mid, double height) {
  const Pt a = end_point(arc.from, t, mid, height);
  const Pt b = end_point(arc.to, t, mid, height);
  const Pt da = control_dir(arc.from), db = control_dir(arc.to);
  const double pull = 42.0 + 14.0 * std::abs(a.x - b.x) / 110.0;
  os << "  <path d=\"M " << num(a.x) << ' ' << num(a.y) << " C "
     << num(a.x + pull * da.x) << ' ' << num(a.y + pull * da.y) << ' '
     << num(b.x + pull * db.x) << ' ' << num(b.y + pull * db.y) << ' '
     << num(b.x) << ' ' << num(b.y) << "\" class=\"s\""
     << (t.oriented ? " marker-end=\"url(#tip)\"" : "") << "/>\n";
}

struct TreeLayout {
  std::ostringstream& os;
  double leaf_x0, leaf_step, leaf_y, level;

  // Returns (x, y) of the subtree root; `next_leaf` walks the shared row.
  Pt place(const Tree& tr, int& next_leaf) {
    if (tr.is_leaf()) {
      Pt p{leaf_x0 + leaf_step * next_leaf, leaf_y};
      ++next_leaf;
      return p;
    }
    const Pt l = place(tr.left(), next_leaf);
    const Pt r = place(tr.right(), next_leaf);
    const Pt root{(l.x + r.x) / 2.0,
                  level > 0 ? std::max(l.y, r.y) + level : std::min(l.y, r.y) + level};
    os << "  <path d=\"M " << num(l.x) << ' ' << num(l.y) << " L " << num(root.x)
       << ' ' << num(root.y) << " L " << num(r.x) << ' ' << num(r.y)
       << "\" class=\"s\"/>\n";
    return root;
  }
};

}  // namespace

std::string tangle_svg(const Tangle& t) {
  const int cols = std::max({t.crossing_count(), t.bottom.size(), t.top.size(), 1});
  const double width = 140.0 + 110.0 * (cols - 1);
  const double height = 260.0;
  const double mid = height / 2.0;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
     << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' '
     << num(height) << "\">\n"
     << "  <defs><marker id=\"tip\" viewBox=\"0 0 8 8\" refX=\"6\" refY=\"4\" "
        "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
        "<path d=\"M 0 0 L 8 4 L 0 8 z\" fill=\"#456\"/></marker></defs>\n"
     << "  <style>.s{fill:none;stroke:#456;stroke-width:2.4}"
        ".b{fill:#c33}</style>\n";

  for (int c = 0; c < t.crossing_count(); ++c) {
    const Pt e = port_point(c, 0, mid), n = port_point(c, 1, mid),
             w = port_point(c, 2, mid), s = port_point(c, 3, mid);
    const double cx = (e.x + w.x) / 2.0, gap = 7.0;
    const bool a_over = t.crossings[size_t(c)].over02;
    if (a_over) {
      os << "  <path d=\"M " << num(w.x) << ' ' << num(w.y) << " L " << num(e.x)
         << ' ' << num(e.y) << "\" class=\"s\"/>\n";
      os << "  <path d=\"M " << num(n.x) << ' ' << num(n.y) << " L " << num(cx)
         << ' ' << num(mid - gap) << "\" class=\"s\"/>\n";
      os << "  <path d=\"M " << num(cx) << ' ' << num(mid + gap) << " L "
         << num(s.x) << ' ' << num(s.y) << "\" class=\"s\"/>\n";
    } else {
      os << "  <path d=\"M " << num(n.x) << ' ' << num(n.y) << " L " << num(s.x)
         << ' ' << num(s.y) << "\" class=\"s\"/>\n";
      os << "  <path d=\"M " << num(w.x) << ' ' << num(w.y) << " L "
         << num(cx - gap) << ' ' << num(mid) << "\" class=\"s\"/>\n";
      os << "  <path d=\"M " << num(cx + gap) << ' ' << num(mid) << " L "
         << num(e.x) << ' ' << num(e.y) << "\" class=\"s\"/>\n";
    }
  }

  for (const Arc& arc : t.arcs) draw_arc(os, t, arc, mid, height);

  for (int i = 0; i < t.bottom.size(); ++i) {
    const Pt p = end_point(End::at_bottom(i), t, mid, height);
    os << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
       << "\" r=\"3\" class=\"b\"/>\n";
  }
  for (int i = 0; i < t.top.size(); ++i) {
    const Pt p = end_point(End::at_top(i), t, mid, height);
    os << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
       << "\" r=\"3\" class=\"b\"/>\n";
  }
  for (int i = 0; i < t.free_loops; ++i)
    os << "  <circle cx=\"" << num(26.0 + 18.0 * i)
       << "\" cy=\"22\" r=\"8\" class=\"s\"/>\n";

  os << "</svg>\n";
  return os.str();
}

std::string element_svg(const GroupElement& g) {
  const int leaves = g.plus.leaf_count();
  const double step = 44.0;
  const double width = 60.0 + step * std::max(leaves - 1, 1);
  const double height = 80.0 + 40.0 * (leaves + g.minus.leaf_count());

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
     << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' '
     << num(height) << "\">\n"
     << "  <style>.s{fill:none;stroke:#456;stroke-width:2}.l{fill:#c33}</style>\n";

  const double mid = height / 2.0;
  int next = 0;
  TreeLayout down{os, 30.0, step, mid, 38.0};
  down.place(g.plus, next);
  next = 0;
  TreeLayout up{os, 30.0, step, mid, -38.0};
  up.place(g.minus, next);

  for (int i = 0; i < leaves; ++i)
    os << "  <circle cx=\"" << num(30.0 + step * i) << "\" cy=\"" << num(mid)
       << "\" r=\"3.2\" class=\"l\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace thl
