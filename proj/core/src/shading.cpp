#include "thl/shading.hpp"

#include <deque>
#include <map>

#include "thl/errors.hpp"

namespace thl {

int corner_face(const Tangle& t, const FaceSet& fs, int c, int s) {
  End q = End::port(c, (s + 1) & 3);
  for (int a = 0; a < int(t.arcs.size()); ++a) {
    if (t.arcs[size_t(a)].to == q) return fs.left_of(a, true);
    if (t.arcs[size_t(a)].from == q) return fs.left_of(a, false);
  }
  throw InvariantViolation("corner: no arc at the port");
}

Shading shade(const Tangle& t) {
  if (!t.is_closed()) throw NotApplicable("shading needs a closed diagram");

  Shading sh;
  if (t.crossing_count() == 0) {
    sh.orientable = true;
    return sh;
  }
  if (t.free_loops > 0 || split_components(t).size() != 1)
    throw NotApplicable("shading needs a connected diagram");
  if (!t.outer_side)
    throw NotApplicable("shading needs the unbounded-region hint");

  FaceSet fs = faces(t);
  sh.face_color.assign(size_t(fs.size()), -1);
  sh.face_color[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (auto [arc, fwd] : fs.faces[size_t(f)]) {
      int g = fs.left_of(arc, !fwd);
      if (sh.face_color[size_t(g)] < 0) {
        sh.face_color[size_t(g)] = 1 - sh.face_color[size_t(f)];
        queue.push_back(g);
      } else if (sh.face_color[size_t(g)] == sh.face_color[size_t(f)]) {
        throw InvariantViolation("faces are not two-colourable");
      }
    }
  }

  sh.outer_face = fs.left_of(t.outer_side->first, t.outer_side->second);
  sh.shaded_color = 1 - sh.face_color[size_t(sh.outer_face)];

  // one must-differ constraint per crossing, between its two shaded corners
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < t.crossing_count(); ++c) {
    int f0 = corner_face(t, fs, c, 0);
    int s = sh.face_color[size_t(f0)] == sh.shaded_color ? 0 : 1;
    edges.push_back({corner_face(t, fs, c, s), corner_face(t, fs, c, s + 2)});
  }

  std::vector<int> label(size_t(fs.size()), 0);
  std::map<int, std::vector<int>> nbr;
  sh.orientable = true;
  for (auto [a, b] : edges) {
    if (a == b) {
      sh.orientable = false;
      break;
    }
    nbr[a].push_back(b);
    nbr[b].push_back(a);
  }
  if (sh.orientable) {
    for (auto& [start, ignored] : nbr) {
      if (label[size_t(start)] != 0) continue;
      label[size_t(start)] = 1;
      std::deque<int> bfs{start};
      while (!bfs.empty() && sh.orientable) {
        int f = bfs.front();
        bfs.pop_front();
        for (int g : nbr[f]) {
          if (label[size_t(g)] == 0) {
            label[size_t(g)] = -label[size_t(f)];
            bfs.push_back(g);
          } else if (label[size_t(g)] == label[size_t(f)]) {
            sh.orientable = false;
            break;
          }
        }
      }
      if (!sh.orientable) break;
    }
  }
  if (sh.orientable) sh.face_label = label;
  return sh;
}

bool shading_orientable(const Tangle& t) { return shade(t).orientable; }

}  // namespace thl
