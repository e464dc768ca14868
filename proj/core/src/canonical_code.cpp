#include "thl/canonical_code.hpp"

#include <algorithm>
#include <map>

#include "thl/errors.hpp"

namespace thl {

std::vector<std::vector<Visit>> strand_cycles(const Tangle& t) {
  if (!t.oriented) throw NotApplicable("strand walk needs flow directions");
  if (t.bottom.size() != 0 || t.top.size() != 0)
    throw NotApplicable("strand walk needs a closed diagram");

  std::map<End, int> leaving;  // port -> arc departing from it
  for (int a = 0; a < int(t.arcs.size()); ++a)
    leaving[t.arcs[size_t(a)].from] = a;

  std::vector<std::vector<Visit>> cycles;
  std::vector<char> used(t.arcs.size(), 0);
  for (int a0 = 0; a0 < int(t.arcs.size()); ++a0) {
    if (used[size_t(a0)]) continue;
    std::vector<Visit> cycle;
    int a = a0;
    do {
      used[size_t(a)] = 1;
      const End in = t.arcs[size_t(a)].to;
      cycle.push_back({in.idx, in.slot});
      auto next = leaving.find(End::port(in.idx, (in.slot + 2) & 3));
      if (next == leaving.end())
        throw InvariantViolation("strand walk: no departure");
      a = next->second;
    } while (a != a0);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

namespace {

constexpr char kCycleMark = '\x7e';
constexpr char kTailMark = '\x7f';

// One full traversal starting from the given rotation of the seed cycle.
// Crossings are labelled in order of first appearance and every later cycle
// is seeded at its smallest already-labelled crossing, so the bytes depend
// only on the traversal, never on the stored numbering.
std::string emit(const std::vector<std::vector<Visit>>& cycles,
                 const std::vector<char>& over_flag,
                 const std::vector<char>& sign_flag, size_t seed,
                 size_t rot) {
  std::vector<int> label(over_flag.size() / 2, -1);
  int next_label = 0;
  std::vector<char> done(cycles.size(), 0);
  std::string out;

  auto emit_cycle = [&](size_t ci, size_t start) {
    const auto& cyc = cycles[ci];
    done[ci] = 1;
    for (size_t step = 0; step < cyc.size(); ++step) {
      const Visit& v = cyc[(start + step) % cyc.size()];
      int& lab = label[size_t(v.crossing)];
      if (lab < 0) lab = next_label++;
      out.push_back(char(lab));
      out.push_back(char(2 * sign_flag[size_t(v.crossing)] +
                         over_flag[2 * size_t(v.crossing) + size_t(v.enter_slot & 1)]));
    }
    out.push_back(kCycleMark);
  };

  emit_cycle(seed, rot);
  for (size_t emitted = 1; emitted < cycles.size(); ++emitted) {
    size_t best_cycle = cycles.size(), best_pos = 0;
    int best_label = -1;
    for (size_t ci = 0; ci < cycles.size(); ++ci) {
      if (done[ci]) continue;
      for (size_t pos = 0; pos < cycles[ci].size(); ++pos) {
        int lab = label[size_t(cycles[ci][pos].crossing)];
        if (lab < 0) continue;
        if (best_label < 0 || lab < best_label) {
          best_label = lab;
          best_cycle = ci;
          best_pos = pos;
        }
      }
    }
    if (best_label < 0) {
      // detached part: fall back to stored order (keys stay sound, they just
      // stop being canonical across renumberings of disconnected diagrams)
      for (size_t ci = 0; ci < cycles.size(); ++ci)
        if (!done[ci]) {
          best_cycle = ci;
          best_pos = 0;
          break;
        }
    }
    emit_cycle(best_cycle, best_pos);
  }
  return out;
}

}  // namespace

std::string canonical_code(const Tangle& t) {
  const int n = t.crossing_count();
  if (n > 120) throw GuardExceeded("diagram too large to encode");
  if (t.free_loops > 0xffff) throw GuardExceeded("too many loops to encode");

  std::vector<char> over_flag(2 * size_t(n), 0);
  std::vector<char> sign_flag(size_t(n), 0);
  for (int c = 0; c < n; ++c) {
    over_flag[2 * size_t(c) + 0] = slot_is_over(t.crossings[size_t(c)], 0);
    over_flag[2 * size_t(c) + 1] = slot_is_over(t.crossings[size_t(c)], 1);
    sign_flag[size_t(c)] = crossing_sign(t, c) > 0;
  }

  const auto forward = strand_cycles(t);
  auto backward = forward;
  for (auto& cyc : backward) std::reverse(cyc.begin(), cyc.end());

  std::string best;
  bool have = false;
  const std::vector<std::vector<Visit>>* directions[] = {&forward, &backward};
  for (const auto* dir : directions) {
    for (size_t ci = 0; ci < dir->size(); ++ci)
      for (size_t rot = 0; rot < (*dir)[ci].size(); ++rot) {
        std::string cand = emit(*dir, over_flag, sign_flag, ci, rot);
        if (!have || cand < best) {
          best = std::move(cand);
          have = true;
        }
      }
  }
  best.push_back(kTailMark);
  best.push_back(char((t.free_loops >> 8) & 0xff));
  best.push_back(char(t.free_loops & 0xff));
  return best;
}

}  // namespace thl
