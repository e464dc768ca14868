#include "thl/homfly.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "thl/canonical_code.hpp"
#include "thl/errors.hpp"
#include "thl/reidemeister.hpp"

namespace thl {

Tangle simplify_diagram(Tangle t) {
  for (;;) {
    if (auto kinks = r1_sites(t); !kinks.empty()) {
      t = r1_remove(t, kinks.front());
      continue;
    }
    if (auto pokes = r2_sites(t); !pokes.empty()) {
      t = r2_remove(t, pokes.front());
      continue;
    }
    return t;
  }
}

LaurentPoly SkeinEngine::polynomial(const Tangle& closed) {
  if (!closed.oriented || closed.bottom.size() != 0 || closed.top.size() != 0)
    throw NotApplicable("skein evaluation needs a closed oriented diagram");
  Tangle t = simplify_diagram(closed);
  std::vector<Tangle> pieces = split_components(t);

  LaurentPoly out = LaurentPoly::one();
  for (const Tangle& piece : pieces) out *= connected(piece);
  const int factors = t.free_loops + int(pieces.size());
  if (factors > 1) out *= LaurentPoly::loop_value().pow(factors - 1);
  return out;
}

LaurentPoly SkeinEngine::connected(const Tangle& piece) {
  if (!use_memo_) return descend(piece);
  std::string key = canonical_code(piece);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  LaurentPoly value = descend(piece);
  std::lock_guard lock(mutex_);
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

// Walk the strands in a fixed order; the first crossing met on its under
// strand is switched (with the matching skein factor on everything that
// follows) and its smoothing queued as a separate branch.  Once every first
// visit is an over pass the diagram is a stack of descending unknots.
LaurentPoly SkeinEngine::descend(Tangle t) {
  static const LaurentPoly a_down2 = LaurentPoly::monomial(1, -2, 0);
  static const LaurentPoly a_up2 = LaurentPoly::monomial(1, 2, 0);
  static const LaurentPoly smooth_pos = LaurentPoly::monomial(1, -1, 1);
  static const LaurentPoly smooth_neg = LaurentPoly::monomial(-1, 1, 1);

  LaurentPoly acc;
  LaurentPoly prefix = LaurentPoly::one();
  for (;;) {
    const auto cycles = strand_cycles(t);
    std::vector<char> seen(size_t(t.crossing_count()), 0);
    int bad = -1;
    for (const auto& cycle : cycles) {
      for (const Visit& v : cycle) {
        if (seen[size_t(v.crossing)]) continue;
        seen[size_t(v.crossing)] = 1;
        if (!slot_is_over(t.crossings[size_t(v.crossing)], v.enter_slot)) {
          bad = v.crossing;
          break;
        }
      }
      if (bad >= 0) break;
    }
    if (bad < 0) {
      LaurentPoly stack_value =
          cycles.empty() ? LaurentPoly::one()
                         : LaurentPoly::loop_value().pow(int(cycles.size()) - 1);
      return acc + prefix * stack_value;
    }

    acc += prefix *
           (crossing_sign(t, bad) > 0 ? smooth_pos : smooth_neg) *
           polynomial(smooth_crossing(t, bad));
    prefix *= crossing_sign(t, bad) > 0 ? a_down2 : a_up2;
    t = switch_crossing(std::move(t), bad);
  }
}

std::size_t SkeinEngine::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

namespace {

std::string hex_of(const std::string& bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (unsigned char b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

bool unhex(const std::string& text, std::string& bytes) {
  if (text.size() % 2 != 0) return false;
  auto nibble = [](char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  bytes.clear();
  for (size_t i = 0; i < text.size(); i += 2) {
    int hi = nibble(text[i]), lo = nibble(text[i + 1]);
    if (hi < 0 || lo < 0) return false;
    bytes.push_back(char(hi << 4 | lo));
  }
  return true;
}

}  // namespace

void SkeinEngine::save_cache(const std::string& path) const {
  std::lock_guard lock(mutex_);
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write cache file: " + path);
  out << "skein-memo 1\n";
  for (const auto& [key, poly] : memo_) {
    out << hex_of(key);
    for (const auto& [exps, c] : poly.terms())
      out << ' ' << exps.first << ' ' << exps.second << ' ' << c.str();
    out << '\n';
  }
}

void SkeinEngine::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  if (!std::getline(in, line) || line != "skein-memo 1") return;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string key_hex, key;
    if (!(row >> key_hex) || !unhex(key_hex, key)) continue;
    LaurentPoly poly;
    int ae = 0, ze = 0;
    std::string coeff;
    bool ok = true;
    while (row >> ae >> ze >> coeff) {
      try {
        poly += LaurentPoly::monomial(Coeff(coeff), ae, ze);
      } catch (const std::exception&) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::lock_guard lock(mutex_);
    memo_.emplace(std::move(key), std::move(poly));
  }
}

LaurentPoly link_polynomial(const Tangle& closed) {
  SkeinEngine engine;
  return engine.polynomial(closed);
}

}  // namespace thl
